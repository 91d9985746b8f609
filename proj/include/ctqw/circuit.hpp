#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ctqw {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Basis index j = sum_i b_i 2^i, qubit i holds bit b_i.
enum class GateKind { H, X, Ry, Rz, Rx, Phase, GlobalPhase, CX };

std::string_view kind_name(GateKind kind);

enum class Polarity { OnZero, OnOne };

struct Control {
  int qubit = 0;
  Polarity polarity = Polarity::OnOne;

  bool operator==(const Control&) const = default;
};

/// A single-qubit gate with an arbitrary set of polarity-typed controls.
///
/// Rotation conventions: Rz(t) = diag(e^{-it/2}, e^{it/2}), Ry(t) = exp(-itY/2),
/// Rx(t) = exp(-itX/2), Phase(t) = diag(1, e^{it}). GlobalPhase(t) multiplies
/// the (control-selected) amplitudes by e^{it} and ignores `target`. CX is an
/// X with exactly one active-on-1 control.
struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  double angle = 0.0;
  std::vector<Control> controls;

  static Gate h(int q) { return {GateKind::H, q, 0.0, {}}; }
  static Gate x(int q) { return {GateKind::X, q, 0.0, {}}; }
  static Gate ry(int q, double a) { return {GateKind::Ry, q, a, {}}; }
  static Gate rz(int q, double a) { return {GateKind::Rz, q, a, {}}; }
  static Gate rx(int q, double a) { return {GateKind::Rx, q, a, {}}; }
  static Gate phase(int q, double a) { return {GateKind::Phase, q, a, {}}; }
  static Gate global_phase(double a) { return {GateKind::GlobalPhase, 0, a, {}}; }
  static Gate cx(int c, int t) { return {GateKind::CX, t, 0.0, {{c, Polarity::OnOne}}}; }

  Gate&& controlled_by(std::vector<Control> c) && {
    controls = std::move(c);
    return std::move(*this);
  }

  bool has_angle() const;
  bool operator==(const Gate&) const = default;
};

/// The 2x2 matrix applied to the target when all controls fire, row-major.
std::array<Complex, 4> gate_matrix(const Gate& gate);

/// Throws std::out_of_range / std::invalid_argument if `gate` is malformed for
/// a register of `width` qubits.
void validate_gate(const Gate& gate, int width);

class Circuit {
 public:
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  double global_phase() const { return global_phase_; }
  bool empty() const { return gates_.empty() && global_phase_ == 0.0; }

  Circuit& add(Gate gate);
  Circuit& append(const Circuit& other);
  Circuit& add_global_phase(double phi);

  /// Adjoint: reversed gate order, negated angles, negated global phase.
  Circuit inverse() const;

 private:
  int width_;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
};

class StateVector {
 public:
  /// |0...0> on `width` qubits.
  explicit StateVector(int width);
  StateVector(int width, std::vector<Complex> amplitudes);

  static StateVector basis(int width, std::size_t index);
  static StateVector uniform(int width);

  int width() const { return width_; }
  std::size_t size() const { return amps_.size(); }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<Complex> amplitudes() { return amps_; }
  std::span<const Complex> amplitudes() const { return amps_; }

  double norm() const;
  double probability(std::size_t index) const { return std::norm(amps_[index]); }

 private:
  int width_;
  std::vector<Complex> amps_;
};

Complex inner_product(const StateVector& bra, const StateVector& ket);

void apply_gate(StateVector& state, const Gate& gate);
StateVector apply_gate(const StateVector& state, const Gate& gate);

/// Applies every gate in order, then multiplies in the circuit's global phase.
StateVector simulate(const Circuit& circuit, StateVector initial);

/// Dense matrix of the circuit, row-major, column j = simulate(|j>). Width <= 12.
std::vector<Complex> unitary_matrix(const Circuit& circuit);

}  // namespace ctqw
