#include "ctqw/circuit.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ctqw {

namespace {

constexpr Complex kI{0.0, 1.0};

std::size_t dimension(int width) { return std::size_t{1} << width; }

void check_width(int width) {
  if (width < 1 || width > 30) {
    throw std::invalid_argument("register width must be in [1, 30], got " + std::to_string(width));
  }
}

}  // namespace

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::Rx: return "rx";
    case GateKind::Phase: return "p";
    case GateKind::GlobalPhase: return "gphase";
    case GateKind::CX: return "cx";
  }
  return "?";
}

bool Gate::has_angle() const {
  switch (kind) {
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Rx:
    case GateKind::Phase:
    case GateKind::GlobalPhase:
      return true;
    default:
      return false;
  }
}

std::array<Complex, 4> gate_matrix(const Gate& gate) {
  const double half = gate.angle / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  switch (gate.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::X:
    case GateKind::CX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Ry:
      return {c, -s, s, c};
    case GateKind::Rz:
      return {std::exp(-kI * half), 0.0, 0.0, std::exp(kI * half)};
    case GateKind::Rx:
      return {c, -kI * s, -kI * s, c};
    case GateKind::Phase:
      return {1.0, 0.0, 0.0, std::exp(kI * gate.angle)};
    case GateKind::GlobalPhase: {
      const Complex p = std::exp(kI * gate.angle);
      return {p, 0.0, 0.0, p};
    }
  }
  throw std::logic_error("unknown gate kind");
}

void validate_gate(const Gate& gate, int width) {
  const auto in_range = [width](int q) { return q >= 0 && q < width; };
  if (gate.kind != GateKind::GlobalPhase && !in_range(gate.target)) {
    throw std::out_of_range("gate target " + std::to_string(gate.target) + " outside register of width " +
                            std::to_string(width));
  }
  if (gate.has_angle() && !std::isfinite(gate.angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
  if (gate.kind == GateKind::CX &&
      (gate.controls.size() != 1 || gate.controls.front().polarity != Polarity::OnOne)) {
    throw std::invalid_argument("cx takes exactly one active-on-1 control");
  }
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    const int q = gate.controls[i].qubit;
    if (!in_range(q)) {
      throw std::out_of_range("control qubit " + std::to_string(q) + " outside register");
    }
    if (gate.kind != GateKind::GlobalPhase && q == gate.target) {
      throw std::invalid_argument("control qubit coincides with target");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.controls[j].qubit == q) {
        throw std::invalid_argument("duplicate control qubit " + std::to_string(q));
      }
    }
  }
}

Circuit::Circuit(int width) : width_(width) { check_width(width); }

Circuit& Circuit::add(Gate gate) {
  validate_gate(gate, width_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ != width_) {
    throw std::invalid_argument("cannot append circuits of different width");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  global_phase_ += other.global_phase_;
  return *this;
}

Circuit& Circuit::add_global_phase(double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("global phase must be finite");
  }
  global_phase_ += phi;
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit inv(width_);
  inv.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    if (g.has_angle()) g.angle = -g.angle;
    inv.gates_.push_back(std::move(g));
  }
  inv.global_phase_ = -global_phase_;
  return inv;
}

StateVector::StateVector(int width) : width_(width) {
  check_width(width);
  amps_.assign(dimension(width), Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int width, std::vector<Complex> amplitudes) : width_(width), amps_(std::move(amplitudes)) {
  check_width(width);
  if (amps_.size() != dimension(width)) {
    throw std::invalid_argument("amplitude count does not match 2^width");
  }
}

StateVector StateVector::basis(int width, std::size_t index) {
  StateVector s(width);
  if (index >= s.size()) {
    throw std::out_of_range("basis index outside register");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::uniform(int width) {
  StateVector s(width);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
  for (auto& z : s.amps_) z = a;
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& z : amps_) sum += std::norm(z);
  return std::sqrt(sum);
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.size() != ket.size()) {
    throw std::invalid_argument("inner product of states with different width");
  }
  Complex sum{};
  for (std::size_t i = 0; i < bra.size(); ++i) sum += std::conj(bra[i]) * ket[i];
  return sum;
}

void apply_gate(StateVector& state, const Gate& gate) {
  validate_gate(gate, state.width());

  std::size_t mask = 0;
  std::size_t value = 0;
  for (const auto& c : gate.controls) {
    const std::size_t bit = std::size_t{1} << c.qubit;
    mask |= bit;
    if (c.polarity == Polarity::OnOne) value |= bit;
  }

  auto amps = state.amplitudes();
  if (gate.kind == GateKind::GlobalPhase) {
    const Complex p = std::exp(kI * gate.angle);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & mask) == value) amps[i] *= p;
    }
    return;
  }

  const auto m = gate_matrix(gate);
  const std::size_t tbit = std::size_t{1} << gate.target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & tbit) || (i & mask) != value) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | tbit];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | tbit] = m[2] * a0 + m[3] * a1;
  }
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  StateVector out = state;
  apply_gate(out, gate);
  return out;
}

StateVector simulate(const Circuit& circuit, StateVector initial) {
  if (circuit.width() != initial.width()) {
    throw std::invalid_argument("circuit width " + std::to_string(circuit.width()) + " does not match state width " +
                                std::to_string(initial.width()));
  }
  for (const auto& g : circuit.gates()) apply_gate(initial, g);
  if (circuit.global_phase() != 0.0) {
    const Complex p = std::exp(kI * circuit.global_phase());
    for (auto& z : initial.amplitudes()) z *= p;
  }
  return initial;
}

std::vector<Complex> unitary_matrix(const Circuit& circuit) {
  if (circuit.width() > 12) {
    throw std::invalid_argument("unitary_matrix is limited to 12 qubits");
  }
  const std::size_t dim = std::size_t{1} << circuit.width();
  std::vector<Complex> u(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto out = simulate(circuit, StateVector::basis(circuit.width(), col));
    for (std::size_t row = 0; row < dim; ++row) u[row * dim + col] = out[row];
  }
  return u;
}

}  // namespace ctqw
