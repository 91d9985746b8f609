#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ctqw/circuit.hpp"

namespace ctqw {

/// Gates implementing D = I + (e^{i phi} - 1)|j0><j0| on `width` qubits.
///
/// The marked amplitude is reached through one multi-controlled Phase gate on
/// qubit 0 (the controlled e^{i phi/2} Rz(phi) box), whose controls are active
/// on the remaining bits of j0; qubit 0 is conjugated by X when its bit is 0.
Circuit basis_state_phase_gate(int width, std::size_t j0, double phi);

/// Rewrites every gate into {H, X, CX, Ry, Rz, Phase, GlobalPhase} with at most
/// one control per gate. Only the CX gates carry a control. The unitary,
/// including global phase, is preserved exactly.
Circuit decompose(const Circuit& circuit);

/// True when the circuit already consists of basic gates only.
bool is_decomposed(const Circuit& circuit);

struct GateHistogram {
  std::map<std::string, std::size_t> by_kind;
  std::size_t controlled = 0;  // gates carrying at least one control

  std::size_t total() const;
  std::size_t count(std::string_view kind) const;
};

/// Histogram of the gates as they appear in `circuit`; the circuit-level
/// global phase is not a gate and is not counted.
GateHistogram gate_count(const Circuit& circuit);

/// gate_count(decompose(circuit)).total()
std::size_t basic_gate_count(const Circuit& circuit);

/// Least-squares fit y ~ c n^2 through the origin.
struct QuadraticFit {
  double c = 0.0;
  std::vector<double> relative_residuals;  // |y - c n^2| / (c n^2) per point
  double max_relative_residual() const;
};

QuadraticFit fit_quadratic(const std::vector<int>& n, const std::vector<double>& y);

}  // namespace ctqw
