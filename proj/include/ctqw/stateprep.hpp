#pragma once

#include <span>
#include <vector>

#include "ctqw/circuit.hpp"

namespace ctqw {

/// Coefficients of a real state in the dyadic block basis
/// |alpha_0> = |0>, |alpha_k> = 2^{-(k-1)/2} sum_{j=2^{k-1}}^{2^k-1} |j>.
struct AlphaDecomposition {
  int qubits = 0;
  std::vector<double> alphas;  // alpha_0 .. alpha_n of the normalised state
  double residual = 0.0;       // norm of the normalised state outside the span
  double norm = 1.0;           // norm of the input before normalisation
};

/// Rotation angles for the open-controlled Ry ladder.
struct AnglePlan {
  int qubits = 0;
  std::vector<double> theta_prime;  // theta'_0 .. theta'_n, theta'_0 = pi/2
  std::vector<double> theta;        // theta_1 .. theta_n stored at [0, n)
  bool negated = false;             // alpha_0 < 0: ladder prepares -|lambda>
};

inline constexpr double kAlphaResidualTolerance = 1e-8;
inline constexpr double kAlphaNormTolerance = 1e-10;

/// Throws std::invalid_argument for a zero vector, a length that is not a power
/// of two, or a residual above kAlphaResidualTolerance.
AlphaDecomposition alphas_from_state(std::span<const double> amplitudes);

/// theta'_k = atan2(alpha_k, sqrt(sum_{j<k} alpha_j^2)), theta_k = 2 theta'_{n-k+1} - pi/2.
/// Throws std::invalid_argument if the alphas are not unit norm.
AnglePlan angles_from_alphas(const AlphaDecomposition& alphas);

/// H on every qubit, then Ry(theta_k) on qubit n-k for k = 1..n with
/// active-on-0 controls on qubits n-k+1..n-1. A negated plan carries a
/// global phase of pi so that the output is exactly the normalised target.
Circuit build_stateprep_circuit(const AnglePlan& plan);

/// Convenience: alphas -> angles -> circuit.
Circuit stateprep_circuit(std::span<const double> amplitudes);

/// Expands alpha coefficients back into 2^n real amplitudes.
std::vector<double> state_from_alphas(std::span<const double> alphas);

}  // namespace ctqw
