#pragma once

#include <optional>
#include <span>

#include "ctqw/circuit.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

struct WalkCircuitRequest {
  GraphSpec graph;
  double t = 1.0;
  std::optional<double> gamma_override;  // walk circuits only
  bool approx_bipartite = false;         // drop the lambda_0 factor
  HypercubeEigenvalues hypercube_eigs = HypercubeEigenvalues::ExactSums;
};

/// A R A^dagger with A|0> = |v>/||v|| and R = I + (e^{-i t lambda} - 1)|0><0|,
/// i.e. I + (e^{-i t lambda} - 1)|v><v| for a unit vector. Gate order in time:
/// A^dagger, R, A.
Circuit spectral_factor(int width, std::span<const double> eigenvector, double lambda, double t);

/// e^{i gamma A t} on K_N with gamma = 1/N: H layer, X layer, multi-controlled
/// Phase(t), X layer, H layer, global phase -t/N.
Circuit build_complete_walk(int qubits, double t);

/// e^{-iHt}, H = -A/N - |0><0|, as e^{-it/N} (A+ R+ A+^dag)(A- R- A-^dag).
Circuit build_complete_search(int qubits, double t);

/// e^{i gamma A t} on K_{n,n}, gamma = 1/n: H^m R_0(t) R_n(-t) H^m.
Circuit build_bipartite_walk(int m, double t);

/// e^{-iHt}, H = -A/n - |0><0|, as the product of the lambda-, lambda+ and
/// lambda_0 factors. With `approx` the lambda_0 factor is omitted.
Circuit build_bipartite_search(int m, double t, bool approx = false);

/// (Rx(-2 gamma t))^{tensor q} = e^{i gamma A t} with A = sum_j X_j.
Circuit build_hypercube_walk(int qubits, double t, double gamma);

/// e^{-it H_approx} with H_approx = lambda- P- + lambda+ P+ built from the
/// normalised closed-form eigenvectors.
Circuit build_hypercube_search(int qubits, double t, HypercubeEigenvalues eigs = HypercubeEigenvalues::ExactSums);

/// Dispatch: search builders when graph.search(), walk builders otherwise.
Circuit build_circuit(const WalkCircuitRequest& request);

}  // namespace ctqw
