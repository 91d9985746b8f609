#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

using EntryFunction = std::function<double(std::size_t)>;

struct Eigenpair {
  std::string label;  // "minus", "plus" or "zero"
  double value = 0.0;
  EntryFunction entry;  // j -> <j|lambda>
  bool exact = true;

  std::vector<double> materialize(std::size_t vertices) const;
};

enum class HypercubeEigenvalues {
  ExactSums,   // lambda = -gamma n +- epsilon from the finite sums S1, S2
  Asymptotic,  // lambda = -1 +- 1/sqrt(N)
};

/// Two-eigenvector description of the search Hamiltonian
/// H = energy_shift * I + sum_k lambda_k |lambda_k><lambda_k| (+ ignored terms).
struct SpectralModel {
  std::optional<Family> family;
  int qubits = 0;
  std::size_t vertices = 0;
  double gamma = 0.0;
  double energy_shift = 0.0;
  std::vector<Eigenpair> eigen;  // ascending: minus, plus[, zero]
  double epsilon = 0.0;          // half the gap between lambda+ and lambda-
  double w_overlap_plus = 0.0;   // <w|lambda+>
  double w_overlap_minus = 0.0;  // <w|lambda->
  double s_overlap_plus = 0.0;   // <psi(0)|lambda+>
  double s_overlap_minus = 0.0;  // <psi(0)|lambda->
  double t_opt = 0.0;

  const Eigenpair& minus() const;
  const Eigenpair& plus() const;
  const Eigenpair* zero() const;
};

/// Exact eigenpairs of H - I/N on K_N, N = 2^q, gamma = 1/N, w = 0.
SpectralModel complete_spectrum(int qubits);

struct BipartiteRoots {
  double minus = 0.0;
  double plus = 0.0;
  double zero = 0.0;
};

struct BipartiteCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// lambda^3 + lambda^2 - lambda - (1 - 1/n)
double bipartite_cubic(double lambda, int m);

/// The three real roots, sorted, for K_{n,n} with n = 2^{m-1}. Trigonometric
/// formula followed by a Newton polish.
BipartiteRoots bipartite_roots(int m);

BipartiteCoefficients bipartite_coefficients(double lambda, int m);

/// <j|lambda> = 1/sqrt(c) (j = 0), a/sqrt(c) (1 <= j < n), b/sqrt(c) (n <= j < N).
EntryFunction bipartite_eigvec(double lambda, int m);

/// Exact three-eigenvector model for K_{n,n}, gamma = 1/n, w = 0. epsilon is
/// half the gap of the two lower roots; t_opt = pi / (2 epsilon).
SpectralModel bipartite_spectrum(int m);

/// ||P_k|w>||^2 = C(n,k)/N for k = 0..n.
std::vector<double> hypercube_projector_norms(int n);

struct SpectralSums {
  double s1 = 0.0;
  double s2 = 0.0;
};

SpectralSums spectral_sums(const std::vector<double>& phis, const std::vector<double>& projector_norms);

/// Approximate two-eigenvector model for Q_n, gamma = S1 (finite sum). The
/// eigenvector entries are (delta_{jw} -+ 1/sqrt(N)) / sqrt(2), which are not
/// unit norm: <lambda+-|lambda+-> = 1 -+ 1/sqrt(N).
SpectralModel hypercube_spectral(int qubits, HypercubeEigenvalues eigs = HypercubeEigenvalues::ExactSums);

struct AppendixBInput {
  std::vector<double> phis;             // distinct adjacency eigenvalues, phis[0] largest
  std::vector<double> projector_norms;  // ||P_l|w>||^2, summing to 1
  std::size_t vertices = 0;
  /// <j|P_l|psi(0)> for each l, assumed independent of j. Empty means the
  /// regular-graph case: 1/sqrt(N) for l = 0 and 0 otherwise.
  std::vector<double> initial_projections;
};

/// Generic two-eigenvector model built from S1 and S2. Throws
/// std::invalid_argument on malformed input or a vanishing gap.
SpectralModel appendix_b_model(const AppendixBInput& input);

/// Two-eigenvector success probability with c+- = <w|lambda+-><lambda+-|psi(0)>:
/// (|c+| - |c-|)^2 + 4 |c+||c-| sin^2(epsilon t). Equal to
/// 4 |<lambda+|psi(0)>|^2 |<w|lambda+>|^2 sin^2(epsilon t) when |c+| = |c-|.
double predicted_success(const SpectralModel& model, double t);

/// Dispatch on the graph family.
SpectralModel spectral_model(const GraphSpec& graph, HypercubeEigenvalues eigs = HypercubeEigenvalues::ExactSums);

/// Transition rate used by the search Hamiltonian of each family:
/// 1/N (complete), 1/n (bipartite), S1 (hypercube).
double search_gamma(const GraphSpec& graph);

}  // namespace ctqw
