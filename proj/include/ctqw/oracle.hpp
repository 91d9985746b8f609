#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ctqw/circuit.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

inline constexpr std::size_t kMaxOracleVertices = 4096;

/// Square real matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// 0/1 adjacency matrix of the graph.
DenseMatrix adjacency(const GraphSpec& graph);

struct DenseHamiltonian {
  DenseMatrix matrix;
  double gamma = 0.0;
  std::optional<std::size_t> marked;  // absent for a plain walk
};

/// H = -gamma A - |w><w| (search) or H = -gamma A (walk). gamma defaults to
/// search_gamma(graph); `marked` may be any vertex.
DenseHamiltonian search_hamiltonian(const GraphSpec& graph, std::optional<double> gamma = std::nullopt,
                                    std::size_t marked = 0);

struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column-major: vector k occupies [k*n, (k+1)*n)
  std::size_t n = 0;

  std::span<const double> vector(std::size_t k) const { return {vectors.data() + k * n, n}; }
};

/// Householder tridiagonalisation followed by implicit QL. Throws
/// std::runtime_error if the iteration does not converge.
SymmetricEigen eigh(const DenseMatrix& matrix);

/// e^{-iHt} through a cached eigendecomposition.
class ExactEvolution {
 public:
  explicit ExactEvolution(const DenseHamiltonian& hamiltonian);

  const SymmetricEigen& eigen() const { return eigen_; }
  const DenseHamiltonian& hamiltonian() const { return hamiltonian_; }

  StateVector evolve(double t, const StateVector& state) const;
  /// Row-major N x N matrix of e^{-iHt}.
  std::vector<Complex> propagator(double t) const;
  /// <psi|H|psi>
  double energy(const StateVector& state) const;

 private:
  DenseHamiltonian hamiltonian_;
  SymmetricEigen eigen_;
};

enum class Source { Oracle, Circuit, CircuitApprox };

std::string_view source_name(Source source);
/// "oracle", "circuit", "circuit-approx" (also "approx").
Source parse_source(std::string_view name);

struct ExperimentResult {
  Source source = Source::Oracle;
  std::vector<double> times;
  std::vector<double> probabilities;
};

struct CurveOptions {
  int steps = 0;
  double dt = 1.0;
  HypercubeEigenvalues hypercube_eigs = HypercubeEigenvalues::ExactSums;
};

/// |<w|psi(t)>|^2 for t = 0, dt, ..., steps*dt from |psi(0)> = |s>. Circuit
/// sources apply the dt circuit once per sample. CircuitApprox drops the
/// lambda_0 factor for bipartite graphs and equals Circuit otherwise.
ExperimentResult success_curve(const GraphSpec& graph, Source source, const CurveOptions& options);

/// Same, reusing an existing oracle evolution.
ExperimentResult oracle_curve(const ExactEvolution& evolution, std::size_t marked, const CurveOptions& options);

}  // namespace ctqw
