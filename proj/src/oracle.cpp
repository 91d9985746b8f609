#include "ctqw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ctqw/builders.hpp"

namespace ctqw {

namespace {

void require_oracle_size(std::size_t n) {
  if (n > kMaxOracleVertices) {
    throw std::invalid_argument("oracle supports at most " + std::to_string(kMaxOracleVertices) + " vertices, got " +
                                std::to_string(n));
  }
}

// Householder reduction to tridiagonal form. `v` is column-major.
void tred2(std::size_t n, std::vector<double>& v, std::vector<double>& d, std::vector<double>& e) {
  auto V = [&](std::size_t r, std::size_t c) -> double& { return v[c * n + r]; };
  for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // Accumulate transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL on the tridiagonal matrix, accumulating into `v`.
void tql2(std::size_t n, std::vector<double>& v, std::vector<double>& d, std::vector<double>& e) {
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  // Deflation threshold relative to the whole matrix: a running maximum starts
  // at zero on leading zero rows and lets subnormal off-diagonals through.
  double tst1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) tst1 = std::max(tst1, std::abs(d[i]) + std::abs(e[i]));
  double f = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 60) throw std::runtime_error("eigensolver did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          double* col_i = v.data() + i * n;
          double* col_j = col_i + n;
          for (std::size_t k = 0; k < n; ++k) {
            h = col_j[k];
            col_j[k] = s * col_i[k] + c * h;
            col_i[k] = c * col_i[k] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

DenseMatrix adjacency(const GraphSpec& graph) {
  const std::size_t n = graph.vertices();
  require_oracle_size(n);
  DenseMatrix a(n);
  const std::size_t half = n / 2;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      bool edge = false;
      switch (graph.family()) {
        case Family::Complete: edge = true; break;
        case Family::CompleteBipartite: edge = (j < half) != (k < half); break;
        case Family::Hypercube: edge = std::popcount(j ^ k) == 1; break;
      }
      a(j, k) = edge ? 1.0 : 0.0;
    }
  }
  return a;
}

DenseHamiltonian search_hamiltonian(const GraphSpec& graph, std::optional<double> gamma, std::size_t marked) {
  DenseHamiltonian h;
  h.gamma = gamma.value_or(search_gamma(graph));
  if (!std::isfinite(h.gamma)) throw std::invalid_argument("gamma must be finite");
  h.matrix = adjacency(graph);
  const std::size_t n = h.matrix.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) h.matrix(j, k) *= -h.gamma;
  }
  if (graph.search()) {
    if (marked >= n) throw std::out_of_range("marked vertex outside the graph");
    h.marked = marked;
    h.matrix(marked, marked) -= 1.0;
  }
  return h;
}

SymmetricEigen eigh(const DenseMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  SymmetricEigen out;
  out.n = n;
  std::vector<double> v(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) v[c * n + r] = matrix(r, c);
  }
  std::vector<double> d(n), e(n);
  if (n == 1) {
    out.values = {matrix(0, 0)};
    out.vectors = {1.0};
    return out;
  }
  tred2(n, v, d, e);
  tql2(n, v, d, e);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(order[k] * n), n,
                out.vectors.begin() + static_cast<std::ptrdiff_t>(k * n));
  }
  return out;
}

ExactEvolution::ExactEvolution(const DenseHamiltonian& hamiltonian)
    : hamiltonian_(hamiltonian), eigen_(eigh(hamiltonian.matrix)) {}

StateVector ExactEvolution::evolve(double t, const StateVector& state) const {
  const std::size_t n = eigen_.n;
  if (state.size() != n) throw std::invalid_argument("state dimension does not match the Hamiltonian");
  std::vector<Complex> coeff(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = eigen_.vector(k);
    Complex c{};
    for (std::size_t j = 0; j < n; ++j) c += v[j] * state[j];
    coeff[k] = c * std::polar(1.0, -eigen_.values[k] * t);
  }
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = eigen_.vector(k);
    const Complex c = coeff[k];
    for (std::size_t j = 0; j < n; ++j) out[j] += v[j] * c;
  }
  return StateVector(state.width(), std::move(out));
}

std::vector<Complex> ExactEvolution::propagator(double t) const {
  const std::size_t n = eigen_.n;
  std::vector<Complex> u(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = eigen_.vector(k);
    const Complex phase = std::polar(1.0, -eigen_.values[k] * t);
    for (std::size_t r = 0; r < n; ++r) {
      const Complex a = v[r] * phase;
      Complex* row = u.data() + r * n;
      for (std::size_t c = 0; c < n; ++c) row[c] += a * v[c];
    }
  }
  return u;
}

double ExactEvolution::energy(const StateVector& state) const {
  const auto& h = hamiltonian_.matrix;
  const std::size_t n = h.size();
  if (state.size() != n) throw std::invalid_argument("state dimension does not match the Hamiltonian");
  Complex total{};
  for (std::size_t r = 0; r < n; ++r) {
    Complex row{};
    for (std::size_t c = 0; c < n; ++c) row += h(r, c) * state[c];
    total += std::conj(state[r]) * row;
  }
  return total.real();
}

std::string_view source_name(Source source) {
  switch (source) {
    case Source::Oracle: return "oracle";
    case Source::Circuit: return "circuit";
    case Source::CircuitApprox: return "circuit-approx";
  }
  return "?";
}

Source parse_source(std::string_view name) {
  if (name == "oracle") return Source::Oracle;
  if (name == "circuit") return Source::Circuit;
  if (name == "circuit-approx" || name == "approx") return Source::CircuitApprox;
  throw std::invalid_argument("unknown source '" + std::string(name) + "'");
}

ExperimentResult oracle_curve(const ExactEvolution& evolution, std::size_t marked, const CurveOptions& options) {
  if (options.steps < 0) throw std::invalid_argument("steps must be non-negative");
  const std::size_t n = evolution.eigen().n;
  const int width = std::countr_zero(n);
  const StateVector start = StateVector::uniform(width);
  ExperimentResult r;
  r.source = Source::Oracle;
  for (int s = 0; s <= options.steps; ++s) {
    const double t = s * options.dt;
    r.times.push_back(t);
    r.probabilities.push_back(evolution.evolve(t, start).probability(marked));
  }
  return r;
}

ExperimentResult success_curve(const GraphSpec& graph, Source source, const CurveOptions& options) {
  if (options.steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (!(options.dt > 0.0) || !std::isfinite(options.dt)) throw std::invalid_argument("dt must be positive");
  if (!graph.search()) throw std::invalid_argument("success curves need a marked vertex");
  if (source == Source::Oracle) {
    const ExactEvolution evolution(search_hamiltonian(graph));
    return oracle_curve(evolution, graph.marked(), options);
  }

  WalkCircuitRequest request{graph, options.dt, std::nullopt, false, options.hypercube_eigs};
  request.approx_bipartite = source == Source::CircuitApprox;
  const Circuit step = build_circuit(request);

  ExperimentResult r;
  r.source = source;
  StateVector state = StateVector::uniform(graph.qubits());
  for (int s = 0; s <= options.steps; ++s) {
    if (s > 0) state = simulate(step, std::move(state));
    r.times.push_back(s * options.dt);
    r.probabilities.push_back(state.probability(graph.marked()));
  }
  return r;
}

}  // namespace ctqw
