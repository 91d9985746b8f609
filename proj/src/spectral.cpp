#include "ctqw/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string_view>

#include "ctqw/circuit.hpp"

namespace ctqw {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

void require_qubits(int qubits, int lo, const char* what) {
  if (qubits < lo || qubits > GraphSpec::kMaxQubits) {
    throw std::invalid_argument(std::string(what) + ": qubit count " + std::to_string(qubits) + " out of range");
  }
}

}  // namespace

std::vector<double> Eigenpair::materialize(std::size_t vertices) const {
  std::vector<double> v(vertices);
  for (std::size_t j = 0; j < vertices; ++j) v[j] = entry(j);
  return v;
}

const Eigenpair& SpectralModel::minus() const { return eigen.at(0); }
const Eigenpair& SpectralModel::plus() const { return eigen.at(1); }
const Eigenpair* SpectralModel::zero() const { return eigen.size() > 2 ? &eigen[2] : nullptr; }

SpectralModel complete_spectrum(int qubits) {
  require_qubits(qubits, 1, "complete graph");
  const std::size_t vertices = std::size_t{1} << qubits;
  const double n = static_cast<double>(vertices);
  const double root_n = std::sqrt(n);

  SpectralModel model;
  model.family = Family::Complete;
  model.qubits = qubits;
  model.vertices = vertices;
  model.gamma = 1.0 / n;
  model.energy_shift = 1.0 / n;
  model.epsilon = 1.0 / root_n;
  model.t_opt = kPi / 2.0 * root_n;

  for (const double sign : {-1.0, 1.0}) {
    const double lambda = -1.0 + sign / root_n;
    const double marked = std::sqrt(-lambda / 2.0);
    const double other = -sign / std::sqrt(-2.0 * n * lambda);
    Eigenpair e;
    e.label = sign > 0 ? "plus" : "minus";
    e.value = lambda;
    e.entry = [marked, other](std::size_t j) { return j == 0 ? marked : other; };
    e.exact = true;
    const double s_overlap = (marked + (n - 1.0) * other) / root_n;
    if (sign > 0) {
      model.w_overlap_plus = marked;
      model.s_overlap_plus = s_overlap;
    } else {
      model.w_overlap_minus = marked;
      model.s_overlap_minus = s_overlap;
    }
    model.eigen.push_back(std::move(e));
  }
  return model;
}

double bipartite_cubic(double lambda, int m) {
  const double n = std::ldexp(1.0, m - 1);
  return ((lambda + 1.0) * lambda - 1.0) * lambda - (1.0 - 1.0 / n);
}

BipartiteRoots bipartite_roots(int m) {
  require_qubits(m, 2, "bipartite graph");
  const double n = std::ldexp(1.0, m - 1);
  // lambda = x - 1/3 gives x^3 + p x + q = 0.
  const double p = -4.0 / 3.0;
  const double q = 2.0 / 27.0 + 1.0 / 3.0 - (1.0 - 1.0 / n);
  const double disc = 4.0 * p * p * p + 27.0 * q * q;
  if (!(disc < 0.0)) {
    throw std::logic_error("bipartite characteristic cubic lost its three real roots");
  }
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double phi = std::acos(std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0)) / 3.0;
  std::array<double, 3> roots{};
  for (int k = 0; k < 3; ++k) {
    double x = r * std::cos(phi - 2.0 * kPi * k / 3.0) - 1.0 / 3.0;
    const double f = bipartite_cubic(x, m);
    const double df = (3.0 * x + 2.0) * x - 1.0;
    if (df != 0.0) x -= f / df;
    roots[static_cast<std::size_t>(k)] = x;
  }
  std::sort(roots.begin(), roots.end());
  return {roots[0], roots[1], roots[2]};
}

BipartiteCoefficients bipartite_coefficients(double lambda, int m) {
  require_qubits(m, 2, "bipartite graph");
  const double n = std::ldexp(1.0, m - 1);
  BipartiteCoefficients k;
  k.a = (n * lambda * lambda + n * lambda - 1.0) / (n - 1.0);
  k.b = -1.0 - lambda;
  k.c = 1.0 + (n - 1.0) * k.a * k.a + n * k.b * k.b;
  return k;
}

EntryFunction bipartite_eigvec(double lambda, int m) {
  const auto k = bipartite_coefficients(lambda, m);
  const std::size_t half = std::size_t{1} << (m - 1);
  const double scale = 1.0 / std::sqrt(k.c);
  return [half, a = k.a * scale, b = k.b * scale, first = scale](std::size_t j) {
    if (j == 0) return first;
    return j < half ? a : b;
  };
}

SpectralModel bipartite_spectrum(int m) {
  const auto roots = bipartite_roots(m);
  const std::size_t vertices = std::size_t{1} << m;
  const double n = std::ldexp(1.0, m - 1);

  SpectralModel model;
  model.family = Family::CompleteBipartite;
  model.qubits = m;
  model.vertices = vertices;
  model.gamma = 1.0 / n;

  const std::array<std::pair<const char*, double>, 3> named{{{"minus", roots.minus},
                                                              {"plus", roots.plus},
                                                              {"zero", roots.zero}}};
  for (const auto& [label, lambda] : named) {
    const auto k = bipartite_coefficients(lambda, m);
    Eigenpair e;
    e.label = label;
    e.value = lambda;
    e.entry = bipartite_eigvec(lambda, m);
    e.exact = true;
    model.eigen.push_back(std::move(e));
    const double w = 1.0 / std::sqrt(k.c);
    const double s = (1.0 + (n - 1.0) * k.a + n * k.b) / std::sqrt(k.c * static_cast<double>(vertices));
    if (std::string_view(label) == "plus") {
      model.w_overlap_plus = w;
      model.s_overlap_plus = s;
    } else if (std::string_view(label) == "minus") {
      model.w_overlap_minus = w;
      model.s_overlap_minus = s;
    }
  }
  model.epsilon = (roots.plus - roots.minus) / 2.0;
  model.t_opt = kPi / (2.0 * model.epsilon);
  return model;
}

std::vector<double> hypercube_projector_norms(int n) {
  require_qubits(n, 1, "hypercube");
  const double vertices = std::ldexp(1.0, n);
  std::vector<double> norms(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) norms[static_cast<std::size_t>(k)] = binomial(n, k) / vertices;
  return norms;
}

SpectralSums spectral_sums(const std::vector<double>& phis, const std::vector<double>& projector_norms) {
  if (phis.size() != projector_norms.size() || phis.size() < 2) {
    throw std::invalid_argument("need matching eigenvalue and projector-norm lists with at least two entries");
  }
  SpectralSums s;
  for (std::size_t l = 1; l < phis.size(); ++l) {
    const double gap = phis[0] - phis[l];
    if (!(gap > 0.0)) {
      throw std::invalid_argument("phi_0 must be strictly the largest adjacency eigenvalue");
    }
    s.s1 += projector_norms[l] / gap;
    s.s2 += projector_norms[l] / (gap * gap);
  }
  return s;
}

SpectralModel hypercube_spectral(int qubits, HypercubeEigenvalues eigs) {
  require_qubits(qubits, 2, "hypercube search");
  const int n = qubits;
  const std::size_t vertices = std::size_t{1} << n;
  const double big_n = static_cast<double>(vertices);
  const double root_n = std::sqrt(big_n);

  std::vector<double> phis;
  for (int k = 0; k <= n; ++k) phis.push_back(static_cast<double>(n - 2 * k));
  const auto norms = hypercube_projector_norms(n);
  const auto sums = spectral_sums(phis, norms);

  SpectralModel model;
  model.family = Family::Hypercube;
  model.qubits = n;
  model.vertices = vertices;
  model.gamma = sums.s1;
  model.w_overlap_plus = sums.s1 / std::sqrt(2.0 * sums.s2);
  model.w_overlap_minus = model.w_overlap_plus;
  model.s_overlap_plus = -1.0 / (std::sqrt(2.0 * big_n) * std::sqrt(norms[0]));
  model.s_overlap_minus = -model.s_overlap_plus;

  double centre = -model.gamma * phis[0];
  model.epsilon = sums.s1 * std::sqrt(norms[0]) / std::sqrt(sums.s2);
  if (eigs == HypercubeEigenvalues::Asymptotic) {
    centre = -1.0;
    model.epsilon = 1.0 / root_n;
  }
  model.t_opt = kPi / (2.0 * model.epsilon);

  for (const double sign : {-1.0, 1.0}) {
    Eigenpair e;
    e.label = sign > 0 ? "plus" : "minus";
    e.value = centre + sign * model.epsilon;
    const double off = -sign / root_n / std::sqrt(2.0);
    const double on = 1.0 / std::sqrt(2.0) + off;
    e.entry = [on, off](std::size_t j) { return j == 0 ? on : off; };
    e.exact = false;
    model.eigen.push_back(std::move(e));
  }
  return model;
}

SpectralModel appendix_b_model(const AppendixBInput& input) {
  if (input.vertices < 2) {
    throw std::invalid_argument("appendix B model needs at least two vertices");
  }
  double total = 0.0;
  for (double v : input.projector_norms) total += v;
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("projector norms must sum to 1");
  }
  const auto sums = spectral_sums(input.phis, input.projector_norms);
  const double big_n = static_cast<double>(input.vertices);
  const double root_n = std::sqrt(big_n);
  const double p0 = std::sqrt(input.projector_norms[0]);

  SpectralModel model;
  model.vertices = input.vertices;
  model.gamma = sums.s1;
  model.epsilon = sums.s2 > 0.0 ? sums.s1 * p0 / std::sqrt(sums.s2) : 0.0;
  if (!(model.epsilon > 0.0) || !std::isfinite(model.epsilon)) {
    throw std::invalid_argument("degenerate spectral gap (epsilon = 0)");
  }
  model.t_opt = kPi / (2.0 * model.epsilon);
  model.w_overlap_plus = sums.s1 / std::sqrt(2.0 * sums.s2);
  model.w_overlap_minus = model.w_overlap_plus;
  model.s_overlap_plus = -1.0 / (std::sqrt(2.0 * big_n) * p0);
  model.s_overlap_minus = -model.s_overlap_plus;

  std::vector<double> projections = input.initial_projections;
  if (projections.empty()) {
    projections.assign(input.phis.size(), 0.0);
    projections[0] = 1.0 / root_n;
  }
  if (projections.size() != input.phis.size()) {
    throw std::invalid_argument("initial projections must match the eigenvalue list");
  }
  double s_term = 0.0;
  for (std::size_t l = 0; l < input.phis.size(); ++l) s_term += input.phis[l] * projections[l];
  s_term *= model.gamma;

  const double centre = -model.gamma * input.phis[0];
  const double lambda_plus = centre + model.epsilon;
  const double lambda_minus = centre - model.epsilon;
  for (const double sign : {-1.0, 1.0}) {
    const double overlap = sign > 0 ? model.s_overlap_plus : model.s_overlap_minus;
    const double other = sign > 0 ? lambda_minus : lambda_plus;
    const double scale = -sign / (2.0 * model.epsilon * root_n * overlap);
    const double base = root_n * s_term + other;
    Eigenpair e;
    e.label = sign > 0 ? "plus" : "minus";
    e.value = sign > 0 ? lambda_plus : lambda_minus;
    e.entry = [scale, base](std::size_t j) { return scale * (base + (j == 0 ? 1.0 : 0.0)); };
    e.exact = false;
    model.eigen.push_back(std::move(e));
  }
  return model;
}

double predicted_success(const SpectralModel& model, double t) {
  const double cp = std::abs(model.w_overlap_plus * model.s_overlap_plus);
  const double cm = std::abs(model.w_overlap_minus * model.s_overlap_minus);
  const double s = std::sin(model.epsilon * t);
  const double p = (cp - cm) * (cp - cm) + 4.0 * cp * cm * s * s;
  return std::clamp(p, 0.0, 1.0);
}

SpectralModel spectral_model(const GraphSpec& graph, HypercubeEigenvalues eigs) {
  if (!graph.search()) {
    throw std::invalid_argument("spectral model is defined for the search Hamiltonian only");
  }
  switch (graph.family()) {
    case Family::Complete: return complete_spectrum(graph.qubits());
    case Family::CompleteBipartite: return bipartite_spectrum(graph.qubits());
    case Family::Hypercube: return hypercube_spectral(graph.qubits(), eigs);
  }
  throw std::logic_error("unknown family");
}

double search_gamma(const GraphSpec& graph) {
  const double big_n = static_cast<double>(graph.vertices());
  switch (graph.family()) {
    case Family::Complete: return 1.0 / big_n;
    case Family::CompleteBipartite: return 2.0 / big_n;
    case Family::Hypercube: {
      const int n = graph.qubits();
      std::vector<double> phis;
      for (int k = 0; k <= n; ++k) phis.push_back(static_cast<double>(n - 2 * k));
      return spectral_sums(phis, hypercube_projector_norms(n)).s1;
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace ctqw
