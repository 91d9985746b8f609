#include "ctqw/builders.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ctqw/stateprep.hpp"
#include "ctqw/synthesis.hpp"

namespace ctqw {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_time(double t) { require(std::isfinite(t), "evolution time must be finite"); }

}  // namespace

Circuit spectral_factor(int width, std::span<const double> eigenvector, double lambda, double t) {
  require(eigenvector.size() == (std::size_t{1} << width), "eigenvector length does not match the register");
  const Circuit prep = stateprep_circuit(eigenvector);
  Circuit c(width);
  c.append(prep.inverse());
  c.append(basis_state_phase_gate(width, 0, -t * lambda));
  c.append(prep);
  return c;
}

Circuit build_complete_walk(int qubits, double t) {
  const GraphSpec graph(Family::Complete, qubits, false);
  require_time(t);
  Circuit c(qubits);
  for (int q = 0; q < qubits; ++q) c.add(Gate::h(q));
  for (int q = 0; q < qubits; ++q) c.add(Gate::x(q));
  std::vector<Control> controls;
  for (int q = 1; q < qubits; ++q) controls.push_back({q, Polarity::OnOne});
  c.add(Gate::phase(0, t).controlled_by(std::move(controls)));
  for (int q = 0; q < qubits; ++q) c.add(Gate::x(q));
  for (int q = 0; q < qubits; ++q) c.add(Gate::h(q));
  c.add_global_phase(-t / static_cast<double>(graph.vertices()));
  return c;
}

Circuit build_complete_search(int qubits, double t) {
  const GraphSpec graph(Family::Complete, qubits);
  require_time(t);
  const auto model = complete_spectrum(qubits);
  Circuit c(qubits);
  for (const Eigenpair* e : {&model.minus(), &model.plus()}) {
    const auto v = e->materialize(model.vertices);
    c.append(spectral_factor(qubits, v, e->value, t));
  }
  c.add_global_phase(-t * model.energy_shift);
  return c;
}

Circuit build_bipartite_walk(int m, double t) {
  const GraphSpec graph(Family::CompleteBipartite, m, false);
  require_time(t);
  const std::size_t half = graph.vertices() / 2;
  Circuit c(m);
  for (int q = 0; q < m; ++q) c.add(Gate::h(q));
  c.append(basis_state_phase_gate(m, 0, t));
  c.append(basis_state_phase_gate(m, half, -t));
  for (int q = 0; q < m; ++q) c.add(Gate::h(q));
  return c;
}

Circuit build_bipartite_search(int m, double t, bool approx) {
  const GraphSpec graph(Family::CompleteBipartite, m);
  require_time(t);
  const auto model = bipartite_spectrum(m);
  Circuit c(m);
  for (const auto& e : model.eigen) {
    if (approx && e.label == "zero") continue;
    const auto v = e.materialize(model.vertices);
    c.append(spectral_factor(m, v, e.value, t));
  }
  return c;
}

Circuit build_hypercube_walk(int qubits, double t, double gamma) {
  const GraphSpec graph(Family::Hypercube, qubits, false);
  require_time(t);
  require(gamma > 0.0 && std::isfinite(gamma), "gamma must be positive");
  Circuit c(qubits);
  for (int q = 0; q < qubits; ++q) c.add(Gate::rx(q, -2.0 * gamma * t));
  return c;
}

Circuit build_hypercube_search(int qubits, double t, HypercubeEigenvalues eigs) {
  const GraphSpec graph(Family::Hypercube, qubits);
  require_time(t);
  const auto model = hypercube_spectral(qubits, eigs);
  Circuit c(qubits);
  for (const Eigenpair* e : {&model.minus(), &model.plus()}) {
    const auto v = e->materialize(model.vertices);
    c.append(spectral_factor(qubits, v, e->value, t));
  }
  return c;
}

Circuit build_circuit(const WalkCircuitRequest& request) {
  const auto& graph = request.graph;
  if (graph.search()) {
    require(!request.gamma_override, "gamma override applies to walk circuits only");
    switch (graph.family()) {
      case Family::Complete: return build_complete_search(graph.qubits(), request.t);
      case Family::CompleteBipartite: return build_bipartite_search(graph.qubits(), request.t, request.approx_bipartite);
      case Family::Hypercube: return build_hypercube_search(graph.qubits(), request.t, request.hypercube_eigs);
    }
  } else {
    if (request.gamma_override) require(*request.gamma_override > 0.0, "gamma override must be positive");
    switch (graph.family()) {
      case Family::Complete:
        require(!request.gamma_override, "the complete-graph walk circuit is fixed at gamma = 1/N");
        return build_complete_walk(graph.qubits(), request.t);
      case Family::CompleteBipartite:
        require(!request.gamma_override, "the bipartite walk circuit is fixed at gamma = 1/n");
        return build_bipartite_walk(graph.qubits(), request.t);
      case Family::Hypercube:
        return build_hypercube_walk(graph.qubits(), request.t, request.gamma_override.value_or(search_gamma(graph)));
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace ctqw
