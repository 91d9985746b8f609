// ctqw: build, simulate and compare CTQW search circuits.
//
// Exit codes: 0 ok, 1 user error (bad flags, out-of-range sizes), 2 internal error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctqw/builders.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/qasm.hpp"
#include "ctqw/report.hpp"
#include "ctqw/spectral.hpp"
#include "ctqw/stateprep.hpp"
#include "ctqw/synthesis.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string graph = "complete";
  int qubits = 4;
  int steps = 40;
  std::string mode = "exact";
  std::string format = "csv";
  std::string out;
  std::vector<std::string> sources{"circuit", "oracle"};
  bool asymptotic_eigs = false;
  bool walk = false;
  double dt = 1.0;
  double time = 1.0;
  double gamma = 0.0;
  std::uint64_t seed = 1;
  int min_qubits = 3;
  int max_qubits = 10;
};

ctqw::HypercubeEigenvalues eigs_of(const RunConfig& c) {
  return c.asymptotic_eigs ? ctqw::HypercubeEigenvalues::Asymptotic : ctqw::HypercubeEigenvalues::ExactSums;
}

ctqw::GraphSpec graph_of(const RunConfig& c, bool search = true) {
  return ctqw::GraphSpec(ctqw::parse_family(c.graph), c.qubits, search);
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    ctqw::write_atomic(c.out, text);
  }
}

json histogram_json(const ctqw::GateHistogram& h) {
  json j = json::object();
  for (const auto& [kind, count] : h.by_kind) j[kind] = count;
  j["total"] = h.total();
  return j;
}

int cmd_build(const RunConfig& c) {
  const auto graph = graph_of(c, !c.walk);
  ctqw::WalkCircuitRequest request{graph, c.time};
  request.approx_bipartite = c.mode == "approx";
  request.hypercube_eigs = eigs_of(c);
  if (c.gamma > 0.0) request.gamma_override = c.gamma;
  const auto circuit = ctqw::build_circuit(request);
  const auto decomposed = ctqw::decompose(circuit);

  // Re-simulation check: the decomposed gate list (what the QASM file holds)
  // must act like the original on a seeded random state.
  std::mt19937_64 rng(c.seed);
  std::normal_distribution<double> normal;
  std::vector<ctqw::Complex> amps(graph.vertices());
  double norm2 = 0.0;
  for (auto& z : amps) {
    z = {normal(rng), normal(rng)};
    norm2 += std::norm(z);
  }
  for (auto& z : amps) z /= std::sqrt(norm2);
  const ctqw::StateVector probe(graph.qubits(), std::move(amps));
  const auto a = ctqw::simulate(circuit, probe);
  const auto b = ctqw::simulate(decomposed, probe);
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));

  double t_opt = 0.0;
  if (graph.search()) t_opt = ctqw::spectral_model(graph, eigs_of(c)).t_opt;

  std::printf("graph: %s\n", std::string(ctqw::family_name(graph.family())).c_str());
  std::printf("width: %d\n", circuit.width());
  std::printf("gates (raw): %zu\n", ctqw::gate_count(circuit).total());
  for (const auto& [kind, count] : ctqw::gate_count(circuit).by_kind) std::printf("  %s: %zu\n", kind.c_str(), count);
  std::printf("gates (decomposed): %zu\n", ctqw::gate_count(decomposed).total());
  for (const auto& [kind, count] : ctqw::gate_count(decomposed).by_kind) std::printf("  %s: %zu\n", kind.c_str(), count);
  if (graph.search()) std::printf("t_opt: %d (%.6f)\n", static_cast<int>(std::floor(t_opt)), t_opt);
  std::printf("resimulation max |diff|: %.3g\n", diff);
  if (!c.out.empty()) {
    ctqw::write_atomic(c.out, ctqw::export_qasm(decomposed));
    std::printf("wrote %s\n", c.out.c_str());
  }
  if (!(diff <= 1e-10)) {
    std::fprintf(stderr, "error: decomposed circuit disagrees with the original (%.3g)\n", diff);
    return 2;
  }
  return 0;
}

int cmd_sweep(const RunConfig& c) {
  const auto graph = graph_of(c);
  if (c.steps < 0) throw UserError("--steps must be non-negative");
  ctqw::CurveOptions options{c.steps, c.dt, eigs_of(c)};
  ctqw::SweepTable table;
  for (const auto& name : c.sources) {
    const auto source = ctqw::parse_source(name);
    if (source == ctqw::Source::Oracle && graph.vertices() > ctqw::kMaxOracleVertices) {
      throw UserError("oracle requested beyond N = " + std::to_string(ctqw::kMaxOracleVertices));
    }
    auto r = ctqw::success_curve(graph, source, options);
    table.times = r.times;
    switch (source) {
      case ctqw::Source::Circuit: table.circuit = std::move(r.probabilities); break;
      case ctqw::Source::Oracle: table.oracle = std::move(r.probabilities); break;
      case ctqw::Source::CircuitApprox: table.approx = std::move(r.probabilities); break;
    }
  }
  if (c.mode == "approx" && !table.approx) {
    table.approx = ctqw::success_curve(graph, ctqw::Source::CircuitApprox, options).probabilities;
  }
  if (c.format == "csv") {
    emit(c, ctqw::sweep_csv(table));
    return 0;
  }
  json j;
  j["graph"] = ctqw::family_name(graph.family());
  j["qubits"] = graph.qubits();
  j["dt"] = c.dt;
  j["times"] = table.times;
  if (table.circuit) j["p_circuit"] = *table.circuit;
  if (table.oracle) j["p_oracle"] = *table.oracle;
  if (table.approx) j["p_approx"] = *table.approx;
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_spectral(const RunConfig& c) {
  const auto graph = graph_of(c);
  const auto model = ctqw::spectral_model(graph, eigs_of(c));
  json j;
  j["graph"] = ctqw::family_name(graph.family());
  j["qubits"] = graph.qubits();
  j["vertices"] = model.vertices;
  j["gamma"] = model.gamma;
  j["epsilon"] = model.epsilon;
  j["t_opt"] = model.t_opt;
  j["overlaps"] = {{"w_plus", model.w_overlap_plus},
                   {"w_minus", model.w_overlap_minus},
                   {"s_plus", model.s_overlap_plus},
                   {"s_minus", model.s_overlap_minus}};
  json eigen = json::array();
  for (const auto& e : model.eigen) {
    json item{{"label", e.label}, {"lambda", e.value}, {"exact", e.exact}};
    if (graph.family() == ctqw::Family::CompleteBipartite) {
      item["cubic_residual"] = ctqw::bipartite_cubic(e.value, graph.qubits());
    }
    eigen.push_back(item);
  }
  j["eigen"] = eigen;
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_gatecount(const RunConfig& c) {
  if (c.min_qubits > c.max_qubits) throw UserError("--min must not exceed --max");
  const auto family = ctqw::parse_family(c.graph);
  std::vector<int> ns;
  std::vector<double> prep_counts;
  std::vector<double> search_counts;
  json rows = json::array();
  for (int n = c.min_qubits; n <= c.max_qubits; ++n) {
    const ctqw::GraphSpec graph(family, n);
    const auto model = ctqw::spectral_model(graph, eigs_of(c));
    const auto prep = ctqw::stateprep_circuit(model.plus().materialize(model.vertices));
    ctqw::WalkCircuitRequest request{graph, 1.0};
    request.approx_bipartite = c.mode == "approx";
    request.hypercube_eigs = eigs_of(c);
    const auto search = ctqw::build_circuit(request);
    const auto prep_hist = ctqw::gate_count(ctqw::decompose(prep));
    const auto search_hist = ctqw::gate_count(ctqw::decompose(search));
    ns.push_back(n);
    prep_counts.push_back(static_cast<double>(prep_hist.total()));
    search_counts.push_back(static_cast<double>(search_hist.total()));
    rows.push_back({{"qubits", n}, {"stateprep", histogram_json(prep_hist)}, {"search", histogram_json(search_hist)}});
  }
  const auto prep_fit = ctqw::fit_quadratic(ns, prep_counts);
  const auto search_fit = ctqw::fit_quadratic(ns, search_counts);
  if (c.format == "csv") {
    std::string out = "qubits,stateprep_basic,search_basic\n";
    for (std::size_t i = 0; i < ns.size(); ++i) {
      out += std::to_string(ns[i]) + "," + ctqw::format_number(prep_counts[i]) + "," +
             ctqw::format_number(search_counts[i]) + "\n";
    }
    out += "# fit c*n^2: stateprep c=" + ctqw::format_number(prep_fit.c) +
           " max_rel_residual=" + ctqw::format_number(prep_fit.max_relative_residual()) +
           "; search c=" + ctqw::format_number(search_fit.c) +
           " max_rel_residual=" + ctqw::format_number(search_fit.max_relative_residual()) + "\n";
    emit(c, out);
    return 0;
  }
  json j;
  j["graph"] = ctqw::family_name(family);
  j["rows"] = rows;
  j["fit"] = {{"stateprep", {{"c", prep_fit.c}, {"max_relative_residual", prep_fit.max_relative_residual()}}},
              {"search", {{"c", search_fit.c}, {"max_relative_residual", search_fit.max_relative_residual()}}}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate-level CTQW spatial search: build, simulate, compare"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_graph = [&cfg](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph, "complete | bipartite | hypercube")
        ->check(CLI::IsMember({"complete", "bipartite", "complete-bipartite", "hypercube"}));
    sub->add_option("--qubits", cfg.qubits, "register width q (N = 2^q)");
    sub->add_flag("--asymptotic-eigs", cfg.asymptotic_eigs, "hypercube: use lambda = -1 +- 1/sqrt(N)");
    sub->add_option("--mode", cfg.mode, "exact | approx (bipartite: drop the lambda_0 factor)")
        ->check(CLI::IsMember({"exact", "approx"}));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };

  auto* build = app.add_subcommand("build", "build a circuit, report gate counts, optionally export QASM");
  add_graph(build);
  build->add_option("--time", cfg.time, "evolution time of the circuit");
  build->add_flag("--walk", cfg.walk, "walk without a marked vertex");
  build->add_option("--gamma", cfg.gamma, "hypercube walk transition rate");
  build->add_option("--seed", cfg.seed, "seed of the random re-simulation probe");

  auto* sweep = app.add_subcommand("sweep", "success probability per step from the uniform state");
  add_graph(sweep);
  sweep->add_option("--steps", cfg.steps, "number of steps");
  sweep->add_option("--dt", cfg.dt, "time per step")->check(CLI::PositiveNumber);
  sweep->add_option("--sources", cfg.sources, "circuit, oracle, approx")->delimiter(',');
  sweep->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  auto* spectral = app.add_subcommand("spectral", "eigenvalues, gamma, epsilon, overlaps and t_opt as JSON");
  add_graph(spectral);

  auto* gatecount = app.add_subcommand("gatecount", "decomposed gate counts over a range of widths");
  add_graph(gatecount);
  gatecount->add_option("--min", cfg.min_qubits, "smallest width");
  gatecount->add_option("--max", cfg.max_qubits, "largest width");
  gatecount->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*spectral) return cmd_spectral(cfg);
    if (*gatecount) return cmd_gatecount(cfg);
  } catch (const UserError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 2;
}
