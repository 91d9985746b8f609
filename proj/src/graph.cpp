#include "ctqw/graph.hpp"

#include <stdexcept>

namespace ctqw {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "bipartite";
    case Family::Hypercube: return "hypercube";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::Complete;
  if (name == "bipartite" || name == "complete-bipartite") return Family::CompleteBipartite;
  if (name == "hypercube") return Family::Hypercube;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

int GraphSpec::min_qubits(Family family, bool search) {
  switch (family) {
    case Family::Complete: return 1;
    case Family::CompleteBipartite: return 2;
    case Family::Hypercube: return search ? 2 : 1;
  }
  return 1;
}

GraphSpec::GraphSpec(Family family, int qubits, bool search) : family_(family), qubits_(qubits), search_(search) {
  const int lo = min_qubits(family, search);
  if (qubits < lo) {
    throw std::invalid_argument(std::string(family_name(family)) + " graph needs at least " + std::to_string(lo) +
                                " qubits, got " + std::to_string(qubits));
  }
  if (qubits > kMaxQubits) {
    throw std::invalid_argument("at most " + std::to_string(kMaxQubits) + " qubits supported, got " +
                                std::to_string(qubits));
  }
}

}  // namespace ctqw
