#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ctqw {

enum class Family { Complete, CompleteBipartite, Hypercube };

std::string_view family_name(Family family);
/// Accepts "complete", "bipartite" / "complete-bipartite", "hypercube".
Family parse_family(std::string_view name);

/// Graph on N = 2^qubits vertices. Bipartite graphs have parts of size
/// n = 2^{qubits-1}: {0..n-1} and {n..N-1}. When `search` is set the marked
/// vertex is w = 0.
class GraphSpec {
 public:
  static constexpr int kMaxQubits = 20;

  GraphSpec(Family family, int qubits, bool search = true);

  static int min_qubits(Family family, bool search);

  Family family() const { return family_; }
  int qubits() const { return qubits_; }
  bool search() const { return search_; }
  std::size_t vertices() const { return std::size_t{1} << qubits_; }
  std::size_t marked() const { return 0; }

 private:
  Family family_;
  int qubits_;
  bool search_;
};

}  // namespace ctqw
