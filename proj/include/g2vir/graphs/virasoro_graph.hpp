#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace g2vir::graphs {

/// Default enumeration cap; n = 8 already gives 1,441,729 graphs.
inline constexpr int kDefaultGraphCap = 8;
/// Storage limit for a single graph.
inline constexpr int kMaxGraphLabels = 12;

/// Order-n Virasoro graph, stored as a partial injective map sigma on the
/// labels {1..n}: every edge is i -> sigma(i).
class VirasoroGraph {
 public:
  explicit VirasoroGraph(int n = 0);

  /// Builds a graph from directed edges (i, j) meaning i -> j. Throws
  /// std::invalid_argument unless the edges form a partial injective map.
  static VirasoroGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] std::optional<int> target(int i) const;
  [[nodiscard]] bool in_domain(int i) const { return target(i).has_value(); }
  [[nodiscard]] bool in_image(int i) const;
  /// Total degree of vertex i: 0, 1 or 2 (a loop counts as in + out).
  [[nodiscard]] int degree(int i) const;
  /// Edges sorted by source label.
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
  [[nodiscard]] std::size_t edge_count() const;

  /// The inverse partial permutation (every edge reversed).
  [[nodiscard]] VirasoroGraph inverse() const;

  friend bool operator==(const VirasoroGraph&, const VirasoroGraph&) = default;

 private:
  void check_label(int i) const;

  int n_ = 0;
  std::array<std::int8_t, kMaxGraphLabels> succ_{};  // 0 = not in domain
};

/// Cycle/chain decomposition of a graph.
struct Decomposition {
  /// Each cycle starts at its smallest label and follows the edges.
  std::vector<std::vector<int>> cycles;
  /// Each chain is listed in path order from its in-degree-0 end; an
  /// isolated vertex is a length-1 chain.
  std::vector<std::vector<int>> chains;

  [[nodiscard]] int cycle_count() const { return static_cast<int>(cycles.size()); }
  [[nodiscard]] int chain_count() const { return static_cast<int>(chains.size()); }
};

[[nodiscard]] Decomposition classify(const VirasoroGraph& g);

/// Visits every order-n graph once, in lexicographic order on (domain, images).
/// Throws std::length_error if n exceeds `cap` (or the storage limit).
void for_each_graph(int n, const std::function<void(const VirasoroGraph&)>& visit,
                    int cap = kDefaultGraphCap);

[[nodiscard]] std::vector<VirasoroGraph> enumerate_graphs(int n, int cap = kDefaultGraphCap);

/// Number of partial permutations of an n-set: sum_k C(n,k)^2 k!.
[[nodiscard]] std::uint64_t partial_permutation_count(int n);

}  // namespace g2vir::graphs
