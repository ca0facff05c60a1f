#include "g2vir/graphs/virasoro_graph.hpp"

#include <stdexcept>
#include <string>

namespace g2vir::graphs {

VirasoroGraph::VirasoroGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxGraphLabels) {
    throw std::length_error("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxGraphLabels));
  }
}

void VirasoroGraph::check_label(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("label " + std::to_string(i) + " not in graph");
}

VirasoroGraph VirasoroGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  VirasoroGraph g(n);
  std::array<bool, kMaxGraphLabels + 1> hit{};
  for (const auto& [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") has a label outside 1.." + std::to_string(n));
    }
    if (g.succ_[i - 1] != 0) {
      throw std::invalid_argument("vertex " + std::to_string(i) + " has two outgoing edges");
    }
    if (hit[j]) throw std::invalid_argument("vertex " + std::to_string(j) + " has two incoming edges");
    hit[j] = true;
    g.succ_[i - 1] = static_cast<std::int8_t>(j);
  }
  return g;
}

std::optional<int> VirasoroGraph::target(int i) const {
  check_label(i);
  const int t = succ_[i - 1];
  if (t == 0) return std::nullopt;
  return t;
}

bool VirasoroGraph::in_image(int i) const {
  check_label(i);
  for (int k = 0; k < n_; ++k) {
    if (succ_[k] == i) return true;
  }
  return false;
}

int VirasoroGraph::degree(int i) const {
  return (in_domain(i) ? 1 : 0) + (in_image(i) ? 1 : 0);
}

std::vector<std::pair<int, int>> VirasoroGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    if (succ_[i - 1] != 0) out.emplace_back(i, succ_[i - 1]);
  }
  return out;
}

std::size_t VirasoroGraph::edge_count() const {
  std::size_t count = 0;
  for (int k = 0; k < n_; ++k) count += succ_[k] != 0 ? 1 : 0;
  return count;
}

VirasoroGraph VirasoroGraph::inverse() const {
  VirasoroGraph inv(n_);
  for (int i = 1; i <= n_; ++i) {
    if (succ_[i - 1] != 0) inv.succ_[succ_[i - 1] - 1] = static_cast<std::int8_t>(i);
  }
  return inv;
}

Decomposition classify(const VirasoroGraph& g) {
  const int n = g.size();
  Decomposition d;
  std::vector<bool> seen(n + 1, false);

  // Chains start at vertices with no incoming edge.
  for (int i = 1; i <= n; ++i) {
    if (g.in_image(i)) continue;
    std::vector<int> path{i};
    seen[i] = true;
    for (auto next = g.target(i); next; next = g.target(*next)) {
      path.push_back(*next);
      seen[*next] = true;
    }
    d.chains.push_back(std::move(path));
  }
  // Everything left lies on a cycle.
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    int v = i;
    do {
      cycle.push_back(v);
      seen[v] = true;
      v = *g.target(v);
    } while (v != i);
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

namespace {

class Enumerator {
 public:
  Enumerator(int n, const std::function<void(const VirasoroGraph&)>& visit)
      : n_(n), visit_(visit), used_(n + 1, false) {}

  void run() { subsets(0); }

 private:
  // Domains in lexicographic order of their sorted tuples.
  void subsets(int last) {
    maps(0);
    for (int next = last + 1; next <= n_; ++next) {
      domain_.push_back(next);
      subsets(next);
      domain_.pop_back();
    }
  }

  // Injective images for the current domain, lexicographic in the image tuple.
  void maps(std::size_t k) {
    if (k == domain_.size()) {
      std::vector<std::pair<int, int>> edges;
      edges.reserve(domain_.size());
      for (std::size_t t = 0; t < domain_.size(); ++t) edges.emplace_back(domain_[t], image_[t]);
      visit_(VirasoroGraph::from_edges(n_, edges));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[v]) continue;
      used_[v] = true;
      image_.push_back(v);
      maps(k + 1);
      image_.pop_back();
      used_[v] = false;
    }
  }

  int n_;
  const std::function<void(const VirasoroGraph&)>& visit_;
  std::vector<int> domain_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_graph(int n, const std::function<void(const VirasoroGraph&)>& visit, int cap) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  const int limit = std::min(cap, kMaxGraphLabels);
  if (n > limit) {
    throw std::length_error("graph order " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(limit));
  }
  Enumerator(n, visit).run();
}

std::vector<VirasoroGraph> enumerate_graphs(int n, int cap) {
  std::vector<VirasoroGraph> out;
  out.reserve(static_cast<std::size_t>(partial_permutation_count(std::max(0, std::min(n, cap)))));
  for_each_graph(n, [&](const VirasoroGraph& g) { out.push_back(g); }, cap);
  return out;
}

std::uint64_t partial_permutation_count(int n) {
  if (n < 0) throw std::invalid_argument("negative set size");
  // term_k = C(n,k)^2 k! ; term_{k+1} = term_k * (n-k)^2 / (k+1)
  std::uint64_t term = 1;
  std::uint64_t total = 1;
  for (int k = 0; k < n; ++k) {
    term = term * static_cast<std::uint64_t>(n - k) * static_cast<std::uint64_t>(n - k) /
           static_cast<std::uint64_t>(k + 1);
    total += term;
  }
  return total;
}

}  // namespace g2vir::graphs
