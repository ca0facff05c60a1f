#include <doctest.h>

#include <set>
#include <stdexcept>

#include "g2vir/graphs/census.hpp"
#include "g2vir/graphs/json.hpp"
#include "g2vir/graphs/virasoro_graph.hpp"

using namespace g2vir::graphs;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Independent count of partial permutations: sum_k C(n,k)^2 k!.
std::uint64_t partial_permutations(int n) {
  std::uint64_t total = 0;
  std::uint64_t factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= static_cast<std::uint64_t>(k);
    total += binomial(n, k) * binomial(n, k) * factorial;
  }
  return total;
}

}  // namespace

TEST_CASE("graph counts for small n") {
  CHECK(enumerate_graphs(0).size() == 1);
  CHECK(enumerate_graphs(1).size() == 2);
  CHECK(enumerate_graphs(2).size() == 7);
  CHECK(enumerate_graphs(3).size() == 34);
  CHECK(partial_permutations(3) == 34);
  for (int n = 0; n <= 6; ++n) CHECK(partial_permutation_count(n) == partial_permutations(n));
}

TEST_CASE("order-2 graphs are the seven listed ones in lexicographic order") {
  std::vector<std::vector<std::pair<int, int>>> edges;
  for (const auto& g : enumerate_graphs(2)) edges.push_back(g.edges());
  const std::vector<std::vector<std::pair<int, int>>> expected = {
      {}, {{1, 1}}, {{1, 2}}, {{2, 1}}, {{2, 2}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}};
  CHECK(std::set(edges.begin(), edges.end()) == std::set(expected.begin(), expected.end()));
  CHECK(edges.front().empty());
}

TEST_CASE("enumeration is duplicate free and respects the cap") {
  const auto all = enumerate_graphs(4);
  std::set<std::vector<std::pair<int, int>>> seen;
  for (const auto& g : all) seen.insert(g.edges());
  CHECK(seen.size() == all.size());
  CHECK(all.size() == 209);
  CHECK_THROWS_AS((void)enumerate_graphs(9), std::length_error);
  CHECK_THROWS_AS((void)enumerate_graphs(3, 2), std::length_error);
}

TEST_CASE("from_edges validates injectivity") {
  CHECK_THROWS_AS((void)VirasoroGraph::from_edges(2, {{1, 2}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS((void)VirasoroGraph::from_edges(2, {{1, 2}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS((void)VirasoroGraph::from_edges(2, {{1, 3}}), std::invalid_argument);
  const auto g = VirasoroGraph::from_edges(3, {{1, 1}, {2, 3}});
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.degree(3) == 1);
}

TEST_CASE("classify examples") {
  const auto loop = classify(VirasoroGraph::from_edges(1, {{1, 1}}));
  CHECK(loop.cycle_count() == 1);
  CHECK(loop.chain_count() == 0);
  CHECK(loop.cycles == std::vector<std::vector<int>>{{1}});

  const auto chain = classify(VirasoroGraph::from_edges(2, {{1, 2}}));
  CHECK(chain.cycle_count() == 0);
  CHECK(chain.chains == std::vector<std::vector<int>>{{1, 2}});

  const auto two_cycle = classify(VirasoroGraph::from_edges(2, {{1, 2}, {2, 1}}));
  CHECK(two_cycle.cycles == std::vector<std::vector<int>>{{1, 2}});
  CHECK(two_cycle.chain_count() == 0);

  const auto mixed = classify(VirasoroGraph::from_edges(5, {{3, 1}, {1, 4}, {5, 2}, {2, 5}}));
  CHECK(mixed.cycles == std::vector<std::vector<int>>{{2, 5}});
  CHECK(mixed.chains == std::vector<std::vector<int>>{{3, 1, 4}});

  const auto isolated = classify(VirasoroGraph(2));
  CHECK(isolated.chains == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("classify partitions labels and commutes with inversion") {
  for (const auto& g : enumerate_graphs(5)) {
    const Decomposition d = classify(g);
    std::multiset<int> labels;
    for (const auto& c : d.cycles) labels.insert(c.begin(), c.end());
    for (const auto& c : d.chains) labels.insert(c.begin(), c.end());
    REQUIRE(labels.size() == 5);
    REQUIRE(std::set(labels.begin(), labels.end()).size() == 5);

    const VirasoroGraph inv = g.inverse();
    REQUIRE(inv.inverse() == g);
    const Decomposition di = classify(inv);
    REQUIRE(di.cycle_count() == d.cycle_count());
    REQUIRE(di.chain_count() == d.chain_count());
  }
}

TEST_CASE("census examples") {
  const Census one = census(1);
  CHECK(one.table == std::map<std::pair<int, int>, std::uint64_t>{{{0, 1}, 1}, {{1, 0}, 1}});
  const Census two = census(2);
  // a^2 + 2ab + b^2 + b + 2a, keyed by (K = power of b, M = power of a).
  const std::map<std::pair<int, int>, std::uint64_t> expected{
      {{0, 2}, 1}, {{1, 1}, 2}, {{2, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 2}};
  CHECK(two.table == expected);
  CHECK(two.total() == 7);
}

TEST_CASE("counting polynomial matches the census for n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    const Census c = census(n);
    const CountingPolynomial p = counting_polynomial(n);
    INFO("n = " << n);
    CHECK(matches(c, p));
    CHECK(c.total() == partial_permutations(n));
  }
  CHECK(counting_polynomial(1).coefficients ==
        std::map<std::pair<int, int>, std::int64_t>{{{0, 1}, 1}, {{1, 0}, 1}});
}

TEST_CASE("graph JSON round-trips") {
  const auto g = VirasoroGraph::from_edges(2, {{1, 2}});
  CHECK(to_json(g).dump() == R"({"n":2,"edges":[[1,2]]})");
  for (const auto& h : enumerate_graphs(3)) REQUIRE(graph_from_json(to_json(h)) == h);
  const auto j = to_json(census(2));
  CHECK(j["total"] == 7);
  CHECK(j["n"] == 2);
}
