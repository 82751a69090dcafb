#include "anum/recomplement.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "anum/enumerate.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace anum {
namespace {

using test::kind_of;

/// Edge set of a labeled graph in the labels of the original graph.
std::vector<std::pair<int, int>> original_edges(const LabeledGraph& lg) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : lg.graph.edges()) {
    int a = lg.labels[static_cast<std::size_t>(e.a)];
    int b = lg.labels[static_cast<std::size_t>(e.b)];
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Brute force from the definition: a, b adjacent iff connected inside I ∪ {a, b}.
std::vector<std::pair<int, int>> brute_rc(const Graph& g, Mask removed) {
  const oracle::Matrix m(g);
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (((removed >> a) & 1U) || ((removed >> b) & 1U)) continue;
      auto members = oracle::members_of(removed | bit(a) | bit(b));
      for (const auto& c : oracle::components(m, members)) {
        if (std::count(c.begin(), c.end(), a) && std::count(c.begin(), c.end(), b)) out.emplace_back(a, b);
      }
    }
  }
  return out;
}

TEST(ReconnectedComplement, CycleWithChordExample) {
  // C6 + {1,4} with I = {1,2}, 1-based: edges {3,4},{4,5},{5,6},{3,6},{4,6}.
  const Graph g = add_edge(cycle_graph(6), EdgePair{0, 3});
  const auto rc = reconnected_complement(g, VertexSet::of({0, 1}));
  EXPECT_EQ(rc.labels, (std::vector<int>{2, 3, 4, 5}));
  const std::vector<std::pair<int, int>> expected{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  EXPECT_EQ(original_edges(rc), expected);
}

TEST(ReconnectedComplement, EmptyRemovalIsIdentity) {
  const Graph g = path_graph(5);
  const auto rc = reconnected_complement(g, VertexSet{});
  EXPECT_EQ(rc.graph, g);
}

TEST(ReconnectedComplement, StarCenterGivesClique) {
  const auto rc = reconnected_complement(star_graph(5), VertexSet::of({0}));
  EXPECT_EQ(rc.graph, complete_graph(4));
}

TEST(ReconnectedComplement, OutOfRange) {
  EXPECT_EQ(kind_of([] { reconnected_complement(path_graph(3), VertexSet::of({5})); }), ErrorKind::OutOfRange);
}

TEST(ReconnectedComplement, MatchesDefinition) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = random_int(rng, 1, 9);
    const Graph g = random_graph(n, rng);
    const Mask removed = rng() & full_mask(n);
    EXPECT_EQ(original_edges(reconnected_complement(g, VertexSet(removed))), brute_rc(g, removed));
  }
}

TEST(ReconnectedComplement, CollapseOrderDoesNotMatter) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = random_int(rng, 1, 10);
    const Graph g = random_graph(n, rng);
    auto order = VertexSet(rng() & full_mask(n)).members();
    std::shuffle(order.begin(), order.end(), rng);
    const auto direct = reconnected_complement(g, VertexSet(oracle::mask_of(order)));
    const auto first = reconnected_complement_by_collapse(g, order);
    std::reverse(order.begin(), order.end());
    const auto second = reconnected_complement_by_collapse(g, order);
    EXPECT_EQ(first.labels, direct.labels);
    EXPECT_EQ(first.graph, direct.graph);
    EXPECT_EQ(second.graph, direct.graph);
  }
}

TEST(ReconnectedComplement, InterchangeWithRestriction) {
  // (G|_J)*_I = (G*_I)|_{J \ I} for I ⊆ J.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = random_int(rng, 1, 10);
    const Graph g = random_graph(n, rng);
    const Mask j = rng() & full_mask(n);
    const Mask i = rng() & j;
    const auto restricted = induced(g, VertexSet(j));
    const auto left = reconnected_complement(restricted.graph, restricted.relabel(VertexSet(i)));
    const auto rc = reconnected_complement(g, VertexSet(i));
    const auto right = induced(rc.graph, rc.relabel(VertexSet(j & ~i)));
    EXPECT_EQ(left.graph, right.graph);
  }
}

TEST(ReconnectedComplement, MonotoneInSubgraphs) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = random_int(rng, 2, 9);
    const Graph g = random_graph(n, rng);
    Graph h = g;
    for (const auto& e : g.edges()) {
      if (rng() & 1U) h = remove_edge(h, e);
    }
    const VertexSet removed(rng() & full_mask(n));
    const auto big = reconnected_complement(g, removed).graph;
    const auto small = reconnected_complement(h, removed).graph;
    for (const auto& e : small.edges()) EXPECT_TRUE(big.has_edge(e.a, e.b));
  }
}

TEST(ClosureClass, Membership) {
  EXPECT_TRUE(in_closure_class(Graph{}, ClosureClass::Connected));
  EXPECT_FALSE(in_closure_class(make_graph(2, {}), ClosureClass::Connected));
  EXPECT_TRUE(in_closure_class(complete_graph(2), ClosureClass::HamiltonianPlusSmall));
  EXPECT_FALSE(in_closure_class(path_graph(3), ClosureClass::HamiltonianPlusSmall));
  EXPECT_TRUE(in_closure_class(cycle_graph(5), ClosureClass::HamiltonianPlusSmall));
  EXPECT_TRUE(in_closure_class(star_graph(5), ClosureClass::UniversalVertex));
  EXPECT_FALSE(in_closure_class(path_graph(4), ClosureClass::UniversalVertex));
  EXPECT_EQ(parse_closure_class("hamiltonian"), ClosureClass::HamiltonianPlusSmall);
  EXPECT_FALSE(parse_closure_class("planar").has_value());
}

TEST(ClosureClass, ClosedUnderReconnectedComplement) {
  std::mt19937_64 rng(47);
  for (ClosureClass c : {ClosureClass::Connected, ClosureClass::HamiltonianPlusSmall, ClosureClass::UniversalVertex}) {
    int tested = 0;
    for (int trial = 0; trial < 3000 && tested < 150; ++trial) {
      const int n = random_int(rng, 1, 8);
      const Graph g = random_graph(n, rng);
      if (!in_closure_class(g, c)) continue;
      ++tested;
      const VertexSet removed(rng() & full_mask(n));
      EXPECT_TRUE(in_closure_class(reconnected_complement(g, removed).graph, c)) << to_string(c);
    }
    EXPECT_GT(tested, 50);
  }
}

TEST(ClosureClass, ClosedExhaustivelyUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : isomorphism_classes(n)) {
      for (ClosureClass c : {ClosureClass::Connected, ClosureClass::HamiltonianPlusSmall, ClosureClass::UniversalVertex}) {
        if (!in_closure_class(g, c)) continue;
        for (Mask removed = 0; removed <= full_mask(n); ++removed) {
          ASSERT_TRUE(in_closure_class(reconnected_complement(g, VertexSet(removed)).graph, c))
              << to_string(c) << " n=" << n;
        }
      }
    }
  }
}

TEST(ClosureClass, ClosedOnLargerRandomGraphs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = random_int(rng, 8, 12);
    Graph g = random_graph(n, rng);
    if (trial % 3 == 1) g = add_edge(add_edge(g, EdgePair{0, 1}), EdgePair::make(0, n - 1));
    const VertexSet removed(rng() & full_mask(n));
    const Graph rc = reconnected_complement(g, removed).graph;
    for (ClosureClass c : {ClosureClass::Connected, ClosureClass::HamiltonianPlusSmall, ClosureClass::UniversalVertex}) {
      if (in_closure_class(g, c)) EXPECT_TRUE(in_closure_class(rc, c)) << to_string(c);
    }
  }
}

TEST(ReconnectedComplement, IteratedCollapse) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = random_int(rng, 1, 10);
    const Graph g = random_graph(n, rng);
    const Mask removed = rng() & full_mask(n);
    if (removed == full_mask(n)) continue;
    const auto outside = VertexSet(full_mask(n) & ~removed).members();
    const int v = outside[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(outside.size()) - 1))];
    const auto step = reconnected_complement(g, VertexSet(removed));
    const auto local = step.relabel(VertexSet::of({v})).lowest();
    EXPECT_EQ(collapse_vertex(step.graph, local).graph, reconnected_complement(g, VertexSet(removed | bit(v))).graph);
  }
}

TEST(ReconnectedComplement, UniversalVertexRule) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : isomorphism_classes(n)) {
      const auto u = has_universal_vertex(g);
      if (!u) continue;
      for (Mask removed = 0; removed <= full_mask(n); ++removed) {
        const auto rc = reconnected_complement(g, VertexSet(removed));
        if ((removed >> *u) & 1U) {
          ASSERT_EQ(rc.graph, complete_graph(rc.graph.order()));
        } else {
          const int local = rc.relabel(VertexSet::of({*u})).lowest();
          ASSERT_EQ(rc.graph.degree(local), rc.graph.order() - 1);
        }
      }
    }
  }
}

TEST(ClosureClass, Minimality) {
  EXPECT_TRUE(is_minimal_in_class(cycle_graph(6), ClosureClass::HamiltonianPlusSmall));
  EXPECT_FALSE(is_minimal_in_class(complete_graph(4), ClosureClass::UniversalVertex));
  EXPECT_TRUE(is_minimal_in_class(make_graph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}), ClosureClass::Connected));
  EXPECT_TRUE(is_minimal_in_class(path_graph(5), ClosureClass::Connected));
  EXPECT_FALSE(is_minimal_in_class(cycle_graph(5), ClosureClass::Connected));
  EXPECT_TRUE(is_minimal_in_class(cycle_graph(5), ClosureClass::HamiltonianPlusSmall));
  EXPECT_TRUE(is_minimal_in_class(star_graph(5), ClosureClass::UniversalVertex));
  EXPECT_FALSE(is_minimal_in_class(path_graph(4), ClosureClass::UniversalVertex));
}

}  // namespace
}  // namespace anum
