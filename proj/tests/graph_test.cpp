#include "anum/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "anum/enumerate.hpp"
#include "anum/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace anum {
namespace {

using test::kind_of;

void expect_well_formed(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.has_edge(v, v));
    EXPECT_EQ(g.neighbors(v) & ~full_mask(g.order()), 0U);
    for (int u = 0; u < g.order(); ++u) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
  }
}

TEST(MakeGraph, NullGraph) {
  const Graph g = make_graph(0, {});
  EXPECT_EQ(g.order(), 0);
  EXPECT_EQ(g.edge_count(), 0U);
}

TEST(MakeGraph, PathOnSix) {
  const Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(g, path_graph(6));
  EXPECT_EQ(g.edge_count(), 5U);
  expect_well_formed(g);
}

TEST(MakeGraph, DuplicatePairsCollapse) {
  const Graph g = make_graph(4, {{0, 1}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(g.degree(2), 0);
  EXPECT_EQ(g.degree(3), 0);
}

TEST(MakeGraph, Errors) {
  EXPECT_EQ(kind_of([] { make_graph(65, {}); }), ErrorKind::VertexCountExceeded);
  EXPECT_EQ(kind_of([] { make_graph(3, {{1, 1}}); }), ErrorKind::LoopEdge);
  EXPECT_EQ(kind_of([] { make_graph(3, {{0, 3}}); }), ErrorKind::OutOfRange);
  EXPECT_NO_THROW(make_graph(64, {{0, 63}}));
}

TEST(Induced, PathPrefixIsP3) {
  const auto sub = induced(path_graph(6), VertexSet::of({0, 1, 2}));
  EXPECT_EQ(sub.graph, path_graph(3));
  EXPECT_EQ(sub.labels, (std::vector<int>{0, 1, 2}));
}

TEST(Induced, CycleGivesTwoDisjointEdges) {
  const auto sub = induced(cycle_graph(6), VertexSet::of({0, 1, 3, 4}));
  EXPECT_EQ(sub.graph, make_graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(sub.labels, (std::vector<int>{0, 1, 3, 4}));
}

TEST(Induced, FullSetIsIdentity) {
  const Graph g = cycle_graph(5);
  const auto sub = induced(g, g.vertices());
  EXPECT_EQ(sub.graph, g);
}

TEST(Induced, OutOfRange) {
  EXPECT_EQ(kind_of([] { induced(path_graph(3), VertexSet::of({3})); }), ErrorKind::OutOfRange);
}

TEST(Induced, EdgeCountMatchesContainedEdges) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(9, rng);
    const VertexSet s(rng() & full_mask(9));
    std::size_t expected = 0;
    for (const auto& e : g.edges()) expected += (s.contains(e.a) && s.contains(e.b)) ? 1 : 0;
    EXPECT_EQ(induced(g, s).graph.edge_count(), expected);
  }
}

TEST(Components, Basic) {
  EXPECT_EQ(connected_components(path_graph(6), VertexSet::all(6)).size(), 1U);
  const auto parts = connected_components(path_graph(6), VertexSet::of({0, 1, 3, 4}));
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], VertexSet::of({0, 1}));
  EXPECT_EQ(parts[1], VertexSet::of({3, 4}));
  EXPECT_TRUE(connected_components(path_graph(6), VertexSet{}).empty());
}

TEST(Components, ArePartition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(10, rng);
    const VertexSet s(rng() & full_mask(10));
    Mask seen = 0;
    int last_low = -1;
    for (VertexSet c : connected_components(g, s)) {
      EXPECT_EQ(seen & c.bits(), 0U);
      EXPECT_GT(c.lowest(), last_low);
      last_low = c.lowest();
      EXPECT_TRUE(is_connected(g, c));
      seen |= c.bits();
    }
    EXPECT_EQ(seen, s.bits());
  }
}

TEST(AddEdge, Examples) {
  EXPECT_EQ(add_edge(path_graph(6), EdgePair{0, 5}), cycle_graph(6));
  EXPECT_EQ(add_edge(cycle_graph(6), EdgePair{0, 1}), cycle_graph(6));
  EXPECT_EQ(add_edge(make_graph(2, {}), EdgePair{0, 1}), complete_graph(2));
  EXPECT_EQ(kind_of([] { add_edge(path_graph(3), EdgePair{1, 1}); }), ErrorKind::LoopEdge);
  EXPECT_EQ(kind_of([] { add_edge(path_graph(3), EdgePair{0, 3}); }), ErrorKind::OutOfRange);
}

TEST(AddEdge, Idempotent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(8, rng);
    const int a = random_int(rng, 0, 7);
    int b = random_int(rng, 0, 6);
    if (b >= a) ++b;
    const auto e = EdgePair::make(a, b);
    const Graph once = add_edge(g, e);
    EXPECT_EQ(add_edge(once, e), once);
    expect_well_formed(once);
  }
}

TEST(Family, Constructions) {
  EXPECT_EQ(path_graph(6).edge_count(), 5U);
  const Graph star = family({FamilyKind::Star, 7});
  EXPECT_EQ(star.degree(0), 6);
  EXPECT_EQ(has_universal_vertex(star), 0);
  EXPECT_EQ(kind_of([] { family({FamilyKind::Cycle, 2}); }), ErrorKind::BadParams);
  EXPECT_EQ(complete_graph(5).edge_count(), 10U);
  EXPECT_EQ(family({FamilyKind::CompleteBipartite, 2, 3}).edge_count(), 6U);
}

TEST(UniversalVertex, Examples) {
  EXPECT_EQ(has_universal_vertex(star_graph(7)), 0);
  EXPECT_EQ(has_universal_vertex(complete_graph(4)), 0);
  EXPECT_FALSE(has_universal_vertex(path_graph(4)).has_value());
  EXPECT_FALSE(has_universal_vertex(Graph{}).has_value());
  EXPECT_EQ(has_universal_vertex(make_graph(1, {})), 0);
}

TEST(Hamiltonian, Examples) {
  EXPECT_TRUE(is_hamiltonian(cycle_graph(6)));
  EXPECT_FALSE(is_hamiltonian(path_graph(6)));
  EXPECT_FALSE(is_hamiltonian(complete_graph(2)));
  EXPECT_TRUE(is_hamiltonian(complete_graph(16)));
  EXPECT_FALSE(is_hamiltonian(complete_bipartite_graph(3, 4)));
  EXPECT_EQ(kind_of([] { is_hamiltonian(complete_graph(17)); }), ErrorKind::TooLarge);
}

TEST(Hamiltonian, MatchesPermutationOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = random_int(rng, 0, 8);
    const Graph g = random_graph(n, rng);
    EXPECT_EQ(is_hamiltonian(g), oracle::hamiltonian_by_permutation(g)) << "n=" << n;
  }
}

TEST(Canonical, IsomorphicPathsAgree) {
  const Graph a = make_graph(3, {{0, 1}, {1, 2}});
  const Graph b = make_graph(3, {{1, 0}, {0, 2}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(path_graph(4)), canonical_form(star_graph(4)));
  EXPECT_EQ(kind_of([] { canonical_form(path_graph(9)); }), ErrorKind::TooLarge);
}

TEST(Canonical, ElevenClassesOnFourVertices) {
  std::set<std::vector<EdgePair>> forms;
  for (std::uint64_t bits = 0; bits < (1U << pair_count(4)); ++bits) {
    forms.insert(canonical_form(labeled_graph_from_bits(4, bits)));
  }
  EXPECT_EQ(forms.size(), 11U);
}

TEST(Canonical, MatchesPermutationOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = random_int(rng, 0, 7);
    const Graph g = random_graph(n, rng);
    std::vector<std::pair<int, int>> got;
    for (const auto& e : canonical_form(g)) got.emplace_back(e.b, e.a);
    EXPECT_EQ(got, oracle::canonical_by_permutation(g));
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = random_int(rng, 1, 8);
    const Graph g = random_graph(n, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(permute(g, perm)), canonical_form(g));
  }
}

TEST(Enumerate, ClassCountsMatchKnownSequence) {
  // Unlabeled graphs on n vertices: 1, 1, 2, 4, 11, 34, 156, 1044.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(isomorphism_classes(n).size(), expected[n]) << "n=" << n;
}

TEST(Enumerate, EdgeBitsRoundTrip) {
  for (std::uint64_t bits = 0; bits < (1U << pair_count(5)); bits += 7) {
    EXPECT_EQ(labeled_graph_bits(labeled_graph_from_bits(5, bits)), bits);
  }
}

}  // namespace
}  // namespace anum
