#include "anum/engine.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "anum/enumerate.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace anum {
namespace {

using test::big;
using test::kind_of;

TEST(Engine, NullGraphAndSingletons) {
  EXPECT_EQ(sa(Graph{}), 1);
  EXPECT_EQ(sa(make_graph(1, {})), 0);
  EXPECT_EQ(sa(complete_graph(2)), -1);
  EXPECT_EQ(sa(make_graph(2, {})), 0);
  EXPECT_EQ(a_sequence(Graph{}), big({1}));
}

TEST(Engine, PathAndCycleOnSix) {
  EXPECT_EQ(sa(path_graph(6)), -5);
  EXPECT_EQ(a_number(path_graph(6)), 5);
  EXPECT_EQ(a_sequence(path_graph(6)), big({1, 5, 9, 5}));
  EXPECT_EQ(sa(cycle_graph(6)), -10);
  EXPECT_EQ(a_sequence(cycle_graph(6)), big({1, 6, 15, 10}));
}

TEST(Engine, SmallFamilies) {
  EXPECT_EQ(a_number(star_graph(4)), 2);
  EXPECT_EQ(a_sequence(star_graph(4)), big({1, 3, 2}));
  EXPECT_EQ(a_sequence(path_graph(4)), big({1, 3, 2}));
  EXPECT_EQ(a_sequence(cycle_graph(4)), big({1, 4, 3}));
  EXPECT_EQ(a_sequence(cycle_graph(5)), big({1, 5, 10}));
  EXPECT_EQ(a_sequence(path_graph(7)), big({1, 6, 14, 14}));
  EXPECT_EQ(a_sequence(complete_graph(4)), big({1, 6, 5}));
  const auto star7 = a_sequence(star_graph(7));
  ASSERT_EQ(star7.size(), 4U);
  EXPECT_EQ(star7, big({1, 6, 40, 96}));
}

TEST(Engine, BNumbers) {
  EXPECT_EQ(b_number(path_graph(3)), -1);
  EXPECT_EQ(b_number(make_graph(1, {})), 1);
  EXPECT_EQ(b_number(complete_graph(2)), 0);
}

TEST(Engine, OrderCap) {
  EngineOptions opts;
  opts.max_order = 4;
  EXPECT_EQ(kind_of([&] { sa(path_graph(5), opts); }), ErrorKind::TooLarge);
  EXPECT_NO_THROW(sa(path_graph(4), opts));
}

TEST(Engine, MatchesRecursiveOracle) {
  // Every labeled graph up to 5 vertices and random graphs on 6.
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pair_count(n)); ++bits) {
      const Graph g = labeled_graph_from_bits(n, bits);
      EXPECT_EQ(a_sequence(g), big(oracle::a_sequence_brute(g)));
      EXPECT_EQ(b_number(g), oracle::b_brute(g));
    }
  }
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(6, rng);
    const auto table = sa_all_subsets(g);
    for (Mask s = 0; s < 64; ++s) EXPECT_EQ(table.at(s), oracle::sa_recursive(g, s));
  }
}

TEST(Engine, SignLaw) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(random_int(rng, 0, 9), rng);
    const auto table = sa_all_subsets(g);
    for (Mask s = 0; s <= full_mask(g.order()); ++s) {
      const int size = std::popcount(s);
      const BigInt& v = table.at(s);
      if (size % 2 != 0) {
        EXPECT_EQ(v, 0);
      } else {
        EXPECT_TRUE(v == 0 || sgn(v) == ((size / 2) % 2 == 0 ? 1 : -1));
      }
      EXPECT_EQ(v != 0, is_even_cover(g, s));
    }
  }
}

TEST(Engine, BSignByComponents) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pair_count(n)); ++bits) {
      const Graph g = labeled_graph_from_bits(n, bits);
      const auto bs = b_all_subsets(sa_all_subsets(g));
      for (Mask s = 0; s <= full_mask(n); ++s) {
        const BigInt& b = bs[static_cast<std::size_t>(s)];
        EXPECT_TRUE(b_component_sign_holds(g, s, b));
        if (is_connected(g, VertexSet(s))) EXPECT_TRUE(b_sign_law_holds(g, s, b));
      }
    }
  }
  EXPECT_FALSE(b_component_sign_holds(path_graph(3), full_mask(3), BigInt(1)));
  EXPECT_FALSE(b_component_sign_holds(complete_graph(2), full_mask(2), BigInt(1)));
}

TEST(Engine, OddSignRuleFailsOnThreePoints) {
  const Graph g = make_graph(3, {});
  EXPECT_EQ(b_number(g), 1);
  EXPECT_FALSE(b_sign_law_holds(g, full_mask(3), b_number(g)));
  EXPECT_TRUE(b_component_sign_holds(g, full_mask(3), b_number(g)));
}

TEST(Engine, InvariantUnderRelabeling) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = random_int(rng, 1, 10);
    const Graph g = random_graph(n, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(a_sequence(permute(g, perm)), a_sequence(g));
    EXPECT_EQ(b_number(permute(g, perm)), b_number(g));
  }
}

TEST(Engine, SerialAndParallelKernelsAgree) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(random_int(rng, 0, 12), rng);
    std::vector<std::int64_t> s64;
    std::vector<std::int64_t> p64;
    ASSERT_TRUE(kernels::sa_table_serial(g, s64));
    ASSERT_TRUE(kernels::sa_table_parallel(g, p64));
    EXPECT_EQ(s64, p64);
    std::vector<BigInt> sbig;
    std::vector<BigInt> pbig;
    kernels::sa_table_serial(g, sbig);
    kernels::sa_table_parallel(g, pbig);
    EXPECT_EQ(sbig, pbig);
    EXPECT_EQ(sbig, big(s64));
    EngineOptions par;
    par.policy = ExecPolicy::Parallel;
    EXPECT_EQ(a_sequence(g, par), a_sequence(g));
  }
}

TEST(Engine, TopTermIsANumber) {
  const auto seq = a_sequence(complete_graph(14));
  EXPECT_EQ(seq.size(), 8U);
  const auto cap = sa(complete_graph(14));
  EXPECT_EQ(abs(cap), seq.back());
}

TEST(Engine, EvenCoverFamily) {
  const auto ec = even_cover_family(path_graph(4));
  // ∅, {1,2}, {2,3}, {3,4}, {1,2,3,4}
  ASSERT_EQ(ec.size(), 5U);
  EXPECT_TRUE(ec.front().empty());
  EXPECT_TRUE(std::is_sorted(ec.begin(), ec.end()));
}

TEST(Engine, BZetaTransform) {
  std::mt19937_64 rng(71);
  const Graph g = random_graph(7, rng);
  const auto table = sa_all_subsets(g);
  const auto bs = b_all_subsets(table);
  for (Mask s = 0; s < 128; s += 5) EXPECT_EQ(bs[static_cast<std::size_t>(s)], b_number(induced(g, VertexSet(s)).graph));
}

}  // namespace
}  // namespace anum
