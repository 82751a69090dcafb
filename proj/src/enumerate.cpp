#include "anum/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "anum/error.hpp"
#include "anum/graph_io.hpp"

namespace anum {

Graph labeled_graph_from_bits(int n, std::uint64_t edge_bits) {
  if (n > 11) throw Error(ErrorKind::TooLarge, "edge-bit encoding limited to 11 vertices");
  GraphBuilder b(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((edge_bits >> k) & 1U) b.add(i, j);
    }
  }
  return std::move(b).build();
}

std::uint64_t labeled_graph_bits(const Graph& g) {
  if (g.order() > 11) throw Error(ErrorKind::TooLarge, "edge-bit encoding limited to 11 vertices");
  std::uint64_t out = 0;
  int k = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) out |= std::uint64_t{1} << k;
    }
  }
  return out;
}

std::string canonical_key(const Graph& g) { return emit_graph6(canonical_graph(g)); }

std::vector<Graph> isomorphism_classes(int n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "vertex count must be >= 0");
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorKind::TooLarge, "isomorphism classes limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  std::vector<Graph> layer{Graph{}};
  for (int m = 1; m <= n; ++m) {
    std::set<std::string> keys;
    for (const Graph& base : layer) {
      for (Mask nbrs = 0; nbrs <= full_mask(m - 1); ++nbrs) {
        GraphBuilder b(m);
        for (const auto& e : base.edges()) b.add(e);
        for (Mask r = nbrs; r != 0; r &= r - 1) b.add(m - 1, std::countr_zero(r));
        keys.insert(canonical_key(std::move(b).build()));
      }
    }
    layer.clear();
    for (const auto& key : keys) layer.push_back(parse_graph6(key));
  }
  return layer;
}

int random_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw exactly uniform and portable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Graph random_graph(int n, std::mt19937_64& rng) {
  GraphBuilder b(n);
  std::uint64_t word = 0;
  int left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        word = rng();
        left = 64;
      }
      if (word & 1U) b.add(i, j);
      word >>= 1;
      --left;
    }
  }
  return std::move(b).build();
}

}  // namespace anum
