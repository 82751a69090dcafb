#include "anum/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "anum/error.hpp"

namespace anum {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::OutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
}

void check_subset(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw Error(ErrorKind::OutOfRange, "vertex set is not contained in the graph");
  }
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::OutOfRange, "vertex label out of range");
    m |= bit(v);
  }
  return VertexSet(m);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

EdgePair EdgePair::make(int u, int v) {
  if (u == v) throw Error(ErrorKind::LoopEdge, "loop edge at vertex " + std::to_string(u));
  return u < v ? EdgePair{u, v} : EdgePair{v, u};
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::vector<EdgePair> Graph::edges() const {
  std::vector<EdgePair> out;
  for (int a = 0; a < order(); ++a) {
    for (Mask m = neighbors(a) & ~full_mask(a + 1); m != 0; m &= m - 1) {
      out.push_back({a, std::countr_zero(m)});
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "negative vertex count");
  if (n > kMaxVertices) {
    throw Error(ErrorKind::VertexCountExceeded,
                "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  g_.adj_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add(int u, int v) {
  if (u == v) throw Error(ErrorKind::LoopEdge, "loop edge at vertex " + std::to_string(u));
  check_vertex(u, g_.order());
  check_vertex(v, g_.order());
  g_.adj_[static_cast<std::size_t>(u)] |= bit(v);
  g_.adj_[static_cast<std::size_t>(v)] |= bit(u);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph make_graph(int n, std::span<const EdgePair> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add(e.a, e.b);
  return std::move(b).build();
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add(u, v);
  return std::move(b).build();
}

VertexSet LabeledGraph::relabel(VertexSet old_labels) const {
  Mask out = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (old_labels.contains(labels[i])) out |= bit(static_cast<int>(i));
  }
  return VertexSet(out);
}

LabeledGraph induced(const Graph& g, VertexSet s) {
  check_subset(g, s);
  LabeledGraph out;
  out.labels = s.members();
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < out.labels.size(); ++i) index[static_cast<std::size_t>(out.labels[i])] = static_cast<int>(i);

  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    const int u = out.labels[i];
    for (Mask m = g.neighbors(u) & s.bits() & ~full_mask(u + 1); m != 0; m &= m - 1) {
      b.add(static_cast<int>(i), index[static_cast<std::size_t>(std::countr_zero(m))]);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Mask component_of(const Graph& g, Mask s, int v) noexcept {
  Mask seen = bit(v);
  Mask frontier = seen;
  const auto adj = g.adjacency();
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(m))];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet s) {
  check_subset(g, s);
  std::vector<VertexSet> out;
  for (Mask rest = s.bits(); rest != 0;) {
    const Mask c = component_of(g, s.bits(), std::countr_zero(rest));
    out.emplace_back(c);
    rest &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet s) {
  check_subset(g, s);
  if (s.empty()) return true;
  return component_of(g, s.bits(), s.lowest()) == s.bits();
}

Graph add_edge(const Graph& g, EdgePair e) {
  GraphBuilder b(g.order());
  for (const auto& old : g.edges()) b.add(old);
  b.add(e.a, e.b);
  return std::move(b).build();
}

Graph remove_edge(const Graph& g, EdgePair e) {
  check_vertex(e.a, g.order());
  check_vertex(e.b, g.order());
  GraphBuilder b(g.order());
  for (const auto& old : g.edges()) {
    if (old != e) b.add(old);
  }
  return std::move(b).build();
}

Graph pad_isolated(const Graph& g, int extra) {
  if (extra < 0) throw Error(ErrorKind::BadParams, "negative padding");
  GraphBuilder b(g.order() + extra);
  for (const auto& e : g.edges()) b.add(e);
  return std::move(b).build();
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw Error(ErrorKind::BadParams, "permutation size mismatch");
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]);
  return std::move(b).build();
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  if (name == "path") return FamilyKind::Path;
  if (name == "cycle") return FamilyKind::Cycle;
  if (name == "star") return FamilyKind::Star;
  if (name == "complete") return FamilyKind::Complete;
  if (name == "complete_bipartite") return FamilyKind::CompleteBipartite;
  return std::nullopt;
}

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Star: return "star";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::CompleteBipartite: return "complete_bipartite";
  }
  return "unknown";
}

Graph path_graph(int n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "path needs n >= 0");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add(v, v + 1);
  b.add(0, n - 1);
  return std::move(b).build();
}

Graph star_graph(int n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "star needs n >= 0");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add(0, v);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  if (n < 0) throw Error(ErrorKind::BadParams, "complete graph needs n >= 0");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add(u, v);
  }
  return std::move(b).build();
}

Graph complete_bipartite_graph(int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorKind::BadParams, "complete bipartite parts must be >= 0");
  if (p + q > kMaxVertices) throw Error(ErrorKind::VertexCountExceeded, "too many vertices");
  GraphBuilder b(p + q);
  for (int u = 0; u < p; ++u) {
    for (int v = p; v < p + q; ++v) b.add(u, v);
  }
  return std::move(b).build();
}

Graph family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path: return path_graph(spec.n);
    case FamilyKind::Cycle: return cycle_graph(spec.n);
    case FamilyKind::Star: return star_graph(spec.n);
    case FamilyKind::Complete: return complete_graph(spec.n);
    case FamilyKind::CompleteBipartite: return complete_bipartite_graph(spec.n, spec.m);
  }
  throw Error(ErrorKind::BadParams, "unknown family");
}

std::optional<int> has_universal_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

namespace {

// Extends a path that starts at vertex 0; `visited` includes the path.
bool extend_cycle(const Graph& g, int tail, Mask visited, Mask all) {
  if (visited == all) return g.has_edge(tail, 0);
  const Mask unvisited = all & ~visited;
  // Some unvisited vertex can no longer be entered and left: dead branch.
  for (Mask m = unvisited; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const Mask exits = g.neighbors(v) & (unvisited | bit(0) | bit(tail));
    if (std::popcount(exits) < 2) return false;
  }
  for (Mask m = g.neighbors(tail) & unvisited; m != 0; m &= m - 1) {
    const int next = std::countr_zero(m);
    if (extend_cycle(g, next, visited | bit(next), all)) return true;
  }
  return false;
}

}  // namespace

bool is_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n > kMaxHamiltonianOrder) {
    throw Error(ErrorKind::TooLarge, "Hamiltonian test limited to " + std::to_string(kMaxHamiltonianOrder) + " vertices");
  }
  if (n < 3) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return false;
  }
  return extend_cycle(g, 0, bit(0), full_mask(n));
}

namespace {

// Column-major branch and bound. Column j of a labeling holds the adjacency
// of the vertex placed at position j to positions 0..j-1, read as a binary
// number whose most significant bit is position 0. Maximizing the column
// sequence lexicographically is the same as minimizing the (b, a)-sorted
// edge list lexicographically.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    best_.fill(-1);
  }

  std::array<int, kMaxCanonicalOrder> run() {
    std::array<int, kMaxCanonicalOrder> pos{};
    descend(0, 0, pos);
    return best_pos_;
  }

 private:
  // The current prefix always equals best_'s prefix: a strictly larger
  // column overwrites best_ from that depth on.
  void descend(int depth, Mask used, std::array<int, kMaxCanonicalOrder>& pos) {
    if (depth == n_) {
      best_pos_ = pos;
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if ((used >> w) & 1U) continue;
      int col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (g_.has_edge(pos[static_cast<std::size_t>(i)], w) ? 1 : 0);
      auto& target = best_[static_cast<std::size_t>(depth)];
      if (col < target) continue;
      if (col > target) {
        target = col;
        for (int k = depth + 1; k < n_; ++k) best_[static_cast<std::size_t>(k)] = -1;
      }
      pos[static_cast<std::size_t>(depth)] = w;
      descend(depth + 1, used | bit(w), pos);
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxCanonicalOrder> best_{};
  std::array<int, kMaxCanonicalOrder> best_pos_{};
};

std::array<int, kMaxCanonicalOrder> canonical_positions(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorKind::TooLarge, "canonical form limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  return CanonicalSearch(g).run();
}

}  // namespace

Graph canonical_graph(const Graph& g) {
  const auto pos = canonical_positions(g);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) perm[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = i;
  return permute(g, perm);
}

std::vector<EdgePair> canonical_form(const Graph& g) {
  auto edges = canonical_graph(g).edges();
  std::sort(edges.begin(), edges.end(), [](const EdgePair& x, const EdgePair& y) {
    return std::pair(x.b, x.a) < std::pair(y.b, y.a);
  });
  return edges;
}

}  // namespace anum
