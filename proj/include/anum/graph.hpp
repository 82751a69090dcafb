#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace anum {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr Mask full_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

/// A subset of the vertex labels of some parent graph, stored as one word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices);
  static constexpr VertexSet all(int n) { return VertexSet(full_mask(n)); }

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr int lowest() const noexcept { return std::countr_zero(bits_); }

  std::vector<int> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  Mask bits_ = 0;
};

/// Unordered vertex pair, normalized so that a < b.
struct EdgePair {
  int a = 0;
  int b = 0;

  /// Normalizes the order; throws LoopEdge when u == v.
  static EdgePair make(int u, int v);

  Mask mask() const noexcept { return bit(a) | bit(b); }
  friend constexpr bool operator==(const EdgePair&, const EdgePair&) = default;
  friend constexpr auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// Simple undirected graph on at most 64 vertices, adjacency as bitmasks.
/// Immutable in practice: every mutating operation returns a new Graph.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const Mask> adjacency() const noexcept { return adj_; }
  VertexSet vertices() const noexcept { return VertexSet::all(order()); }

  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  std::size_t edge_count() const;
  /// Edges sorted lexicographically with a < b.
  std::vector<EdgePair> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<Mask> adj_;
};

/// Mutable staging area used by constructors; validates every insertion.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  GraphBuilder& add(int u, int v);
  GraphBuilder& add(EdgePair e) { return add(e.a, e.b); }
  Graph build() &&;

 private:
  Graph g_;
};

Graph make_graph(int n, std::span<const EdgePair> edges);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

/// Compact relabeled graph together with the old label of every new vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<int> labels;  // labels[new] = old

  /// Image of an old-label set that lies inside the labeled vertex set.
  VertexSet relabel(VertexSet old_labels) const;
};

LabeledGraph induced(const Graph& g, VertexSet s);

/// Components of G|_S, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet s);

/// Component of G|_S containing v (v must lie in S).
Mask component_of(const Graph& g, Mask s, int v) noexcept;

bool is_connected(const Graph& g, VertexSet s);

Graph add_edge(const Graph& g, EdgePair e);
Graph remove_edge(const Graph& g, EdgePair e);

/// Adds `extra` isolated vertices with labels order()..order()+extra-1.
Graph pad_isolated(const Graph& g, int extra);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

enum class FamilyKind { Path, Cycle, Star, Complete, CompleteBipartite };

std::optional<FamilyKind> parse_family_kind(std::string_view name);
std::string_view to_string(FamilyKind kind) noexcept;

struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int n = 0;
  int m = 0;  // second part size for complete_bipartite
};

/// Canonical labeled constructions: path 0-1-...-(n-1); cycle closes {0,n-1};
/// star centered at 0 on n vertices; complete_bipartite parts {0..n-1}, {n..n+m-1}.
Graph family(const FamilySpec& spec);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);

/// Smallest vertex of degree n-1, if any.
std::optional<int> has_universal_vertex(const Graph& g);

inline constexpr int kMaxHamiltonianOrder = 16;

/// Spanning-cycle test by backtracking; false for n < 3. Throws TooLarge above 16.
bool is_hamiltonian(const Graph& g);

inline constexpr int kMaxCanonicalOrder = 8;

/// Canonical edge list: over all relabelings, the edge list (edges written
/// a < b and sorted by (b, a)) that is lexicographically minimal. Two graphs
/// have equal canonical forms exactly when they are isomorphic.
std::vector<EdgePair> canonical_form(const Graph& g);

/// The relabeled graph whose edge list is canonical_form(g).
Graph canonical_graph(const Graph& g);

}  // namespace anum
