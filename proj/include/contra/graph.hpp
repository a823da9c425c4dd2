#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "contra/vertex_set.hpp"

namespace contra {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on at most 64 vertices. Adjacency is a
/// bit row per vertex; the edge list is sorted.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  int max_degree() const;
  bool adjacent(int u, int v) const { return ((neighbors(u) >> v) & 1U) != 0; }
  bool has_edge(Edge e) const { return e.u != e.v && adjacent(e.u, e.v); }

  std::span<const Edge> edges() const { return edges_; }
  Mask all() const { return low_mask(n()); }
  VertexSet vertices() const { return VertexSet::full(n()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);

  std::vector<Mask> adj_;
  std::vector<Edge> edges_;
};

/// Throws PreconditionError on self-loops, out-of-range endpoints, or n > 64.
/// Duplicate pairs are collapsed.
Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new vertex index -> vertex of the source graph
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Predicates over G[keep]. They are the hot inner checks of every search, so
// they take raw masks.
int count_components(const Graph& g, Mask keep);
int count_edges(const Graph& g, Mask keep);
bool is_connected_mask(const Graph& g, Mask keep);
bool is_forest_mask(const Graph& g, Mask keep);
bool is_bipartite_mask(const Graph& g, Mask keep);

/// Empty and singleton sets are connected.
bool is_connected_set(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

bool is_acyclic(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  /// color[v] in {0,1}; present only when bipartite.
  std::optional<std::vector<int>> coloring;
};

Bipartition is_bipartite(const Graph& g);
/// Two-coloring of G[keep]; vertices outside keep get color -1.
Bipartition bipartition_of(const Graph& g, Mask keep);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
/// Vertex sequence of one shortest cycle (consecutive vertices adjacent,
/// last adjacent to first); empty for forests.
std::vector<int> shortest_cycle(const Graph& g);

/// s pairwise disjoint edges with no edge between any two of them, if any.
std::optional<std::vector<Edge>> find_induced_matching(const Graph& g, int s);
bool is_sp2_free(const Graph& g, int s);

/// Induced K1,3 as (center, leaf, leaf, leaf), if any.
std::optional<std::vector<int>> find_claw(const Graph& g);

class LineGraphMap {
 public:
  LineGraphMap() = default;
  explicit LineGraphMap(std::vector<Edge> backward) : backward_(std::move(backward)) {}

  Edge edge_of(int line_vertex) const { return backward_[static_cast<std::size_t>(line_vertex)]; }
  /// Vertex of L(G) representing e; -1 if e is not an edge of G.
  int vertex_of(Edge e) const;
  int size() const { return static_cast<int>(backward_.size()); }

 private:
  std::vector<Edge> backward_;  // sorted, so vertex_of is a binary search
};

struct LineGraph {
  Graph graph;
  LineGraphMap map;
};

/// Throws PreconditionError for edgeless input.
LineGraph line_graph(const Graph& g);

/// Replaces e by a path through `internal` new vertices, numbered n, n+1, ...
/// in order from e.u towards e.v.
Graph subdivide_edge(const Graph& g, Edge e, int internal);

}  // namespace contra
