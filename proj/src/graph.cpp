#include "contra/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "contra/errors.hpp"

namespace contra {

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
  }
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.u >= n || raw.v < 0 || raw.v >= n) {
      throw PreconditionError("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                              ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (raw.u == raw.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(raw.u));
    }
    g.adj_[static_cast<std::size_t>(raw.u)] |= bit(raw.v);
    g.adj_[static_cast<std::size_t>(raw.v)] |= bit(raw.u);
  }
  for (int u = 0; u < n; ++u) {
    for_each_bit(g.adj_[static_cast<std::size_t>(u)] & ~low_mask(u + 1),
                 [&](int v) { g.edges_.push_back(Edge{u, v}); });
  }

  int degree_sum = 0;
  for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
  assert(degree_sum == 2 * g.m());
  (void)degree_sum;
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.push_back(Edge{a, b});
  return build_graph(n, list);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  std::vector<int> to_child(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    to_child[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = to_child[static_cast<std::size_t>(e.u)];
    int b = to_child[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(Edge::of(a, b));
  }
  out.graph = build_graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

namespace {

/// Vertices of G[keep] reachable from start.
Mask reach(const Graph& g, Mask keep, int start) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= keep & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

int count_components(const Graph& g, Mask keep) {
  int components = 0;
  Mask rest = keep;
  while (rest != 0) {
    rest &= ~reach(g, keep, lowest(rest));
    ++components;
  }
  return components;
}

int count_edges(const Graph& g, Mask keep) {
  int twice = 0;
  for_each_bit(keep, [&](int v) { twice += std::popcount(g.neighbors(v) & keep); });
  return twice / 2;
}

bool is_connected_mask(const Graph& g, Mask keep) {
  if (keep == 0) return true;
  return reach(g, keep, lowest(keep)) == keep;
}

bool is_forest_mask(const Graph& g, Mask keep) {
  return count_edges(g, keep) == std::popcount(keep) - count_components(g, keep);
}

bool is_bipartite_mask(const Graph& g, Mask keep) {
  Mask rest = keep;
  while (rest != 0) {
    // BFS layer by layer; an edge inside a side means an odd cycle.
    Mask side[2] = {bit(lowest(rest)), 0};
    Mask frontier = side[0];
    int parity = 0;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
      next &= keep;
      if ((next & side[parity]) != 0) return false;
      next &= ~side[1 - parity];
      side[1 - parity] |= next;
      frontier = next;
      parity = 1 - parity;
    }
    rest &= ~(side[0] | side[1]);
  }
  return true;
}

bool is_connected_set(const Graph& g, const VertexSet& s) { return is_connected_mask(g, s.bits()); }

bool is_connected(const Graph& g) { return is_connected_mask(g, g.all()); }

bool is_acyclic(const Graph& g) { return is_forest_mask(g, g.all()); }

Bipartition bipartition_of(const Graph& g, Mask keep) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> queue;
  for (int root = 0; root < g.n(); ++root) {
    if (!((keep >> root) & 1U) || color[static_cast<std::size_t>(root)] >= 0) continue;
    color[static_cast<std::size_t>(root)] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      int cu = color[static_cast<std::size_t>(u)];
      bool odd = false;
      for_each_bit(g.neighbors(u) & keep, [&](int w) {
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - cu;
          queue.push_back(w);
        } else if (cw == cu) {
          odd = true;
        }
      });
      if (odd) return Bipartition{false, std::nullopt};
    }
  }
  return Bipartition{true, std::move(color)};
}

Bipartition is_bipartite(const Graph& g) { return bipartition_of(g, g.all()); }

namespace {

struct CycleSearch {
  int length = 0;  // 0 = none
  int root = -1;
  Edge closing;
};

/// BFS from every root; a non-tree edge (a,b) closes a walk of length
/// dist[a]+dist[b]+1. The global minimum over roots is the girth and the walk
/// attaining it is a simple cycle.
CycleSearch shortest_cycle_search(const Graph& g) {
  CycleSearch best;
  std::vector<int> dist(static_cast<std::size_t>(g.n()));
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::vector<int> queue;
  for (int r = 0; r < g.n(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(r)] = 0;
    parent[static_cast<std::size_t>(r)] = -1;
    queue.assign(1, r);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      int du = dist[static_cast<std::size_t>(u)];
      if (best.length != 0 && 2 * du + 1 >= best.length) break;
      for_each_bit(g.neighbors(u), [&](int w) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          int len = du + dist[static_cast<std::size_t>(w)] + 1;
          if (best.length == 0 || len < best.length) best = CycleSearch{len, r, Edge{u, w}};
        }
      });
    }
  }
  return best;
}

std::vector<int> path_to_root(const Graph& g, int root, int v) {
  // Re-run the BFS from root so parents match the search that found the cycle.
  std::vector<int> parent(static_cast<std::size_t>(g.n()), -2);
  std::vector<int> queue{root};
  parent[static_cast<std::size_t>(root)] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for_each_bit(g.neighbors(u), [&](int w) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    });
  }
  std::vector<int> path;
  for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  return path;  // v ... root
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  CycleSearch c = shortest_cycle_search(g);
  if (c.length == 0) return std::nullopt;
  return c.length;
}

std::vector<int> shortest_cycle(const Graph& g) {
  CycleSearch c = shortest_cycle_search(g);
  if (c.length == 0) return {};
  // BFS trees from the same root with the same neighbor order are identical,
  // so both halves come from one tree.
  std::vector<int> a = path_to_root(g, c.root, c.closing.u);
  std::vector<int> b = path_to_root(g, c.root, c.closing.v);
  std::vector<int> cycle(a.rbegin(), a.rend());  // root ... u
  // b is v ... root; append v ... (excluding root)
  cycle.insert(cycle.end(), b.begin(), b.end() - 1);
  if (static_cast<int>(cycle.size()) != c.length) {
    // The walk found at the minimizing root is always a simple cycle; any
    // mismatch here is an internal error.
    throw std::logic_error("shortest cycle reconstruction failed");
  }
  return cycle;
}

std::optional<std::vector<Edge>> find_induced_matching(const Graph& g, int s) {
  if (s < 1) throw PreconditionError("induced matching size must be >= 1");
  auto edges = g.edges();
  std::vector<Edge> chosen;
  // blocked = closed neighborhoods of the chosen edges' endpoints.
  auto search = [&](auto&& self, std::size_t from, Mask blocked) -> bool {
    if (static_cast<int>(chosen.size()) == s) return true;
    for (std::size_t i = from; i < edges.size(); ++i) {
      if (static_cast<int>(edges.size() - i) < s - static_cast<int>(chosen.size())) return false;
      const Edge& e = edges[i];
      if (((blocked >> e.u) & 1U) || ((blocked >> e.v) & 1U)) continue;
      chosen.push_back(e);
      Mask closed = g.neighbors(e.u) | g.neighbors(e.v) | bit(e.u) | bit(e.v);
      if (self(self, i + 1, blocked | closed)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, 0, 0)) return chosen;
  return std::nullopt;
}

bool is_sp2_free(const Graph& g, int s) { return !find_induced_matching(g, s).has_value(); }

std::optional<std::vector<int>> find_claw(const Graph& g) {
  for (int c = 0; c < g.n(); ++c) {
    std::vector<int> nb;
    for_each_bit(g.neighbors(c), [&](int v) { nb.push_back(v); });
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return std::vector<int>{c, nb[i], nb[j], nb[k]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

int LineGraphMap::vertex_of(Edge e) const {
  auto it = std::lower_bound(backward_.begin(), backward_.end(), e);
  if (it == backward_.end() || *it != e) return -1;
  return static_cast<int>(it - backward_.begin());
}

LineGraph line_graph(const Graph& g) {
  if (g.m() == 0) throw PreconditionError("line graph of an edgeless graph is empty");
  if (g.m() > kMaxVertices) {
    throw PreconditionError("line graph would have " + std::to_string(g.m()) +
                            " vertices; at most 64 supported");
  }
  std::vector<Edge> backward(g.edges().begin(), g.edges().end());
  std::vector<Edge> line_edges;
  for (std::size_t i = 0; i < backward.size(); ++i) {
    for (std::size_t j = i + 1; j < backward.size(); ++j) {
      const Edge& a = backward[i];
      const Edge& b = backward[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        line_edges.push_back(Edge{static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  LineGraph out{build_graph(g.m(), line_edges), LineGraphMap(std::move(backward))};
  return out;
}

Graph subdivide_edge(const Graph& g, Edge e, int internal) {
  e = Edge::of(e.u, e.v);
  if (e.u < 0 || e.v >= g.n() || !g.has_edge(e)) {
    throw PreconditionError("cannot subdivide (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "): not an edge");
  }
  if (internal < 0) throw PreconditionError("subdivision count must be nonnegative");
  if (internal == 0) return g;
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  int prev = e.u;
  for (int i = 0; i < internal; ++i) {
    int w = g.n() + i;
    edges.push_back(Edge::of(prev, w));
    prev = w;
  }
  edges.push_back(Edge::of(prev, e.v));
  return build_graph(g.n() + internal, edges);
}

}  // namespace contra
