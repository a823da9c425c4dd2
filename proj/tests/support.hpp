#pragma once

// Naive reference checks for the tests. Everything here works from the edge
// list alone (no adjacency masks, no library predicates), so agreement with
// the library is meaningful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "contra/graph.hpp"
#include "contra/transversals.hpp"

namespace contra::testing {

using SetFamily = std::set<std::vector<int>>;

inline std::vector<int> members(std::uint64_t s, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if ((s >> v) & 1U) out.push_back(v);
  }
  return out;
}

inline bool in_set(std::uint64_t s, int v) { return ((s >> v) & 1U) != 0; }

inline std::vector<Edge> edges_outside(const Graph& g, std::uint64_t removed) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!in_set(removed, e.u) && !in_set(removed, e.v)) out.push_back(e);
  }
  return out;
}

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
  return x;
}

inline bool naive_acyclic_after(const Graph& g, std::uint64_t removed) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges_outside(g, removed)) {
    int a = find_root(parent, e.u);
    int b = find_root(parent, e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

inline bool naive_bipartite_after(const Graph& g, std::uint64_t removed) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges_outside(g, removed)) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    if (in_set(removed, r) || color[static_cast<std::size_t>(r)] != -1) continue;
    color[static_cast<std::size_t>(r)] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
          q.push(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool naive_satisfies(const Graph& g, TransversalKind kind, std::uint64_t s) {
  switch (kind) {
    case TransversalKind::kVertexCover: return edges_outside(g, s).empty();
    case TransversalKind::kFeedbackVertexSet: return naive_acyclic_after(g, s);
    case TransversalKind::kOddCycleTransversal: return naive_bipartite_after(g, s);
  }
  return false;
}

inline bool naive_connected(const Graph& g, std::uint64_t s) {
  std::vector<int> vs = members(s, g.n());
  if (vs.size() <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  int merges = 0;
  for (const Edge& e : g.edges()) {
    if (!in_set(s, e.u) || !in_set(s, e.v)) continue;
    int a = find_root(parent, e.u);
    int b = find_root(parent, e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      ++merges;
    }
  }
  return merges == static_cast<int>(vs.size()) - 1;
}

inline bool naive_independent(const Graph& g, std::uint64_t s) {
  for (const Edge& e : g.edges()) {
    if (in_set(s, e.u) && in_set(s, e.v)) return false;
  }
  return true;
}

inline SetFamily naive_maximal_independent_sets(const Graph& g) {
  const int n = g.n();
  SetFamily out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!naive_independent(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!in_set(s, v) && naive_independent(g, s | (std::uint64_t{1} << v))) maximal = false;
    }
    if (maximal) out.insert(members(s, n));
  }
  return out;
}

inline SetFamily naive_minimal_transversals(const Graph& g, TransversalKind kind) {
  const int n = g.n();
  SetFamily out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!naive_satisfies(g, kind, s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if (in_set(s, v) && naive_satisfies(g, kind, s & ~(std::uint64_t{1} << v))) minimal = false;
    }
    if (minimal) out.insert(members(s, n));
  }
  return out;
}

inline int naive_min_size(const Graph& g, TransversalKind kind, bool connected) {
  int best = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
    int size = static_cast<int>(members(s, g.n()).size());
    if (best != -1 && size >= best) continue;
    if (!naive_satisfies(g, kind, s)) continue;
    if (connected && !naive_connected(g, s)) continue;
    best = size;
  }
  return best;
}

inline bool naive_adjacent(const Graph& g, int u, int v) {
  Edge e = Edge::of(u, v);
  return std::find(g.edges().begin(), g.edges().end(), e) != g.edges().end();
}

/// Induced matching of size s by trying every s-subset of the edges.
inline bool naive_has_induced_matching(const Graph& g, int s) {
  const int m = g.m();
  if (s > m) return false;
  std::vector<int> pick(static_cast<std::size_t>(s));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < s && ok; ++i) {
      for (int j = i + 1; j < s && ok; ++j) {
        Edge a = g.edges()[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
        Edge b = g.edges()[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])];
        for (int x : {a.u, a.v}) {
          for (int y : {b.u, b.v}) {
            if (x == y || naive_adjacent(g, x, y)) ok = false;
          }
        }
      }
    }
    if (ok) return true;
    int i = s - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - s + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline bool naive_has_claw(const Graph& g) {
  const int n = g.n();
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int d = b + 1; d < n; ++d) {
          if (a == c || b == c || d == c) continue;
          if (naive_adjacent(g, c, a) && naive_adjacent(g, c, b) && naive_adjacent(g, c, d) &&
              !naive_adjacent(g, a, b) && !naive_adjacent(g, a, d) && !naive_adjacent(g, b, d)) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

/// Shortest cycle through each edge uv: shortest u-v path avoiding uv, plus one.
inline std::optional<int> naive_girth(const Graph& g) {
  std::optional<int> best;
  for (const Edge& skip : g.edges()) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    dist[static_cast<std::size_t>(skip.u)] = 0;
    std::queue<int> q;
    q.push(skip.u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const Edge& e : g.edges()) {
        if (e == skip) continue;
        int y = e.u == x ? e.v : (e.v == x ? e.u : -1);
        if (y < 0 || dist[static_cast<std::size_t>(y)] != -1) continue;
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
    }
    int d = dist[static_cast<std::size_t>(skip.v)];
    if (d != -1 && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

template <typename Sets>
SetFamily as_family(const Sets& sets) {
  SetFamily out;
  for (const auto& s : sets) out.insert(s.to_vector());
  return out;
}

}  // namespace contra::testing
