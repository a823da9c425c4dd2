#include "contra/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "contra/errors.hpp"

namespace contra {

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kOctLine: return "oct-line";
    case GadgetKind::kCoctLine: return "coct-line";
    case GadgetKind::kCfvsLine: return "cfvs-line";
    case GadgetKind::kOctGirth: return "oct-girth";
    case GadgetKind::kCoctGirth: return "coct-girth";
    case GadgetKind::kCfvsGirth: return "cfvs-girth";
  }
  return "?";
}

std::optional<GadgetKind> gadget_kind_from_string(std::string_view name) {
  for (GadgetKind k : {GadgetKind::kOctLine, GadgetKind::kCoctLine, GadgetKind::kCfvsLine,
                       GadgetKind::kOctGirth, GadgetKind::kCoctGirth, GadgetKind::kCfvsGirth}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(VertexRole role) {
  switch (role) {
    case VertexRole::kOriginalVertex: return "original-vertex";
    case VertexRole::kOriginalEdge: return "original-edge";
    case VertexRole::kApexEdge: return "apex-edge";
    case VertexRole::kCycleEdge: return "cycle-edge";
    case VertexRole::kPendantEdge: return "pendant-edge";
    case VertexRole::kPathInternal: return "path-internal";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Source-problem oracles

std::optional<CycleFactor> has_even_cycle_factor(const Graph& g, int ceiling) {
  if (g.n() > ceiling) throw OracleCeilingError("has_even_cycle_factor", g.n(), ceiling);
  const Mask all = g.all();
  CycleFactor factor;
  std::vector<int> path;

  // Cover the lowest uncovered vertex r by an even cycle through uncovered
  // vertices, then recurse on the rest.
  auto cover = [&](auto&& cover_self, Mask covered) -> bool {
    if (covered == all) return true;
    const int r = lowest(all & ~covered);
    const Mask avail = all & ~covered;
    path.assign(1, r);

    auto extend = [&](auto&& extend_self, Mask in_path) -> bool {
      int last = path.back();
      if (path.size() >= 4 && path.size() % 2 == 0 && g.adjacent(last, r) && path[1] < last) {
        factor.cycles.push_back(path);
        std::vector<int> saved = path;
        if (cover_self(cover_self, covered | in_path)) return true;
        path = std::move(saved);
        factor.cycles.pop_back();
      }
      bool done = false;
      for_each_bit(g.neighbors(last) & avail & ~in_path, [&](int w) {
        if (done) return;
        path.push_back(w);
        if (extend_self(extend_self, in_path | bit(w))) {
          done = true;
          return;
        }
        path.pop_back();
      });
      return done;
    };
    return extend(extend, bit(r));
  };

  if (cover(cover, 0)) return factor;
  return std::nullopt;
}

bool is_even_cycle_factor(const Graph& g, const CycleFactor& factor) {
  Mask covered = 0;
  for (const auto& cycle : factor.cycles) {
    if (cycle.size() < 3 || cycle.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int v = cycle[i];
      if (v < 0 || v >= g.n() || ((covered >> v) & 1U)) return false;
      covered |= bit(v);
      if (!g.adjacent(v, cycle[(i + 1) % cycle.size()])) return false;
    }
  }
  return covered == g.all();
}

std::optional<std::vector<int>> has_hamiltonian_path(const Graph& g, int ceiling) {
  if (ceiling > kOracleHardCap) throw PreconditionError("oracle ceiling above hard cap");
  if (g.n() > ceiling) throw OracleCeilingError("has_hamiltonian_path", g.n(), ceiling);
  const int n = g.n();
  if (n == 0) return std::vector<int>{};
  // ends[mask] = vertices v such that some path visits exactly mask and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  for (std::size_t mask = 1; mask < ends.size(); ++mask) {
    std::uint32_t e = ends[mask];
    if (e == 0) continue;
    for_each_bit(e, [&](int v) {
      for_each_bit(g.neighbors(v) & ~static_cast<Mask>(mask),
                   [&](int w) { ends[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w; });
    });
  }
  std::size_t mask = ends.size() - 1;
  if (ends[mask] == 0) return std::nullopt;
  std::vector<int> path;
  int v = lowest(ends[mask]);
  path.push_back(v);
  while (std::popcount(mask) > 1) {
    std::size_t prev = mask & ~(std::size_t{1} << v);
    int u = lowest(ends[prev] & static_cast<std::uint32_t>(g.neighbors(v)));
    path.push_back(u);
    mask = prev;
    v = u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

std::string vertex_name(int v) { return "v" + std::to_string(v + 1); }

/// Labels every vertex of L(g) by the g-edge it stands for.
std::vector<VertexLabel> label_line_vertices(const LineGraph& lg, const std::vector<std::string>& names,
                                             const std::vector<bool>& is_original,
                                             auto&& classify) {
  std::vector<VertexLabel> labels;
  for (int i = 0; i < lg.map.size(); ++i) {
    Edge e = lg.map.edge_of(i);
    VertexRole role = is_original[static_cast<std::size_t>(e.u)] && is_original[static_cast<std::size_t>(e.v)]
                          ? VertexRole::kOriginalEdge
                          : classify(e);
    labels.push_back(VertexLabel{role, names[static_cast<std::size_t>(e.u)] + "-" +
                                           names[static_cast<std::size_t>(e.v)]});
  }
  return labels;
}

void require_edges(const Graph& g, const char* who) {
  if (g.m() == 0) throw PreconditionError(std::string(who) + ": source graph has no edges");
}

void require_girth(const Graph& g, int p, const char* who) {
  if (p < 3) throw PreconditionError(std::string(who) + ": p must be >= 3");
  auto gg = girth(g);
  if (gg && *gg < p) {
    throw PreconditionError(std::string(who) + ": source girth " + std::to_string(*gg) +
                            " is below p=" + std::to_string(p));
  }
}

void ensure_girth(const Graph& g, int p, const char* who) {
  auto gg = girth(g);
  if (gg && *gg < p) {
    throw std::logic_error(std::string(who) + ": constructed graph has girth " +
                           std::to_string(*gg) + " < " + std::to_string(p));
  }
}

/// Adds, for every edge uv of g, a new u-v path with `path_edges` edges while
/// keeping uv itself.
GadgetInstance add_parallel_paths(const Graph& g, int path_edges, int k, GadgetKind kind) {
  const int internal = path_edges - 1;
  const int total = g.n() + g.m() * internal;
  if (total > kMaxVertices) {
    throw PreconditionError(std::string(to_string(kind)) + ": construction needs " +
                            std::to_string(total) + " vertices; at most 64 supported");
  }
  GadgetInstance inst;
  inst.provenance = kind;
  inst.budget_k = k;
  for (int v = 0; v < g.n(); ++v) inst.labels.push_back({VertexRole::kOriginalVertex, vertex_name(v)});
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  int next = g.n();
  for (const Edge& e : g.edges()) {
    int prev = e.u;
    for (int i = 0; i < internal; ++i) {
      edges.push_back(Edge::of(prev, next));
      inst.labels.push_back({VertexRole::kPathInternal, "p(" + vertex_name(e.u) + "-" +
                                                            vertex_name(e.v) + ")#" +
                                                            std::to_string(i + 1)});
      prev = next++;
    }
    edges.push_back(Edge::of(prev, e.v));
  }
  inst.graph = build_graph(total, edges);
  return inst;
}

}  // namespace

GadgetInstance gadget_oct_linegraph(const Graph& g) {
  require_edges(g, "oct-line");
  LineGraph lg = line_graph(g);
  GadgetInstance inst;
  inst.provenance = GadgetKind::kOctLine;
  inst.budget_k = g.m() - g.n();
  std::vector<std::string> names;
  for (int v = 0; v < g.n(); ++v) names.push_back(vertex_name(v));
  std::vector<bool> original(static_cast<std::size_t>(g.n()), true);
  inst.labels = label_line_vertices(lg, names, original, [](Edge) { return VertexRole::kOriginalEdge; });
  inst.graph = std::move(lg.graph);
  return inst;
}

GadgetInstance gadget_coct_linegraph(const Graph& g) {
  require_edges(g, "coct-line");
  const int n = g.n();
  const int m = g.m();
  const int x = n;
  const int y1 = n + 1;
  const int y2 = n + 2;
  const int y3 = n + 3;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (int u = 0; u < n; ++u) edges.push_back(Edge::of(x, u));
  for (Edge e : {Edge::of(x, y1), Edge::of(y1, y2), Edge::of(y2, y3), Edge::of(y3, x)}) edges.push_back(e);
  Graph extended = build_graph(n + 4, edges);
  if (extended.n() != n + 4 || extended.m() != m + n + 4) {
    throw std::logic_error("coct-line: apex construction has wrong size");
  }

  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back(vertex_name(v));
  for (const char* s : {"x", "y1", "y2", "y3"}) names.emplace_back(s);
  std::vector<bool> original(static_cast<std::size_t>(n + 4), false);
  std::fill(original.begin(), original.begin() + n, true);

  LineGraph lg = line_graph(extended);
  GadgetInstance inst;
  inst.provenance = GadgetKind::kCoctLine;
  inst.budget_k = m;
  inst.labels = label_line_vertices(lg, names, original, [&](Edge e) {
    bool touches_cycle = e.u > x || e.v > x;
    return touches_cycle ? VertexRole::kCycleEdge : VertexRole::kApexEdge;
  });
  inst.graph = std::move(lg.graph);
  return inst;
}

GadgetInstance gadget_cfvs_linegraph(const Graph& g) {
  const int n = g.n();
  const int m = g.m();
  if (n < 3) throw PreconditionError("cfvs-line: source graph needs at least 3 vertices");
  const int x = n;
  const int y = n + 1;
  const int xp = n + 2;
  const int yp = n + 3;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (int u = 0; u < n; ++u) {
    edges.push_back(Edge::of(x, u));
    edges.push_back(Edge::of(y, u));
  }
  edges.push_back(Edge::of(xp, x));
  edges.push_back(Edge::of(yp, y));
  Graph extended = build_graph(n + 4, edges);
  if (extended.n() != n + 4 || extended.m() != m + 2 * n + 2) {
    throw std::logic_error("cfvs-line: apex construction has wrong size");
  }

  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back(vertex_name(v));
  for (const char* s : {"x", "y", "x'", "y'"}) names.emplace_back(s);
  std::vector<bool> original(static_cast<std::size_t>(n + 4), false);
  std::fill(original.begin(), original.begin() + n, true);

  LineGraph lg = line_graph(extended);
  GadgetInstance inst;
  inst.provenance = GadgetKind::kCfvsLine;
  inst.budget_k = m + n - 1;
  inst.labels = label_line_vertices(lg, names, original, [&](Edge e) {
    bool pendant = e.v == xp || e.v == yp;
    return pendant ? VertexRole::kPendantEdge : VertexRole::kApexEdge;
  });
  inst.graph = std::move(lg.graph);
  return inst;
}

GadgetInstance gadget_oct_girth(const Graph& g, int p, int k) {
  if (p < 3) throw PreconditionError("oct-girth: p must be >= 3");
  GadgetInstance inst;
  inst.provenance = GadgetKind::kOctGirth;
  inst.budget_k = k;
  inst.graph = g;
  for (int v = 0; v < g.n(); ++v) inst.labels.push_back({VertexRole::kOriginalVertex, vertex_name(v)});

  for (auto gg = girth(inst.graph); gg && *gg < p; gg = girth(inst.graph)) {
    std::vector<int> cycle = shortest_cycle(inst.graph);
    Edge pick = Edge::of(cycle[0], cycle[1]);
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      pick = std::min(pick, Edge::of(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    if (inst.graph.n() + 2 > kMaxVertices) {
      throw PreconditionError("oct-girth: reaching girth " + std::to_string(p) +
                              " needs more than 64 vertices");
    }
    std::string base = "s(" + inst.labels[static_cast<std::size_t>(pick.u)].name + "-" +
                       inst.labels[static_cast<std::size_t>(pick.v)].name + ")#";
    inst.graph = subdivide_edge(inst.graph, pick, 2);
    inst.labels.push_back({VertexRole::kPathInternal, base + "1"});
    inst.labels.push_back({VertexRole::kPathInternal, base + "2"});
  }
  ensure_girth(inst.graph, p, "oct-girth");
  return inst;
}

GadgetInstance gadget_coct_girth(const Graph& g, int p, int k) {
  require_girth(g, p, "coct-girth");
  if (g.m() < 2) throw PreconditionError("coct-girth: source graph needs at least two edges");
  GadgetInstance inst = add_parallel_paths(g, 2 * (p / 2), k, GadgetKind::kCoctGirth);
  ensure_girth(inst.graph, p, "coct-girth");
  return inst;
}

GadgetInstance gadget_cfvs_girth(const Graph& g, int p, int k) {
  require_girth(g, p, "cfvs-girth");
  GadgetInstance inst = add_parallel_paths(g, p - 1, k, GadgetKind::kCfvsGirth);
  ensure_girth(inst.graph, p, "cfvs-girth");
  return inst;
}

GadgetInstance build_gadget(GadgetKind kind, const Graph& source, int p, int k) {
  switch (kind) {
    case GadgetKind::kOctLine: return gadget_oct_linegraph(source);
    case GadgetKind::kCoctLine: return gadget_coct_linegraph(source);
    case GadgetKind::kCfvsLine: return gadget_cfvs_linegraph(source);
    case GadgetKind::kOctGirth: return gadget_oct_girth(source, p, k);
    case GadgetKind::kCoctGirth: return gadget_coct_girth(source, p, k);
    case GadgetKind::kCfvsGirth: return gadget_cfvs_girth(source, p, k);
  }
  throw std::invalid_argument("unknown gadget kind");
}

// ---------------------------------------------------------------------------
// Verification

namespace {

bool exists_within(const Graph& g, TransversalKind kind, bool connected, int k, int ceiling) {
  if (k < 0) return false;
  BruteForceQuery q;
  q.kind = kind;
  q.connected = connected;
  q.max_size = k;
  q.ceiling = ceiling;
  return brute_force_min(g, q).has_value();
}

}  // namespace

GadgetVerdict decide_gadget(const GadgetInstance& inst, const Graph& source, int ceiling) {
  GadgetVerdict v;
  const int k = inst.budget_k;
  const Graph& target = inst.graph;
  switch (inst.provenance) {
    case GadgetKind::kOctLine:
      v.source_yes = has_even_cycle_factor(source, ceiling).has_value();
      v.target_yes = exists_within(target, TransversalKind::kOddCycleTransversal, false, k, ceiling);
      break;
    case GadgetKind::kCoctLine:
      v.source_yes = has_even_cycle_factor(source, ceiling).has_value();
      v.target_yes = exists_within(target, TransversalKind::kOddCycleTransversal, true, k, ceiling);
      break;
    case GadgetKind::kCfvsLine:
      v.source_yes = has_hamiltonian_path(source, ceiling).has_value();
      v.target_yes = exists_within(target, TransversalKind::kFeedbackVertexSet, true, k, ceiling);
      break;
    case GadgetKind::kOctGirth:
      v.source_yes = exists_within(source, TransversalKind::kOddCycleTransversal, false, k, ceiling);
      v.target_yes = exists_within(target, TransversalKind::kOddCycleTransversal, false, k, ceiling);
      break;
    case GadgetKind::kCoctGirth:
      v.source_yes = exists_within(source, TransversalKind::kVertexCover, true, k, ceiling);
      v.target_yes = exists_within(target, TransversalKind::kOddCycleTransversal, true, k, ceiling);
      break;
    case GadgetKind::kCfvsGirth:
      v.source_yes = exists_within(source, TransversalKind::kVertexCover, true, k, ceiling);
      v.target_yes = exists_within(target, TransversalKind::kFeedbackVertexSet, true, k, ceiling);
      break;
  }
  return v;
}

bool verify_gadget(const GadgetInstance& inst, const Graph& source, int ceiling) {
  return decide_gadget(inst, source, ceiling).holds();
}

}  // namespace contra
