#include "contra/transversals.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>
#include <sstream>

#include "contra/errors.hpp"
#include "parallel.hpp"

namespace contra {

std::string_view to_string(TransversalKind kind) {
  switch (kind) {
    case TransversalKind::kVertexCover: return "vc";
    case TransversalKind::kFeedbackVertexSet: return "fvs";
    case TransversalKind::kOddCycleTransversal: return "oct";
  }
  return "?";
}

std::optional<TransversalKind> transversal_kind_from_string(std::string_view name) {
  if (name == "vc") return TransversalKind::kVertexCover;
  if (name == "fvs") return TransversalKind::kFeedbackVertexSet;
  if (name == "oct") return TransversalKind::kOddCycleTransversal;
  return std::nullopt;
}

EnumerationKind minimal_family(TransversalKind kind) {
  switch (kind) {
    case TransversalKind::kVertexCover: return EnumerationKind::kMinimalVertexCovers;
    case TransversalKind::kFeedbackVertexSet: return EnumerationKind::kMinimalFeedbackVertexSets;
    case TransversalKind::kOddCycleTransversal: return EnumerationKind::kMinimalOddCycleTransversals;
  }
  throw std::invalid_argument("unknown transversal kind");
}

bool satisfies_mask(const Graph& g, TransversalKind kind, Mask s) {
  Mask rest = g.all() & ~s;
  switch (kind) {
    case TransversalKind::kVertexCover: return count_edges(g, rest) == 0;
    case TransversalKind::kFeedbackVertexSet: return is_forest_mask(g, rest);
    case TransversalKind::kOddCycleTransversal: return is_bipartite_mask(g, rest);
  }
  return false;
}

bool satisfies(const Graph& g, TransversalKind kind, const VertexSet& s) {
  if (s.universe() != g.n()) throw PreconditionError("vertex set universe does not match graph");
  return satisfies_mask(g, kind, s.bits());
}

PriceBound price_constant(TransversalKind kind, int s) {
  if (s < 1) throw PreconditionError("s must be >= 1");
  PriceBound bound;
  bound.kind = kind;
  bound.s = s;
  switch (kind) {
    case TransversalKind::kVertexCover:
    case TransversalKind::kOddCycleTransversal:
      bound.constant = 4 * s * s + 2 * s - 10;
      break;
    case TransversalKind::kFeedbackVertexSet:
      bound.constant = 12 * s * s - 2 * s - 2;
      break;
  }
  bound.effective = std::max(0, bound.constant);
  return bound;
}

std::string_view to_string(Certificate::Type type) {
  switch (type) {
    case Certificate::Type::kEdgeCheck: return "edge-check";
    case Certificate::Type::kForestCheck: return "forest-check";
    case Certificate::Type::kBipartition: return "bipartition";
  }
  return "?";
}

Certificate make_certificate(const Graph& g, TransversalKind kind, const VertexSet& s) {
  Certificate c;
  switch (kind) {
    case TransversalKind::kVertexCover:
      c.type = Certificate::Type::kEdgeCheck;
      break;
    case TransversalKind::kFeedbackVertexSet:
      c.type = Certificate::Type::kForestCheck;
      break;
    case TransversalKind::kOddCycleTransversal: {
      c.type = Certificate::Type::kBipartition;
      Bipartition b = bipartition_of(g, g.all() & ~s.bits());
      if (b.coloring) c.coloring = *b.coloring;
      break;
    }
  }
  return c;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

bool verify_report(const Graph& g, const SolveReport& report) {
  const VertexSet& s = report.solution;
  if (s.universe() != g.n() || s.size() != report.size) return false;
  auto in_s = [&](int v) { return s.contains(v); };

  switch (report.kind) {
    case TransversalKind::kVertexCover:
      for (const Edge& e : g.edges()) {
        if (!in_s(e.u) && !in_s(e.v)) return false;
      }
      break;
    case TransversalKind::kFeedbackVertexSet: {
      DisjointSets ds(g.n());
      for (const Edge& e : g.edges()) {
        if (!in_s(e.u) && !in_s(e.v) && !ds.unite(e.u, e.v)) return false;
      }
      break;
    }
    case TransversalKind::kOddCycleTransversal: {
      const auto& color = report.certificate.coloring;
      if (report.certificate.type != Certificate::Type::kBipartition) return false;
      if (static_cast<int>(color.size()) != g.n()) return false;
      for (int v = 0; v < g.n(); ++v) {
        if ((color[static_cast<std::size_t>(v)] < 0) != in_s(v)) return false;
      }
      for (const Edge& e : g.edges()) {
        if (!in_s(e.u) && !in_s(e.v) &&
            color[static_cast<std::size_t>(e.u)] == color[static_cast<std::size_t>(e.v)]) {
          return false;
        }
      }
      break;
    }
  }

  if (report.connected_required && s.size() > 1) {
    DisjointSets ds(g.n());
    int merges = 0;
    for (const Edge& e : g.edges()) {
      if (in_s(e.u) && in_s(e.v) && ds.unite(e.u, e.v)) ++merges;
    }
    if (merges != s.size() - 1) return false;
  }
  return true;
}

SolveReport min_transversal(const Graph& g, TransversalKind kind) {
  auto start = std::chrono::steady_clock::now();
  EnumerationStream stream = enumerate(g, minimal_family(kind));
  std::optional<VertexSet> best;
  while (auto s = stream.next()) {
    if (!best || solution_less(*s, *best)) best = *s;
  }
  SolveReport report;
  report.kind = kind;
  report.size = best->size();
  report.solution = *best;
  report.certificate = make_certificate(g, kind, *best);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("graph is disconnected; a connected transversal is undefined");
  }
}

/// Iterative deepening over |A|; within one size, combinations of the pool in
/// increasing order, so the first hit is lexicographically smallest.
std::optional<Mask> pad_to_connected(const Graph& g, Mask s, int budget) {
  if (is_connected_mask(g, s)) return s;
  if (budget <= 0) return std::nullopt;

  // Any useful added vertex lies on a path between two parts of G[s] with at
  // most `budget` internal vertices, hence within distance budget of s.
  Mask pool = 0;
  Mask reached = s;
  Mask frontier = s;
  for (int d = 0; d < budget && frontier != 0; ++d) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= ~reached;
    reached |= next;
    pool |= next;
    frontier = next;
  }
  std::vector<int> candidates;
  for_each_bit(pool, [&](int v) { candidates.push_back(v); });

  // One added vertex merges at most deg-many components into one.
  const int merge = std::max(0, g.max_degree() - 1);
  const int limit = std::min<int>(budget, static_cast<int>(candidates.size()));

  for (int size = 1; size <= limit; ++size) {
    std::optional<Mask> found;
    auto search = [&](auto&& self, std::size_t from, Mask current, int remaining) -> bool {
      int components = count_components(g, current);
      if (remaining == 0) {
        if (components == 1) {
          found = current;
          return true;
        }
        return false;
      }
      if (components - 1 > remaining * merge) return false;
      for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= candidates.size(); ++i) {
        if (self(self, i + 1, current | bit(candidates[i]), remaining - 1)) return true;
      }
      return false;
    };
    if (search(search, 0, s, size)) return found;
  }
  return std::nullopt;
}

struct Candidate {
  Mask solution = 0;
  int padding = 0;
  bool valid = false;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.solution != b.solution) return solution_less(a.solution, b.solution);
  return a.padding < b.padding;
}

}  // namespace

std::optional<VertexSet> connect_padding(const Graph& g, const VertexSet& s, int budget) {
  require_connected(g);
  if (budget < 0) throw PreconditionError("padding budget must be nonnegative");
  if (s.universe() != g.n()) throw PreconditionError("vertex set universe does not match graph");
  auto padded = pad_to_connected(g, s.bits(), budget);
  if (!padded) return std::nullopt;
  return VertexSet(g.n(), *padded);
}

SolveReport min_connected_transversal(const Graph& g, TransversalKind kind,
                                      const ConnectedSolveOptions& options) {
  auto start = std::chrono::steady_clock::now();
  require_connected(g);

  int budget = 0;
  if (options.pad_budget) {
    if (*options.pad_budget < 0) throw PreconditionError("padding budget must be nonnegative");
    budget = *options.pad_budget;
  } else {
    if (options.s < 1) throw PreconditionError("s must be >= 1");
    if (auto matching = find_induced_matching(g, options.s)) {
      std::ostringstream msg;
      msg << "automatic padding budget needs an sP2-free graph; found induced " << options.s
          << "P2 on edges";
      for (const Edge& e : *matching) msg << ' ' << e.u + 1 << '-' << e.v + 1;
      msg << " (1-indexed)";
      throw PreconditionError(msg.str());
    }
    budget = price_constant(kind, options.s).effective;
  }

  std::vector<VertexSet> minimal = enumerate(g, minimal_family(kind)).collect();
  Candidate best;

  if (options.execution == Execution::kSerial) {
    for (const VertexSet& s : minimal) {
      if (auto padded = pad_to_connected(g, s.bits(), budget)) {
        Candidate c{*padded, std::popcount(*padded) - s.size(), true};
        if (better(c, best)) best = c;
      }
    }
  } else {
    // Smallest minimal sets first so the shared bound tightens early. The cap
    // never cuts off a candidate of the optimal size, so the result matches
    // the serial loop exactly.
    std::stable_sort(minimal.begin(), minimal.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    std::atomic<int> best_size{INT_MAX};
    std::vector<Candidate> per_thread(static_cast<std::size_t>(detail::max_threads()));
    const auto count = static_cast<std::int64_t>(minimal.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      const VertexSet& s = minimal[static_cast<std::size_t>(i)];
      int bound = best_size.load(std::memory_order_relaxed);
      int cap = bound == INT_MAX ? budget : std::min(budget, bound - s.size());
      if (cap < 0) continue;
      auto padded = pad_to_connected(g, s.bits(), cap);
      if (!padded) continue;
      Candidate c{*padded, std::popcount(*padded) - s.size(), true};
      auto& mine = per_thread[static_cast<std::size_t>(detail::thread_id())];
      if (better(c, mine)) mine = c;
      int size = std::popcount(*padded);
      int seen = best_size.load(std::memory_order_relaxed);
      while (size < seen && !best_size.compare_exchange_weak(seen, size, std::memory_order_relaxed)) {
      }
    }
    for (const Candidate& c : per_thread) {
      if (better(c, best)) best = c;
    }
  }

  if (!best.valid) {
    throw PreconditionError("no connected transversal within padding budget " +
                            std::to_string(budget));
  }
  SolveReport report;
  report.kind = kind;
  report.connected_required = true;
  report.solution = VertexSet(g.n(), best.solution);
  report.size = report.solution.size();
  report.certificate = make_certificate(g, kind, report.solution);
  report.padding_used = best.padding;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace contra
