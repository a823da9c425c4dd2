#include "contra/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>

#include "contra/errors.hpp"
#include "parallel.hpp"

namespace contra {

namespace {

void check_ceiling(const Graph& g, int ceiling, const char* what) {
  if (ceiling < 0 || ceiling > kOracleHardCap) {
    throw PreconditionError("oracle ceiling " + std::to_string(ceiling) + " outside [0, " +
                            std::to_string(kOracleHardCap) + "]");
  }
  if (g.n() > ceiling) throw OracleCeilingError(what, g.n(), ceiling);
}

constexpr std::int64_t kChunk = 2048;

/// Lex-smallest k-subset of {0..n-1} satisfying pred, or nullopt.
template <typename Pred>
std::optional<Mask> scan_size(int n, int k, const Pred& pred, Execution execution) {
  if (k == 0) return pred(Mask{0}) ? std::optional<Mask>(0) : std::nullopt;
  std::uint64_t total = binomial(n, k);

  if (execution == Execution::kSerial) {
    std::optional<Mask> best;
    Mask x = low_mask(k);
    for (std::uint64_t i = 0; i < total; ++i) {
      if (pred(x) && (!best || lex_less(x, *best))) best = x;
      if (i + 1 < total) x = next_combination(x);
    }
    return best;
  }

  auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::vector<std::optional<Mask>> per_thread(static_cast<std::size_t>(detail::max_threads()));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    auto& best = per_thread[static_cast<std::size_t>(detail::thread_id())];
    auto first = static_cast<std::uint64_t>(c * kChunk);
    std::uint64_t last = std::min<std::uint64_t>(total, first + kChunk);
    Mask x = unrank_combination(first, k);
    for (std::uint64_t i = first; i < last; ++i) {
      if (pred(x) && (!best || lex_less(x, *best))) best = x;
      if (i + 1 < last) x = next_combination(x);
    }
  }
  std::optional<Mask> best;
  for (const auto& b : per_thread) {
    if (b && (!best || lex_less(*b, *best))) best = b;
  }
  return best;
}

std::vector<VertexSet> to_sets(int n, std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(n, m);
  return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __extension__ typedef unsigned __int128 wide;  // product can exceed 64 bits before the divide
  wide r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

Mask unrank_combination(std::uint64_t rank, int k) {
  // Combinatorial number system: rank = sum C(c_i, i) with c_k > ... > c_1.
  Mask out = 0;
  int c = 64;
  for (int i = k; i >= 1; --i) {
    do {
      --c;
    } while (binomial(c, i) > rank);
    out |= bit(c);
    rank -= binomial(c, i);
  }
  return out;
}

std::vector<VertexSet> brute_force_minimal_sets(const Graph& g, const SetPredicate& pred,
                                                int ceiling, Execution execution) {
  check_ceiling(g, ceiling, "brute_force_minimal_sets");
  const int n = g.n();
  const auto total = static_cast<std::int64_t>(1) << n;

  if (execution == Execution::kSerial) {
    std::vector<Mask> found;
    for (std::int64_t i = 0; i < total; ++i) {
      auto s = static_cast<Mask>(i);
      if (!pred(s)) continue;
      bool minimal = true;
      for_each_bit(s, [&](int v) { minimal = minimal && !pred(s & ~bit(v)); });
      if (minimal) found.push_back(s);
    }
    return to_sets(n, std::move(found));
  }

  // Evaluate the predicate once per subset, then test minimality by lookup.
  std::vector<std::uint8_t> holds(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    holds[static_cast<std::size_t>(i)] = pred(static_cast<Mask>(i)) ? 1 : 0;
  }
  std::vector<std::vector<Mask>> per_thread(static_cast<std::size_t>(detail::max_threads()));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    if (!holds[static_cast<std::size_t>(i)]) continue;
    auto s = static_cast<Mask>(i);
    bool minimal = true;
    for_each_bit(s, [&](int v) { minimal = minimal && !holds[static_cast<std::size_t>(s & ~bit(v))]; });
    if (minimal) per_thread[static_cast<std::size_t>(detail::thread_id())].push_back(s);
  }
  std::vector<Mask> found;
  for (auto& part : per_thread) found.insert(found.end(), part.begin(), part.end());
  return to_sets(n, std::move(found));
}

std::vector<VertexSet> brute_force_minimal_sets(const Graph& g, TransversalKind kind, int ceiling,
                                                Execution execution) {
  return brute_force_minimal_sets(
      g, [&g, kind](Mask s) { return satisfies_mask(g, kind, s); }, ceiling, execution);
}

std::vector<VertexSet> brute_force_maximal_independent_sets(const Graph& g, int ceiling) {
  check_ceiling(g, ceiling, "brute_force_maximal_independent_sets");
  const int n = g.n();
  std::vector<Mask> found;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    Mask s = i;
    bool independent = true;
    bool maximal = true;
    for (int v = 0; v < n; ++v) {
      bool touches = (g.neighbors(v) & s) != 0;
      if ((s >> v) & 1U) {
        independent = independent && !touches;
      } else {
        maximal = maximal && touches;
      }
    }
    if (independent && maximal) found.push_back(s);
  }
  return to_sets(n, std::move(found));
}

std::optional<VertexSet> brute_force_min(const Graph& g, const BruteForceQuery& query) {
  check_ceiling(g, query.ceiling, "brute_force_min");
  if (query.connected && !is_connected(g)) {
    throw PreconditionError("connected transversal requested on a disconnected graph");
  }
  const int n = g.n();
  int limit = query.max_size ? std::min(*query.max_size, n) : n;
  auto pred = [&g, &query](Mask s) {
    return satisfies_mask(g, query.kind, s) && (!query.connected || is_connected_mask(g, s));
  };
  for (int k = 0; k <= limit; ++k) {
    if (auto hit = scan_size(n, k, pred, query.execution)) return VertexSet(n, *hit);
  }
  return std::nullopt;
}

int brute_force_min_size(const Graph& g, TransversalKind kind, int ceiling) {
  BruteForceQuery q;
  q.kind = kind;
  q.ceiling = ceiling;
  // V(G) always satisfies every kind, so a hit exists.
  return brute_force_min(g, q)->size();
}

SolveReport brute_force_min_connected(const Graph& g, TransversalKind kind, int ceiling,
                                      Execution execution) {
  auto start = std::chrono::steady_clock::now();
  BruteForceQuery q;
  q.kind = kind;
  q.connected = true;
  q.ceiling = ceiling;
  q.execution = execution;
  auto best = brute_force_min(g, q);
  if (!best) throw std::logic_error("no connected transversal in a connected graph");
  SolveReport report;
  report.kind = kind;
  report.connected_required = true;
  report.size = best->size();
  report.solution = *best;
  report.certificate = make_certificate(g, kind, *best);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace contra
