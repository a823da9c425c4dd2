#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "contra/graph.hpp"
#include "contra/transversals.hpp"
#include "contra/vertex_set.hpp"

namespace contra {

// Exhaustive subset scans. These are the independent ground truth the
// enumerators and solvers are tested against; each kernel has an OpenMP path
// and the plain serial loop it must agree with.

inline constexpr int kDefaultOracleCeiling = 16;
inline constexpr int kOracleHardCap = 24;

using SetPredicate = std::function<bool(Mask)>;

/// All S with pred(S) and not pred(S - v) for every v in S, in increasing
/// bit order. pred must be superset-closed for this to mean "minimal".
std::vector<VertexSet> brute_force_minimal_sets(const Graph& g, const SetPredicate& pred,
                                                int ceiling = kDefaultOracleCeiling,
                                                Execution execution = Execution::kParallel);
std::vector<VertexSet> brute_force_minimal_sets(const Graph& g, TransversalKind kind,
                                                int ceiling = kDefaultOracleCeiling,
                                                Execution execution = Execution::kParallel);

/// Independent sets that no vertex can extend, by direct subset scan.
std::vector<VertexSet> brute_force_maximal_independent_sets(const Graph& g,
                                                            int ceiling = kDefaultOracleCeiling);

struct BruteForceQuery {
  TransversalKind kind = TransversalKind::kVertexCover;
  bool connected = false;
  /// Stop after this size; nullopt = scan up to n.
  std::optional<int> max_size;
  int ceiling = kDefaultOracleCeiling;
  Execution execution = Execution::kParallel;
};

/// Scans subsets by increasing size and returns the lex-smallest hit of the
/// first size that has one. Connected queries require connected g.
std::optional<VertexSet> brute_force_min(const Graph& g, const BruteForceQuery& query);

/// Minimum transversal size without connectivity.
int brute_force_min_size(const Graph& g, TransversalKind kind, int ceiling = kDefaultOracleCeiling);

SolveReport brute_force_min_connected(const Graph& g, TransversalKind kind,
                                      int ceiling = kDefaultOracleCeiling,
                                      Execution execution = Execution::kParallel);

/// Binomial coefficient for n <= 64; saturates instead of overflowing.
std::uint64_t binomial(int n, int k);

/// k-subset of {0..63} with the given colex rank (the order Gosper's hack
/// walks).
Mask unrank_combination(std::uint64_t rank, int k);

/// Next mask with the same popcount in increasing numeric order.
inline Mask next_combination(Mask x) {
  Mask c = x & (~x + 1);
  Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace contra
