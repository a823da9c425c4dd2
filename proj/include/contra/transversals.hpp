#pragma once

#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

#include "contra/enumerators.hpp"
#include "contra/graph.hpp"
#include "contra/vertex_set.hpp"

namespace contra {

/// Which family the transversal must hit. All three predicates are closed
/// under taking supersets.
enum class TransversalKind {
  kVertexCover,          // G - S edgeless
  kFeedbackVertexSet,    // G - S a forest
  kOddCycleTransversal,  // G - S bipartite
};

std::string_view to_string(TransversalKind kind);
std::optional<TransversalKind> transversal_kind_from_string(std::string_view name);
EnumerationKind minimal_family(TransversalKind kind);

bool satisfies_mask(const Graph& g, TransversalKind kind, Mask s);
bool satisfies(const Graph& g, TransversalKind kind, const VertexSet& s);

/// OpenMP over independent work items, or the plain loop kept as reference.
enum class Execution { kSerial, kParallel };

/// Additive price-of-connectivity constant for graphs without an induced
/// sP3 (hence for sP2-free graphs).
struct PriceBound {
  TransversalKind kind;
  int s = 1;
  int constant = 0;   // as given by the formula, may be negative
  int effective = 0;  // max(0, constant), the padding budget actually used
};

/// VC and OCT: 4s^2 + 2s - 10. FVS: 12s^2 - 2s - 2.
PriceBound price_constant(TransversalKind kind, int s);

struct Certificate {
  enum class Type { kEdgeCheck, kForestCheck, kBipartition };
  Type type = Type::kEdgeCheck;
  /// kBipartition: 2-coloring of G - S, -1 on S.
  std::vector<int> coloring;
};

std::string_view to_string(Certificate::Type type);

struct SolveReport {
  TransversalKind kind = TransversalKind::kVertexCover;
  bool connected_required = false;
  int size = 0;
  VertexSet solution;
  Certificate certificate;
  int padding_used = 0;
  std::chrono::nanoseconds elapsed{0};
};

Certificate make_certificate(const Graph& g, TransversalKind kind, const VertexSet& s);

/// Re-checks the report against g without the bitmask predicates: edge scan
/// for VC, union-find for FVS, coloring check for OCT; plus connectivity when
/// required and size consistency.
bool verify_report(const Graph& g, const SolveReport& report);

/// Smallest set of the minimal-transversal enumeration (ties: lex-smallest).
SolveReport min_transversal(const Graph& g, TransversalKind kind);

/// Smallest connected superset S + A with |A| <= budget, or nullopt. Ties
/// broken lexicographically. Requires connected g.
std::optional<VertexSet> connect_padding(const Graph& g, const VertexSet& s, int budget);

struct ConnectedSolveOptions {
  /// nullopt = automatic: g must be sP2-free for `s` and the budget is
  /// price_constant(kind, s).effective.
  std::optional<int> pad_budget;
  int s = 2;
  Execution execution = Execution::kParallel;
};

/// Enumerate minimal transversals, pad each to a connected set within the
/// budget, keep the global smallest. Requires connected g; automatic mode
/// rejects graphs containing an induced sP2.
SolveReport min_connected_transversal(const Graph& g, TransversalKind kind,
                                      const ConnectedSolveOptions& options = {});

}  // namespace contra
