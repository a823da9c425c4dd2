#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contra/graph.hpp"
#include "contra/oracles.hpp"

namespace contra {

/// The six reduction constructions. Each maps a source instance to a
/// transversal instance with a budget k.
enum class GadgetKind {
  kOctLine,     // even cycle factor -> OCT on L(G), k = m - n
  kCoctLine,    // even cycle factor -> connected OCT on L(G + apex + C4), k = m
  kCfvsLine,    // Hamiltonian path -> connected FVS on L(G + 2 apexes + pendants), k = m + n - 1
  kOctGirth,    // OCT -> OCT on a graph of girth >= p (double subdivisions), k carried
  kCoctGirth,   // connected VC -> connected OCT, even paths added per edge, k carried
  kCfvsGirth,   // connected VC -> connected FVS, (p-1)-edge paths per edge, k carried
};

std::string_view to_string(GadgetKind kind);
std::optional<GadgetKind> gadget_kind_from_string(std::string_view name);

enum class VertexRole {
  kOriginalVertex,  // vertex of the source graph
  kOriginalEdge,    // line-graph vertex for an edge of the source graph
  kApexEdge,        // line-graph vertex for an edge from apex x (or y) to the source graph
  kCycleEdge,       // line-graph vertex for an edge of the x-y1-y2-y3 four-cycle
  kPendantEdge,     // line-graph vertex for x'x or y'y
  kPathInternal,    // subdivision / added-path vertex
};

std::string_view to_string(VertexRole role);

struct VertexLabel {
  VertexRole role;
  /// Human-readable origin, e.g. "v3", "v1-v4", "x-v2", "y1-y2", "p(v1-v2)#2".
  /// Source vertices are 1-indexed here.
  std::string name;
};

struct GadgetInstance {
  Graph graph;
  int budget_k = 0;
  GadgetKind provenance = GadgetKind::kOctLine;
  std::vector<VertexLabel> labels;  // one per vertex of graph
};

/// A spanning set of vertex-disjoint cycles, each a vertex sequence.
struct CycleFactor {
  std::vector<std::vector<int>> cycles;
};

inline constexpr int kDefaultCycleFactorCeiling = 14;

/// Exhaustive search for a 2-factor whose cycles are all even.
std::optional<CycleFactor> has_even_cycle_factor(const Graph& g,
                                                 int ceiling = kDefaultCycleFactorCeiling);
/// Checks the CycleFactor invariants against g (spanning, disjoint, real cycles, even).
bool is_even_cycle_factor(const Graph& g, const CycleFactor& factor);

std::optional<std::vector<int>> has_hamiltonian_path(const Graph& g,
                                                     int ceiling = kDefaultOracleCeiling);

GadgetInstance gadget_oct_linegraph(const Graph& g);
GadgetInstance gadget_coct_linegraph(const Graph& g);
GadgetInstance gadget_cfvs_linegraph(const Graph& g);
GadgetInstance gadget_oct_girth(const Graph& g, int p, int k);
GadgetInstance gadget_coct_girth(const Graph& g, int p, int k);
GadgetInstance gadget_cfvs_girth(const Graph& g, int p, int k);

/// Dispatch by kind; p and k are ignored by the line-graph constructions.
GadgetInstance build_gadget(GadgetKind kind, const Graph& source, int p, int k);

struct GadgetVerdict {
  bool source_yes = false;  // source problem answer
  bool target_yes = false;  // transversal of size <= budget_k exists in the instance
  bool holds() const { return source_yes == target_yes; }
};

/// Decides both sides of the claimed equivalence with exhaustive oracles.
GadgetVerdict decide_gadget(const GadgetInstance& instance, const Graph& source,
                            int ceiling = kDefaultOracleCeiling);
bool verify_gadget(const GadgetInstance& instance, const Graph& source,
                   int ceiling = kDefaultOracleCeiling);

}  // namespace contra
