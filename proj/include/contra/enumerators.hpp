#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "contra/graph.hpp"
#include "contra/vertex_set.hpp"

namespace contra {

enum class EnumerationKind {
  kMaximalIndependentSets,
  kMinimalVertexCovers,
  kMinimalFeedbackVertexSets,
  kMinimalOddCycleTransversals,
};

std::string_view to_string(EnumerationKind kind);

/// Single-consumer stream of vertex sets. Each set is emitted exactly once.
/// Restart by creating a new stream.
class EnumerationStream {
 public:
  class Cursor {
   public:
    virtual ~Cursor() = default;
    virtual std::optional<Mask> next() = 0;
    /// Elementary steps performed so far (node expansions, greedy passes,
    /// predicate checks). Used to measure per-item delay without a clock.
    virtual std::uint64_t work() const = 0;
  };

  EnumerationStream(Graph graph, EnumerationKind kind, std::unique_ptr<Cursor> cursor);

  std::optional<VertexSet> next();
  /// Drains the remainder of the stream.
  std::vector<VertexSet> collect();

  const Graph& graph() const { return graph_; }
  EnumerationKind kind() const { return kind_; }
  std::size_t emitted() const { return emitted_; }
  std::uint64_t work() const { return cursor_->work(); }

 private:
  Graph graph_;
  EnumerationKind kind_;
  std::unique_ptr<Cursor> cursor_;
  std::size_t emitted_ = 0;
};

/// Reverse-search over vertex prefixes: every node is a maximal independent
/// set of G[first i vertices of domain], leaves are the answers, and each
/// internal node has at least one child, so the delay is polynomial.
EnumerationStream enumerate_maximal_independent_sets(const Graph& g);
/// Maximal independent sets of G[domain], as subsets of V(G).
EnumerationStream enumerate_maximal_independent_sets(const Graph& g, const VertexSet& domain);

/// Complements of the maximal independent sets.
EnumerationStream enumerate_minimal_vertex_covers(const Graph& g);

/// Traversal of the solution graph on maximal induced forests (complements
/// of minimal feedback vertex sets). Successors of a forest Y are obtained by
/// adding one outside vertex v, taking every maximal forest of G[Y + v] that
/// keeps v, and extending it greedily to a maximal forest of G.
EnumerationStream enumerate_minimal_fvs(const Graph& g);

/// For every maximal independent set X of G and every maximal independent set
/// Y of G - X, shrink V - (X u Y) to a minimal odd cycle transversal by
/// dropping the lowest removable vertex until none is removable.
EnumerationStream enumerate_minimal_oct(const Graph& g);

EnumerationStream enumerate(const Graph& g, EnumerationKind kind);

/// Removes vertices of s in increasing order whenever the rest still leaves
/// G - s bipartite. Result is a minimal odd cycle transversal inside s.
Mask shrink_to_minimal_oct(const Graph& g, Mask s);

/// Smallest-index-first greedy completion of the forest `seed` inside `domain`.
Mask extend_to_maximal_forest(const Graph& g, Mask seed, Mask domain);

/// All maximal X within `forest` such that G[X + v] is a forest. `forest`
/// must induce a forest and must not contain v.
std::vector<Mask> maximal_forests_keeping(const Graph& g, Mask forest, int v);

}  // namespace contra
