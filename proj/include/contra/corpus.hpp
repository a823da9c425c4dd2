#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contra/graph.hpp"

namespace contra {

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kCompleteMultipartite,
  kRandomFilteredSp2Free,
  kPetersen,
};

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct CorpusParams {
  int n = 5;
  std::vector<int> parts;  // complete-multipartite part sizes
  int s = 2;               // random-filtered: reject graphs with an induced sP2
  int count = 1;           // random-filtered: graphs to produce
  /// Edge probability; nullopt picks a density that passes the filter often.
  std::optional<double> density;
  bool require_connected = true;
  int attempt_cap = 100000;
};

struct CorpusGraph {
  Graph graph;
  std::string name;
  std::optional<int> sp2_free_s;  // verified freeness parameter, random family only
};

/// Deterministic for a fixed seed. Throws PreconditionError when the random
/// filter cannot be met within params.attempt_cap draws.
std::vector<CorpusGraph> generate_corpus(Family family, const CorpusParams& params,
                                         std::uint64_t seed);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph star_graph(int leaves);
Graph petersen_graph();

/// One representative of every isomorphism class of connected graphs on n
/// vertices (n <= 6); representatives are the numerically smallest edge
/// bitmask in their class.
std::vector<Graph> all_connected_graphs(int n);

/// Erdos-Renyi G(n, p) driven by mt19937_64 bits only, so the output does not
/// depend on the standard library's distribution implementations.
Graph random_graph(int n, double p, std::uint64_t& state);

}  // namespace contra
