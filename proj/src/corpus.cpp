#include "contra/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "contra/errors.hpp"

namespace contra {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kCompleteMultipartite: return "complete-multipartite";
    case Family::kRandomFilteredSp2Free: return "random-filtered-sP2free";
    case Family::kPetersen: return "petersen";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kComplete, Family::kCompleteMultipartite,
                   Family::kRandomFilteredSp2Free, Family::kPetersen}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::of(i, (i + 1) % n));
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  }
  return build_graph(n, edges);
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw PreconditionError("multipartite part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.push_back(Edge{u, v});
    }
  }
  return build_graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back(Edge{0, i});
  return build_graph(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::of(i, (i + 1) % 5));          // outer cycle
    edges.push_back(Edge::of(i, i + 5));                // spokes
    edges.push_back(Edge::of(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return build_graph(10, edges);
}

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 6) throw PreconditionError("all_connected_graphs supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.push_back(Edge{u, v});
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // slot index of each unordered pair
  std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot_of[static_cast<std::size_t>(slots[i].u)][static_cast<std::size_t>(slots[i].v)] = static_cast<int>(i);
    slot_of[static_cast<std::size_t>(slots[i].v)][static_cast<std::size_t>(slots[i].u)] = static_cast<int>(i);
  }

  std::vector<Graph> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t code = 0; code < total; ++code) {
    bool smallest = true;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < slots.size() && smallest; ++i) {
        if ((code >> i) & 1U) {
          const Edge& e = slots[i];
          image |= std::uint32_t{1} << slot_of[static_cast<std::size_t>(p[static_cast<std::size_t>(e.u)])]
                                             [static_cast<std::size_t>(p[static_cast<std::size_t>(e.v)])];
        }
      }
      if (image < code) {
        smallest = false;
        break;
      }
    }
    if (!smallest) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((code >> i) & 1U) edges.push_back(slots[i]);
    }
    Graph g = build_graph(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(int n, double p, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (coin < p) edges.push_back(Edge{u, v});
    }
  }
  state = rng();
  return build_graph(n, edges);
}

namespace {

double default_density(int s) {
  // Dense graphs rarely contain large induced matchings.
  switch (s) {
    case 1: return 0.0;
    case 2: return 0.8;
    case 3: return 0.55;
    default: return 0.4;
  }
}

}  // namespace

std::vector<CorpusGraph> generate_corpus(Family family, const CorpusParams& params, std::uint64_t seed) {
  std::vector<CorpusGraph> out;
  const std::string n_str = std::to_string(params.n);
  switch (family) {
    case Family::kPath:
      out.push_back({path_graph(params.n), "P" + n_str, std::nullopt});
      break;
    case Family::kCycle:
      out.push_back({cycle_graph(params.n), "C" + n_str, std::nullopt});
      break;
    case Family::kComplete:
      out.push_back({complete_graph(params.n), "K" + n_str, std::nullopt});
      break;
    case Family::kCompleteMultipartite: {
      std::string name = "K";
      for (std::size_t i = 0; i < params.parts.size(); ++i) {
        name += (i ? "," : "") + std::to_string(params.parts[i]);
      }
      out.push_back({complete_multipartite_graph(params.parts), name, std::nullopt});
      break;
    }
    case Family::kPetersen:
      out.push_back({petersen_graph(), "petersen", std::nullopt});
      break;
    case Family::kRandomFilteredSp2Free: {
      if (params.s < 1) throw PreconditionError("s must be >= 1");
      double p = params.density.value_or(default_density(params.s));
      std::uint64_t state = seed;
      int attempts = 0;
      while (static_cast<int>(out.size()) < params.count) {
        if (attempts++ >= params.attempt_cap) {
          throw PreconditionError("random-filtered-sP2free: only " + std::to_string(out.size()) +
                                  " of " + std::to_string(params.count) + " graphs after attempt cap " +
                                  std::to_string(params.attempt_cap));
        }
        Graph g = random_graph(params.n, p, state);
        if (params.require_connected && !is_connected(g)) continue;
        if (!is_sp2_free(g, params.s)) continue;
        std::string name = "R" + std::to_string(params.s) + "P2free-n" + n_str + "-" +
                           std::to_string(out.size());
        out.push_back({std::move(g), std::move(name), params.s});
      }
      break;
    }
  }
  return out;
}

}  // namespace contra
