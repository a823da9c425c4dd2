#include <gtest/gtest.h>

#include <set>

#include "contra/corpus.hpp"
#include "contra/errors.hpp"
#include "contra/gadgets.hpp"
#include "contra/oracles.hpp"
#include "support.hpp"

namespace contra {
namespace {

constexpr TransversalKind kOct = TransversalKind::kOddCycleTransversal;
constexpr TransversalKind kFvs = TransversalKind::kFeedbackVertexSet;
constexpr TransversalKind kVc = TransversalKind::kVertexCover;

int min_connected_size(const Graph& g, TransversalKind kind) {
  return brute_force_min_connected(g, kind, 24).size;
}

bool connected_within(const Graph& g, TransversalKind kind, int k) {
  BruteForceQuery q;
  q.kind = kind;
  q.connected = true;
  q.max_size = k;
  q.ceiling = 24;
  return k >= 0 && brute_force_min(g, q).has_value();
}

TEST(EvenCycleFactor, Examples) {
  auto c4 = has_even_cycle_factor(cycle_graph(4));
  ASSERT_TRUE(c4.has_value());
  EXPECT_EQ(c4->cycles.size(), 1U);
  EXPECT_TRUE(is_even_cycle_factor(cycle_graph(4), *c4));

  EXPECT_FALSE(has_even_cycle_factor(cycle_graph(3)).has_value());

  auto k4 = has_even_cycle_factor(complete_graph(4));
  ASSERT_TRUE(k4.has_value());
  ASSERT_EQ(k4->cycles.size(), 1U);
  EXPECT_EQ(k4->cycles[0].size(), 4U);
  EXPECT_TRUE(is_even_cycle_factor(complete_graph(4), *k4));

  EXPECT_THROW(has_even_cycle_factor(cycle_graph(16)), OracleCeilingError);
}

TEST(EvenCycleFactor, TwoSquares) {
  Graph g = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {3, 4}});
  auto f = has_even_cycle_factor(g);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->cycles.size(), 2U);
  EXPECT_TRUE(is_even_cycle_factor(g, *f));
  // the only 2-factors of the Petersen graph are pairs of 5-cycles
  EXPECT_FALSE(has_even_cycle_factor(petersen_graph()).has_value());
}

// Independent check: try every edge subset, keep 2-regular spanning ones,
// and test that every component has an even number of vertices.
bool naive_even_cycle_factor(const Graph& g) {
  const int m = g.m();
  const int n = g.n();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    if (std::popcount(pick) != n) continue;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<Edge> chosen;
    for (int i = 0; i < m; ++i) {
      if ((pick >> i) & 1U) {
        Edge e = g.edges()[static_cast<std::size_t>(i)];
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
        chosen.push_back(e);
      }
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 2; })) continue;
    Graph h = build_graph(n, chosen);
    bool even = true;
    Mask left = h.all();
    while (left != 0 && even) {
      Mask comp = bit(lowest(left));
      Mask grown = 0;
      while (grown != comp) {
        grown = comp;
        for_each_bit(comp, [&](int v) { comp |= h.neighbors(v); });
      }
      even = std::popcount(comp) % 2 == 0;
      left &= ~comp;
    }
    if (even) return true;
  }
  return false;
}

TEST(EvenCycleFactor, AgreesWithEdgeSubsetScan) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      auto f = has_even_cycle_factor(g);
      EXPECT_EQ(f.has_value(), naive_even_cycle_factor(g));
      if (f) EXPECT_TRUE(is_even_cycle_factor(g, *f));
    }
  }
}

TEST(HamiltonianPath, Examples) {
  auto p4 = has_hamiltonian_path(path_graph(4));
  ASSERT_TRUE(p4.has_value());
  EXPECT_EQ(p4->size(), 4U);
  EXPECT_FALSE(has_hamiltonian_path(star_graph(3)).has_value());
  auto k4 = has_hamiltonian_path(complete_graph(4));
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(std::set<int>(k4->begin(), k4->end()).size(), 4U);
}

TEST(HamiltonianPath, AgreesWithPermutationScan) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      bool found = false;
      do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) ok = g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        found = ok;
      } while (!found && std::next_permutation(perm.begin(), perm.end()));
      auto path = has_hamiltonian_path(g);
      ASSERT_EQ(path.has_value(), found);
      if (!path) continue;
      for (std::size_t i = 0; i + 1 < path->size(); ++i) EXPECT_TRUE(g.adjacent((*path)[i], (*path)[i + 1]));
    }
  }
}

TEST(OctLineGadget, Examples) {
  GadgetInstance k4 = gadget_oct_linegraph(complete_graph(4));
  EXPECT_EQ(k4.graph.n(), 6);
  EXPECT_EQ(k4.budget_k, 2);
  EXPECT_EQ(k4.provenance, GadgetKind::kOctLine);
  EXPECT_EQ(brute_force_min_size(k4.graph, kOct), 2);
  EXPECT_TRUE(verify_gadget(k4, complete_graph(4)));

  GadgetInstance c3 = gadget_oct_linegraph(cycle_graph(3));
  EXPECT_EQ(c3.budget_k, 0);
  GadgetVerdict v3 = decide_gadget(c3, cycle_graph(3));
  EXPECT_FALSE(v3.source_yes);
  EXPECT_FALSE(v3.target_yes);

  GadgetInstance c4 = gadget_oct_linegraph(cycle_graph(4));
  GadgetVerdict v4 = decide_gadget(c4, cycle_graph(4));
  EXPECT_TRUE(v4.source_yes);
  EXPECT_TRUE(v4.target_yes);

  EXPECT_THROW(gadget_oct_linegraph(build_graph(3, {})), PreconditionError);
}

TEST(CoctLineGadget, Examples) {
  GadgetInstance k4 = gadget_coct_linegraph(complete_graph(4));
  EXPECT_EQ(k4.graph.n(), 14);
  EXPECT_EQ(k4.budget_k, 6);
  EXPECT_TRUE(connected_within(k4.graph, kOct, 6));

  GadgetInstance c3 = gadget_coct_linegraph(cycle_graph(3));
  EXPECT_EQ(c3.graph.n(), 10);
  EXPECT_EQ(c3.budget_k, 3);
  EXPECT_FALSE(connected_within(c3.graph, kOct, 3));

  GadgetInstance c4 = gadget_coct_linegraph(cycle_graph(4));
  EXPECT_EQ(c4.graph.n(), 12);
  EXPECT_EQ(c4.budget_k, 4);
  EXPECT_TRUE(connected_within(c4.graph, kOct, 4));
  EXPECT_TRUE(verify_gadget(c3, cycle_graph(3), 24));
}

TEST(CfvsLineGadget, Examples) {
  GadgetInstance p3 = gadget_cfvs_linegraph(path_graph(3));
  EXPECT_EQ(p3.graph.n(), 10);
  EXPECT_EQ(p3.budget_k, 4);
  EXPECT_TRUE(connected_within(p3.graph, kFvs, 4));

  GadgetInstance claw = gadget_cfvs_linegraph(star_graph(3));
  EXPECT_EQ(claw.graph.n(), 13);
  EXPECT_EQ(claw.budget_k, 6);
  EXPECT_FALSE(connected_within(claw.graph, kFvs, 6));

  GadgetInstance k3 = gadget_cfvs_linegraph(complete_graph(3));
  EXPECT_EQ(k3.graph.n(), 11);
  EXPECT_EQ(k3.budget_k, 5);
  EXPECT_TRUE(connected_within(k3.graph, kFvs, 5));

  EXPECT_THROW(gadget_cfvs_linegraph(path_graph(2)), PreconditionError);
}

TEST(LineGadgets, LabelsCoverEveryVertex) {
  GadgetInstance inst = gadget_cfvs_linegraph(cycle_graph(4));
  ASSERT_EQ(inst.labels.size(), static_cast<std::size_t>(inst.graph.n()));
  int original = 0;
  int apex = 0;
  int pendant = 0;
  for (const auto& label : inst.labels) {
    EXPECT_FALSE(label.name.empty());
    original += label.role == VertexRole::kOriginalEdge;
    apex += label.role == VertexRole::kApexEdge;
    pendant += label.role == VertexRole::kPendantEdge;
  }
  EXPECT_EQ(original, 4);
  EXPECT_EQ(apex, 8);
  EXPECT_EQ(pendant, 2);
}

TEST(OctGirthGadget, Examples) {
  GadgetInstance c3 = gadget_oct_girth(cycle_graph(3), 5, 1);
  EXPECT_EQ(c3.graph.n(), 5);
  EXPECT_EQ(girth(c3.graph), 5);
  EXPECT_EQ(brute_force_min_size(c3.graph, kOct), 1);
  EXPECT_EQ(c3.budget_k, 1);

  EXPECT_EQ(gadget_oct_girth(cycle_graph(3), 3, 1).graph, cycle_graph(3));

  GadgetInstance k4 = gadget_oct_girth(complete_graph(4), 5, 2);
  EXPECT_GE(*girth(k4.graph), 5);
  EXPECT_EQ(brute_force_min_size(k4.graph, kOct, 24), 2);
}

TEST(OctGirthGadget, ForestsUnchanged) {
  EXPECT_EQ(gadget_oct_girth(path_graph(4), 9, 0).graph, path_graph(4));
}

TEST(CoctGirthGadget, Examples) {
  GadgetInstance c5 = gadget_coct_girth(cycle_graph(5), 5, 4);
  EXPECT_EQ(c5.graph.n(), 20);
  EXPECT_GE(*girth(c5.graph), 5);
  EXPECT_EQ(min_connected_size(cycle_graph(5), kVc), 4);
  EXPECT_TRUE(verify_gadget(c5, cycle_graph(5), 24));

  GadgetInstance p3 = gadget_coct_girth(path_graph(3), 3, 1);
  EXPECT_EQ(p3.graph.n(), 5);
  EXPECT_TRUE(decide_gadget(p3, path_graph(3)).source_yes);
  EXPECT_TRUE(verify_gadget(p3, path_graph(3)));

  for (int k : {1, 2}) EXPECT_TRUE(verify_gadget(gadget_coct_girth(cycle_graph(4), 3, k), cycle_graph(4)));

  EXPECT_THROW(gadget_coct_girth(path_graph(2), 3, 1), PreconditionError);
  EXPECT_THROW(gadget_coct_girth(complete_graph(4), 4, 2), PreconditionError);
}

TEST(CfvsGirthGadget, Examples) {
  GadgetInstance p3 = gadget_cfvs_girth(path_graph(3), 3, 1);
  EXPECT_EQ(p3.graph.n(), 5);
  EXPECT_EQ(p3.graph.m(), 6);
  EXPECT_EQ(min_connected_size(p3.graph, kFvs), 1);
  EXPECT_EQ(brute_force_min_connected(p3.graph, kFvs).solution, VertexSet(5, {1}));

  for (int k : {1, 2}) EXPECT_TRUE(verify_gadget(gadget_cfvs_girth(cycle_graph(4), 4, k), cycle_graph(4)));
  for (int k : {3, 4}) EXPECT_TRUE(verify_gadget(gadget_cfvs_girth(cycle_graph(5), 5, k), cycle_graph(5), 24));

  GadgetInstance c4 = gadget_cfvs_girth(cycle_graph(4), 4, 2);
  EXPECT_EQ(girth(c4.graph), 4);
  EXPECT_THROW(gadget_cfvs_girth(cycle_graph(4), 5, 2), PreconditionError);
}

TEST(GirthGadgets, OutputGirthAtLeastP) {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      for (int p = 3; p <= 6; ++p) {
        auto gg = girth(g);
        EXPECT_GE(girth(gadget_oct_girth(g, p, 0).graph).value_or(p), p);
        bool eligible = !gg || *gg >= p;
        if (!eligible) {
          EXPECT_THROW(gadget_cfvs_girth(g, p, 0), PreconditionError);
          continue;
        }
        EXPECT_GE(girth(gadget_cfvs_girth(g, p, 0).graph).value_or(p), p);
        if (g.m() >= 2) EXPECT_GE(girth(gadget_coct_girth(g, p, 0).graph).value_or(p), p);
      }
    }
  }
}

TEST(DoubleSubdivision, PreservesMinOct) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      int before = testing::naive_min_size(g, kOct, false);
      for (const Edge& e : g.edges()) {
        EXPECT_EQ(testing::naive_min_size(subdivide_edge(g, e, 2), kOct, false), before);
      }
    }
  }
}

TEST(BuildGadget, DispatchAndNames) {
  for (GadgetKind kind : {GadgetKind::kOctLine, GadgetKind::kCoctLine, GadgetKind::kCfvsLine, GadgetKind::kOctGirth,
                          GadgetKind::kCoctGirth, GadgetKind::kCfvsGirth}) {
    EXPECT_EQ(gadget_kind_from_string(to_string(kind)), kind);
    GadgetInstance inst = build_gadget(kind, cycle_graph(5), 5, 4);
    EXPECT_EQ(inst.provenance, kind);
    EXPECT_EQ(inst.labels.size(), static_cast<std::size_t>(inst.graph.n()));
  }
  EXPECT_FALSE(gadget_kind_from_string("T_OCT").has_value());
}

}  // namespace
}  // namespace contra
