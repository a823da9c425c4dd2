#include "contra/enumerators.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace contra {

std::string_view to_string(EnumerationKind kind) {
  switch (kind) {
    case EnumerationKind::kMaximalIndependentSets: return "mis";
    case EnumerationKind::kMinimalVertexCovers: return "vc";
    case EnumerationKind::kMinimalFeedbackVertexSets: return "fvs";
    case EnumerationKind::kMinimalOddCycleTransversals: return "oct";
  }
  return "?";
}

namespace {

bool is_independent(const Graph& g, Mask s) {
  bool ok = true;
  for_each_bit(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

/// Every vertex of domain outside s has a neighbor in s.
bool dominates(const Graph& g, Mask s, Mask domain) {
  bool ok = true;
  for_each_bit(domain & ~s, [&](int v) { ok = ok && (g.neighbors(v) & s) != 0; });
  return ok;
}

template <typename Keeps>
bool is_minimal_transversal(const Graph& g, Mask s, Keeps&& leaves_good_graph) {
  Mask all = g.all();
  if (!leaves_good_graph(all & ~s)) return false;
  bool minimal = true;
  for_each_bit(s, [&](int v) { minimal = minimal && !leaves_good_graph(all & ~(s & ~bit(v))); });
  return minimal;
}

[[maybe_unused]] bool item_is_valid(const Graph& g, EnumerationKind kind, Mask s) {
  switch (kind) {
    case EnumerationKind::kMaximalIndependentSets:
      // Domain-restricted streams are maximal only inside their domain.
      return is_independent(g, s);
    case EnumerationKind::kMinimalVertexCovers:
      return is_minimal_transversal(g, s, [&](Mask keep) { return count_edges(g, keep) == 0; });
    case EnumerationKind::kMinimalFeedbackVertexSets:
      return is_minimal_transversal(g, s, [&](Mask keep) { return is_forest_mask(g, keep); });
    case EnumerationKind::kMinimalOddCycleTransversals:
      return is_minimal_transversal(g, s, [&](Mask keep) { return is_bipartite_mask(g, keep); });
  }
  return false;
}

class MisCursor final : public EnumerationStream::Cursor {
 public:
  MisCursor(Graph g, Mask domain) : g_(std::move(g)) {
    for_each_bit(domain, [&](int v) { order_.push_back(v); });
    prefix_.assign(order_.size() + 1, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) prefix_[i + 1] = prefix_[i] | bit(order_[i]);
    stack_.push_back(Node{0, 0});
  }

  std::optional<Mask> next() override {
    while (!stack_.empty()) {
      Node node = stack_.back();
      stack_.pop_back();
      ++work_;
      if (node.level == order_.size()) return node.set;

      int v = order_[node.level];
      std::size_t child_level = node.level + 1;
      Mask nv = g_.neighbors(v);
      if ((nv & node.set) == 0) {
        stack_.push_back(Node{node.set | bit(v), child_level});
        continue;
      }
      // node.set stays maximal one level down; the swap J is a child only if
      // it is maximal there and node.set is its greedy parent.
      Mask swapped = (node.set & ~nv) | bit(v);
      work_ += order_.size();
      bool swapped_is_child = dominates(g_, swapped, prefix_[child_level]) &&
                              greedy_complete(swapped & ~bit(v), node.level) == node.set;
      if (swapped_is_child) stack_.push_back(Node{swapped, child_level});
      stack_.push_back(Node{node.set, child_level});
    }
    return std::nullopt;
  }

  std::uint64_t work() const override { return work_; }

 private:
  struct Node {
    Mask set;
    std::size_t level;
  };

  Mask greedy_complete(Mask s, std::size_t level) const {
    for (std::size_t i = 0; i < level; ++i) {
      int u = order_[i];
      if (((s >> u) & 1U) == 0 && (g_.neighbors(u) & s) == 0) s |= bit(u);
    }
    return s;
  }

  Graph g_;
  std::vector<int> order_;
  std::vector<Mask> prefix_;
  std::vector<Node> stack_;
  std::uint64_t work_ = 0;
};

class VertexCoverCursor final : public EnumerationStream::Cursor {
 public:
  explicit VertexCoverCursor(const Graph& g) : all_(g.all()), mis_(g, g.all()) {}

  std::optional<Mask> next() override {
    auto independent = mis_.next();
    if (!independent) return std::nullopt;
    return all_ & ~*independent;
  }

  std::uint64_t work() const override { return mis_.work(); }

 private:
  Mask all_;
  MisCursor mis_;
};

class FvsCursor final : public EnumerationStream::Cursor {
 public:
  explicit FvsCursor(Graph g) : g_(std::move(g)), all_(g_.all()) {
    Mask first = extend_to_maximal_forest(g_, 0, all_);
    work_ += static_cast<std::uint64_t>(g_.n());
    seen_.insert(first);
    ready_.push_back(first);
    to_expand_.push_back(first);
  }

  std::optional<Mask> next() override {
    while (ready_.empty() && !to_expand_.empty()) {
      Mask forest = to_expand_.front();
      to_expand_.pop_front();
      expand(forest);
    }
    if (ready_.empty()) return std::nullopt;
    Mask forest = ready_.front();
    ready_.pop_front();
    return all_ & ~forest;
  }

  std::uint64_t work() const override { return work_; }

 private:
  void expand(Mask forest) {
    for_each_bit(all_ & ~forest, [&](int v) {
      for (Mask kept : maximal_forests_keeping(g_, forest, v)) {
        Mask successor = extend_to_maximal_forest(g_, kept | bit(v), all_);
        work_ += static_cast<std::uint64_t>(g_.n());
        if (seen_.insert(successor).second) {
          ready_.push_back(successor);
          to_expand_.push_back(successor);
        }
      }
    });
  }

  Graph g_;
  Mask all_;
  std::unordered_set<Mask> seen_;
  std::deque<Mask> ready_;
  std::deque<Mask> to_expand_;
  std::uint64_t work_ = 0;
};

class OctCursor final : public EnumerationStream::Cursor {
 public:
  explicit OctCursor(Graph g) : g_(std::move(g)), all_(g_.all()), outer_(g_, all_) {}

  std::optional<Mask> next() override {
    for (;;) {
      if (!inner_) {
        auto x = outer_.next();
        if (!x) return std::nullopt;
        x_ = *x;
        inner_.emplace(g_, all_ & ~x_);
        inner_work_done_ += last_inner_work_;
        last_inner_work_ = 0;
      }
      auto y = inner_->next();
      last_inner_work_ = inner_->work();
      if (!y) {
        inner_.reset();
        continue;
      }
      Mask candidate = all_ & ~(x_ | *y);
      Mask minimal = shrink_to_minimal_oct(g_, candidate);
      shrink_work_ += static_cast<std::uint64_t>(std::popcount(candidate));
      if (seen_.insert(minimal).second) return minimal;
    }
  }

  std::uint64_t work() const override {
    return outer_.work() + inner_work_done_ + last_inner_work_ + shrink_work_;
  }

 private:
  Graph g_;
  Mask all_;
  MisCursor outer_;
  std::optional<MisCursor> inner_;
  Mask x_ = 0;
  std::unordered_set<Mask> seen_;
  std::uint64_t inner_work_done_ = 0;
  std::uint64_t last_inner_work_ = 0;
  std::uint64_t shrink_work_ = 0;
};

}  // namespace

EnumerationStream::EnumerationStream(Graph graph, EnumerationKind kind, std::unique_ptr<Cursor> cursor)
    : graph_(std::move(graph)), kind_(kind), cursor_(std::move(cursor)) {}

std::optional<VertexSet> EnumerationStream::next() {
  auto bits = cursor_->next();
  if (!bits) return std::nullopt;
  ++emitted_;
  assert(item_is_valid(graph_, kind_, *bits));
  return VertexSet(graph_.n(), *bits);
}

std::vector<VertexSet> EnumerationStream::collect() {
  std::vector<VertexSet> out;
  while (auto s = next()) out.push_back(*s);
  return out;
}

EnumerationStream enumerate_maximal_independent_sets(const Graph& g) {
  return enumerate_maximal_independent_sets(g, g.vertices());
}

EnumerationStream enumerate_maximal_independent_sets(const Graph& g, const VertexSet& domain) {
  if (domain.universe() != g.n()) {
    throw std::invalid_argument("domain universe does not match the graph");
  }
  return EnumerationStream(g, EnumerationKind::kMaximalIndependentSets,
                           std::make_unique<MisCursor>(g, domain.bits()));
}

EnumerationStream enumerate_minimal_vertex_covers(const Graph& g) {
  return EnumerationStream(g, EnumerationKind::kMinimalVertexCovers,
                           std::make_unique<VertexCoverCursor>(g));
}

EnumerationStream enumerate_minimal_fvs(const Graph& g) {
  return EnumerationStream(g, EnumerationKind::kMinimalFeedbackVertexSets,
                           std::make_unique<FvsCursor>(g));
}

EnumerationStream enumerate_minimal_oct(const Graph& g) {
  return EnumerationStream(g, EnumerationKind::kMinimalOddCycleTransversals,
                           std::make_unique<OctCursor>(g));
}

EnumerationStream enumerate(const Graph& g, EnumerationKind kind) {
  switch (kind) {
    case EnumerationKind::kMaximalIndependentSets: return enumerate_maximal_independent_sets(g);
    case EnumerationKind::kMinimalVertexCovers: return enumerate_minimal_vertex_covers(g);
    case EnumerationKind::kMinimalFeedbackVertexSets: return enumerate_minimal_fvs(g);
    case EnumerationKind::kMinimalOddCycleTransversals: return enumerate_minimal_oct(g);
  }
  throw std::invalid_argument("unknown enumeration kind");
}

Mask shrink_to_minimal_oct(const Graph& g, Mask s) {
  Mask all = g.all();
  // One ascending pass suffices: a vertex that is not removable stays
  // non-removable once other vertices leave s.
  for_each_bit(s, [&](int v) {
    Mask smaller = s & ~bit(v);
    if (is_bipartite_mask(g, all & ~smaller)) s = smaller;
  });
  return s;
}

Mask extend_to_maximal_forest(const Graph& g, Mask seed, Mask domain) {
  for_each_bit(domain & ~seed, [&](int u) {
    if (is_forest_mask(g, seed | bit(u))) seed |= bit(u);
  });
  return seed;
}

std::vector<Mask> maximal_forests_keeping(const Graph& g, Mask forest, int v) {
  Mask nv = g.neighbors(v) & forest;
  // Components of G[forest] touching v at most once are always kept whole.
  Mask forced = 0;
  Mask free = 0;
  Mask rest = forest;
  while (rest != 0) {
    Mask comp = bit(lowest(rest));
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int u) { next |= g.neighbors(u); });
      next &= forest & ~comp;
      comp |= next;
      frontier = next;
    }
    rest &= ~comp;
    if (std::popcount(comp & nv) <= 1) {
      forced |= comp;
    } else {
      free |= comp;
    }
  }

  std::vector<int> order;
  for_each_bit(free, [&](int u) { order.push_back(u); });
  std::vector<Mask> out;
  Mask base = forced | bit(v);

  auto search = [&](auto&& self, std::size_t i, Mask chosen, Mask excluded) -> void {
    if (i == order.size()) {
      bool maximal = true;
      for_each_bit(excluded, [&](int u) { maximal = maximal && !is_forest_mask(g, chosen | bit(u)); });
      if (maximal) out.push_back(chosen & ~bit(v));
      return;
    }
    int u = order[i];
    Mask undecided = 0;
    for (std::size_t j = i + 1; j < order.size(); ++j) undecided |= bit(order[j]);
    bool can_include = is_forest_mask(g, chosen | bit(u));
    if (can_include) self(self, i + 1, chosen | bit(u), excluded);
    // Excluding u only pays off if u can end up closing a cycle, which needs
    // two neighbors among what may still be kept.
    if (std::popcount(g.neighbors(u) & (chosen | undecided)) >= 2) {
      self(self, i + 1, chosen, excluded | bit(u));
    }
  };
  search(search, 0, base, 0);
  return out;
}

}  // namespace contra
