#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace contra {

/// Graphs are stored as one 64-bit adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(v) for every set bit v of m, in increasing order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

/// Subset of {0..universe-1}. Value type; the universe travels with the set
/// so complements and serialization need no graph at hand.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe, Mask bits = 0);
  VertexSet(int universe, std::initializer_list<int> members);

  static VertexSet from_list(int universe, std::span<const int> members);
  static VertexSet full(int universe) { return VertexSet(universe, low_mask(universe)); }

  int universe() const { return universe_; }
  Mask bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return v >= 0 && v < universe_ && ((bits_ >> v) & 1U) != 0; }

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  VertexSet complement() const { return VertexSet(universe_, ~bits_ & low_mask(universe_)); }

  bool is_subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;

  /// Sorted member list; the canonical serialization.
  std::vector<int> to_vector() const;
  /// "{0,2,3}" with 0-indexed members.
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  Mask bits_ = 0;
};

/// Lexicographic order on the sorted member lists (a proper prefix sorts first).
bool lex_less(Mask a, Mask b);
inline bool lex_less(const VertexSet& a, const VertexSet& b) { return lex_less(a.bits(), b.bits()); }

/// Size first, then lex_less. The tie-break used for every optimum reported.
inline bool solution_less(Mask a, Mask b) {
  int sa = std::popcount(a);
  int sb = std::popcount(b);
  return sa != sb ? sa < sb : lex_less(a, b);
}
inline bool solution_less(const VertexSet& a, const VertexSet& b) {
  return solution_less(a.bits(), b.bits());
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    return std::hash<Mask>{}(s.bits()) ^ (static_cast<std::size_t>(s.universe()) << 1);
  }
};

}  // namespace contra
