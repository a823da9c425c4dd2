#include "contra/vertex_set.hpp"

#include <sstream>

#include "contra/errors.hpp"

namespace contra {

VertexSet::VertexSet(int universe, Mask bits) : universe_(universe), bits_(bits) {
  if (universe < 0 || universe > kMaxVertices) {
    throw PreconditionError("vertex set universe " + std::to_string(universe) +
                            " outside [0, 64]");
  }
  if ((bits & ~low_mask(universe)) != 0) {
    throw PreconditionError("vertex set has members outside universe of size " +
                            std::to_string(universe));
  }
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(VertexSet::from_list(universe, std::span<const int>(members.begin(), members.size()))) {}

VertexSet VertexSet::from_list(int universe, std::span<const int> members) {
  Mask bits = 0;
  for (int v : members) {
    if (v < 0 || v >= universe) {
      throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe));
    }
    bits |= bit(v);
  }
  return VertexSet(universe, bits);
}

VertexSet VertexSet::with(int v) const {
  if (v < 0 || v >= universe_) throw PreconditionError("vertex out of range");
  return VertexSet(universe_, bits_ | bit(v));
}

VertexSet VertexSet::without(int v) const {
  if (v < 0 || v >= universe_) throw PreconditionError("vertex out of range");
  return VertexSet(universe_, bits_ & ~bit(v));
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  return VertexSet(std::max(universe_, o.universe_), bits_ | o.bits_);
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  return VertexSet(std::max(universe_, o.universe_), bits_ & o.bits_);
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  return VertexSet(universe_, bits_ & ~o.bits_);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_bit(bits_, [&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  if (diff == 0) return false;
  int d = lowest(diff);
  Mask above = ~low_mask(d + 1);
  if ((a >> d) & 1U) {
    // Lists agree below d; a has d where b has something larger, unless b
    // has already run out.
    return (b & above) != 0;
  }
  return (a & above) == 0;
}

}  // namespace contra
