#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "contra/gadgets.hpp"
#include "contra/graph.hpp"
#include "contra/transversals.hpp"

namespace contra {

// Edge-list text format, 1-indexed:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (exactly m lines)

/// Throws ParseError (with the line number) on malformed input, self-loops,
/// out-of-range endpoints, or a header whose edge count disagrees with the
/// e-lines.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);

std::string serialize_graph(const Graph& g);

enum class OutputFormat { kHuman, kJson };

/// JSON fields: kind, connected, size, solution (1-indexed, sorted),
/// certificate, padding_used, elapsed_ms.
std::string emit_report(const SolveReport& report, OutputFormat format);

std::string emit_gadget(const GadgetInstance& instance, OutputFormat format);

}  // namespace contra
