#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "contra/io.hpp"
#include "contra/oracles.hpp"

namespace contra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 2;

struct RunConfig {
  std::string command;
  std::string input = "-";  // "-" reads stdin
  std::string kind;
  bool connected = false;
  int s = 2;
  std::optional<int> pad_budget;  // nullopt = AUTO
  int oracle_ceiling = kDefaultOracleCeiling;
  OutputFormat format = OutputFormat::kHuman;
  std::uint64_t seed = 1;
  bool serial = false;

  // gadget / verify
  std::string gadget;
  int p = 3;
  int k = 0;

  // gen
  std::string family;
  int n = 5;
  std::vector<int> parts;
  int count = 1;
  std::optional<double> density;

  // check
  std::string property;
};

/// Parses args (args[0] is the program name) and runs one subcommand.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace contra::cli
