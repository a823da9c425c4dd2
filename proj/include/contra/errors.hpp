#pragma once

#include <stdexcept>
#include <string>

namespace contra {

/// Input rejected because it violates an operation's precondition
/// (self-loop, disconnected graph, girth too small, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by exhaustive oracles when the instance exceeds the configured
/// vertex ceiling. Separate type so callers can tell "too big" apart from
/// "malformed".
class OracleCeilingError : public PreconditionError {
 public:
  OracleCeilingError(const std::string& what, int n, int ceiling)
      : PreconditionError(what + ": n=" + std::to_string(n) + " exceeds oracle ceiling " +
                          std::to_string(ceiling)),
        n_(n),
        ceiling_(ceiling) {}

  int n() const { return n_; }
  int ceiling() const { return ceiling_; }

 private:
  int n_;
  int ceiling_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace contra
