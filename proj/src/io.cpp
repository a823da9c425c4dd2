#include "contra/io.hpp"

#include <charconv>
#include <iomanip>
#include <iterator>
#include <istream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "contra/errors.hpp"

namespace contra {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

long parse_int(std::string_view word, int line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

std::vector<int> one_indexed(const VertexSet& s) {
  std::vector<int> out = s.to_vector();
  for (int& v : out) ++v;
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long n = 0;
  long m = 0;
  int header_line = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (words.size() != 4 || words[1] != "edge") {
        throw ParseError(line_no, "header must read 'p edge <n> <m>'");
      }
      n = parse_int(words[2], line_no, "vertex count");
      m = parse_int(words[3], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      if (n > kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " exceeds 64");
      }
      have_header = true;
      header_line = line_no;
    } else if (words[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before 'p edge' header");
      if (words.size() != 3) throw ParseError(line_no, "edge line must read 'e <u> <v>'");
      long u = parse_int(words[1], line_no, "endpoint");
      long v = parse_int(words[2], line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "endpoint outside 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.push_back(Edge::of(static_cast<int>(u - 1), static_cast<int>(v - 1)));
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(words[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p edge <n> <m>' header");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges but " +
                                      std::to_string(edges.size()) + " edge lines follow");
  }
  return build_graph(static_cast<int>(n), edges);
}

Graph read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(text);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

std::string emit_report(const SolveReport& report, OutputFormat format) {
  double elapsed_ms = std::chrono::duration<double, std::milli>(report.elapsed).count();
  std::vector<int> solution = one_indexed(report.solution);
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(report.kind);
    j["connected"] = report.connected_required;
    j["size"] = report.size;
    j["solution"] = solution;
    j["certificate"] = to_string(report.certificate.type);
    j["padding_used"] = report.padding_used;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump() + "\n";
  }
  std::ostringstream os;
  auto row = [&](const char* key) -> std::ostream& { return os << std::left << std::setw(14) << key; };
  row("kind") << to_string(report.kind) << '\n';
  row("connected") << (report.connected_required ? "yes" : "no") << '\n';
  row("size") << report.size << '\n';
  row("solution");
  for (std::size_t i = 0; i < solution.size(); ++i) os << (i ? " " : "") << solution[i];
  os << '\n';
  row("certificate") << to_string(report.certificate.type) << '\n';
  row("padding_used") << report.padding_used << '\n';
  row("elapsed_ms") << std::fixed << std::setprecision(3) << elapsed_ms << '\n';
  return os.str();
}

std::string emit_gadget(const GadgetInstance& inst, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["gadget"] = to_string(inst.provenance);
    j["budget_k"] = inst.budget_k;
    j["n"] = inst.graph.n();
    j["m"] = inst.graph.m();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : inst.graph.edges()) edges.push_back({e.u + 1, e.v + 1});
    j["edges"] = std::move(edges);
    auto labels = nlohmann::ordered_json::array();
    for (const VertexLabel& l : inst.labels) {
      labels.push_back({{"role", to_string(l.role)}, {"name", l.name}});
    }
    j["labels"] = std::move(labels);
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << "c gadget " << to_string(inst.provenance) << '\n';
  os << "c budget " << inst.budget_k << '\n';
  for (std::size_t v = 0; v < inst.labels.size(); ++v) {
    os << "c label " << v + 1 << ' ' << to_string(inst.labels[v].role) << ' ' << inst.labels[v].name << '\n';
  }
  os << serialize_graph(inst.graph);
  return os.str();
}

}  // namespace contra
