#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "contra/corpus.hpp"
#include "contra/enumerators.hpp"
#include "contra/errors.hpp"
#include "contra/gadgets.hpp"
#include "contra/transversals.hpp"

namespace contra::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> one_indexed(const VertexSet& s) {
  std::vector<int> v = s.to_vector();
  for (int& x : v) ++x;
  return v;
}

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.u + 1, e.v + 1});
  return arr;
}

Graph load_input(const RunConfig& cfg, std::istream& in) {
  if (cfg.input == "-") return read_graph(in);
  std::ifstream file(cfg.input);
  if (!file) throw PreconditionError("cannot open input file '" + cfg.input + "'");
  return read_graph(file);
}

void validate(const RunConfig& cfg) {
  if (cfg.s < 1) throw CLI::ValidationError("--s", "must be >= 1");
  if (cfg.oracle_ceiling < 0 || cfg.oracle_ceiling > kOracleHardCap) {
    throw CLI::ValidationError("--oracle-ceiling", "must be within [0, 24]");
  }
}

int cmd_solve(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  auto kind = transversal_kind_from_string(cfg.kind);
  if (!kind) throw CLI::ValidationError("--kind", "expected vc, fvs or oct");
  Graph g = load_input(cfg, in);
  SolveReport report;
  if (cfg.connected) {
    ConnectedSolveOptions options;
    options.pad_budget = cfg.pad_budget;
    options.s = cfg.s;
    options.execution = cfg.serial ? Execution::kSerial : Execution::kParallel;
    report = min_connected_transversal(g, *kind, options);
  } else {
    report = min_transversal(g, *kind);
  }
  out << emit_report(report, cfg.format);
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  std::optional<EnumerationKind> kind;
  if (cfg.kind == "mis") kind = EnumerationKind::kMaximalIndependentSets;
  if (cfg.kind == "vc") kind = EnumerationKind::kMinimalVertexCovers;
  if (cfg.kind == "fvs") kind = EnumerationKind::kMinimalFeedbackVertexSets;
  if (cfg.kind == "oct") kind = EnumerationKind::kMinimalOddCycleTransversals;
  if (!kind) throw CLI::ValidationError("--kind", "expected mis, vc, fvs or oct");
  Graph g = load_input(cfg, in);
  EnumerationStream stream = enumerate(g, *kind);
  if (cfg.format == OutputFormat::kJson) {
    json sets = json::array();
    while (auto s = stream.next()) sets.push_back(one_indexed(*s));
    json j;
    j["kind"] = to_string(*kind);
    j["count"] = sets.size();
    j["sets"] = std::move(sets);
    out << j.dump() << '\n';
    return kExitOk;
  }
  // Stream as we go; the family can be large.
  while (auto s = stream.next()) {
    std::vector<int> v = one_indexed(*s);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
  out << "c count " << stream.emitted() << '\n';
  return kExitOk;
}

GadgetKind parse_gadget_name(const std::string& name, const char* option) {
  auto kind = gadget_kind_from_string(name);
  if (!kind) {
    throw CLI::ValidationError(option,
                               "expected oct-line, coct-line, cfvs-line, oct-girth, coct-girth or cfvs-girth");
  }
  return *kind;
}

int cmd_gadget(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  GadgetKind kind = parse_gadget_name(cfg.gadget, "--name");
  Graph g = load_input(cfg, in);
  out << emit_gadget(build_gadget(kind, g, cfg.p, cfg.k), cfg.format);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  GadgetKind kind = parse_gadget_name(cfg.gadget, "--gadget");
  Graph g = load_input(cfg, in);
  GadgetInstance inst = build_gadget(kind, g, cfg.p, cfg.k);
  GadgetVerdict verdict = decide_gadget(inst, g, cfg.oracle_ceiling);
  if (cfg.format == OutputFormat::kJson) {
    json j;
    j["gadget"] = to_string(kind);
    j["budget_k"] = inst.budget_k;
    j["instance_n"] = inst.graph.n();
    j["instance_m"] = inst.graph.m();
    j["source_yes"] = verdict.source_yes;
    j["target_yes"] = verdict.target_yes;
    j["holds"] = verdict.holds();
    out << j.dump() << '\n';
  } else {
    out << "gadget      " << to_string(kind) << '\n'
        << "budget_k    " << inst.budget_k << '\n'
        << "instance    n=" << inst.graph.n() << " m=" << inst.graph.m() << '\n'
        << "source      " << (verdict.source_yes ? "yes" : "no") << '\n'
        << "target      " << (verdict.target_yes ? "yes" : "no") << '\n'
        << "holds       " << (verdict.holds() ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  auto family = family_from_string(cfg.family);
  if (!family) {
    throw CLI::ValidationError("--family",
                               "expected path, cycle, complete, complete-multipartite, "
                               "random-filtered-sP2free or petersen");
  }
  CorpusParams params;
  params.n = cfg.n;
  params.parts = cfg.parts;
  params.s = cfg.s;
  params.count = cfg.count;
  params.density = cfg.density;
  if (*family == Family::kCompleteMultipartite && params.parts.empty()) {
    throw CLI::ValidationError("--parts", "required for complete-multipartite");
  }
  auto graphs = generate_corpus(*family, params, cfg.seed);
  if (cfg.format == OutputFormat::kJson) {
    json arr = json::array();
    for (const auto& cg : graphs) {
      json j;
      j["name"] = cg.name;
      j["n"] = cg.graph.n();
      j["m"] = cg.graph.m();
      j["edges"] = edges_json({cg.graph.edges().begin(), cg.graph.edges().end()});
      j["sp2_free_s"] = cg.sp2_free_s ? json(*cg.sp2_free_s) : json(nullptr);
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out << '\n';
    out << "c " << graphs[i].name << '\n';
    if (graphs[i].sp2_free_s) out << "c sP2-free s=" << *graphs[i].sp2_free_s << '\n';
    out << serialize_graph(graphs[i].graph);
  }
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.property != "sp2free" && cfg.property != "girth" && cfg.property != "claw-free") {
    throw CLI::ValidationError("--property", "expected sp2free, girth or claw-free");
  }
  Graph g = load_input(cfg, in);
  json j;
  j["property"] = cfg.property;
  std::ostringstream human;
  if (cfg.property == "sp2free") {
    auto matching = find_induced_matching(g, cfg.s);
    j["s"] = cfg.s;
    j["holds"] = !matching.has_value();
    j["witness"] = matching ? edges_json(*matching) : json(nullptr);
    human << "sP2-free (s=" << cfg.s << "): " << (matching ? "no" : "yes");
    if (matching) {
      human << "; induced matching";
      for (const Edge& e : *matching) human << ' ' << e.u + 1 << '-' << e.v + 1;
    }
  } else if (cfg.property == "girth") {
    auto value = girth(g);
    j["girth"] = value ? json(*value) : json(nullptr);
    human << "girth: " << (value ? std::to_string(*value) : std::string("infinite"));
  } else {
    auto claw = find_claw(g);
    j["holds"] = !claw.has_value();
    if (claw) {
      std::vector<int> w = *claw;
      for (int& x : w) ++x;
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    human << "claw-free: " << (claw ? "no" : "yes");
    if (claw) {
      human << "; claw center " << (*claw)[0] + 1 << " leaves " << (*claw)[1] + 1 << ' '
            << (*claw)[2] + 1 << ' ' << (*claw)[3] + 1;
    }
  }
  if (cfg.format == OutputFormat::kJson) {
    out << j.dump() << '\n';
  } else {
    out << human.str() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact (connected) vertex cover, feedback vertex set and odd cycle transversal tool"};
  app.require_subcommand(1);

  std::string format = "human";
  std::string pad_budget = "AUTO";
  std::string parts;

  auto add_common = [&](CLI::App* sub, bool reads_graph) {
    if (reads_graph) sub->add_option("-i,--input", cfg.input, "graph file ('-' for stdin)");
    sub->add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "minimum (connected) transversal");
  add_common(solve, true);
  solve->add_option("--kind", cfg.kind, "vc, fvs or oct")->required();
  solve->add_flag("--connected", cfg.connected, "require a connected transversal");
  solve->add_option("--s", cfg.s, "sP2-freeness parameter for the automatic padding budget");
  solve->add_option("--pad-budget", pad_budget, "AUTO or a nonnegative integer");
  solve->add_flag("--serial", cfg.serial, "use the serial reference path");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "stream minimal transversals or maximal independent sets");
  add_common(enumerate_cmd, true);
  enumerate_cmd->add_option("--kind", cfg.kind, "mis, vc, fvs or oct")->required();

  CLI::App* gadget = app.add_subcommand("gadget", "build a reduction instance from a source graph");
  add_common(gadget, true);
  gadget->add_option("--name", cfg.gadget, "gadget name")->required();
  gadget->add_option("--p", cfg.p, "girth parameter");
  gadget->add_option("--k", cfg.k, "budget carried by the girth gadgets");

  CLI::App* verify = app.add_subcommand("verify", "decide both sides of a reduction by brute force");
  add_common(verify, true);
  verify->add_option("--gadget", cfg.gadget, "gadget name")->required();
  verify->add_option("--p", cfg.p, "girth parameter");
  verify->add_option("--k", cfg.k, "budget carried by the girth gadgets");
  verify->add_option("--oracle-ceiling", cfg.oracle_ceiling, "largest n the exhaustive oracles accept (<= 24)");

  CLI::App* gen = app.add_subcommand("gen", "generate graphs");
  add_common(gen, false);
  gen->add_option("--family", cfg.family, "graph family")->required();
  gen->add_option("--n", cfg.n, "vertex count");
  gen->add_option("--parts", parts, "comma-separated part sizes (complete-multipartite)");
  gen->add_option("--s", cfg.s, "freeness parameter (random-filtered-sP2free)");
  gen->add_option("--count", cfg.count, "number of random graphs");
  gen->add_option("--density", cfg.density, "edge probability for random graphs");
  gen->add_option("--seed", cfg.seed, "random seed");

  CLI::App* check = app.add_subcommand("check", "test a structural property");
  add_common(check, true);
  check->add_option("--property", cfg.property, "sp2free, girth or claw-free")->required();
  check->add_option("--s", cfg.s, "freeness parameter for sp2free");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    cfg.format = format == "json" ? OutputFormat::kJson : OutputFormat::kHuman;
    if (pad_budget != "AUTO") {
      std::size_t used = 0;
      int value = -1;
      try {
        value = std::stoi(pad_budget, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != pad_budget.size() || value < 0) {
        throw CLI::ValidationError("--pad-budget", "expected AUTO or a nonnegative integer");
      }
      cfg.pad_budget = value;
    }
    if (!parts.empty()) {
      std::stringstream ss(parts);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          cfg.parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw CLI::ValidationError("--parts", "expected comma-separated integers");
        }
      }
    }
    validate(cfg);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, in, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(cfg, in, out);
    if (gadget->parsed()) return cmd_gadget(cfg, in, out);
    if (verify->parsed()) return cmd_verify(cfg, in, out);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (check->parsed()) return cmd_check(cfg, in, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitRejected;
  } catch (const PreconditionError& e) {
    err << "rejected: " << e.what() << '\n';
    return kExitRejected;
  }
  return kExitUsage;
}

}  // namespace contra::cli
