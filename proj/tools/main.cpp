#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcg/certificate.hpp"
#include "pcg/coloring.hpp"
#include "pcg/graph.hpp"
#include "pcg/prover.hpp"
#include "pcg/rational.hpp"
#include "pcg/realizability.hpp"
#include "pcg/tree.hpp"
#include "pcg/verifier.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
  out.flush();
  if (!out) throw std::invalid_argument("write failed: " + path);
}

std::string hex16(uint64_t v) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << v;
  return ss.str();
}

// Pattern ids contain commas ("f-c(K1,3)"), so the rule list is split on
// commas outside parentheses only.
std::vector<std::string> split_rule_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') depth++;
    if (ch == ')') depth--;
    if (ch == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

pcg::RuleSelection rules_from_flag(const std::string& flag) {
  if (flag.empty()) return pcg::default_rules();
  pcg::RuleSelection r;
  r.rim_cycles = false;
  r.four_cycles = false;
  for (const std::string& tok : split_rule_tokens(flag)) {
    if (tok == "rim-cycle") {
      r.rim_cycles = true;
    } else if (tok == "cycles4") {
      r.four_cycles = true;
    } else if (tok == "catalog") {
      for (const auto& p : pcg::catalog())
        if (std::find(r.pattern_ids.begin(), r.pattern_ids.end(), p.id) ==
            r.pattern_ids.end())
          r.pattern_ids.push_back(p.id);
    } else {
      if (std::find(r.pattern_ids.begin(), r.pattern_ids.end(), tok) ==
          r.pattern_ids.end())
        r.pattern_ids.push_back(tok);
    }
  }
  return r;
}

// Returns the certified ids, empty when no stamp file exists. A present but
// stale or malformed stamp is an error: silently ignoring it would let an
// outdated certification gate the prover.
std::vector<std::string> load_stamp(const std::string& path) {
  {
    std::ifstream probe(path);
    if (!probe) return {};
  }
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("stamp file " + path + ": invalid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("format") || !j.contains("certified") ||
      !j.contains("hash") || j["format"] != "pcg-catalog-stamp-1")
    throw std::invalid_argument("stamp file " + path + " is malformed; rerun check-catalog");
  std::vector<std::string> ids;
  std::vector<pcg::ForbiddenPattern> pats;
  for (const auto& id : j["certified"]) {
    if (!id.is_string())
      throw std::invalid_argument("stamp file " + path + " is malformed; rerun check-catalog");
    ids.push_back(id.get<std::string>());
    pats.push_back(pcg::pattern_by_id(ids.back()));
  }
  if (!j["hash"].is_string() || j["hash"].get<std::string>() != hex16(pcg::catalog_stamp(pats)))
    throw std::invalid_argument("stamp file " + path +
                                " does not match the current catalog; rerun check-catalog");
  return ids;
}

void save_stamp(const std::string& path, const pcg::CatalogReport& rep) {
  nlohmann::ordered_json j;
  j["format"] = "pcg-catalog-stamp-1";
  j["certified"] = rep.certified;
  j["hash"] = hex16(rep.stamp);
  write_file(path, j.dump(2) + "\n");
}

int cmd_gen(const std::string& family, int n, const std::string& out) {
  pcg::Graph g;
  if (family == "cycle")
    g = pcg::build_cycle(n);
  else if (family == "wheel")
    g = pcg::build_wheel(n);
  else
    g = pcg::build_cycle_strong_p2(n);
  write_file(out, pcg::graph_to_json(g));
  std::cout << g.size() << " nodes " << g.edge_count() << " edges\n";
  return 0;
}

int cmd_from_tree(const std::string& tree_path, const std::string& dmin_s,
                  const std::string& dmax_s, const std::string& out,
                  const std::string& emit_coloring) {
  pcg::WitnessLine wl = pcg::parse_witness_line(read_file(tree_path));
  std::optional<pcg::DistanceBounds> bounds = wl.bounds;
  if (!dmin_s.empty() || !dmax_s.empty()) {
    if (dmin_s.empty() || dmax_s.empty())
      throw std::invalid_argument(
          "pass both --dmin and --dmax, or neither if the file carries bounds");
    bounds = pcg::DistanceBounds(pcg::parse_rational(dmin_s), pcg::parse_rational(dmax_s));
  }
  if (!bounds)
    throw std::invalid_argument(
        "no distance bounds: pass --dmin/--dmax or include them in the witness line");
  pcg::Graph g = pcg::pcg_graph(wl.tree, *bounds);
  std::string gj = pcg::graph_to_json(g);
  if (out.empty()) {
    std::cout << gj;
  } else {
    write_file(out, gj);
    std::cout << g.size() << " nodes " << g.edge_count() << " edges\n";
  }
  if (!emit_coloring.empty())
    write_file(emit_coloring, pcg::coloring_to_json(pcg::pcg_coloring(wl.tree, *bounds)));
  return 0;
}

int cmd_prove(const std::string& graph_path, const std::string& rules_flag, int workers,
              double budget, bool symmetry, bool allow_uncertified,
              const std::string& stamp_path, const std::string& cert_path,
              const std::string& frontier_out, const std::string& resume_path) {
  pcg::Graph g = pcg::graph_from_json(read_file(graph_path));
  pcg::RuleSelection rules;
  std::optional<pcg::Frontier> frontier;
  if (!resume_path.empty()) {
    frontier = pcg::frontier_from_json(read_file(resume_path));
    rules.pattern_ids = frontier->partial.pattern_ids;
    rules.rim_cycles = frontier->partial.rim_cycles;
    rules.four_cycles = frontier->partial.four_cycles;
    rules.extra_cycles = frontier->partial.extra_cycles;
    rules.extra_paths = frontier->partial.extra_paths;
    rules.allow_uncertified = frontier->partial.allow_uncertified || allow_uncertified;
  } else {
    rules = rules_from_flag(rules_flag);
    rules.allow_uncertified = allow_uncertified;
  }
  rules.certified_ids = load_stamp(stamp_path);
  pcg::ProverProblem problem = pcg::compile(g, rules);
  pcg::ProverOptions opt;
  opt.workers = workers;
  opt.budget_seconds = budget;
  opt.symmetry = symmetry;
  pcg::ProverOutcome out = frontier ? pcg::resume_frontier(problem, *frontier, opt)
                                    : pcg::prove_not_pcg(problem, opt);
  std::cerr << "variables " << problem.variables.size() << " clauses "
            << problem.clauses.size() << " branches " << out.stats.branches << " leaves "
            << out.stats.leaves << " propagations " << out.stats.propagations
            << " max-depth " << out.stats.max_depth << " seconds " << out.stats.seconds
            << "\n";
  if (out.kind == pcg::ProverOutcome::Kind::NotPCG) {
    write_file(cert_path, pcg::certificate_to_json(*out.certificate));
    std::cout << "NotPCG: certificate written to " << cert_path << "\n";
    return 0;
  }
  if (out.budget_exhausted) {
    write_file(frontier_out, pcg::frontier_to_json(*out.frontier));
    std::cout << "Unknown: budget exhausted; frontier with " << out.frontier->holes.size()
              << " holes written to " << frontier_out << "\n";
    return 3;
  }
  std::cout << "Unknown: a complete coloring survives this rule set\n"
            << pcg::coloring_to_json(*out.survivor);
  return 3;
}

int cmd_verify_cert(const std::string& graph_path, const std::string& cert_path) {
  pcg::Graph g = pcg::graph_from_json(read_file(graph_path));
  pcg::ProofCertificate cert = pcg::certificate_from_json(read_file(cert_path));
  pcg::RuleSelection rules;
  rules.rim_cycles = cert.rim_cycles;
  rules.four_cycles = cert.four_cycles;
  rules.extra_cycles = cert.extra_cycles;
  rules.extra_paths = cert.extra_paths;
  for (const std::string& id : cert.pattern_ids) {
    try {
      pcg::pattern_by_id(id);
      rules.pattern_ids.push_back(id);
    } catch (const std::invalid_argument&) {
      // unknown id: leave it out; any leaf citing it fails verification below
    }
  }
  rules.certified_ids = rules.pattern_ids;  // verification applies no gate
  pcg::ProverProblem problem;
  try {
    problem = pcg::compile(g, rules);
  } catch (const std::invalid_argument& e) {
    std::cout << "verification failed: certificate options do not recompile for this host: "
              << e.what() << "\n";
    return 1;
  }
  pcg::VerifyResult r = pcg::verify_certificate(g, cert, problem);
  if (r.ok) {
    std::cout << "certificate verifies\n";
    return 0;
  }
  std::cout << "verification failed at " << r.path << ": " << r.message << "\n";
  return 1;
}

int cmd_witness(const std::string& kind, int n) {
  pcg::WeightedTree tree;
  std::optional<pcg::DistanceBounds> bounds;
  pcg::Graph expect;
  if (kind == "wheel7") {
    auto [t, b] = pcg::wheel7_witness();
    tree = std::move(t);
    bounds = b;
    expect = pcg::build_wheel(6);
  } else if (kind == "wheel8") {
    auto [t, b] = pcg::wheel8_witness();
    tree = std::move(t);
    bounds = b;
    expect = pcg::build_wheel(7);
  } else {
    if (n < 4)
      throw std::invalid_argument("witness minimality requires n >= 4 (got " +
                                  std::to_string(n) + ")");
    auto [t, b] = pcg::minimality_caterpillar(n);
    tree = std::move(t);
    bounds = b;
    expect =
        pcg::remove_node(pcg::build_cycle_strong_p2(n), "u" + std::to_string(n));
  }
  pcg::Graph got = pcg::pcg_graph(tree, *bounds);
  if (!pcg::are_isomorphic(got, expect)) {
    std::cerr << "witness self-check failed: generated tree does not realize the expected "
                 "graph\n";
    return 1;
  }
  std::cout << pcg::witness_line(tree, *bounds) << "\n";
  return 0;
}

int cmd_check_catalog(bool include_weak, int workers, const std::string& stamp_path,
                      const std::string& report_path, const std::string& corrupt_id) {
  std::vector<pcg::ForbiddenPattern> patterns = pcg::catalog();
  if (include_weak) patterns.push_back(pcg::weak_2k2b());
  if (!corrupt_id.empty()) {
    bool found = false;
    for (auto& p : patterns)
      if (p.id == corrupt_id) {
        // testing hook: misstate the pattern by recoloring its blue pairs red
        p.red.insert(p.red.end(), p.blue.begin(), p.blue.end());
        p.blue.clear();
        found = true;
      }
    if (!found)
      throw std::invalid_argument("--corrupt-pattern: unknown pattern id \"" + corrupt_id +
                                  "\"");
  }
  pcg::CatalogReport rep = pcg::verify_catalog_patterns(patterns, workers);
  for (const auto& pr : rep.patterns) {
    if (pr.infeasible_all) {
      std::cout << "pattern " << pr.id << ": infeasible on all " << pr.topology_count
                << " topologies\n";
    } else {
      std::cout << "pattern " << pr.id << ": REALIZABLE, so not a forbidden pattern; witness: "
                << pcg::witness_line(pr.witness->tree, pr.witness->bounds) << "\n";
    }
  }
  if (!report_path.empty()) {
    nlohmann::ordered_json j;
    j["format"] = "pcg-catalog-report-1";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& pr : rep.patterns) {
      nlohmann::ordered_json e;
      e["id"] = pr.id;
      e["topologies"] = pr.topology_count;
      e["infeasible_all"] = pr.infeasible_all;
      if (pr.witness) {
        e["witness"] = pcg::witness_line(pr.witness->tree, pr.witness->bounds);
        e["zero_leaf_weight"] = pr.witness->zero_leaf_weight;
      } else {
        e["witness"] = nullptr;
      }
      arr.push_back(std::move(e));
    }
    j["patterns"] = std::move(arr);
    j["all_ok"] = rep.all_ok;
    j["hash"] = hex16(rep.stamp);
    write_file(report_path, j.dump(2) + "\n");
  }
  if (!rep.all_ok) return 1;
  if (corrupt_id.empty()) {
    save_stamp(stamp_path, rep);
    std::cout << "certification stamp written to " << stamp_path << "\n";
  }
  return 0;
}

int cmd_recognize(const std::string& graph_path, int workers) {
  pcg::Graph g = pcg::graph_from_json(read_file(graph_path));
  if (g.size() < 2 || g.size() > 7 || g.non_edge_count() > 16) {
    std::cerr << "recognize: host must have 2..7 nodes and at most 16 non-edges (got "
              << g.size() << " nodes, " << g.non_edge_count()
              << " non-edges); for larger graphs use the prove command\n";
    return 2;
  }
  pcg::RecognitionResult res = pcg::recognize_pcg_small(g, workers);
  std::cerr << "colorings tried: " << res.colorings_tried << "\n";
  if (res.is_pcg)
    std::cout << pcg::witness_line(res.witness->tree, res.witness->bounds) << "\n";
  else
    std::cout << "not-pcg-by-exhaustion\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairwise compatibility graph toolkit"};
  app.require_subcommand(1);
  std::function<int()> run;

  // gen
  {
    auto* c = app.add_subcommand("gen", "generate a graph family member as graph JSON");
    auto family = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    c->add_option("family", *family, "cycle | wheel | cnp2")
        ->required()
        ->check(CLI::IsMember({"cycle", "wheel", "cnp2"}));
    c->add_option("n", *n, "family parameter (cycle length / rim size)")->required();
    c->add_option("--out", *out, "output graph JSON path")->required();
    c->callback([&run, family, n, out] {
      run = [family, n, out] { return cmd_gen(*family, *n, *out); };
    });
  }

  // from-tree
  {
    auto* c = app.add_subcommand(
        "from-tree", "compute the graph (and coloring) a weighted tree realizes");
    auto tree = std::make_shared<std::string>();
    auto dmin = std::make_shared<std::string>();
    auto dmax = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto emit = std::make_shared<std::string>();
    c->add_option("tree", *tree, "witness file: \"NEWICK; [dmin dmax]\"")->required();
    c->add_option("--dmin", *dmin, "lower distance bound (rational string)");
    c->add_option("--dmax", *dmax, "upper distance bound (rational string)");
    c->add_option("--out", *out, "output graph JSON path (default: stdout)");
    c->add_option("--emit-coloring", *emit, "also write the full tri-coloring JSON here");
    c->callback([&run, tree, dmin, dmax, out, emit] {
      run = [tree, dmin, dmax, out, emit] {
        return cmd_from_tree(*tree, *dmin, *dmax, *out, *emit);
      };
    });
  }

  // prove
  {
    auto* c = app.add_subcommand("prove",
                                 "search for a refutation that the graph is a PCG");
    auto graph = std::make_shared<std::string>();
    auto rules = std::make_shared<std::string>();
    auto workers = std::make_shared<int>(1);
    auto budget = std::make_shared<double>(0.0);
    auto symmetry = std::make_shared<bool>(false);
    auto allow = std::make_shared<bool>(false);
    auto stamp = std::make_shared<std::string>("catalog.stamp.json");
    auto cert = std::make_shared<std::string>("cert.json");
    auto fout = std::make_shared<std::string>("frontier.json");
    auto resume = std::make_shared<std::string>();
    c->add_option("graph", *graph, "host graph JSON path")->required();
    c->add_option("--rules", *rules,
                  "comma list of pattern ids plus \"rim-cycle\" / \"cycles4\" / \"catalog\" "
                  "(default: catalog,rim-cycle,cycles4)");
    c->add_option("--workers", *workers, "parallel workers (default 1)");
    c->add_option("--budget-seconds", *budget, "wall-clock budget; 0 = unlimited");
    c->add_flag("--symmetry", *symmetry, "orbit split on the first branched variable");
    c->add_flag("--allow-uncertified", *allow, "run without catalog certification");
    c->add_option("--stamp", *stamp, "certification stamp path");
    c->add_option("--cert", *cert, "certificate output path");
    c->add_option("--frontier-out", *fout, "frontier output path on budget exhaustion");
    c->add_option("--resume", *resume, "resume from a frontier file");
    c->callback([&run, graph, rules, workers, budget, symmetry, allow, stamp, cert, fout,
                 resume] {
      run = [graph, rules, workers, budget, symmetry, allow, stamp, cert, fout, resume] {
        return cmd_prove(*graph, *rules, *workers, *budget, *symmetry, *allow, *stamp,
                         *cert, *fout, *resume);
      };
    });
  }

  // verify-cert
  {
    auto* c = app.add_subcommand("verify-cert", "independently replay a certificate");
    auto graph = std::make_shared<std::string>();
    auto cert = std::make_shared<std::string>();
    c->add_option("graph", *graph, "host graph JSON path")->required();
    c->add_option("cert", *cert, "certificate JSON path")->required();
    c->callback([&run, graph, cert] {
      run = [graph, cert] { return cmd_verify_cert(*graph, *cert); };
    });
  }

  // witness
  {
    auto* c = app.add_subcommand("witness", "print a known witness tree with bounds");
    auto kind = std::make_shared<std::string>();
    auto n = std::make_shared<int>(-1);
    c->add_option("kind", *kind, "wheel7 | wheel8 | minimality")
        ->required()
        ->check(CLI::IsMember({"wheel7", "wheel8", "minimality"}));
    c->add_option("n", *n, "cycle length for minimality (>= 4)");
    c->callback([&run, kind, n] {
      run = [kind, n] { return cmd_witness(*kind, *n); };
    });
  }

  // check-catalog
  {
    auto* c = app.add_subcommand(
        "check-catalog", "certify the forbidden-pattern catalog by exhaustive search");
    auto weak = std::make_shared<bool>(false);
    auto workers = std::make_shared<int>(1);
    auto stamp = std::make_shared<std::string>("catalog.stamp.json");
    auto report = std::make_shared<std::string>();
    auto corrupt = std::make_shared<std::string>();
    c->add_flag("--include-weak", *weak, "also examine the weak 2K2 variant");
    c->add_option("--workers", *workers, "parallel workers (default 1)");
    c->add_option("--stamp", *stamp, "stamp output path");
    c->add_option("--report", *report, "write a JSON report here");
    c->add_option("--corrupt-pattern", *corrupt,
                  "testing hook: recolor this pattern's blue pairs red first");
    c->callback([&run, weak, workers, stamp, report, corrupt] {
      run = [weak, workers, stamp, report, corrupt] {
        return cmd_check_catalog(*weak, *workers, *stamp, *report, *corrupt);
      };
    });
  }

  // recognize
  {
    auto* c = app.add_subcommand(
        "recognize", "exhaustively decide PCG membership for a small graph");
    auto graph = std::make_shared<std::string>();
    auto workers = std::make_shared<int>(1);
    c->add_option("graph", *graph, "host graph JSON path")->required();
    c->add_option("--workers", *workers, "parallel workers (default 1)");
    c->callback([&run, graph, workers] {
      run = [graph, workers] { return cmd_recognize(*graph, *workers); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run ? run() : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
