#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pcg/certificate.hpp"
#include "pcg/coloring.hpp"
#include "pcg/graph.hpp"
#include "pcg/tree.hpp"

using namespace pcg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "pcg-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

Run cli(const std::string& args) {
  const fs::path& d = work_dir();
  std::string cmd = "cd '" + d.string() + "' && '" + PCG_CLI_PATH + "' " + args +
                    " >cli_stdout.txt 2>cli_stderr.txt";
  int rc = std::system(cmd.c_str());
  Run r;
  r.code = (rc == -1) ? -1 : WEXITSTATUS(rc);
  r.out = slurp(d / "cli_stdout.txt");
  r.err = slurp(d / "cli_stderr.txt");
  return r;
}

// check-catalog is the slowest step; run it once and reuse the stamp
void ensure_stamp() {
  static bool done = [] {
    Run r = cli("check-catalog --workers 4 --stamp stamp.json");
    REQUIRE(r.code == 0);
    REQUIRE(fs::exists(work_dir() / "stamp.json"));
    return true;
  }();
  (void)done;
}

void ensure_graphs() {
  static bool done = [] {
    REQUIRE(cli("gen wheel 8 --out w9.json").code == 0);
    REQUIRE(cli("gen wheel 6 --out w7.json").code == 0);
    REQUIRE(cli("gen cnp2 4 --out c4p2.json").code == 0);
    REQUIRE(cli("gen cycle 4 --out c4.json").code == 0);
    return true;
  }();
  (void)done;
}

}  // namespace

TEST_CASE("cli: gen") {
  Run r = cli("gen wheel 8 --out gen_w9.json");
  CHECK(r.code == 0);
  CHECK(r.out == "9 nodes 16 edges\n");
  CHECK(graph_from_json(slurp(work_dir() / "gen_w9.json")) == build_wheel(8));

  Run r2 = cli("gen cnp2 5 --out gen_c5p2.json");
  CHECK(r2.code == 0);
  CHECK(r2.out == "10 nodes 25 edges\n");

  CHECK(cli("gen cycle 2 --out bad.json").code == 2);
  CHECK(cli("gen pyramid 5 --out bad.json").code == 2);
  CHECK(cli("gen cycle 5").code == 2);  // --out required
}

TEST_CASE("cli: from-tree") {
  spit(work_dir() / "cat.tree", "((a:2,d:1):2,(b:1,c:2));\n");
  Graph expect({"a", "b", "c", "d"},
               {NodePair("a", "b"), NodePair("b", "d"), NodePair("c", "d")});

  Run r = cli("from-tree cat.tree --dmin 4 --dmax 5");
  CHECK(r.code == 0);
  CHECK(graph_from_json(r.out) == expect);

  Run r2 = cli("from-tree cat.tree --dmin 4 --dmax 5 --emit-coloring cat_col.json "
               "--out cat_graph.json");
  CHECK(r2.code == 0);
  Graph g = graph_from_json(slurp(work_dir() / "cat_graph.json"));
  CHECK(g == expect);
  TriColoring col = coloring_from_json(slurp(work_dir() / "cat_col.json"), g);
  CHECK(col.assignment.at(NodePair("a", "d")) == Color::Red);
  CHECK(col.assignment.at(NodePair("b", "c")) == Color::Red);
  CHECK(col.assignment.at(NodePair("a", "c")) == Color::Blue);

  // bounds can live in the file instead
  spit(work_dir() / "cat_bounds.tree", "((a:2,d:1):2,(b:1,c:2)); 4 5\n");
  Run r3 = cli("from-tree cat_bounds.tree");
  CHECK(r3.code == 0);
  CHECK(graph_from_json(r3.out) == expect);

  CHECK(cli("from-tree cat.tree").code == 2);             // no bounds anywhere
  CHECK(cli("from-tree cat.tree --dmin 4").code == 2);    // half a bound
  CHECK(cli("from-tree missing.tree --dmin 4 --dmax 5").code == 2);
}

TEST_CASE("cli: witness") {
  Run r7 = cli("witness wheel7");
  CHECK(r7.code == 0);
  WitnessLine w7 = parse_witness_line(r7.out);
  REQUIRE(w7.bounds.has_value());
  CHECK(pcg_graph(w7.tree, *w7.bounds) == build_wheel(6));

  Run r8 = cli("witness wheel8");
  CHECK(r8.code == 0);
  WitnessLine w8 = parse_witness_line(r8.out);
  CHECK(pcg_graph(w8.tree, *w8.bounds) == build_wheel(7));

  Run rm = cli("witness minimality 6");
  CHECK(rm.code == 0);
  WitnessLine wm = parse_witness_line(rm.out);
  CHECK(pcg_graph(wm.tree, *wm.bounds) ==
        remove_node(build_cycle_strong_p2(6), "u6"));

  CHECK(cli("witness minimality 3").code == 2);
  CHECK(cli("witness nothing").code == 2);
}

TEST_CASE("cli: check-catalog certifies and stamps") {
  ensure_stamp();
  Run r = cli("check-catalog --workers 4 --stamp stamp2.json --report report.json");
  CHECK(r.code == 0);
  int infeasible_lines = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);)
    if (line.find("infeasible on all") != std::string::npos) infeasible_lines++;
  CHECK(infeasible_lines == 8);
  CHECK(fs::exists(work_dir() / "stamp2.json"));
  CHECK(fs::exists(work_dir() / "report.json"));
  CHECK(slurp(work_dir() / "stamp2.json") == slurp(work_dir() / "stamp.json"));
}

TEST_CASE("cli: check-catalog failures withhold the stamp") {
  Run weak = cli("check-catalog --include-weak --stamp weak_stamp.json");
  CHECK(weak.code == 1);
  CHECK(weak.out.find("REALIZABLE") != std::string::npos);
  CHECK(!fs::exists(work_dir() / "weak_stamp.json"));

  Run corrupt = cli("check-catalog --corrupt-pattern 'f-c(P4)' --stamp bad_stamp.json");
  CHECK(corrupt.code == 1);
  CHECK(corrupt.out.find("REALIZABLE") != std::string::npos);
  CHECK(!fs::exists(work_dir() / "bad_stamp.json"));

  CHECK(cli("check-catalog --corrupt-pattern nonsense").code == 2);
}

TEST_CASE("cli: prove is gated by the stamp") {
  ensure_graphs();
  CHECK(cli("prove w9.json --stamp absent.json --cert nope.json").code == 2);
  CHECK(!fs::exists(work_dir() / "nope.json"));

  spit(work_dir() / "garbage.stamp", "{\"format\":\"wrong\"}");
  CHECK(cli("prove w9.json --stamp garbage.stamp --cert nope.json").code == 2);
}

TEST_CASE("cli: prove + verify-cert round trip") {
  ensure_stamp();
  ensure_graphs();
  Run p = cli("prove c4p2.json --stamp stamp.json --cert c4p2.cert.json");
  CHECK(p.code == 0);
  CHECK(p.out.find("NotPCG") != std::string::npos);
  CHECK(p.err.find("variables 8 ") != std::string::npos);
  REQUIRE(fs::exists(work_dir() / "c4p2.cert.json"));

  Run v = cli("verify-cert c4p2.json c4p2.cert.json");
  CHECK(v.code == 0);
  CHECK(v.out == "certificate verifies\n");

  // allow-uncertified bypasses the stamp
  Run pa = cli("prove c4p2.json --stamp absent.json --allow-uncertified "
               "--cert c4p2b.cert.json");
  CHECK(pa.code == 0);
  CHECK(slurp(work_dir() / "c4p2b.cert.json") != "");
}

TEST_CASE("cli: prove reports survivors with exit 3") {
  ensure_stamp();
  ensure_graphs();
  Run r = cli("prove w7.json --stamp stamp.json");
  CHECK(r.code == 3);
  CHECK(r.out.find("Unknown") != std::string::npos);
  size_t brace = r.out.find('{');
  REQUIRE(brace != std::string::npos);
  TriColoring survivor = coloring_from_json(r.out.substr(brace), build_wheel(6));
  CHECK(survivor.complete());
}

TEST_CASE("cli: rule selection strings") {
  ensure_stamp();
  ensure_graphs();
  // without the 4-cycle designation the doubled C4 keeps a survivor
  Run weak = cli("prove c4p2.json --stamp stamp.json --rules 'catalog,rim-cycle'");
  CHECK(weak.code == 3);
  Run full = cli("prove c4p2.json --stamp stamp.json "
                 "--rules 'catalog,rim-cycle,cycles4' --cert c4p2c.cert.json");
  CHECK(full.code == 0);
  // a single uncertified-looking token is rejected as an unknown pattern id
  CHECK(cli("prove c4p2.json --stamp stamp.json --rules 'warp-drive'").code == 2);
}

TEST_CASE("cli: budget, frontier, resume") {
  ensure_stamp();
  ensure_graphs();
  Run direct = cli("prove w9.json --stamp stamp.json --cert w9.cert.json");
  REQUIRE(direct.code == 0);

  Run stopped = cli("prove w9.json --stamp stamp.json --budget-seconds 0.000000001 "
                    "--frontier-out w9.frontier.json");
  CHECK(stopped.code == 3);
  CHECK(stopped.out.find("budget exhausted") != std::string::npos);
  REQUIRE(fs::exists(work_dir() / "w9.frontier.json"));

  Run resumed = cli("prove w9.json --stamp stamp.json --resume w9.frontier.json "
                    "--cert w9.resumed.cert.json");
  CHECK(resumed.code == 0);
  CHECK(slurp(work_dir() / "w9.resumed.cert.json") == slurp(work_dir() / "w9.cert.json"));

  Run v = cli("verify-cert w9.json w9.resumed.cert.json");
  CHECK(v.code == 0);
}

TEST_CASE("cli: verify-cert rejects mutations") {
  ensure_stamp();
  ensure_graphs();
  REQUIRE(cli("prove c4p2.json --stamp stamp.json --cert vc.cert.json").code == 0);

  std::string cert = slurp(work_dir() / "vc.cert.json");
  spit(work_dir() / "vc.trunc.json", cert.substr(0, cert.size() / 2));
  CHECK(cli("verify-cert c4p2.json vc.trunc.json").code == 2);

  CHECK(cli("verify-cert w9.json vc.cert.json").code == 1);  // wrong graph
  CHECK(cli("verify-cert c4p2.json missing.cert.json").code == 2);
}

TEST_CASE("cli: recognize") {
  ensure_graphs();
  Run r = cli("recognize c4.json");
  CHECK(r.code == 0);
  WitnessLine w = parse_witness_line(r.out);
  REQUIRE(w.bounds.has_value());
  CHECK(pcg_graph(w.tree, *w.bounds) == build_cycle(4));
  CHECK(r.err.find("colorings tried") != std::string::npos);

  Run big = cli("recognize w9.json");
  CHECK(big.code == 2);
  CHECK(big.err.find("prove") != std::string::npos);
}

TEST_CASE("cli: argument errors") {
  CHECK(cli("--help").code == 0);
  CHECK(cli("").code == 2);             // a subcommand is required
  CHECK(cli("frobnicate").code == 2);   // unknown subcommand
  CHECK(cli("gen wheel").code == 2);    // missing positional
  CHECK(cli("prove").code == 2);        // missing graph
}
