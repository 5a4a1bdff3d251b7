#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcg/coloring.hpp"
#include "pcg/graph.hpp"

using namespace pcg;

namespace {

Graph two_k2_host() {
  return Graph({"a", "b", "c", "d"}, {NodePair("a", "b"), NodePair("c", "d")});
}

Graph path4_host() {
  return Graph({"a", "b", "c", "d"},
               {NodePair("a", "b"), NodePair("b", "c"), NodePair("c", "d")});
}

std::set<std::vector<Literal>> literal_sets(const std::vector<Clause>& cs) {
  std::set<std::vector<Literal>> out;
  for (const auto& c : cs) out.insert(c.literals);
  return out;
}

}  // namespace

TEST_CASE("catalog contents") {
  auto cat = catalog();
  REQUIRE(cat.size() == 8);
  std::vector<std::string> ids;
  for (const auto& p : cat) ids.push_back(p.id);
  CHECK(ids == std::vector<std::string>{"f-c(2K2)a", "f-c(2K2)b", "f-c(P4)", "f-c(K1,3)",
                                        "f-c(K3uK1)", "f-c(A)", "f-c(B)", "f-c(C)"});
  std::vector<int> sizes;
  for (const auto& p : cat) sizes.push_back(p.base.size());
  CHECK(sizes == std::vector<int>{4, 4, 4, 4, 4, 6, 5, 6});
  for (const auto& p : cat) {
    for (const auto& q : p.red) CHECK(!p.base.adjacent(q.first, q.second));
    for (const auto& q : p.blue) CHECK(!p.base.adjacent(q.first, q.second));
  }
  CHECK(catalog_with_weak().size() == 9);
  CHECK(weak_2k2b().id == "f-c(2K2)b-weak");
  CHECK(weak_2k2b().red.size() == 1);  // drops the second red constraint of f-c(2K2)b
  CHECK(pattern_by_id("f-c(A)").base.size() == 6);
  CHECK_THROWS_AS(pattern_by_id("nope"), std::invalid_argument);
}

TEST_CASE("make_coloring validates") {
  Graph h = two_k2_host();
  CHECK_THROWS_AS(make_coloring(h, {NodePair("a", "b")}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_coloring(h, {NodePair("a", "c")}, {NodePair("a", "c")}),
                  std::invalid_argument);
  TriColoring c = make_coloring(h, {NodePair("a", "c")}, {NodePair("b", "d")});
  CHECK(!c.complete());
  c.assignment[NodePair("a", "d")] = Color::Red;
  c.assignment[NodePair("b", "c")] = Color::Blue;
  CHECK(c.complete());
}

TEST_CASE("pattern clauses on the pattern itself collapse to one") {
  auto cs = pattern_clauses(two_k2_host(), pattern_by_id("f-c(2K2)a"));
  REQUIRE(cs.size() == 1);  // 8 automorphic occurrences, one literal set
  const Clause& c = cs[0];
  CHECK(c.rule == "f-c(2K2)a");
  REQUIRE(c.literals.size() == 4);
  for (const auto& lit : c.literals) CHECK(lit.color == Color::Blue);
  std::vector<NodePair> pairs;
  for (const auto& lit : c.literals) pairs.push_back(lit.pair);
  CHECK(pairs == std::vector<NodePair>{NodePair("a", "c"), NodePair("a", "d"),
                                       NodePair("b", "c"), NodePair("b", "d")});
  REQUIRE(c.map.size() == 4);
  CHECK(c.map[0].first == "a");  // pattern nodes in declaration order
  CHECK(c.map[3].first == "d");
}

TEST_CASE("pattern literals take the opposite color") {
  auto cs = pattern_clauses(path4_host(), pattern_by_id("f-c(P4)"));
  REQUIRE(cs.size() == 1);  // identity + reversal, same literal set
  CHECK(literal_sets(cs).count({Literal{NodePair("a", "c"), Color::Red},
                                Literal{NodePair("a", "d"), Color::Blue},
                                Literal{NodePair("b", "d"), Color::Red}}) == 1);
}

TEST_CASE("pattern clauses over a bigger host") {
  Graph host = build_cycle_strong_p2(4);
  auto cs = pattern_clauses(host, pattern_by_id("f-c(2K2)a"));
  CHECK(!cs.empty());
  auto sets = literal_sets(cs);
  CHECK(sets.size() == cs.size());  // deduplicated
  for (const auto& c : cs) {
    REQUIRE(c.literals.size() == 4);
    for (const auto& lit : c.literals) {
      CHECK(lit.color == Color::Blue);
      CHECK(!host.adjacent(lit.pair.first, lit.pair.second));
    }
    CHECK(std::is_sorted(c.literals.begin(), c.literals.end()));
  }
}

TEST_CASE("cycle rule clauses") {
  auto find_rule = [](const std::vector<Clause>& cs, const std::string& rule) {
    for (const auto& c : cs)
      if (c.rule == rule) return c;
    FAIL("missing rule ", rule);
    return Clause{};
  };
  Graph c5 = build_cycle(5);
  auto cs = cycle_rule_clauses(c5, {"v1", "v2", "v3", "v4", "v5"});
  REQUIRE(cs.size() == 2);
  Clause blue5 = find_rule(cs, "cycle-blue");
  CHECK(blue5.literals.size() == 5);
  for (const auto& lit : blue5.literals) CHECK(lit.color == Color::Blue);
  Clause red5 = find_rule(cs, "cycle-red2");
  CHECK(red5.literals.size() == 5);
  for (const auto& lit : red5.literals) CHECK(lit.color == Color::Red);

  Graph w9 = build_wheel(8);
  auto ws = cycle_rule_clauses(w9, {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"});
  REQUIRE(ws.size() == 2);
  CHECK(find_rule(ws, "cycle-blue").literals.size() == 20);  // every rim chord
  Clause red8 = find_rule(ws, "cycle-red2");
  CHECK(red8.literals.size() == 8);  // one per distance-2 rim pair
  CHECK(red8.nodes == std::vector<std::string>{"v1", "v2", "v3", "v4", "v5", "v6", "v7",
                                               "v8"});
}

TEST_CASE("cycle rule rejects bad cycles") {
  Graph w9 = build_wheel(8);
  // too short
  CHECK_THROWS_AS(cycle_rule_clauses(w9, {"v1", "v2", "v3"}), std::invalid_argument);
  // chord through the hub makes it non-induced
  CHECK_THROWS_AS(cycle_rule_clauses(w9, {"c", "v1", "v2", "v3"}), std::invalid_argument);
  // not even a cycle
  CHECK_THROWS_AS(cycle_rule_clauses(w9, {"v1", "v2", "v3", "v5"}), std::invalid_argument);
  // repeated node
  CHECK_THROWS_AS(cycle_rule_clauses(w9, {"v1", "v2", "v1", "v2"}), std::invalid_argument);
}

TEST_CASE("path rules on P3 and P4") {
  Graph p3({"a", "b", "c"}, {NodePair("a", "b"), NodePair("b", "c")});
  CHECK(path_rule_clauses(p3, {"a", "b", "c"}).empty());  // only tautologies

  auto cs = path_rule_clauses(path4_host(), {"a", "b", "c", "d"});
  REQUIRE(cs.size() == 1);  // le1 on (a,d) and both claim1 orientations coincide
  CHECK(literal_sets(cs).count({Literal{NodePair("a", "c"), Color::Red},
                                Literal{NodePair("a", "d"), Color::Blue},
                                Literal{NodePair("b", "d"), Color::Red}}) == 1);
}

TEST_CASE("path rules on P5") {
  Graph p5({"v1", "v2", "v3", "v4", "v5"},
           {NodePair("v1", "v2"), NodePair("v2", "v3"), NodePair("v3", "v4"),
            NodePair("v4", "v5")});
  auto cs = path_rule_clauses(p5, {"v1", "v2", "v3", "v4", "v5"});
  // le1 for the three non-2-non-edges + two claim1 orientations
  REQUIRE(cs.size() == 5);
  int le1 = 0, claim1 = 0;
  for (const auto& c : cs) {
    if (c.rule == "path-le1") le1++;
    if (c.rule == "path-claim1") claim1++;
  }
  CHECK(le1 == 3);
  CHECK(claim1 == 2);
  auto sets = literal_sets(cs);
  CHECK(sets.count({Literal{NodePair("v1", "v3"), Color::Red},
                    Literal{NodePair("v1", "v4"), Color::Red},
                    Literal{NodePair("v1", "v5"), Color::Blue},
                    Literal{NodePair("v2", "v5"), Color::Red}}) == 1);
  CHECK(sets.count({Literal{NodePair("v1", "v4"), Color::Red},
                    Literal{NodePair("v1", "v5"), Color::Blue},
                    Literal{NodePair("v2", "v5"), Color::Red},
                    Literal{NodePair("v3", "v5"), Color::Red}}) == 1);
  CHECK(sets.count({Literal{NodePair("v1", "v3"), Color::Red},
                    Literal{NodePair("v1", "v4"), Color::Blue},
                    Literal{NodePair("v2", "v4"), Color::Red},
                    Literal{NodePair("v3", "v5"), Color::Red}}) == 1);
  // path must be induced
  Graph c5 = build_cycle(5);
  CHECK_THROWS_AS(path_rule_clauses(c5, {"v1", "v2", "v3", "v4", "v5"}),
                  std::invalid_argument);
}

TEST_CASE("check_coloring reports violated clauses") {
  Graph h = two_k2_host();
  auto cs = pattern_clauses(h, pattern_by_id("f-c(2K2)a"));
  std::vector<NodePair> all = h.non_edges();
  TriColoring all_red = make_coloring(h, all, {});
  TriColoring all_blue = make_coloring(h, {}, all);
  CHECK(check_coloring(all_red, cs).size() == 1);
  CHECK(check_coloring(all_blue, cs).empty());
  TriColoring partial = make_coloring(h, {NodePair("a", "c")}, {});
  CHECK_THROWS_AS(check_coloring(partial, cs), std::invalid_argument);
}

TEST_CASE("literal ordering") {
  Literal r{NodePair("a", "b"), Color::Red};
  Literal b{NodePair("a", "b"), Color::Blue};
  CHECK(r != b);
  CHECK((r < b || b < r));
  CHECK(color_from_name("red") == Color::Red);
  CHECK(color_from_name("blue") == Color::Blue);
  CHECK_THROWS_AS(color_from_name("green"), std::invalid_argument);
  CHECK(opposite(Color::Red) == Color::Blue);
  CHECK(color_name(Color::Blue) == "blue");
}
