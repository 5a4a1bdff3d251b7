#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcg/graph.hpp"

using namespace pcg;

namespace {

Graph path_graph(int n) {
  std::vector<std::string> nodes;
  std::vector<NodePair> edges;
  for (int i = 1; i <= n; ++i) nodes.push_back("p" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    edges.emplace_back("p" + std::to_string(i), "p" + std::to_string(i + 1));
  return Graph(nodes, edges);
}

Graph complete_graph(int n) {
  std::vector<std::string> nodes;
  std::vector<NodePair> edges;
  for (int i = 1; i <= n; ++i) nodes.push_back("k" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      edges.emplace_back("k" + std::to_string(i), "k" + std::to_string(j));
  return Graph(nodes, edges);
}

}  // namespace

TEST_CASE("node pairs store endpoints canonically") {
  NodePair p("b", "a");
  CHECK(p.first == "a");
  CHECK(p.second == "b");
  CHECK(p == NodePair("a", "b"));
  CHECK(p.str() == "(a,b)");
  CHECK(NodePair("a", "b") < NodePair("a", "c"));
}

TEST_CASE("graph construction validates its input") {
  CHECK_NOTHROW(Graph({"a", "b"}, {NodePair("a", "b")}));
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", ""}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {NodePair("a", "c")}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {NodePair("a", "a")}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {NodePair("a", "b"), NodePair("b", "a")}),
                  std::invalid_argument);
}

TEST_CASE("basic accessors") {
  Graph g({"a", "b", "c"}, {NodePair("a", "b")});
  CHECK(g.size() == 3);
  CHECK(g.has_node("c"));
  CHECK(!g.has_node("d"));
  CHECK(g.name_of(g.index_of("b")) == "b");
  CHECK_THROWS_AS(g.index_of("zz"), std::invalid_argument);
  CHECK(g.adjacent("a", "b"));
  CHECK(!g.adjacent("a", "c"));
  CHECK(g.degree(g.index_of("a")) == 1);
  CHECK(g.degree(g.index_of("c")) == 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.non_edge_count() == 2);
  CHECK(g.edges() == std::vector<NodePair>{NodePair("a", "b")});
  CHECK(g.non_edges() == std::vector<NodePair>{NodePair("a", "c"), NodePair("b", "c")});
}

TEST_CASE("cycle generator") {
  Graph c5 = build_cycle(5);
  CHECK(c5.size() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.adjacent("v1", "v2"));
  CHECK(c5.adjacent("v1", "v5"));
  CHECK(!c5.adjacent("v1", "v3"));
  CHECK_THROWS_AS(build_cycle(2), std::invalid_argument);
}

TEST_CASE("wheel generator") {
  Graph w9 = build_wheel(8);
  CHECK(w9.size() == 9);
  CHECK(w9.edge_count() == 16);
  CHECK(w9.non_edge_count() == 20);
  CHECK(w9.degree(w9.index_of("c")) == 8);
  CHECK(w9.degree(w9.index_of("v3")) == 3);
  CHECK(w9.adjacent("c", "v5"));
  CHECK(w9.adjacent("v8", "v1"));
  CHECK(!w9.adjacent("v1", "v4"));
  CHECK_THROWS_AS(build_wheel(2), std::invalid_argument);
}

TEST_CASE("strong product generator") {
  Graph g4 = build_cycle_strong_p2(4);
  CHECK(g4.size() == 8);
  CHECK(g4.edge_count() == 20);
  CHECK(g4.non_edge_count() == 8);

  Graph g5 = build_cycle_strong_p2(5);
  CHECK(g5.size() == 10);
  CHECK(g5.edge_count() == 25);
  CHECK(g5.adjacent("u1", "u2"));
  CHECK(g5.adjacent("u1", "v1"));
  CHECK(g5.adjacent("u1", "v2"));
  CHECK(g5.adjacent("u1", "v5"));
  CHECK(!g5.adjacent("u1", "u3"));
  CHECK(!g5.adjacent("u1", "v3"));
  CHECK_THROWS_AS(build_cycle_strong_p2(2), std::invalid_argument);
}

TEST_CASE("two_non_edges finds distance-2 pairs") {
  CHECK(two_non_edges(build_cycle(5)).size() == 5);
  CHECK(two_non_edges(build_cycle(6)).size() == 6);
  // every wheel non-edge joins rim nodes at distance 2 through the hub
  CHECK(two_non_edges(build_wheel(8)).size() == 20);
  auto t = two_non_edges(build_cycle(6));
  CHECK(std::find(t.begin(), t.end(), NodePair("v1", "v3")) != t.end());
  CHECK(std::find(t.begin(), t.end(), NodePair("v1", "v4")) == t.end());
}

TEST_CASE("induced occurrence counts on reference hosts") {
  Graph p4 = path_graph(4), p5 = path_graph(5);
  // 2 node sets x 2 path reversals
  CHECK(induced_occurrences(p5, p4).size() == 4);
  // dropping any node of C5 leaves an induced P4
  CHECK(induced_occurrences(build_cycle(5), p4).size() == 10);
  // triangles of a wheel: hub + rim edge, 6 sets x |Aut(K3)| = 6
  CHECK(induced_occurrences(build_wheel(6), complete_graph(3)).size() == 36);
  // C4 in itself: its automorphisms
  CHECK(induced_occurrences(build_cycle(4), build_cycle(4)).size() == 8);
  // C5 has no induced 4-cycle
  CHECK(induced_occurrences(build_cycle(5), build_cycle(4)).empty());
}

TEST_CASE("occurrences are induced and injective") {
  Graph host = build_cycle_strong_p2(4);
  Graph pat({"a", "b", "c", "d"}, {NodePair("a", "b"), NodePair("c", "d")});
  auto occs = induced_occurrences(host, pat);
  CHECK(!occs.empty());
  for (const auto& f : occs) {
    REQUIRE(f.size() == 4);
    std::set<std::string> img;
    for (const auto& [k, v] : f) img.insert(v);
    CHECK(img.size() == 4);
    for (const auto& [x, fx] : f)
      for (const auto& [y, fy] : f) {
        if (x == y) continue;
        CHECK(pat.adjacent(x, y) == host.adjacent(fx, fy));
      }
  }
  // index variant agrees in count
  CHECK(induced_occurrences_idx(host, pat).size() == occs.size());
}

TEST_CASE("isomorphism checks") {
  Graph c5 = build_cycle(5);
  Graph relabeled({"x", "q", "m", "t", "z"},
                  {NodePair("x", "q"), NodePair("q", "m"), NodePair("m", "t"),
                   NodePair("t", "z"), NodePair("z", "x")});
  CHECK(are_isomorphic(c5, relabeled));

  Graph two_triangles({"a", "b", "c", "d", "e", "f"},
                      {NodePair("a", "b"), NodePair("b", "c"), NodePair("a", "c"),
                       NodePair("d", "e"), NodePair("e", "f"), NodePair("d", "f")});
  CHECK(!are_isomorphic(build_cycle(6), two_triangles));
  CHECK(!are_isomorphic(c5, build_cycle(6)));
  CHECK(are_isomorphic(build_wheel(8), build_wheel(8)));
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(build_cycle(5)).size() == 10);
  CHECK(automorphisms(build_wheel(8)).size() == 16);  // dihedral on the rim, hub fixed
  CHECK(automorphisms(complete_graph(4)).size() == 24);
  for (const auto& perm : automorphisms(build_cycle(4))) {
    Graph g = build_cycle(4);
    for (int u = 0; u < g.size(); ++u)
      for (int v = u + 1; v < g.size(); ++v)
        CHECK(g.adjacent(u, v) == g.adjacent(perm[u], perm[v]));
  }
}

TEST_CASE("induced four cycles") {
  CHECK(induced_four_cycles(build_cycle(4)).size() == 1);
  CHECK(induced_four_cycles(build_cycle(5)).empty());
  CHECK(induced_four_cycles(build_wheel(8)).empty());
  // the doubled C4: one 4-cycle per pair of disjoint diagonals across layers
  CHECK(induced_four_cycles(build_cycle_strong_p2(4)).size() == 16);
  CHECK(induced_four_cycles(build_cycle_strong_p2(5)).empty());
  CHECK(induced_four_cycles(build_cycle_strong_p2(6)).empty());
  for (const auto& cyc : induced_four_cycles(build_cycle_strong_p2(4))) {
    Graph host = build_cycle_strong_p2(4);
    REQUIRE(cyc.size() == 4);
    CHECK(host.adjacent(cyc[0], cyc[1]));
    CHECK(host.adjacent(cyc[1], cyc[2]));
    CHECK(host.adjacent(cyc[2], cyc[3]));
    CHECK(host.adjacent(cyc[3], cyc[0]));
    CHECK(!host.adjacent(cyc[0], cyc[2]));
    CHECK(!host.adjacent(cyc[1], cyc[3]));
  }
}

TEST_CASE("induced subgraph and node removal") {
  Graph w7 = build_wheel(6);
  Graph rim = remove_node(w7, "c");
  CHECK(are_isomorphic(rim, build_cycle(6)));
  Graph sub = induced_subgraph(w7, {"c", "v1", "v2"});
  CHECK(sub.size() == 3);
  CHECK(sub.edge_count() == 3);
  CHECK_THROWS_AS(remove_node(w7, "zz"), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(w7, {"c", "c"}), std::invalid_argument);
}

TEST_CASE("json round trip") {
  Graph g = build_cycle_strong_p2(5);
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);
  CHECK(graph_to_json(back) == graph_to_json(g));
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes":["a","b"]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes":["a","b"],"edges":[],"x":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes":["a","b"],"edges":[["a","c"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes":["a","b"],"edges":[["a","a"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      graph_from_json(R"({"nodes":["a","b"],"edges":[["a","b"],["b","a"]]})"),
      std::invalid_argument);
}
