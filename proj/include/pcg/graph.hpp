#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace pcg {

// Unordered pair of node names, stored lexicographically so each pair has
// exactly one representation. Used for edges, non-edges, and clause literals.
struct NodePair {
  std::string first, second;

  NodePair() = default;
  NodePair(std::string a, std::string b);

  bool operator==(const NodePair&) const = default;
  auto operator<=>(const NodePair&) const = default;

  std::string str() const;  // "(a,b)" for messages
};

// Undirected graph with named nodes; immutable after construction, so values
// can be shared read-only across worker threads.
class Graph {
 public:
  Graph() = default;
  // Validates: unique non-empty node names, edges reference declared
  // nodes, no self-loops, no duplicate edges. Throws std::invalid_argument.
  Graph(std::vector<std::string> nodes, const std::vector<NodePair>& edges);

  int size() const { return (int)names_.size(); }
  const std::vector<std::string>& nodes() const { return names_; }
  bool has_node(const std::string& name) const;
  int index_of(const std::string& name) const;  // throws on unknown node
  const std::string& name_of(int i) const { return names_[i]; }

  bool adjacent(int u, int v) const { return adj_[u][v] != 0; }
  bool adjacent(const std::string& u, const std::string& v) const;
  int degree(int u) const { return degree_[u]; }

  int edge_count() const { return edge_count_; }
  int non_edge_count() const { return size() * (size() - 1) / 2 - edge_count_; }
  std::vector<NodePair> edges() const;      // sorted canonically
  std::vector<NodePair> non_edges() const;  // sorted canonically

  bool operator==(const Graph& o) const;  // same names (order-insensitive) and adjacency

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::vector<char>> adj_;
  std::vector<int> degree_;
  int edge_count_ = 0;
};

// Generators use the conventional node names ("c", "v1".."vn", "u1".."un") so
// certificates read naturally against the families they describe.
Graph build_cycle(int n);            // C_n, nodes v1..vn; n >= 3
Graph build_wheel(int n);            // W_{n+1}: rim v1..vn plus universal hub c; n >= 3
Graph build_cycle_strong_p2(int n);  // C_n x P_2 strong product, nodes u1..un, v1..vn; n >= 3

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep);
Graph remove_node(const Graph& g, const std::string& x);

// Non-edges whose endpoints are at graph distance exactly 2.
std::vector<NodePair> two_non_edges(const Graph& g);

// All injective maps f: nodes(pattern) -> nodes(host) with
// (a,b) in E(pattern) <=> (f(a),f(b)) in E(host). Deterministic order:
// pattern nodes assigned in list order, host candidates tried in list order.
std::vector<std::map<std::string, std::string>> induced_occurrences(
    const Graph& host, const Graph& pattern);
// Index-based variant used by the clause generators: result[i][p] = host index
// assigned to pattern node p.
std::vector<std::vector<int>> induced_occurrences_idx(const Graph& host,
                                                      const Graph& pattern);

// Backtracking with degree / neighbourhood-degree pruning; intended for <= 24 nodes.
bool are_isomorphic(const Graph& g, const Graph& h);

// All automorphisms of g as index permutations (g -> g), deterministic order.
std::vector<std::vector<int>> automorphisms(const Graph& g);

// Every induced 4-cycle of g, as node names in cycle order; deterministic.
std::vector<std::vector<std::string>> induced_four_cycles(const Graph& g);

// JSON interchange: {"nodes": [...], "edges": [["a","b"], ...]}.
// Unknown keys, undeclared endpoints, duplicate or self edges are rejected.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

}  // namespace pcg
