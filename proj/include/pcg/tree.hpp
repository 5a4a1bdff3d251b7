#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcg/coloring.hpp"
#include "pcg/graph.hpp"
#include "pcg/rational.hpp"

namespace pcg {

struct DistanceBounds {
  Rational dmin, dmax;
  DistanceBounds() = default;
  DistanceBounds(Rational lo, Rational hi);  // enforces 0 <= dmin <= dmax
  bool operator==(const DistanceBounds&) const = default;
};

// Edge-weighted unrooted tree. Leaves carry external names; internal nodes are
// auto-named with a prefix ('@') that the Newick grammar cannot produce, so
// the two name spaces never collide.
class WeightedTree {
 public:
  WeightedTree() = default;

  // Builder interface; call validate() once the shape is complete.
  int add_leaf(const std::string& name);
  int add_internal();
  void add_edge(int a, int b, const Rational& weight);  // weight must be > 0

  // Checks connectedness, acyclicity, positive weights, unique leaf names,
  // and that every named node has degree 1. Throws std::invalid_argument.
  void validate() const;

  int node_count() const { return (int)adj_.size(); }
  int leaf_count() const { return (int)leaf_order_.size(); }
  std::vector<std::string> leaves() const;  // in insertion order
  bool has_leaf(const std::string& name) const;

  Rational leaf_distance(const std::string& u, const std::string& v) const;
  // Distances from leaf u to every node; used to batch pairwise queries.
  std::vector<Rational> distances_from_leaf(const std::string& u) const;

  // Deterministic Newick serialization (children in construction order).
  // Round-trips through parse_newick with the leaf metric preserved exactly.
  std::string newick() const;

  // Multiply every edge weight by q > 0.
  void scale_weights(const Rational& q);

  const std::vector<std::vector<std::pair<int, Rational>>>& adjacency() const {
    return adj_;
  }
  const std::string& node_name(int i) const { return names_[i]; }
  bool is_leaf(int i) const { return is_leaf_[i]; }

 private:
  std::vector<std::string> names_;
  std::vector<char> is_leaf_;
  std::vector<std::vector<std::pair<int, Rational>>> adj_;
  std::vector<int> leaf_order_;
  int leaf_index(const std::string& name) const;  // throws invalid-leaf
};

// Newick subset: tree := subtree ";" ; inner := "(" subtree ("," subtree)+ ")"
// [name] [":" weight] ; leaf := name ":" weight ; name := [A-Za-z0-9_]+ ;
// weight := decimal literal > 0. The root (and, as seen in practice, inner
// children) may omit ":weight"; a missing inner weight contributes 0 and the
// degree-2 contraction pass absorbs it. Leaf weights are mandatory.
// Errors carry the byte offset. Degree-2 internal nodes are contracted
// (weights summed); duplicate leaf names and non-positive weights rejected.
WeightedTree parse_newick(const std::string& text);

// "NEWICK; dmin dmax" -- the witness interchange line. Bounds are optional on
// input (commands take them from flags when absent).
struct WitnessLine {
  WeightedTree tree;
  std::optional<DistanceBounds> bounds;
};
WitnessLine parse_witness_line(const std::string& text);
std::string witness_line(const WeightedTree& tree, const DistanceBounds& b);

// Graph on the leaves of t: edge (u,v) iff dmin <= d_T(u,v) <= dmax,
// exact rational comparison, bounds inclusive. Requires >= 2 leaves.
Graph pcg_graph(const WeightedTree& t, const DistanceBounds& b);

// Complete classification of every leaf pair: Red below dmin, Black within
// bounds, Blue above dmax. The Black class is exactly E(pcg_graph).
TriColoring pcg_coloring(const WeightedTree& t, const DistanceBounds& b);

// Given leaves u,v,w with d(u,v) the largest distance among the triple
// (precondition, else throws), returns whether d(w,x) <= max(d(u,x), d(v,x)).
// Always true for genuine tree metrics; exists as a property-test oracle.
bool check_subtree_lemma(const WeightedTree& t, const std::string& u,
                         const std::string& v, const std::string& w,
                         const std::string& x);

// Explicit witness constructions.
std::pair<WeightedTree, DistanceBounds> wheel7_witness();  // W_{6+1} = PCG(T,5,7)
std::pair<WeightedTree, DistanceBounds> wheel8_witness();  // W_{7+1} = PCG(T,9,13)
// Caterpillar realizing C_n x P_2 minus u_n with bounds (2n-2, 2n+2); n >= 4.
std::pair<WeightedTree, DistanceBounds> minimality_caterpillar(int n);

}  // namespace pcg
