#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg {

enum class Color : uint8_t { Red, Blue };

Color opposite(Color c);
std::string color_name(Color c);          // "red" / "blue"
Color color_from_name(const std::string& s);

// Tri-coloring of a host graph: edges are implicitly Black; the assignment
// colors non-edges Red or Blue. Partial until every non-edge is assigned.
struct TriColoring {
  Graph host;
  std::map<NodePair, Color> assignment;

  bool complete() const;
  // Throws std::invalid_argument if any assigned pair is not a non-edge of host.
  void validate() const;
};

TriColoring make_coloring(const Graph& host, const std::vector<NodePair>& red,
                          const std::vector<NodePair>& blue);

// A partial tri-coloring of a small base graph that no weighted tree with
// bounds can induce. Pairs not listed in red/blue are unconstrained.
struct ForbiddenPattern {
  std::string id;
  Graph base;
  std::vector<NodePair> red, blue;
};

// The eight certified-by-construction patterns, fixed encodings.
std::vector<ForbiddenPattern> catalog();
// The 2K2 variant without the red (a,d) constraint. Deliberately kept out of
// catalog(): a weaker pattern yields a stronger clause, so it is only usable
// if the realizability module certifies it forbidden on its own.
ForbiddenPattern weak_2k2b();
// catalog() plus weak_2k2b(), the set the certification run examines.
std::vector<ForbiddenPattern> catalog_with_weak();
// Lookup over catalog_with_weak(); throws on unknown id.
ForbiddenPattern pattern_by_id(const std::string& id);

struct Literal {
  NodePair pair;
  Color color;
  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

// Disjunction "at least one literal holds" over non-edge colors, plus the
// provenance needed to re-derive it independently during verification.
struct Clause {
  std::vector<Literal> literals;  // sorted, unique, never tautological
  std::string rule;               // pattern id, "cycle-blue", "cycle-red2",
                                  // "path-le1", or "path-claim1"
  // Pattern rules: pattern node -> host node, in pattern node order.
  std::vector<std::pair<std::string, std::string>> map;
  // Cycle/path rules: the designated nodes in order.
  std::vector<std::string> nodes;
  // path-le1 only: the non-edge the clause's Blue literal belongs to.
  NodePair le1_edge;
};

// One clause per induced occurrence of p.base in host: the disjunction over
// constrained pairs (x,y) of (f(x)f(y), opposite color). Identical literal
// sets (automorphic occurrences) are collapsed, first provenance kept.
std::vector<Clause> pattern_clauses(const Graph& host, const ForbiddenPattern& p);

// For an induced cycle (length >= 4): (i) at least one cycle non-edge is Blue;
// (ii) at least one cycle-distance-2 pair is Red. Throws on non-induced input.
std::vector<Clause> cycle_rule_clauses(const Graph& host,
                                       const std::vector<std::string>& cycle);

// For an induced path (>= 3 nodes): le1 clauses (one per path non-edge e:
// Blue(e) or some path 2-non-edge Red) and claim1 clauses (per orientation:
// Red(v1,vi) for 3<=i<=m-1, Red(v2,vm), or Blue(v1,vm)). Tautologies dropped,
// duplicates collapsed. Throws on non-induced input.
std::vector<Clause> path_rule_clauses(const Graph& host,
                                      const std::vector<std::string>& path);

// Clauses with no satisfied literal under the complete coloring c.
// Empty result means c survives this rule set (status unknown, not "is PCG").
std::vector<Clause> check_coloring(const TriColoring& c,
                                   const std::vector<Clause>& clauses);

}  // namespace pcg
