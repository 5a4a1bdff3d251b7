#include "pcg/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pcg {

Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

std::string color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

Color color_from_name(const std::string& s) {
  if (s == "red") return Color::Red;
  if (s == "blue") return Color::Blue;
  throw std::invalid_argument("unknown color: '" + s + "'");
}

bool TriColoring::complete() const {
  return (int)assignment.size() == host.non_edge_count();
}

void TriColoring::validate() const {
  for (const auto& [pair, color] : assignment) {
    (void)color;
    if (host.adjacent(pair.first, pair.second))
      throw std::invalid_argument("colored pair " + pair.str() + " is an edge of the host");
  }
}

TriColoring make_coloring(const Graph& host, const std::vector<NodePair>& red,
                          const std::vector<NodePair>& blue) {
  TriColoring c{host, {}};
  for (const auto& p : red) c.assignment[p] = Color::Red;
  for (const auto& p : blue) {
    if (c.assignment.count(p))
      throw std::invalid_argument("pair " + p.str() + " colored both red and blue");
    c.assignment[p] = Color::Blue;
  }
  c.validate();
  return c;
}

namespace {

ForbiddenPattern make_pattern(const std::string& id,
                              const std::vector<std::string>& nodes,
                              const std::vector<NodePair>& edges,
                              const std::vector<NodePair>& red,
                              const std::vector<NodePair>& blue) {
  ForbiddenPattern p{id, Graph(nodes, edges), red, blue};
  for (const auto& q : p.red)
    if (p.base.adjacent(q.first, q.second))
      throw std::logic_error("pattern " + id + ": red pair " + q.str() + " is an edge");
  for (const auto& q : p.blue)
    if (p.base.adjacent(q.first, q.second))
      throw std::logic_error("pattern " + id + ": blue pair " + q.str() + " is an edge");
  return p;
}

NodePair P(const char* a, const char* b) { return NodePair(a, b); }

}  // namespace

std::vector<ForbiddenPattern> catalog() {
  std::vector<ForbiddenPattern> out;
  out.push_back(make_pattern("f-c(2K2)a", {"a", "b", "c", "d"},
                             {P("a", "b"), P("c", "d")},
                             {P("a", "c"), P("a", "d"), P("b", "c"), P("b", "d")}, {}));
  out.push_back(make_pattern("f-c(2K2)b", {"a", "b", "c", "d"},
                             {P("a", "b"), P("c", "d")},
                             {P("b", "c"), P("a", "d")},
                             {P("a", "c"), P("b", "d")}));
  out.push_back(make_pattern("f-c(P4)", {"a", "b", "c", "d"},
                             {P("a", "b"), P("b", "c"), P("c", "d")},
                             {P("a", "d")},
                             {P("a", "c"), P("b", "d")}));
  out.push_back(make_pattern("f-c(K1,3)", {"a", "b", "c", "d"},
                             {P("a", "b"), P("b", "c"), P("b", "d")},
                             {P("a", "d"), P("c", "d")},
                             {P("a", "c")}));
  out.push_back(make_pattern("f-c(K3uK1)", {"a", "b", "c", "d"},
                             {P("b", "c"), P("b", "d"), P("c", "d")},
                             {P("a", "c"), P("a", "d")},
                             {P("a", "b")}));
  out.push_back(make_pattern("f-c(A)", {"a", "b", "c", "d", "e", "f"},
                             {P("a", "e"), P("a", "b"), P("a", "f"), P("b", "c"),
                              P("b", "f"), P("d", "e"), P("d", "c"), P("e", "f")},
                             {},
                             {P("b", "d"), P("c", "e")}));
  out.push_back(make_pattern("f-c(B)", {"a", "b", "c", "d", "e"},
                             {P("a", "b"), P("a", "e"), P("b", "e"), P("c", "e"),
                              P("d", "e"), P("c", "d")},
                             {P("b", "c")},
                             {P("a", "c"), P("b", "d")}));
  out.push_back(make_pattern("f-c(C)", {"a", "b", "c", "d", "e", "f"},
                             {P("a", "b"), P("b", "c"), P("b", "d"), P("c", "d"),
                              P("c", "e"), P("d", "e"), P("e", "f")},
                             {P("a", "c"), P("c", "f")},
                             {P("a", "d"), P("d", "f")}));
  return out;
}

ForbiddenPattern weak_2k2b() {
  return make_pattern("f-c(2K2)b-weak", {"a", "b", "c", "d"},
                      {P("a", "b"), P("c", "d")},
                      {P("b", "c")},
                      {P("a", "c"), P("b", "d")});
}

std::vector<ForbiddenPattern> catalog_with_weak() {
  auto out = catalog();
  out.push_back(weak_2k2b());
  return out;
}

ForbiddenPattern pattern_by_id(const std::string& id) {
  for (auto& p : catalog_with_weak())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown pattern id: '" + id + "'");
}

namespace {

// Sort + sanity-check literals; returns false for tautologies (a pair with
// both colors), which callers drop.
bool normalize_literals(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (size_t i = 1; i < lits.size(); ++i)
    if (lits[i].pair == lits[i - 1].pair) return false;
  return true;
}

}  // namespace

std::vector<Clause> pattern_clauses(const Graph& host, const ForbiddenPattern& p) {
  std::vector<Clause> out;
  std::set<std::vector<Literal>> seen;
  for (const auto& occ : induced_occurrences_idx(host, p.base)) {
    std::vector<Literal> lits;
    auto emit = [&](const NodePair& base_pair, Color clause_color) {
      NodePair host_pair(host.name_of(occ[p.base.index_of(base_pair.first)]),
                         host.name_of(occ[p.base.index_of(base_pair.second)]));
      lits.push_back({host_pair, clause_color});
    };
    // The clause says "this occurrence is not fully colored as the pattern
    // dictates": some red pair is Blue or some blue pair is Red.
    for (const auto& q : p.red) emit(q, Color::Blue);
    for (const auto& q : p.blue) emit(q, Color::Red);
    if (!normalize_literals(lits))
      throw std::logic_error("pattern clause tautology (injective map cannot repeat pairs)");
    if (!seen.insert(lits).second) continue;
    Clause c;
    c.literals = std::move(lits);
    c.rule = p.id;
    for (int i = 0; i < p.base.size(); ++i)
      c.map.emplace_back(p.base.name_of(i), host.name_of(occ[i]));
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

void check_induced_cycle(const Graph& host, const std::vector<int>& idx) {
  int m = (int)idx.size();
  if (m < 4) throw std::invalid_argument("invalid-cycle: length " + std::to_string(m) + " < 4");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (idx[i] == idx[j]) throw std::invalid_argument("invalid-cycle: repeated node");
      bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      if (host.adjacent(idx[i], idx[j]) != consecutive)
        throw std::invalid_argument(
            consecutive ? "invalid-cycle: missing edge" : "invalid-cycle: chord present");
    }
}

std::vector<int> to_indices(const Graph& host, const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& n : names) idx.push_back(host.index_of(n));
  return idx;
}

}  // namespace

std::vector<Clause> cycle_rule_clauses(const Graph& host,
                                       const std::vector<std::string>& cycle) {
  auto idx = to_indices(host, cycle);
  check_induced_cycle(host, idx);
  int m = (int)idx.size();
  Clause blue_clause, red_clause;
  blue_clause.rule = "cycle-blue";
  red_clause.rule = "cycle-red2";
  blue_clause.nodes = red_clause.nodes = cycle;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int dist = std::min(j - i, m - (j - i));
      if (dist < 2) continue;
      NodePair pair(cycle[i], cycle[j]);
      blue_clause.literals.push_back({pair, Color::Blue});
      if (dist == 2) red_clause.literals.push_back({pair, Color::Red});
    }
  normalize_literals(blue_clause.literals);
  normalize_literals(red_clause.literals);
  return {blue_clause, red_clause};
}

std::vector<Clause> path_rule_clauses(const Graph& host,
                                      const std::vector<std::string>& path) {
  auto idx = to_indices(host, path);
  int m = (int)idx.size();
  if (m < 3) throw std::invalid_argument("invalid-path: length " + std::to_string(m) + " < 3");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (idx[i] == idx[j]) throw std::invalid_argument("invalid-path: repeated node");
      if (host.adjacent(idx[i], idx[j]) != (j == i + 1))
        throw std::invalid_argument(j == i + 1 ? "invalid-path: missing edge"
                                               : "invalid-path: chord present");
    }
  std::vector<Clause> out;
  std::set<std::vector<Literal>> seen;
  auto push = [&](Clause c) {
    if (!normalize_literals(c.literals)) return;  // tautology
    if (!seen.insert(c.literals).second) return;
    out.push_back(std::move(c));
  };
  // le1: a path coloring with some red non-edge but no red 2-non-edge is
  // forbidden; as a clause per non-edge e: Blue(e) or some 2-non-edge Red.
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) {
      Clause c;
      c.rule = "path-le1";
      c.nodes = path;
      c.le1_edge = NodePair(path[i], path[j]);
      c.literals.push_back({c.le1_edge, Color::Blue});
      for (int k = 0; k + 2 < m; ++k)
        c.literals.push_back({NodePair(path[k], path[k + 2]), Color::Red});
      push(std::move(c));
    }
  // claim1: if (v1,vi) for 3<=i<=m-1 and (v2,vm) are all blue, so is (v1,vm).
  if (m >= 4) {
    for (int orientation = 0; orientation < 2; ++orientation) {
      std::vector<std::string> v = path;
      if (orientation) std::reverse(v.begin(), v.end());
      Clause c;
      c.rule = "path-claim1";
      c.nodes = v;
      for (int i = 3; i <= m - 1; ++i)
        c.literals.push_back({NodePair(v[0], v[i - 1]), Color::Red});
      c.literals.push_back({NodePair(v[1], v[m - 1]), Color::Red});
      c.literals.push_back({NodePair(v[0], v[m - 1]), Color::Blue});
      push(std::move(c));
    }
  }
  return out;
}

std::vector<Clause> check_coloring(const TriColoring& c,
                                   const std::vector<Clause>& clauses) {
  if (!c.complete()) throw std::invalid_argument("incomplete-coloring");
  c.validate();
  std::vector<Clause> violated;
  for (const auto& cl : clauses) {
    bool satisfied = false;
    for (const auto& lit : cl.literals) {
      auto it = c.assignment.find(lit.pair);
      if (it == c.assignment.end())
        throw std::invalid_argument("clause literal " + lit.pair.str() +
                                    " is not a non-edge of the coloring's host");
      if (it->second == lit.color) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) violated.push_back(cl);
  }
  return violated;
}

}  // namespace pcg
