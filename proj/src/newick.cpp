#include <cctype>
#include <functional>
#include <stdexcept>

#include "pcg/tree.hpp"

namespace pcg {

namespace {

struct RawNode {
  bool leaf = false;
  std::string name;
  Rational weight;  // edge to parent; 0 when absent
  bool has_weight = false;
  size_t pos = 0;
  std::vector<int> children;
};

struct Parser {
  const std::string& s;
  size_t i = 0;
  std::vector<RawNode> nodes;

  [[noreturn]] void fail(size_t at, const std::string& msg) const {
    throw std::invalid_argument("newick: " + msg + " at offset " + std::to_string(at));
  }
  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool at(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) fail(i, std::string("expected '") + c + "'");
    ++i;
  }
  static bool name_char(char c) {
    return std::isalnum((unsigned char)c) || c == '_';
  }
  std::string lex_name() {
    ws();
    size_t start = i;
    while (i < s.size() && name_char(s[i])) ++i;
    if (i == start) fail(start, "expected node name");
    return s.substr(start, i - start);
  }
  Rational lex_weight() {
    ws();
    size_t start = i;
    while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '.')) ++i;
    if (i == start) fail(start, "expected weight");
    Rational w;
    try {
      w = parse_rational(s.substr(start, i - start));
    } catch (const std::invalid_argument&) {
      fail(start, "bad weight literal");
    }
    if (w <= 0) fail(start, "non-positive weight");
    return w;
  }

  int subtree() {
    ws();
    if (i < s.size() && s[i] == '(') {
      RawNode node;
      node.pos = i;
      ++i;
      node.children.push_back(subtree());
      expect(',');
      node.children.push_back(subtree());
      while (at(',')) {
        ++i;
        node.children.push_back(subtree());
      }
      expect(')');
      ws();
      if (i < s.size() && name_char(s[i])) lex_name();  // internal label, ignored
      if (at(':')) {
        ++i;
        node.weight = lex_weight();
        node.has_weight = true;
      }
      nodes.push_back(std::move(node));
      return (int)nodes.size() - 1;
    }
    RawNode node;
    node.leaf = true;
    node.pos = i;
    node.name = lex_name();
    ws();
    if (!at(':')) fail(i, "leaf '" + node.name + "' requires ':weight'");
    ++i;
    node.weight = lex_weight();
    node.has_weight = true;
    nodes.push_back(std::move(node));
    return (int)nodes.size() - 1;
  }
};

}  // namespace

WeightedTree parse_newick(const std::string& text) {
  Parser p{text, 0, {}};
  p.ws();
  if (!p.at('(')) p.fail(p.i, "root must be an internal node");
  int root = p.subtree();
  if (p.nodes[root].has_weight)
    p.fail(p.nodes[root].pos, "root subtree must not carry a weight");
  p.expect(';');
  p.ws();
  if (p.i != text.size()) p.fail(p.i, "trailing content after ';'");

  // Duplicate leaf detection with positions before anything else.
  {
    std::map<std::string, size_t> seen;
    for (const auto& n : p.nodes)
      if (n.leaf && !seen.emplace(n.name, n.pos).second)
        p.fail(n.pos, "duplicate leaf name '" + n.name + "'");
  }

  // Undirected adjacency over raw nodes; missing inner weights contribute 0
  // and must disappear in the degree-2 contraction below.
  struct Half {
    int to;
    Rational w;
    size_t pos;  // position of the subtree that contributed the edge
  };
  int n = (int)p.nodes.size();
  std::vector<std::vector<Half>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int c : p.nodes[v].children) {
      adj[v].push_back({c, p.nodes[c].weight, p.nodes[c].pos});
      adj[c].push_back({v, p.nodes[c].weight, p.nodes[c].pos});
    }

  std::vector<char> alive(n, 1);
  auto degree = [&](int v) { return (int)adj[v].size(); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || p.nodes[v].leaf || degree(v) != 2) continue;
      Half a = adj[v][0], b = adj[v][1];
      alive[v] = 0;
      adj[v].clear();
      auto relink = [&](int from, const Half& other, const Half& self) {
        for (auto& h : adj[from])
          if (h.to == v) {
            h.to = other.to;
            h.w = a.w + b.w;
            h.pos = std::max(self.pos, other.pos);
            return;
          }
        throw std::logic_error("contraction bookkeeping failure");
      };
      relink(a.to, b, a);
      relink(b.to, a, b);
      changed = true;
    }
  }

  for (int v = 0; v < n; ++v)
    for (const auto& h : adj[v])
      if (alive[v] && v < h.to && h.w <= 0)
        p.fail(h.pos, "edge has zero total weight (missing ':weight' on an inner node)");

  WeightedTree t;
  std::vector<int> id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    id[v] = p.nodes[v].leaf ? t.add_leaf(p.nodes[v].name) : t.add_internal();
  }
  for (int v = 0; v < n; ++v)
    for (const auto& h : adj[v])
      if (alive[v] && v < h.to) t.add_edge(id[v], id[h.to], h.w);
  t.validate();
  return t;
}

WitnessLine parse_witness_line(const std::string& text) {
  size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("newick: missing ';' terminator");
  WitnessLine out;
  out.tree = parse_newick(text.substr(0, semi + 1));
  std::string rest = text.substr(semi + 1);
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : rest) {
    if (std::isspace((unsigned char)c)) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) return out;
  if (tokens.size() != 2)
    throw std::invalid_argument("witness line: expected 'NEWICK; dmin dmax'");
  out.bounds = DistanceBounds(parse_rational(tokens[0]), parse_rational(tokens[1]));
  return out;
}

std::string witness_line(const WeightedTree& tree, const DistanceBounds& b) {
  return tree.newick() + " " + rational_string(b.dmin) + " " + rational_string(b.dmax);
}

}  // namespace pcg
