#include "pcg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace pcg {

NodePair::NodePair(std::string a, std::string b) {
  if (a == b) throw std::invalid_argument("node pair endpoints must differ: " + a);
  if (a < b) {
    first = std::move(a);
    second = std::move(b);
  } else {
    first = std::move(b);
    second = std::move(a);
  }
}

std::string NodePair::str() const { return "(" + first + "," + second + ")"; }

Graph::Graph(std::vector<std::string> nodes, const std::vector<NodePair>& edges)
    : names_(std::move(nodes)) {
  for (int i = 0; i < (int)names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty node name");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate node name: " + names_[i]);
  }
  int n = size();
  adj_.assign(n, std::vector<char>(n, 0));
  degree_.assign(n, 0);
  for (const auto& e : edges) {
    int u = index_of(e.first), v = index_of(e.second);
    if (adj_[u][v]) throw std::invalid_argument("duplicate edge " + e.str());
    adj_[u][v] = adj_[v][u] = 1;
    ++degree_[u];
    ++degree_[v];
    ++edge_count_;
  }
}

bool Graph::has_node(const std::string& name) const { return index_.count(name) > 0; }

int Graph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown node: " + name);
  return it->second;
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
  return adjacent(index_of(u), index_of(v));
}

std::vector<NodePair> Graph::edges() const {
  std::vector<NodePair> out;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (adj_[u][v]) out.emplace_back(names_[u], names_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodePair> Graph::non_edges() const {
  std::vector<NodePair> out;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (!adj_[u][v]) out.emplace_back(names_[u], names_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (size() != o.size() || edge_count_ != o.edge_count_) return false;
  for (const auto& name : names_)
    if (!o.has_node(name)) return false;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (adj_[u][v] != (char)o.adjacent(o.index_of(names_[u]), o.index_of(names_[v])))
        return false;
  return true;
}

Graph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("build_cycle: n must be >= 3");
  std::vector<std::string> nodes;
  std::vector<NodePair> edges;
  for (int i = 1; i <= n; ++i) nodes.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(nodes[i], nodes[(i + 1) % n]);
  return Graph(nodes, edges);
}

Graph build_wheel(int n) {
  if (n < 3) throw std::invalid_argument("build_wheel: n must be >= 3");
  std::vector<std::string> nodes{"c"};
  std::vector<NodePair> edges;
  for (int i = 1; i <= n; ++i) nodes.push_back("v" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(nodes[i], nodes[i % n + 1]);
    edges.emplace_back(std::string("c"), nodes[i]);
  }
  return Graph(nodes, edges);
}

Graph build_cycle_strong_p2(int n) {
  if (n < 3) throw std::invalid_argument("build_cycle_strong_p2: n must be >= 3");
  std::vector<std::string> u, v, nodes;
  for (int i = 1; i <= n; ++i) u.push_back("u" + std::to_string(i));
  for (int i = 1; i <= n; ++i) v.push_back("v" + std::to_string(i));
  nodes = u;
  nodes.insert(nodes.end(), v.begin(), v.end());
  std::vector<NodePair> edges;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    edges.emplace_back(u[i], v[i]);  // rung
    edges.emplace_back(u[i], u[j]);  // rims
    edges.emplace_back(v[i], v[j]);
    edges.emplace_back(u[i], v[j]);  // diagonals
    edges.emplace_back(v[i], u[j]);
  }
  return Graph(nodes, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep) {
  if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty node set");
  std::vector<NodePair> edges;
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) edges.emplace_back(keep[i], keep[j]);
  return Graph(keep, edges);
}

Graph remove_node(const Graph& g, const std::string& x) {
  int idx = g.index_of(x);
  std::vector<std::string> keep;
  for (int i = 0; i < g.size(); ++i)
    if (i != idx) keep.push_back(g.name_of(i));
  return induced_subgraph(g, keep);
}

std::vector<NodePair> two_non_edges(const Graph& g) {
  std::vector<NodePair> out;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) continue;
      bool common = false;
      for (int w = 0; w < g.size() && !common; ++w)
        common = w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w);
      if (common) out.emplace_back(g.name_of(u), g.name_of(v));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> induced_occurrences_idx(const Graph& host,
                                                      const Graph& pattern) {
  std::vector<std::vector<int>> out;
  int hp = pattern.size(), hn = host.size();
  if (hp > hn) return out;
  std::vector<int> map(hp, -1);
  std::vector<char> used(hn, 0);
  // Assign pattern nodes in list order; candidates in host list order.
  auto rec = [&](auto&& self, int p) -> void {
    if (p == hp) {
      out.push_back(map);
      return;
    }
    for (int g = 0; g < hn; ++g) {
      if (used[g]) continue;
      bool ok = true;
      for (int q = 0; q < p && ok; ++q)
        ok = pattern.adjacent(q, p) == host.adjacent(map[q], g);
      if (!ok) continue;
      map[p] = g;
      used[g] = 1;
      self(self, p + 1);
      used[g] = 0;
      map[p] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::map<std::string, std::string>> induced_occurrences(
    const Graph& host, const Graph& pattern) {
  std::vector<std::map<std::string, std::string>> out;
  for (const auto& m : induced_occurrences_idx(host, pattern)) {
    std::map<std::string, std::string> named;
    for (int p = 0; p < pattern.size(); ++p) named[pattern.name_of(p)] = host.name_of(m[p]);
    out.push_back(std::move(named));
  }
  return out;
}

namespace {

// Sorted multiset of neighbour degrees, the second-level refinement signature.
std::vector<int> neighbour_degrees(const Graph& g, int u) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (g.adjacent(u, v)) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  int n = g.size();
  std::vector<std::vector<int>> gsig(n), hsig(n);
  std::vector<int> gdeg(n), hdeg(n);
  for (int i = 0; i < n; ++i) {
    gdeg[i] = g.degree(i);
    hdeg[i] = h.degree(i);
    gsig[i] = neighbour_degrees(g, i);
    hsig[i] = neighbour_degrees(h, i);
  }
  {
    auto a = gdeg, b = hdeg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // Map g nodes in decreasing-degree order (more constrained first).
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (gdeg[a] != gdeg[b]) return gdeg[a] > gdeg[b];
    return a < b;
  });
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    int u = order[k];
    for (int v = 0; v < n; ++v) {
      if (used[v] || gdeg[u] != hdeg[v] || gsig[u] != hsig[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        ok = g.adjacent(order[j], u) == h.adjacent(map[order[j]], v);
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (self(self, k + 1)) return true;
      used[v] = 0;
      map[u] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  return induced_occurrences_idx(g, g);
}

std::vector<std::vector<std::string>> induced_four_cycles(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int idx[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(idx[i], idx[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges != 4 || deg[0] != 2 || deg[1] != 2 || deg[2] != 2 || deg[3] != 2)
            continue;
          // Walk the cycle from the smallest index through its smaller neighbour.
          int nb[2], found = 0;
          for (int j = 1; j < 4; ++j)
            if (g.adjacent(idx[0], idx[j])) nb[found++] = j;
          int second = std::min(nb[0], nb[1]);
          int last = std::max(nb[0], nb[1]);
          int third = 6 - second - last;  // remaining position of {1,2,3}
          out.push_back({g.name_of(idx[0]), g.name_of(idx[second]),
                         g.name_of(idx[third]), g.name_of(idx[last])});
        }
  return out;
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("graph JSON: top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "nodes" && it.key() != "edges")
      throw std::invalid_argument("graph JSON: unknown key '" + it.key() + "'");
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw std::invalid_argument("graph JSON: missing 'nodes' array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph JSON: missing 'edges' array");
  std::vector<std::string> nodes;
  for (const auto& v : j["nodes"]) {
    if (!v.is_string()) throw std::invalid_argument("graph JSON: node names must be strings");
    nodes.push_back(v.get<std::string>());
  }
  std::vector<NodePair> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw std::invalid_argument("graph JSON: each edge must be a 2-element string array");
    std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
    if (a == b) throw std::invalid_argument("graph JSON: self edge at '" + a + "'");
    edges.emplace_back(a, b);
  }
  return Graph(nodes, edges);  // validates endpoints, duplicates
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = g.nodes();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

}  // namespace pcg
