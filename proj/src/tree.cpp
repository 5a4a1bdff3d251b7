#include "pcg/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcg {

DistanceBounds::DistanceBounds(Rational lo, Rational hi)
    : dmin(std::move(lo)), dmax(std::move(hi)) {
  if (dmin < 0 || dmax < dmin)
    throw std::invalid_argument("bounds must satisfy 0 <= dmin <= dmax");
}

int WeightedTree::add_leaf(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty leaf name");
  int id = node_count();
  names_.push_back(name);
  is_leaf_.push_back(1);
  adj_.emplace_back();
  leaf_order_.push_back(id);
  return id;
}

int WeightedTree::add_internal() {
  int id = node_count();
  names_.push_back("@" + std::to_string(id));
  is_leaf_.push_back(0);
  adj_.emplace_back();
  return id;
}

void WeightedTree::add_edge(int a, int b, const Rational& weight) {
  if (a == b || a < 0 || b < 0 || a >= node_count() || b >= node_count())
    throw std::invalid_argument("bad tree edge endpoints");
  if (weight <= 0) throw std::invalid_argument("edge weight must be > 0");
  adj_[a].emplace_back(b, weight);
  adj_[b].emplace_back(a, weight);
}

void WeightedTree::validate() const {
  int n = node_count();
  if (n < 2) throw std::invalid_argument("tree needs at least 2 nodes");
  size_t edge_count = 0;
  for (const auto& nb : adj_) edge_count += nb.size();
  if (edge_count != 2 * (size_t)(n - 1))
    throw std::invalid_argument("tree must have exactly n-1 edges");
  // Connectedness; with n-1 edges this also rules out cycles.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : adj_[u]) {
      (void)w;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n)
    throw std::invalid_argument("tree is not connected");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    if (is_leaf_[i]) {
      if (adj_[i].size() != 1)
        throw std::invalid_argument("leaf '" + names_[i] + "' must have degree 1");
      names.push_back(names_[i]);
    }
  }
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw std::invalid_argument("duplicate leaf name");
}

std::vector<std::string> WeightedTree::leaves() const {
  std::vector<std::string> out;
  for (int id : leaf_order_) out.push_back(names_[id]);
  return out;
}

bool WeightedTree::has_leaf(const std::string& name) const {
  for (int id : leaf_order_)
    if (names_[id] == name) return true;
  return false;
}

int WeightedTree::leaf_index(const std::string& name) const {
  for (int id : leaf_order_)
    if (names_[id] == name) return id;
  throw std::invalid_argument("invalid-leaf: '" + name + "'");
}

std::vector<Rational> WeightedTree::distances_from_leaf(const std::string& u) const {
  int start = leaf_index(u);
  std::vector<Rational> dist(node_count(), Rational(-1));
  std::vector<int> stack{start};
  dist[start] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& [y, w] : adj_[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + w;
        stack.push_back(y);
      }
  }
  return dist;
}

Rational WeightedTree::leaf_distance(const std::string& u, const std::string& v) const {
  if (u == v) {
    leaf_index(u);  // still validate
    return Rational(0);
  }
  return distances_from_leaf(u)[leaf_index(v)];
}

void WeightedTree::scale_weights(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("scale factor must be > 0");
  for (auto& nb : adj_)
    for (auto& [v, w] : nb) {
      (void)v;
      w *= q;
    }
}

std::string WeightedTree::newick() const {
  // Root at the first internal node; a 2-leaf tree has none, so split its
  // single edge evenly between the two children of a synthetic root.
  int root = -1;
  for (int i = 0; i < node_count() && root < 0; ++i)
    if (!is_leaf_[i]) root = i;
  if (root < 0) {
    if (node_count() != 2) throw std::logic_error("leaf-only tree must be a single edge");
    const auto& [other, w] = adj_[0][0];
    Rational half = w / 2;
    return "(" + names_[0] + ":" + rational_string(half) + "," + names_[other] + ":" +
           rational_string(half) + ");";
  }
  auto sub = [&](auto&& self, int u, int parent) -> std::string {
    if (is_leaf_[u]) return names_[u];
    std::string s = "(";
    bool first = true;
    for (const auto& [v, w] : adj_[u]) {
      if (v == parent) continue;
      if (!first) s += ",";
      first = false;
      s += self(self, v, u) + ":" + rational_string(w);
    }
    return s + ")";
  };
  return sub(sub, root, -1) + ";";
}

Graph pcg_graph(const WeightedTree& t, const DistanceBounds& b) {
  auto names = t.leaves();
  if (names.size() < 2) throw std::invalid_argument("invalid-tree: fewer than 2 leaves");
  std::vector<NodePair> edges;
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j) {
      Rational d = t.leaf_distance(names[i], names[j]);
      if (b.dmin <= d && d <= b.dmax) edges.emplace_back(names[i], names[j]);
    }
  return Graph(names, edges);
}

TriColoring pcg_coloring(const WeightedTree& t, const DistanceBounds& b) {
  TriColoring c{pcg_graph(t, b), {}};
  auto names = t.leaves();
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j) {
      Rational d = t.leaf_distance(names[i], names[j]);
      if (d < b.dmin)
        c.assignment[NodePair(names[i], names[j])] = Color::Red;
      else if (d > b.dmax)
        c.assignment[NodePair(names[i], names[j])] = Color::Blue;
    }
  return c;
}

bool check_subtree_lemma(const WeightedTree& t, const std::string& u,
                         const std::string& v, const std::string& w,
                         const std::string& x) {
  if (u == v || u == w || u == x || v == w || v == x || w == x)
    throw std::invalid_argument("check_subtree_lemma: leaves must be distinct");
  Rational duv = t.leaf_distance(u, v);
  if (duv < t.leaf_distance(u, w) || duv < t.leaf_distance(v, w))
    throw std::invalid_argument(
        "precondition-error: (u,v) is not the largest pair of the triple");
  return t.leaf_distance(w, x) <= std::max(t.leaf_distance(u, x), t.leaf_distance(v, x));
}

}  // namespace pcg
