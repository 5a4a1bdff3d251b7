#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "pcg/realizability.hpp"
#include "pcg/simplex.hpp"

namespace pcg {

namespace {

std::vector<Topology> enumerate_internal(int k) {
  Topology base;
  base.leaf_count = 2;
  base.edges = {{0, 1}};
  if (k == 2) return {base};
  std::vector<Topology> out;
  // Insert leaf j into every edge; the subdividing internal node gets id
  // k + j - 2 so that leaves stay 0..k-1 and internals k..2k-3.
  std::function<void(const Topology&, int)> grow = [&](const Topology& t, int j) {
    if (j == k) {
      out.push_back(t);
      return;
    }
    int mid = k + j - 2;
    for (size_t e = 0; e < t.edges.size(); ++e) {
      Topology s = t;
      auto [a, b] = s.edges[e];
      s.edges[e] = {a, mid};
      s.edges.push_back({mid, b});
      s.edges.push_back({mid, j});
      s.leaf_count = j + 1;
      grow(s, j + 1);
    }
  };
  grow(base, 2);
  return out;
}

// Per-topology data reused across many feasibility calls.
struct Prepared {
  int k = 0;
  int nedges = 0;
  // path[i][j]: edge indices on the leaf i -> leaf j path (i < j).
  std::vector<std::vector<std::vector<int>>> path;
};

Prepared prepare(const Topology& t) {
  Prepared p;
  p.k = t.leaf_count;
  p.nedges = (int)t.edges.size();
  int nodes = 0;
  for (auto [a, b] : t.edges) nodes = std::max({nodes, a + 1, b + 1});
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // (nbr, edge idx)
  for (int e = 0; e < p.nedges; ++e) {
    auto [a, b] = t.edges[e];
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  p.path.assign(p.k, std::vector<std::vector<int>>(p.k));
  std::vector<int> parent_edge(nodes), parent(nodes), order;
  for (int i = 0; i < p.k; ++i) {
    std::fill(parent.begin(), parent.end(), -1);
    order.assign(1, i);
    parent[i] = i;
    for (size_t q = 0; q < order.size(); ++q) {
      int v = order[q];
      for (auto [w, e] : adj[v])
        if (parent[w] < 0) {
          parent[w] = v;
          parent_edge[w] = e;
          order.push_back(w);
        }
    }
    for (int j = i + 1; j < p.k; ++j) {
      std::vector<int>& edges = p.path[i][j];
      for (int v = j; v != i; v = parent[v]) edges.push_back(parent_edge[v]);
    }
  }
  return p;
}

// Feasibility system over variables [w_0..w_{E-1}, dmin, dmax], all >= 0:
// red pairs need path <= dmin - 1 (and dmin >= 1), blue pairs path >= dmax + 1,
// black pairs dmin <= path <= dmax; dmin is pinned to 0 when no pair is red.
std::optional<std::vector<Rational>> solve_classes(
    const Prepared& pt, const std::vector<std::vector<PairClass>>& classes) {
  int E = pt.nedges, vmin = E, vmax = E + 1, n = E + 2;
  bool red_present = false;
  for (int i = 0; i < pt.k; ++i)
    for (int j = i + 1; j < pt.k; ++j)
      if (classes[i][j] == PairClass::Red) red_present = true;

  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  auto row = [&]() -> std::vector<Rational>& {
    A.emplace_back(n, 0);
    b.emplace_back(0);
    return A.back();
  };
  if (red_present) {
    row()[vmin] = -1;  // dmin >= 1
    b.back() = -1;
  } else {
    row()[vmin] = 1;  // dmin <= 0, i.e. dmin = 0
  }
  {
    auto& r = row();  // dmin <= dmax
    r[vmin] = 1;
    r[vmax] = -1;
  }
  for (int i = 0; i < pt.k; ++i)
    for (int j = i + 1; j < pt.k; ++j) {
      PairClass c = classes[i][j];
      if (c == PairClass::Free) continue;
      if (c == PairClass::NonEdge)
        throw std::logic_error("realizability: open pair reached the solver uncompleted");
      const std::vector<int>& path = pt.path[i][j];
      if (c == PairClass::Black) {
        auto& lo = row();  // dmin - path <= 0
        lo[vmin] = 1;
        for (int e : path) lo[e] = -1;
        auto& hi = row();  // path - dmax <= 0
        hi[vmax] = -1;
        for (int e : path) hi[e] = 1;
      } else if (c == PairClass::Red) {
        auto& r = row();  // path - dmin <= -1
        r[vmin] = -1;
        for (int e : path) r[e] = 1;
        b.back() = -1;
      } else {
        auto& r = row();  // dmax - path <= -1
        r[vmax] = 1;
        for (int e : path) r[e] = -1;
        b.back() = -1;
      }
    }
  return lp_feasible(A, b);
}

std::optional<TreeWitness> witness_from_completed(
    const Topology& t, const Prepared& pt, const std::vector<std::string>& names,
    const std::vector<std::vector<PairClass>>& classes) {
  auto sol = solve_classes(pt, classes);
  if (!sol) return std::nullopt;
  int E = pt.nedges, k = pt.k;
  bool red_present = false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (classes[i][j] == PairClass::Red) red_present = true;

  // Shift the bounds into the slack margins, then lift zero weights by an
  // epsilon small enough that no path moves by 1/4 in total.
  Rational dmin = red_present ? (*sol)[E] - Rational(1, 4) : Rational(0);
  Rational dmax = (*sol)[E + 1] + Rational(1, 4);
  Rational eps(1, 8 * (2 * k - 3));
  bool zero_leaf = false;
  std::vector<Rational> w(sol->begin(), sol->begin() + E);
  for (int e = 0; e < E; ++e)
    if (w[e] == 0) {
      if (t.edges[e].first < k || t.edges[e].second < k) zero_leaf = true;
      w[e] = eps;
    }

  BigInt scale = 1;
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  for (const Rational& q : w) scale = lcm(scale, denominator(q));
  scale = lcm(scale, denominator(dmin));
  scale = lcm(scale, denominator(dmax));
  Rational s(scale);
  for (Rational& q : w) q *= s;
  dmin *= s;
  dmax *= s;

  WeightedTree tree;
  std::vector<int> id(2 * k, -1);
  for (int i = 0; i < k; ++i) id[i] = tree.add_leaf(names[i]);
  for (int e = 0; e < E; ++e)
    for (int v : {t.edges[e].first, t.edges[e].second})
      if (id[v] < 0) id[v] = tree.add_internal();
  for (int e = 0; e < E; ++e)
    tree.add_edge(id[t.edges[e].first], id[t.edges[e].second], w[e]);
  tree.validate();

  // Mandatory re-verification: the witness must reproduce every constrained
  // pair exactly; anything else is an internal error, not an input error.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (classes[i][j] == PairClass::Free) continue;
      Rational d = tree.leaf_distance(names[i], names[j]);
      PairClass got = d < dmin   ? PairClass::Red
                      : d > dmax ? PairClass::Blue
                                 : PairClass::Black;
      if (got != classes[i][j])
        throw std::logic_error("realizability: witness failed re-verification");
    }
  return TreeWitness{std::move(tree), DistanceBounds(dmin, dmax), zero_leaf};
}

// A NonEdge pair must land outside the bounds, but the linear system can only
// assert one side at a time, so try every red/blue completion. The first open
// pair is the most significant bit with Red = 0, so completions run in
// lexicographic order and the first feasible one (hence the witness) is
// deterministic.
std::optional<TreeWitness> witness_from(const Topology& t, const Prepared& pt,
                                        const std::vector<std::string>& names,
                                        std::vector<std::vector<PairClass>> classes) {
  std::vector<std::pair<int, int>> open;
  for (int i = 0; i < pt.k; ++i)
    for (int j = i + 1; j < pt.k; ++j)
      if (classes[i][j] == PairClass::NonEdge) open.push_back({i, j});
  if (open.size() > 16)
    throw std::invalid_argument("realizable: more than 16 open non-edge pairs");
  for (uint32_t mask = 0; mask < (1u << open.size()); ++mask) {
    for (size_t b = 0; b < open.size(); ++b) {
      bool blue = (mask >> (open.size() - 1 - b)) & 1u;
      classes[open[b].first][open[b].second] = blue ? PairClass::Blue : PairClass::Red;
    }
    if (auto w = witness_from_completed(t, pt, names, classes)) return w;
  }
  return std::nullopt;
}

std::vector<std::vector<PairClass>> classes_from_coloring(const TriColoring& c) {
  if (!c.complete())
    throw std::invalid_argument("incomplete-coloring: realizability needs every non-edge colored");
  int k = c.host.size();
  std::vector<std::vector<PairClass>> classes(k, std::vector<PairClass>(k, PairClass::Free));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (c.host.adjacent(i, j)) {
        classes[i][j] = PairClass::Black;
        continue;
      }
      Color col = c.assignment.at(NodePair(c.host.name_of(i), c.host.name_of(j)));
      classes[i][j] = col == Color::Red ? PairClass::Red : PairClass::Blue;
    }
  return classes;
}

// Base edges are Black; listed pairs take their color; every other base
// non-edge must stay a non-edge in any realization, so it becomes NonEdge
// (open side), never Free.
std::vector<std::vector<PairClass>> classes_from_pattern(const ForbiddenPattern& p) {
  int k = p.base.size();
  std::vector<std::vector<PairClass>> classes(k, std::vector<PairClass>(k, PairClass::Free));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      classes[i][j] = p.base.adjacent(i, j) ? PairClass::Black : PairClass::NonEdge;
  auto put = [&](const NodePair& e, PairClass cls) {
    int i = p.base.index_of(e.first), j = p.base.index_of(e.second);
    if (i > j) std::swap(i, j);
    if (classes[i][j] != PairClass::NonEdge)
      throw std::invalid_argument("pattern lists pair " + e.str() + " twice or as an edge");
    classes[i][j] = cls;
  };
  for (const NodePair& e : p.red) put(e, PairClass::Red);
  for (const NodePair& e : p.blue) put(e, PairClass::Blue);
  return classes;
}

RealizabilityResult realize_classes(const std::vector<std::string>& names,
                                    const std::vector<std::vector<PairClass>>& classes,
                                    int workers) {
  int k = (int)names.size();
  if (k < 2 || k > 8)
    throw std::invalid_argument("realizable: host must have between 2 and 8 nodes");
  std::vector<Topology> topos = enumerate_internal(k);
  int count = (int)topos.size();
  RealizabilityResult out;
  out.topology_count = count;

  workers = std::max(1, std::min(workers, count));
  std::vector<std::optional<TreeWitness>> found(count);
  std::atomic<int> best{count};
  auto run = [&](int start) {
    for (int i = start; i < count; i += workers) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      auto w = witness_from(topos[i], prepare(topos[i]), names, classes);
      if (w) {
        found[i] = std::move(w);
        int cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& t : pool) t.join();
  }

  int b = best.load();
  if (b < count) {
    out.witness = std::move(found[b]);
    for (int i = 0; i < b; ++i) out.infeasible_topologies.push_back(i);
  } else {
    for (int i = 0; i < count; ++i) out.infeasible_topologies.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<Topology> enumerate_topologies(int leaf_count) {
  if (leaf_count < 3 || leaf_count > 8)
    throw std::invalid_argument("enumerate_topologies: leaf count must be in [3,8]");
  return enumerate_internal(leaf_count);
}

std::optional<TreeWitness> feasible_on_topology(const Topology& t, const TriColoring& c) {
  if (t.leaf_count != c.host.size())
    throw std::invalid_argument("feasible_on_topology: leaf count != host size");
  return witness_from(t, prepare(t), c.host.nodes(), classes_from_coloring(c));
}

std::optional<TreeWitness> feasible_on_topology(
    const Topology& t, const std::vector<std::string>& names,
    const std::vector<std::vector<PairClass>>& classes) {
  if (t.leaf_count != (int)names.size())
    throw std::invalid_argument("feasible_on_topology: leaf count != name count");
  return witness_from(t, prepare(t), names, classes);
}

RealizabilityResult realizable(const TriColoring& c, int workers) {
  return realize_classes(c.host.nodes(), classes_from_coloring(c), workers);
}

RealizabilityResult realize_pattern(const ForbiddenPattern& p, int workers) {
  return realize_classes(p.base.nodes(), classes_from_pattern(p), workers);
}

uint64_t catalog_stamp(std::vector<ForbiddenPattern> patterns) {
  std::sort(patterns.begin(), patterns.end(),
            [](const ForbiddenPattern& a, const ForbiddenPattern& b) { return a.id < b.id; });
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  };
  for (const ForbiddenPattern& p : patterns) {
    mix("pattern " + p.id);
    for (const std::string& n : p.base.nodes()) mix("node " + n);
    for (const NodePair& e : p.base.edges()) mix("edge " + e.str());
    auto sorted = [](std::vector<NodePair> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    for (const NodePair& e : sorted(p.red)) mix("red " + e.str());
    for (const NodePair& e : sorted(p.blue)) mix("blue " + e.str());
  }
  return h;
}

CatalogReport verify_catalog_patterns(const std::vector<ForbiddenPattern>& patterns,
                                      int workers) {
  CatalogReport report;
  report.all_ok = true;
  std::vector<ForbiddenPattern> certified_patterns;
  for (const ForbiddenPattern& p : patterns) {
    RealizabilityResult r = realize_pattern(p, workers);
    PatternReport pr;
    pr.id = p.id;
    pr.topology_count = r.topology_count;
    pr.infeasible_all = !r.realizable();
    pr.witness = std::move(r.witness);
    if (pr.infeasible_all) {
      report.certified.push_back(p.id);
      certified_patterns.push_back(p);
    } else {
      report.all_ok = false;
    }
    report.patterns.push_back(std::move(pr));
  }
  report.stamp = catalog_stamp(certified_patterns);
  return report;
}

CatalogReport verify_catalog(bool include_weak, int workers) {
  std::vector<ForbiddenPattern> patterns = catalog();
  if (include_weak) patterns.push_back(weak_2k2b());
  return verify_catalog_patterns(patterns, workers);
}

RecognitionResult recognize_pcg_small(const Graph& g, int workers) {
  int k = g.size();
  if (k < 2 || k > 7)
    throw std::invalid_argument("recognize_pcg_small: host must have between 2 and 7 nodes");
  int m = g.non_edge_count();
  if (m > 16)
    throw std::invalid_argument("recognize_pcg_small: at most 16 non-edges supported");

  std::vector<NodePair> vars = g.non_edges();
  std::vector<std::pair<int, int>> var_idx;
  for (const NodePair& e : vars)
    var_idx.push_back({g.index_of(e.first), g.index_of(e.second)});

  std::vector<Topology> topos = enumerate_internal(k);
  std::vector<Prepared> prep;
  prep.reserve(topos.size());
  for (const Topology& t : topos) prep.push_back(prepare(t));

  std::vector<std::vector<PairClass>> base(k, std::vector<PairClass>(k, PairClass::Free));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(i, j)) base[i][j] = PairClass::Black;

  uint64_t total = uint64_t(1) << m;
  std::vector<std::optional<TreeWitness>> found(workers > 1 ? (size_t)total : 1);
  std::atomic<uint64_t> best{total};
  auto solve_coloring = [&](uint64_t bits) -> std::optional<TreeWitness> {
    std::vector<std::vector<PairClass>> classes = base;
    for (int v = 0; v < m; ++v) {
      auto [i, j] = var_idx[v];
      bool blue = (bits >> (m - 1 - v)) & 1;  // variable 0 = most significant
      classes[std::min(i, j)][std::max(i, j)] = blue ? PairClass::Blue : PairClass::Red;
    }
    for (size_t t = 0; t < topos.size(); ++t)
      if (auto w = witness_from(topos[t], prep[t], g.nodes(), classes)) return w;
    return std::nullopt;
  };

  RecognitionResult out;
  if (workers <= 1) {
    for (uint64_t bits = 0; bits < total; ++bits) {
      if (auto w = solve_coloring(bits)) {
        out.is_pcg = true;
        out.witness = std::move(w);
        out.colorings_tried = bits;
        return out;
      }
    }
    out.colorings_tried = total;
    return out;
  }

  int nthreads = (int)std::min<uint64_t>(workers, total);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t]() {
      for (uint64_t bits = t; bits < total; bits += nthreads) {
        if (bits > best.load(std::memory_order_relaxed)) continue;
        if (auto w = solve_coloring(bits)) {
          found[bits] = std::move(w);
          uint64_t cur = best.load();
          while (bits < cur && !best.compare_exchange_weak(cur, bits)) {
          }
        }
      }
    });
  for (auto& th : pool) th.join();
  uint64_t b = best.load();
  if (b < total) {
    out.is_pcg = true;
    out.witness = std::move(found[b]);
    out.colorings_tried = b;
  } else {
    out.colorings_tried = total;
  }
  return out;
}

}  // namespace pcg
