#include "pcg/prover.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace pcg {

namespace {

using Clock = std::chrono::steady_clock;

bool is_induced_cycle_of(const Graph& g, const std::vector<std::string>& cyc) {
  int len = (int)cyc.size();
  if (len < 4) return false;
  std::set<std::string> distinct(cyc.begin(), cyc.end());
  if ((int)distinct.size() != len) return false;
  for (const auto& name : cyc)
    if (!g.has_node(name)) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      bool want = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(cyc[i], cyc[j]) != want) return false;
    }
  return true;
}

std::unique_ptr<CertNode> make_leaf_node(const Clause& c) {
  auto n = std::make_unique<CertNode>();
  n->kind = CertNode::Kind::Leaf;
  n->clause = c;
  return n;
}

// Backtracking search over non-edge colorings. One engine per thread; the
// compiled problem is shared read-only.
struct Engine {
  const ProverProblem& P;
  int nvars = 0;
  std::map<NodePair, int> vidx;

  struct CC {
    std::vector<std::pair<int, Color>> lits;
    int sat = 0;     // literals satisfied by the current trail
    int nfalse = 0;  // literals falsified by the current trail
  };
  std::vector<CC> cls;
  std::vector<std::vector<int>> occ[2];  // occ[color][var] -> clause indices
  std::vector<int> order;                // branch order: most occurrences first
  std::vector<int8_t> val;               // -1 unassigned, 0 Red, 1 Blue
  std::vector<int> trail;
  std::vector<Literal> decisions;  // decision literals only, root to here

  struct Pend {
    int var;
    Color color;
    int reason;  // clause that forced it
  };
  std::vector<Pend> pending;

  Clock::time_point deadline{};
  bool has_deadline = false;
  int depth_cut = -1;  // stop at this many decisions; -1 = never

  std::vector<FrontierHole> holes;
  std::optional<std::vector<int8_t>> found;  // surviving assignment
  ProverStats stats;

  explicit Engine(const ProverProblem& p) : P(p) {
    nvars = (int)P.variables.size();
    for (int i = 0; i < nvars; ++i) vidx.emplace(P.variables[i], i);
    occ[0].resize(nvars);
    occ[1].resize(nvars);
    cls.reserve(P.clauses.size());
    for (const Clause& c : P.clauses) {
      CC cc;
      for (const Literal& l : c.literals) {
        auto it = vidx.find(l.pair);
        if (it == vidx.end())
          throw std::logic_error("prover: clause literal " + l.pair.str() +
                                 " is not a non-edge of the host");
        cc.lits.emplace_back(it->second, l.color);
        occ[l.color == Color::Red ? 0 : 1][it->second].push_back((int)cls.size());
      }
      cls.push_back(std::move(cc));
    }
    val.assign(nvars, -1);
    order.resize(nvars);
    for (int i = 0; i < nvars; ++i) order[i] = i;
    std::vector<size_t> cnt(nvars);
    for (int v = 0; v < nvars; ++v) cnt[v] = occ[0][v].size() + occ[1][v].size();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cnt[a] > cnt[b]; });
  }

  bool time_up() const { return has_deadline && Clock::now() >= deadline; }

  // Assign var := color, update counters, queue any clauses that became unit.
  // Returns the first clause made entirely false, or -1.
  int apply_one(int var, Color color) {
    int cv = color == Color::Red ? 0 : 1;
    val[var] = (int8_t)cv;
    trail.push_back(var);
    for (int ci : occ[cv][var]) cls[ci].sat++;
    int conflict = -1;
    for (int ci : occ[1 - cv][var]) {
      CC& c = cls[ci];
      c.nfalse++;
      if (c.sat > 0) continue;
      int len = (int)c.lits.size();
      if (c.nfalse == len) {
        if (conflict < 0) conflict = ci;
      } else if (c.nfalse == len - 1 && conflict < 0) {
        for (const auto& [v2, col2] : c.lits)
          if (val[v2] < 0) {
            pending.push_back({v2, col2, ci});
            break;
          }
      }
    }
    return conflict;
  }

  // Drain the unit queue to fixpoint, recording applied steps in order.
  // Returns the conflicting clause index, or -1 when a fixpoint is reached.
  int propagate(std::vector<Pend>& chain) {
    size_t qi = 0;
    while (qi < pending.size()) {
      Pend p = pending[qi++];
      if (val[p.var] >= 0) continue;  // an earlier unit already set it
      int cf = apply_one(p.var, p.color);
      chain.push_back(p);
      stats.propagations++;
      if (cf >= 0) {
        pending.clear();
        return cf;
      }
    }
    pending.clear();
    return -1;
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      int var = trail.back();
      trail.pop_back();
      for (int ci : occ[val[var]][var]) cls[ci].sat--;
      for (int ci : occ[1 - val[var]][var]) cls[ci].nfalse--;
      val[var] = -1;
    }
  }

  struct Res {
    std::unique_ptr<CertNode> node;
    bool cut = false;       // subtree contains holes
    bool survivor = false;  // search aborted on a surviving assignment
  };

  Res hole_here() {
    auto h = std::make_unique<CertNode>();
    h->kind = CertNode::Kind::Hole;
    h->hole = (int)holes.size();
    holes.push_back({h->hole, decisions});
    Res r;
    r.node = std::move(h);
    r.cut = true;
    return r;
  }

  // Each forced step becomes a branch whose refuted side cites the forcing
  // clause; the refuted side is valid because a clause that was unit stays
  // entirely false once its last literal is flipped.
  void wrap_chain(std::unique_ptr<CertNode>& node, const std::vector<Pend>& chain) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      auto leaf = make_leaf_node(P.clauses[it->reason]);
      stats.leaves++;
      auto b = std::make_unique<CertNode>();
      b->kind = CertNode::Kind::Branch;
      b->var = P.variables[it->var];
      if (it->color == Color::Red) {
        b->red = std::move(node);
        b->blue = std::move(leaf);
      } else {
        b->blue = std::move(node);
        b->red = std::move(leaf);
      }
      node = std::move(b);
    }
  }

  Res branch_child(int var, Color color) {
    size_t mark = trail.size();
    decisions.push_back({P.variables[var], color});
    Res r;
    int cf = apply_one(var, color);
    if (cf >= 0) {
      pending.clear();
      r.node = make_leaf_node(P.clauses[cf]);
      stats.leaves++;
    } else {
      r = solve();
    }
    undo_to(mark);
    pending.clear();
    decisions.pop_back();
    return r;
  }

  Res solve() {
    // The stop check precedes propagation, so a hole's state is exactly
    // "decisions applied, units of the last one still queued"; replaying the
    // decisions with a propagation fixpoint between them reproduces it.
    if ((depth_cut >= 0 && (int)decisions.size() >= depth_cut) || time_up())
      return hole_here();
    size_t mark = trail.size();
    std::vector<Pend> chain;
    int conflict = propagate(chain);
    Res out;
    if (conflict >= 0) {
      out.node = make_leaf_node(P.clauses[conflict]);
      stats.leaves++;
    } else {
      int bv = -1;
      for (int v : order)
        if (val[v] < 0) {
          bv = v;
          break;
        }
      if (bv < 0) {
        found = val;
        undo_to(mark);
        out.survivor = true;
        return out;
      }
      stats.branches++;
      if (decisions.size() + 1 > stats.max_depth) stats.max_depth = decisions.size() + 1;
      Res red = branch_child(bv, Color::Red);
      if (red.survivor) {
        undo_to(mark);
        return red;
      }
      Res blue = branch_child(bv, Color::Blue);
      if (blue.survivor) {
        undo_to(mark);
        return blue;
      }
      auto b = std::make_unique<CertNode>();
      b->kind = CertNode::Kind::Branch;
      b->var = P.variables[bv];
      b->red = std::move(red.node);
      b->blue = std::move(blue.node);
      out.node = std::move(b);
      out.cut = red.cut || blue.cut;
    }
    wrap_chain(out.node, chain);
    undo_to(mark);
    return out;
  }

  std::vector<int> orbit_of(int var, const std::vector<std::vector<int>>& auts) const {
    const NodePair& p = P.variables[var];
    int a = P.host.index_of(p.first);
    int b = P.host.index_of(p.second);
    std::set<int> os;
    for (const auto& sigma : auts) {
      NodePair q(P.host.name_of(sigma[a]), P.host.name_of(sigma[b]));
      os.insert(vidx.at(q));
    }
    return std::vector<int>(os.begin(), os.end());
  }

  // The orbit split is sound only if every clause maps to a clause under
  // every host automorphism, so that the Blue-orbit child really covers all
  // assignments symmetric to "some orbit member Red".
  void check_closure(const std::vector<std::vector<int>>& auts) const {
    std::set<std::vector<Literal>> db;
    for (const Clause& c : P.clauses) db.insert(c.literals);
    for (const auto& sigma : auts)
      for (const Clause& c : P.clauses) {
        std::vector<Literal> mapped;
        mapped.reserve(c.literals.size());
        for (const Literal& l : c.literals) {
          int a = P.host.index_of(l.pair.first);
          int b = P.host.index_of(l.pair.second);
          mapped.push_back(
              {NodePair(P.host.name_of(sigma[a]), P.host.name_of(sigma[b])), l.color});
        }
        std::sort(mapped.begin(), mapped.end());
        if (!db.count(mapped))
          throw std::invalid_argument(
              "symmetry: clause set is not closed under host automorphisms (rule \"" +
              c.rule + "\" breaks closure)");
      }
  }

  Res run_root(bool symmetry) {
    if (!symmetry || nvars == 0) return solve();
    // A unit clause could force an assignment at the empty trail, which the
    // orbit argument does not cover; no generated clause is that short, but
    // fall back rather than assume.
    for (const CC& c : cls)
      if (c.lits.size() < 2) return solve();
    auto auts = automorphisms(P.host);
    if (auts.size() <= 1) return solve();
    int bv = order[0];
    std::vector<int> orbit = orbit_of(bv, auts);
    if (orbit.size() < 2) return solve();
    check_closure(auts);

    Res red = branch_child(bv, Color::Red);
    if (red.survivor) return red;

    // Blue child: every orbit member decided Blue. Units are propagated
    // between the decisions and wrapped around the child, which keeps the
    // state at any hole identical to what decision replay reconstructs.
    size_t mark = trail.size();
    size_t dmark = decisions.size();
    std::vector<Pend> bchain;
    Res blue;
    bool closed_early = false;
    for (size_t i = 0; i < orbit.size(); ++i) {
      int v = orbit[i];
      decisions.push_back({P.variables[v], Color::Blue});
      int cf = apply_one(v, Color::Blue);
      if (cf < 0 && i + 1 < orbit.size()) cf = propagate(bchain);
      if (cf >= 0) {
        pending.clear();
        blue.node = make_leaf_node(P.clauses[cf]);
        stats.leaves++;
        closed_early = true;
        break;
      }
    }
    if (!closed_early) blue = solve();
    if (!blue.survivor) wrap_chain(blue.node, bchain);
    undo_to(mark);
    pending.clear();
    decisions.resize(dmark);
    if (blue.survivor) return blue;

    auto s = std::make_unique<CertNode>();
    s->kind = CertNode::Kind::Symmetry;
    s->var = P.variables[bv];
    for (int v : orbit) s->orbit.push_back(P.variables[v]);
    s->red = std::move(red.node);
    s->blue = std::move(blue.node);
    Res out;
    out.node = std::move(s);
    out.cut = red.cut || blue.cut;
    return out;
  }
};

struct TaskResult {
  std::unique_ptr<CertNode> node;
  bool survivor = false;
  std::optional<std::vector<int8_t>> found;
  std::vector<FrontierHole> holes;
  ProverStats stats;
};

// Reconstruct the state a hole was created in, then search the subtree.
TaskResult solve_task(const ProverProblem& P, const std::vector<Literal>& decisions,
                      Clock::time_point deadline, bool has_deadline) {
  Engine e(P);
  e.deadline = deadline;
  e.has_deadline = has_deadline;
  for (size_t i = 0; i < decisions.size(); ++i) {
    auto it = e.vidx.find(decisions[i].pair);
    if (it == e.vidx.end())
      throw std::invalid_argument("frontier: decision on unknown variable " +
                                  decisions[i].pair.str());
    if (e.val[it->second] >= 0)
      throw std::invalid_argument("frontier: decision variable " +
                                  decisions[i].pair.str() + " already assigned");
    int cf = e.apply_one(it->second, decisions[i].color);
    e.decisions.push_back(decisions[i]);
    if (cf < 0 && i + 1 < decisions.size()) {
      std::vector<Engine::Pend> chain;
      cf = e.propagate(chain);
    }
    if (cf >= 0)
      throw std::invalid_argument(
          "frontier: decisions replay to a conflict; frontier does not match problem");
  }
  e.stats = ProverStats{};  // replay repeats ancestors' work; don't count it
  Engine::Res r = e.solve();
  TaskResult t;
  t.survivor = r.survivor;
  if (r.survivor)
    t.found = std::move(e.found);
  else
    t.node = std::move(r.node);
  t.holes = std::move(e.holes);
  t.stats = e.stats;
  return t;
}

std::vector<TaskResult> run_tasks(const ProverProblem& P,
                                  const std::vector<FrontierHole>& tasks, int workers,
                                  Clock::time_point deadline, bool has_deadline) {
  std::vector<TaskResult> results(tasks.size());
  if (tasks.empty()) return results;
  std::atomic<size_t> next{0};
  std::mutex err_m;
  std::exception_ptr err;
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = solve_task(P, tasks[i].decisions, deadline, has_deadline);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_m);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  int nw = std::min((size_t)std::max(1, workers), tasks.size());
  if (nw <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  return results;
}

// Smallest d with 2^d >= 4 * workers: enough holes to keep the pool busy.
int depth_cut_for(int workers) {
  int d = 0;
  while ((1 << d) < 4 * workers) ++d;
  return d;
}

void gate(const ProverProblem& P) {
  if (!P.uncertified.empty() && !P.rules.allow_uncertified) {
    std::string msg = "prove: rule set requests uncertified patterns:";
    for (const auto& id : P.uncertified) msg += " " + id;
    msg += " (run the catalog certification first, or allow uncertified patterns explicitly)";
    throw std::invalid_argument(msg);
  }
}

TriColoring coloring_from(const ProverProblem& P, const std::vector<int8_t>& val) {
  std::vector<NodePair> red, blue;
  for (size_t i = 0; i < val.size(); ++i)
    (val[i] == 0 ? red : blue).push_back(P.variables[i]);
  return make_coloring(P.host, red, blue);
}

ProofCertificate make_cert(const ProverProblem& P, bool symmetry,
                           std::unique_ptr<CertNode> root) {
  ProofCertificate c;
  c.host = P.host;
  c.pattern_ids = P.rules.pattern_ids;
  c.rim_cycles = P.rules.rim_cycles;
  c.four_cycles = P.rules.four_cycles;
  c.extra_cycles = P.rules.extra_cycles;
  c.extra_paths = P.rules.extra_paths;
  c.symmetry = symmetry;
  c.allow_uncertified = P.rules.allow_uncertified;
  c.root = std::move(root);
  return c;
}

void offset_holes(CertNode* n, int offset) {
  if (!n) return;
  if (n->kind == CertNode::Kind::Hole) {
    n->hole += offset;
    return;
  }
  offset_holes(n->red.get(), offset);
  offset_holes(n->blue.get(), offset);
}

void splice(std::unique_ptr<CertNode>& n, std::vector<std::unique_ptr<CertNode>>& parts) {
  if (!n) return;
  if (n->kind == CertNode::Kind::Hole) {
    if (n->hole < 0 || n->hole >= (int)parts.size() || !parts[n->hole])
      throw std::logic_error("prover: frontier splice mismatch");
    n = std::move(parts[n->hole]);
    return;  // replacement holes already carry final ids
  }
  splice(n->red, parts);
  splice(n->blue, parts);
}

void accumulate(ProverStats& into, const ProverStats& s) {
  into.branches += s.branches;
  into.leaves += s.leaves;
  into.propagations += s.propagations;
  if (s.max_depth > into.max_depth) into.max_depth = s.max_depth;
}

// Shared by prove (skeleton holes become tasks) and resume (file holes do).
// Survivors win over holes: a surviving assignment settles the question for
// this rule set, while holes only mean the budget ran out first.
ProverOutcome assemble(const ProverProblem& problem, bool symmetry,
                       std::unique_ptr<CertNode> skeleton_tree,
                       bool skeleton_survivor, std::optional<std::vector<int8_t>> skeleton_found,
                       std::vector<TaskResult>&& results, ProverStats stats,
                       Clock::time_point t0) {
  ProverOutcome out;
  std::optional<std::vector<int8_t>> survivor;
  std::vector<FrontierHole> all_holes;
  int surv_task = -1;
  for (size_t i = 0; i < results.size(); ++i) {
    accumulate(stats, results[i].stats);
    if (surv_task < 0 && results[i].survivor) surv_task = (int)i;
  }
  if (surv_task >= 0)
    survivor = std::move(results[surv_task].found);
  else if (skeleton_survivor)
    survivor = std::move(skeleton_found);

  std::unique_ptr<CertNode> tree;
  if (!survivor) {
    tree = std::move(skeleton_tree);
    std::vector<std::unique_ptr<CertNode>> parts(results.size());
    for (size_t i = 0; i < results.size(); ++i) {
      int offset = (int)all_holes.size();
      offset_holes(results[i].node.get(), offset);
      for (auto& h : results[i].holes)
        all_holes.push_back({h.id + offset, std::move(h.decisions)});
      parts[i] = std::move(results[i].node);
    }
    if (!parts.empty()) splice(tree, parts);
  }

  stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.stats = stats;
  if (survivor) {
    out.kind = ProverOutcome::Kind::Unknown;
    out.survivor = coloring_from(problem, *survivor);
    return out;
  }
  if (!all_holes.empty()) {
    out.kind = ProverOutcome::Kind::Unknown;
    out.budget_exhausted = true;
    Frontier f;
    f.partial = make_cert(problem, symmetry, std::move(tree));
    f.holes = std::move(all_holes);
    out.frontier = std::move(f);
    return out;
  }
  out.kind = ProverOutcome::Kind::NotPCG;
  out.certificate = make_cert(problem, symmetry, std::move(tree));
  return out;
}

}  // namespace

RuleSelection default_rules() {
  RuleSelection r;
  for (const auto& p : catalog()) r.pattern_ids.push_back(p.id);
  return r;
}

std::vector<std::vector<std::string>> designated_cycles(const Graph& g, bool rim_cycles,
                                                        bool four_cycles) {
  std::vector<std::vector<std::string>> out;
  if (rim_cycles) {
    int n = g.size();
    if (g.has_node("c") && n >= 5) {
      // hub-and-rim naming: c plus v1..v(n-1)
      std::vector<std::string> rim;
      for (int i = 1; i < n; ++i) rim.push_back("v" + std::to_string(i));
      bool named = true;
      for (const auto& s : rim) named = named && g.has_node(s);
      if (named && is_induced_cycle_of(g, rim)) out.push_back(rim);
    } else if (!g.has_node("c") && n >= 8 && n % 2 == 0) {
      // doubled-cycle naming: u1..uh and v1..vh
      int half = n / 2;
      std::vector<std::string> ru, rv;
      for (int i = 1; i <= half; ++i) {
        ru.push_back("u" + std::to_string(i));
        rv.push_back("v" + std::to_string(i));
      }
      bool named = true;
      for (const auto& s : ru) named = named && g.has_node(s);
      for (const auto& s : rv) named = named && g.has_node(s);
      if (named) {
        if (is_induced_cycle_of(g, ru)) out.push_back(ru);
        if (is_induced_cycle_of(g, rv)) out.push_back(rv);
      }
    }
  }
  if (four_cycles) {
    for (auto& c : induced_four_cycles(g)) {
      std::set<std::string> cs(c.begin(), c.end());
      bool dup = false;
      for (const auto& r : out)
        if (r.size() == 4 && std::set<std::string>(r.begin(), r.end()) == cs) dup = true;
      if (!dup) out.push_back(c);
    }
  }
  return out;
}

ProverProblem compile(const Graph& g, const RuleSelection& rules) {
  ProverProblem P;
  P.host = g;
  P.rules = rules;
  P.variables = g.non_edges();
  for (const auto& id : rules.pattern_ids)
    if (std::find(rules.certified_ids.begin(), rules.certified_ids.end(), id) ==
        rules.certified_ids.end())
      P.uncertified.push_back(id);

  std::vector<Clause> all;
  for (const auto& id : rules.pattern_ids) {
    ForbiddenPattern p = pattern_by_id(id);  // throws on unknown id
    auto cs = pattern_clauses(g, p);
    all.insert(all.end(), std::make_move_iterator(cs.begin()),
               std::make_move_iterator(cs.end()));
  }
  P.cycles = designated_cycles(g, rules.rim_cycles, rules.four_cycles);
  for (const auto& c : rules.extra_cycles) P.cycles.push_back(c);
  for (const auto& c : P.cycles) {
    auto cs = cycle_rule_clauses(g, c);  // throws on non-induced input
    all.insert(all.end(), std::make_move_iterator(cs.begin()),
               std::make_move_iterator(cs.end()));
  }
  P.paths = rules.extra_paths;
  for (const auto& path : P.paths) {
    auto cs = path_rule_clauses(g, path);
    all.insert(all.end(), std::make_move_iterator(cs.begin()),
               std::make_move_iterator(cs.end()));
  }
  std::set<std::vector<Literal>> seen;
  for (auto& c : all)
    if (seen.insert(c.literals).second) P.clauses.push_back(std::move(c));
  return P;
}

std::unique_ptr<CertNode> clone_tree(const CertNode* node) {
  if (!node) return nullptr;
  auto c = std::make_unique<CertNode>();
  c->kind = node->kind;
  c->var = node->var;
  c->orbit = node->orbit;
  c->clause = node->clause;
  c->hole = node->hole;
  c->red = clone_tree(node->red.get());
  c->blue = clone_tree(node->blue.get());
  return c;
}

ProverOutcome prove_not_pcg(const ProverProblem& problem, const ProverOptions& options) {
  gate(problem);
  auto t0 = Clock::now();
  bool has_deadline = options.budget_seconds > 0;
  auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.budget_seconds));
  int workers = std::max(1, options.workers);

  Engine e(problem);
  e.has_deadline = has_deadline;
  e.deadline = deadline;
  if (workers > 1) e.depth_cut = depth_cut_for(workers);
  Engine::Res r = e.run_root(options.symmetry);

  std::vector<TaskResult> results;
  if (workers > 1)
    results = run_tasks(problem, e.holes, workers, deadline, has_deadline);
  else if (!e.holes.empty()) {
    // sequential budget run: the holes stay holes; keep their decision lists
    results.resize(e.holes.size());
    for (size_t i = 0; i < e.holes.size(); ++i) {
      auto h = std::make_unique<CertNode>();
      h->kind = CertNode::Kind::Hole;
      h->hole = 0;  // final id assigned during the splice pass
      results[i].node = std::move(h);
      results[i].holes.push_back({0, e.holes[i].decisions});
    }
  }
  return assemble(problem, options.symmetry, r.survivor ? nullptr : std::move(r.node),
                  r.survivor, std::move(e.found), std::move(results), e.stats, t0);
}

ProverOutcome resume_frontier(const ProverProblem& problem, const Frontier& frontier,
                              const ProverOptions& options) {
  gate(problem);
  if (!(frontier.partial.host == problem.host))
    throw std::invalid_argument("resume: frontier host differs from problem host");
  if (frontier.partial.pattern_ids != problem.rules.pattern_ids ||
      frontier.partial.rim_cycles != problem.rules.rim_cycles ||
      frontier.partial.four_cycles != problem.rules.four_cycles ||
      frontier.partial.extra_cycles != problem.rules.extra_cycles ||
      frontier.partial.extra_paths != problem.rules.extra_paths)
    throw std::invalid_argument("resume: frontier was produced under different rules");
  for (size_t i = 0; i < frontier.holes.size(); ++i)
    if (frontier.holes[i].id != (int)i)
      throw std::invalid_argument("resume: frontier hole ids must be 0..n-1 in order");

  auto t0 = Clock::now();
  bool has_deadline = options.budget_seconds > 0;
  auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.budget_seconds));
  auto results =
      run_tasks(problem, frontier.holes, std::max(1, options.workers), deadline, has_deadline);
  return assemble(problem, frontier.partial.symmetry,
                  clone_tree(frontier.partial.root.get()), false, std::nullopt,
                  std::move(results), ProverStats{}, t0);
}

ProverOutcome brute_force_refute(const ProverProblem& problem) {
  int m = (int)problem.variables.size();
  if (m > 24)
    throw std::invalid_argument("brute_force_refute: at most 24 variables (host has " +
                                std::to_string(m) + ")");
  auto t0 = Clock::now();
  std::map<NodePair, int> vidx;
  for (int i = 0; i < m; ++i) vidx.emplace(problem.variables[i], i);
  struct Masks {
    uint32_t red = 0, blue = 0;
  };
  std::vector<Masks> mcs;
  mcs.reserve(problem.clauses.size());
  for (const Clause& c : problem.clauses) {
    Masks mc;
    for (const Literal& l : c.literals) {
      auto it = vidx.find(l.pair);
      if (it == vidx.end())
        throw std::logic_error("prover: clause literal " + l.pair.str() +
                               " is not a non-edge of the host");
      uint32_t bit = 1u << (m - 1 - it->second);
      (l.color == Color::Red ? mc.red : mc.blue) |= bit;
    }
    mcs.push_back(mc);
  }
  uint32_t full = m == 0 ? 0u : ((m == 32 ? 0u : (1u << m)) - 1u);
  uint64_t count = 1ull << m;
  ProverOutcome out;
  for (uint64_t b = 0; b < count; ++b) {
    uint32_t B = (uint32_t)b;  // bit (m-1-i) set means variable i is Blue
    bool violated = false;
    for (const Masks& mc : mcs)
      if ((mc.blue & B) == 0 && (mc.red & ~B & full) == 0) {
        violated = true;
        break;
      }
    if (!violated) {
      std::vector<NodePair> red, blue;
      for (int i = 0; i < m; ++i)
        (((B >> (m - 1 - i)) & 1u) ? blue : red).push_back(problem.variables[i]);
      out.kind = ProverOutcome::Kind::Unknown;
      out.survivor = make_coloring(problem.host, red, blue);
      out.stats.leaves = b;
      out.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      return out;
    }
    out.stats.leaves++;
  }
  out.kind = ProverOutcome::Kind::NotPCG;  // certificate elided by design
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

}  // namespace pcg
