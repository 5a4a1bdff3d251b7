#include "pcg/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pcg {

namespace {

// The checks below re-derive everything from the graph on purpose, even
// where the clause generators have equivalent code: a generator bug must not
// pass its own output.
std::string induced_cycle_error(const Graph& g, const std::vector<std::string>& cyc) {
  int m = (int)cyc.size();
  if (m < 4) return "cycle has fewer than 4 nodes";
  for (const auto& name : cyc)
    if (!g.has_node(name)) return "cycle node \"" + name + "\" is not in the host";
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (cyc[i] == cyc[j]) return "cycle repeats node \"" + cyc[i] + "\"";
      bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      if (g.adjacent(cyc[i], cyc[j]) != consecutive)
        return consecutive ? "cycle edge (" + cyc[i] + "," + cyc[j] + ") missing"
                           : "cycle chord (" + cyc[i] + "," + cyc[j] + ") present";
    }
  return "";
}

std::string induced_path_error(const Graph& g, const std::vector<std::string>& path) {
  int m = (int)path.size();
  if (m < 3) return "path has fewer than 3 nodes";
  for (const auto& name : path)
    if (!g.has_node(name)) return "path node \"" + name + "\" is not in the host";
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (path[i] == path[j]) return "path repeats node \"" + path[i] + "\"";
      if (g.adjacent(path[i], path[j]) != (j == i + 1))
        return j == i + 1 ? "path edge (" + path[i] + "," + path[j] + ") missing"
                          : "path chord (" + path[i] + "," + path[j] + ") present";
    }
  return "";
}

std::vector<Literal> sorted_unique(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

struct Verifier {
  const Graph& g;
  const ProofCertificate& cert;
  const ProverProblem& problem;
  std::map<std::string, ForbiddenPattern> patterns;
  std::set<std::string> certified;
  std::set<NodePair> variables;
  std::map<NodePair, Color> trail;
  VerifyResult result;

  Verifier(const Graph& g_, const ProofCertificate& c_, const ProverProblem& p_)
      : g(g_), cert(c_), problem(p_) {
    for (const ForbiddenPattern& p : catalog_with_weak()) patterns.emplace(p.id, p);
    for (const ForbiddenPattern& p : catalog()) certified.insert(p.id);
    for (const NodePair& v : problem.variables) variables.insert(v);
  }

  bool fail(const std::string& path, const std::string& msg) {
    result.ok = false;
    result.path = path;
    result.message = msg;
    return false;
  }

  bool rederive(const Clause& c, const std::string& path, std::vector<Literal>& out) {
    if (c.rule == "cycle-blue" || c.rule == "cycle-red2") {
      std::string err = induced_cycle_error(g, c.nodes);
      if (!err.empty()) return fail(path, "clause rule " + c.rule + ": " + err);
      int m = (int)c.nodes.size();
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          int dist = std::min(j - i, m - (j - i));
          if (dist < 2) continue;
          if (c.rule == "cycle-blue")
            out.push_back({NodePair(c.nodes[i], c.nodes[j]), Color::Blue});
          else if (dist == 2)
            out.push_back({NodePair(c.nodes[i], c.nodes[j]), Color::Red});
        }
      return true;
    }
    if (c.rule == "path-le1") {
      std::string err = induced_path_error(g, c.nodes);
      if (!err.empty()) return fail(path, "clause rule path-le1: " + err);
      int m = (int)c.nodes.size();
      int ei = -1;
      for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
          if (NodePair(c.nodes[i], c.nodes[j]) == c.le1_edge) ei = i;
      if (ei < 0)
        return fail(path, "path-le1: e " + c.le1_edge.str() + " is not a path non-edge");
      out.push_back({c.le1_edge, Color::Blue});
      for (int k = 0; k + 2 < m; ++k)
        out.push_back({NodePair(c.nodes[k], c.nodes[k + 2]), Color::Red});
      return true;
    }
    if (c.rule == "path-claim1") {
      std::string err = induced_path_error(g, c.nodes);
      if (!err.empty()) return fail(path, "clause rule path-claim1: " + err);
      int m = (int)c.nodes.size();
      if (m < 4) return fail(path, "path-claim1 needs at least 4 nodes");
      for (int i = 3; i <= m - 1; ++i)
        out.push_back({NodePair(c.nodes[0], c.nodes[i - 1]), Color::Red});
      out.push_back({NodePair(c.nodes[1], c.nodes[m - 1]), Color::Red});
      out.push_back({NodePair(c.nodes[0], c.nodes[m - 1]), Color::Blue});
      return true;
    }
    // pattern rule
    auto pit = patterns.find(c.rule);
    if (pit == patterns.end()) return fail(path, "unknown clause rule \"" + c.rule + "\"");
    if (!certified.count(c.rule) && !cert.allow_uncertified)
      return fail(path, "clause cites pattern \"" + c.rule +
                            "\" outside the certified catalog, and the certificate does "
                            "not allow uncertified patterns");
    const ForbiddenPattern& pat = pit->second;
    if ((int)c.map.size() != pat.base.size())
      return fail(path, "pattern map has " + std::to_string(c.map.size()) + " entries, expected " +
                            std::to_string(pat.base.size()));
    std::map<std::string, std::string> f;
    std::set<std::string> images;
    for (const auto& [from, to] : c.map) {
      if (!pat.base.has_node(from))
        return fail(path, "pattern map key \"" + from + "\" is not a pattern node");
      if (!g.has_node(to))
        return fail(path, "pattern map value \"" + to + "\" is not a host node");
      if (!f.emplace(from, to).second)
        return fail(path, "pattern map repeats key \"" + from + "\"");
      if (!images.insert(to).second)
        return fail(path, "pattern map is not injective at \"" + to + "\"");
    }
    for (int i = 0; i < pat.base.size(); ++i)
      for (int j = i + 1; j < pat.base.size(); ++j) {
        const std::string& x = pat.base.name_of(i);
        const std::string& y = pat.base.name_of(j);
        if (pat.base.adjacent(x, y) != g.adjacent(f.at(x), f.at(y)))
          return fail(path, "pattern occurrence is not induced at (" + x + "," + y + ")");
      }
    for (const NodePair& q : pat.red)
      out.push_back({NodePair(f.at(q.first), f.at(q.second)), Color::Blue});
    for (const NodePair& q : pat.blue)
      out.push_back({NodePair(f.at(q.first), f.at(q.second)), Color::Red});
    return true;
  }

  bool check_leaf(const CertNode* n, const std::string& path) {
    const Clause& c = n->clause;
    if (c.literals.empty()) return fail(path, "leaf clause has no literals");
    std::vector<Literal> expect;
    if (!rederive(c, path, expect)) return false;
    expect = sorted_unique(std::move(expect));
    if (expect != c.literals)
      return fail(path, "clause literals do not match the re-derived clause for rule \"" +
                            c.rule + "\"");
    for (const Literal& l : c.literals) {
      auto it = trail.find(l.pair);
      if (it == trail.end())
        return fail(path, "literal " + l.pair.str() + " is unassigned on this path");
      if (it->second == l.color)
        return fail(path, "literal " + l.pair.str() + " (" + color_name(l.color) +
                              ") is satisfied on this path");
    }
    return true;
  }

  bool check_symmetry(const CertNode* n, const std::string& path) {
    if (!trail.empty()) return fail(path, "symmetry split away from the root");
    if (!n->var || !n->red || !n->blue) return fail(path, "malformed symmetry node");
    if (!variables.count(*n->var))
      return fail(path, "symmetry variable " + n->var->str() + " is not a problem variable");
    auto auts = automorphisms(g);
    std::set<NodePair> want;
    int a = g.index_of(n->var->first);
    int b = g.index_of(n->var->second);
    for (const auto& sigma : auts)
      want.insert(NodePair(g.name_of(sigma[a]), g.name_of(sigma[b])));
    std::set<NodePair> got(n->orbit.begin(), n->orbit.end());
    if (got != want)
      return fail(path, "orbit does not match the recomputed automorphism orbit of " +
                            n->var->str());
    // The split "representative Red, else whole orbit Blue" only covers all
    // colorings if automorphisms map problem clauses to problem clauses.
    std::set<std::vector<Literal>> db;
    for (const Clause& c : problem.clauses) db.insert(c.literals);
    for (const auto& sigma : auts)
      for (const Clause& c : problem.clauses) {
        std::vector<Literal> mapped;
        for (const Literal& l : c.literals) {
          int x = g.index_of(l.pair.first);
          int y = g.index_of(l.pair.second);
          mapped.push_back({NodePair(g.name_of(sigma[x]), g.name_of(sigma[y])), l.color});
        }
        std::sort(mapped.begin(), mapped.end());
        if (!db.count(mapped))
          return fail(path,
                      "problem clause set is not closed under host automorphisms; "
                      "the symmetry split is unsound here");
      }
    trail[*n->var] = Color::Red;
    bool ok = walk(n->red.get(), path + ".red");
    trail.erase(*n->var);
    if (!ok) return false;
    for (const NodePair& p : n->orbit) {
      if (trail.count(p)) {
        for (const NodePair& q : n->orbit) trail.erase(q);
        return fail(path, "orbit repeats variable " + p.str());
      }
      trail[p] = Color::Blue;
    }
    ok = walk(n->blue.get(), path + ".blue");
    for (const NodePair& q : n->orbit) trail.erase(q);
    return ok;
  }

  bool walk(const CertNode* n, const std::string& path) {
    if (!n) return fail(path, "missing node");
    switch (n->kind) {
      case CertNode::Kind::Hole:
        return fail(path, "unexplored hole (frontier, not a completed proof)");
      case CertNode::Kind::Leaf:
        return check_leaf(n, path);
      case CertNode::Kind::Symmetry:
        return check_symmetry(n, path);
      case CertNode::Kind::Branch:
        break;
    }
    if (!n->var || !n->red || !n->blue) return fail(path, "malformed branch node");
    const NodePair& v = *n->var;
    if (!variables.count(v))
      return fail(path, "branch variable " + v.str() + " is not a problem variable");
    if (trail.count(v))
      return fail(path, "branch variable " + v.str() + " already assigned on this path");
    trail[v] = Color::Red;
    bool ok = walk(n->red.get(), path + ".red");
    trail.erase(v);
    if (!ok) return false;
    trail[v] = Color::Blue;
    ok = walk(n->blue.get(), path + ".blue");
    trail.erase(v);
    return ok;
  }

  VerifyResult run() {
    result.ok = true;
    if (!(problem.host == g)) {
      fail("root", "problem host differs from the given graph");
      return result;
    }
    if (!(cert.host == g)) {
      fail("root", "certificate host differs from the given graph");
      return result;
    }
    if (!cert.root) {
      fail("root", "certificate has no root node");
      return result;
    }
    if (walk(cert.root.get(), "root")) {
      result.ok = true;
      result.path.clear();
      result.message.clear();
    }
    return result;
  }
};

}  // namespace

VerifyResult verify_certificate(const Graph& g, const ProofCertificate& cert,
                                const ProverProblem& problem) {
  Verifier v(g, cert, problem);
  return v.run();
}

}  // namespace pcg
