#include "pcg/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace pcg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pair_json(const NodePair& p) { return ordered_json::array({p.first, p.second}); }

NodePair pair_from(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw std::invalid_argument(where + ": pair must be a 2-element string array");
  return NodePair(j[0].get<std::string>(), j[1].get<std::string>());
}

ordered_json literal_json(const Literal& l) {
  return ordered_json::array({pair_json(l.pair), color_name(l.color)});
}

Literal literal_from(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[1].is_string())
    throw std::invalid_argument(where + ": literal must be [pair, color]");
  return Literal{pair_from(j[0], where), color_from_name(j[1].get<std::string>())};
}

void check_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw std::invalid_argument(where + ": unknown key \"" + it.key() + "\"");
  }
}

const ordered_json& need(const ordered_json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(where + ": missing key \"" + key + "\"");
  return *it;
}

bool is_pattern_rule(const std::string& rule) {
  return rule != "cycle-blue" && rule != "cycle-red2" && rule != "path-le1" &&
         rule != "path-claim1";
}

ordered_json clause_json(const Clause& c) {
  ordered_json j;
  j["rule"] = c.rule;
  if (is_pattern_rule(c.rule)) {
    ordered_json m = ordered_json::object();
    for (const auto& [from, to] : c.map) m[from] = to;
    j["map"] = std::move(m);
  } else {
    j["nodes"] = c.nodes;
    if (c.rule == "path-le1") j["e"] = pair_json(c.le1_edge);
  }
  ordered_json lits = ordered_json::array();
  for (const Literal& l : c.literals) lits.push_back(literal_json(l));
  j["literals"] = std::move(lits);
  return j;
}

Clause clause_from(const ordered_json& j, const std::string& where) {
  check_keys(j, {"rule", "map", "nodes", "e", "literals"}, where);
  Clause c;
  const auto& rule = need(j, "rule", where);
  if (!rule.is_string()) throw std::invalid_argument(where + ": rule must be a string");
  c.rule = rule.get<std::string>();
  if (is_pattern_rule(c.rule)) {
    const auto& m = need(j, "map", where);
    if (!m.is_object()) throw std::invalid_argument(where + ": map must be an object");
    if (j.contains("nodes") || j.contains("e"))
      throw std::invalid_argument(where + ": pattern clause cannot carry nodes/e");
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (!it.value().is_string())
        throw std::invalid_argument(where + ": map values must be strings");
      c.map.emplace_back(it.key(), it.value().get<std::string>());
    }
  } else {
    const auto& nodes = need(j, "nodes", where);
    if (!nodes.is_array()) throw std::invalid_argument(where + ": nodes must be an array");
    if (j.contains("map"))
      throw std::invalid_argument(where + ": cycle/path clause cannot carry a map");
    for (const auto& n : nodes) {
      if (!n.is_string()) throw std::invalid_argument(where + ": nodes must be strings");
      c.nodes.push_back(n.get<std::string>());
    }
    if (c.rule == "path-le1")
      c.le1_edge = pair_from(need(j, "e", where), where);
    else if (j.contains("e"))
      throw std::invalid_argument(where + ": only path-le1 clauses carry e");
  }
  const auto& lits = need(j, "literals", where);
  if (!lits.is_array() || lits.empty())
    throw std::invalid_argument(where + ": literals must be a non-empty array");
  for (const auto& l : lits) c.literals.push_back(literal_from(l, where));
  std::sort(c.literals.begin(), c.literals.end());
  return c;
}

ordered_json node_json(const CertNode* n) {
  if (!n) throw std::logic_error("certificate: missing child node");
  ordered_json j;
  switch (n->kind) {
    case CertNode::Kind::Branch: {
      ordered_json kids;
      kids["red"] = node_json(n->red.get());
      kids["blue"] = node_json(n->blue.get());
      j["branch"] = ordered_json::array({pair_json(*n->var), std::move(kids)});
      break;
    }
    case CertNode::Kind::Leaf: {
      ordered_json body;
      body["clause"] = clause_json(n->clause);
      j["leaf"] = std::move(body);
      break;
    }
    case CertNode::Kind::Symmetry: {
      ordered_json body;
      ordered_json orbit = ordered_json::array();
      for (const NodePair& p : n->orbit) orbit.push_back(pair_json(p));
      body["orbit"] = std::move(orbit);
      body["red"] = node_json(n->red.get());
      body["blue"] = node_json(n->blue.get());
      j["symmetry"] = ordered_json::array({pair_json(*n->var), std::move(body)});
      break;
    }
    case CertNode::Kind::Hole:
      j["hole"] = n->hole;
      break;
  }
  return j;
}

std::unique_ptr<CertNode> node_from(const ordered_json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument(where + ": node must be an object with exactly one key");
  auto n = std::make_unique<CertNode>();
  if (j.contains("branch")) {
    const auto& b = j["branch"];
    if (!b.is_array() || b.size() != 2)
      throw std::invalid_argument(where + ": branch must be [pair, children]");
    n->kind = CertNode::Kind::Branch;
    n->var = pair_from(b[0], where);
    check_keys(b[1], {"red", "blue"}, where);
    n->red = node_from(need(b[1], "red", where + ".red"), where + ".red");
    n->blue = node_from(need(b[1], "blue", where + ".blue"), where + ".blue");
  } else if (j.contains("leaf")) {
    check_keys(j["leaf"], {"clause"}, where);
    n->kind = CertNode::Kind::Leaf;
    n->clause = clause_from(need(j["leaf"], "clause", where), where);
  } else if (j.contains("symmetry")) {
    const auto& s = j["symmetry"];
    if (!s.is_array() || s.size() != 2)
      throw std::invalid_argument(where + ": symmetry must be [pair, body]");
    n->kind = CertNode::Kind::Symmetry;
    n->var = pair_from(s[0], where);
    check_keys(s[1], {"orbit", "red", "blue"}, where);
    const auto& orbit = need(s[1], "orbit", where);
    if (!orbit.is_array()) throw std::invalid_argument(where + ": orbit must be an array");
    for (const auto& p : orbit) n->orbit.push_back(pair_from(p, where));
    n->red = node_from(need(s[1], "red", where + ".red"), where + ".red");
    n->blue = node_from(need(s[1], "blue", where + ".blue"), where + ".blue");
  } else if (j.contains("hole")) {
    if (!j["hole"].is_number_integer())
      throw std::invalid_argument(where + ": hole must be an integer");
    n->kind = CertNode::Kind::Hole;
    n->hole = j["hole"].get<int>();
    if (n->hole < 0) throw std::invalid_argument(where + ": hole id must be >= 0");
  } else {
    throw std::invalid_argument(where + ": unknown node kind");
  }
  return n;
}

ordered_json options_json(const ProofCertificate& c) {
  ordered_json j;
  j["patterns"] = c.pattern_ids;
  j["rim_cycles"] = c.rim_cycles;
  j["four_cycles"] = c.four_cycles;
  j["cycles"] = c.extra_cycles;
  j["paths"] = c.extra_paths;
  j["symmetry"] = c.symmetry;
  j["allow_uncertified"] = c.allow_uncertified;
  return j;
}

void options_from(const ordered_json& j, ProofCertificate& c) {
  const std::string where = "certificate options";
  check_keys(j, {"patterns", "rim_cycles", "four_cycles", "cycles", "paths", "symmetry",
                 "allow_uncertified"},
             where);
  const auto& pats = need(j, "patterns", where);
  if (!pats.is_array()) throw std::invalid_argument(where + ": patterns must be an array");
  for (const auto& p : pats) {
    if (!p.is_string()) throw std::invalid_argument(where + ": pattern ids must be strings");
    c.pattern_ids.push_back(p.get<std::string>());
  }
  auto get_bool = [&](const char* key) {
    const auto& v = need(j, key, where);
    if (!v.is_boolean())
      throw std::invalid_argument(where + ": " + key + " must be a boolean");
    return v.get<bool>();
  };
  c.rim_cycles = get_bool("rim_cycles");
  c.four_cycles = get_bool("four_cycles");
  c.symmetry = get_bool("symmetry");
  c.allow_uncertified = get_bool("allow_uncertified");
  auto get_lists = [&](const char* key) {
    std::vector<std::vector<std::string>> out;
    const auto& v = need(j, key, where);
    if (!v.is_array())
      throw std::invalid_argument(where + ": " + key + " must be an array");
    for (const auto& lst : v) {
      if (!lst.is_array())
        throw std::invalid_argument(where + ": " + key + " entries must be arrays");
      std::vector<std::string> names;
      for (const auto& s : lst) {
        if (!s.is_string())
          throw std::invalid_argument(where + ": " + key + " entries must hold strings");
        names.push_back(s.get<std::string>());
      }
      out.push_back(std::move(names));
    }
    return out;
  };
  c.extra_cycles = get_lists("cycles");
  c.extra_paths = get_lists("paths");
}

ordered_json parse_text(const std::string& text, const std::string& where) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(where + ": invalid JSON: " + e.what());
  }
}

void collect_holes(const CertNode* n, std::vector<int>& ids) {
  if (!n) return;
  if (n->kind == CertNode::Kind::Hole) {
    ids.push_back(n->hole);
    return;
  }
  collect_holes(n->red.get(), ids);
  collect_holes(n->blue.get(), ids);
}

ordered_json cert_body(const ProofCertificate& cert, const char* format) {
  ordered_json j;
  j["format"] = format;
  j["host"] = parse_text(graph_to_json(cert.host), "certificate host");
  j["options"] = options_json(cert);
  j["root"] = node_json(cert.root.get());
  return j;
}

ProofCertificate cert_from_body(const ordered_json& j, const char* format,
                                std::initializer_list<const char*> allowed) {
  const std::string where = "certificate";
  check_keys(j, allowed, where);
  const auto& fmt = need(j, "format", where);
  if (!fmt.is_string() || fmt.get<std::string>() != format)
    throw std::invalid_argument(where + ": expected format \"" + format + "\"");
  ProofCertificate c;
  c.host = graph_from_json(need(j, "host", where).dump());
  options_from(need(j, "options", where), c);
  c.root = node_from(need(j, "root", where), "root");
  return c;
}

}  // namespace

std::string certificate_to_json(const ProofCertificate& cert) {
  return cert_body(cert, "pcg-cert-1").dump(2) + "\n";
}

ProofCertificate certificate_from_json(const std::string& text) {
  ordered_json j = parse_text(text, "certificate");
  ProofCertificate c =
      cert_from_body(j, "pcg-cert-1", {"format", "host", "options", "root"});
  std::vector<int> ids;
  collect_holes(c.root.get(), ids);
  if (!ids.empty())
    throw std::invalid_argument("certificate: contains unexplored holes (a frontier, not a proof)");
  return c;
}

std::string frontier_to_json(const Frontier& frontier) {
  ordered_json j = cert_body(frontier.partial, "pcg-frontier-1");
  ordered_json holes = ordered_json::array();
  for (const FrontierHole& h : frontier.holes) {
    ordered_json hj;
    hj["id"] = h.id;
    ordered_json ds = ordered_json::array();
    for (const Literal& d : h.decisions) ds.push_back(literal_json(d));
    hj["decisions"] = std::move(ds);
    holes.push_back(std::move(hj));
  }
  j["holes"] = std::move(holes);
  return j.dump(2) + "\n";
}

Frontier frontier_from_json(const std::string& text) {
  ordered_json j = parse_text(text, "frontier");
  Frontier f;
  f.partial =
      cert_from_body(j, "pcg-frontier-1", {"format", "host", "options", "root", "holes"});
  const std::string where = "frontier";
  const auto& holes = need(j, "holes", where);
  if (!holes.is_array()) throw std::invalid_argument(where + ": holes must be an array");
  for (const auto& hj : holes) {
    check_keys(hj, {"id", "decisions"}, where);
    FrontierHole h;
    const auto& id = need(hj, "id", where);
    if (!id.is_number_integer())
      throw std::invalid_argument(where + ": hole id must be an integer");
    h.id = id.get<int>();
    const auto& ds = need(hj, "decisions", where);
    if (!ds.is_array())
      throw std::invalid_argument(where + ": decisions must be an array");
    for (const auto& d : ds) h.decisions.push_back(literal_from(d, where));
    f.holes.push_back(std::move(h));
  }
  std::vector<int> tree_ids;
  collect_holes(f.partial.root.get(), tree_ids);
  std::vector<int> listed;
  for (const auto& h : f.holes) listed.push_back(h.id);
  std::vector<int> sorted_tree = tree_ids;
  std::sort(sorted_tree.begin(), sorted_tree.end());
  std::vector<int> sorted_listed = listed;
  std::sort(sorted_listed.begin(), sorted_listed.end());
  if (sorted_tree != sorted_listed)
    throw std::invalid_argument(where + ": hole list does not match the holes in the tree");
  return f;
}

std::string coloring_to_json(const TriColoring& c) {
  ordered_json j;
  auto pairs = [](const std::vector<NodePair>& ps) {
    ordered_json a = ordered_json::array();
    for (const NodePair& p : ps) a.push_back(pair_json(p));
    return a;
  };
  j["black"] = pairs(c.host.edges());
  std::vector<NodePair> red, blue;
  for (const auto& [pair, color] : c.assignment)
    (color == Color::Red ? red : blue).push_back(pair);
  j["red"] = pairs(red);
  j["blue"] = pairs(blue);
  return j.dump(2) + "\n";
}

TriColoring coloring_from_json(const std::string& text, const Graph& host) {
  ordered_json j = parse_text(text, "coloring");
  const std::string where = "coloring";
  check_keys(j, {"black", "red", "blue"}, where);
  auto pairs = [&](const char* key) {
    std::vector<NodePair> out;
    const auto& v = need(j, key, where);
    if (!v.is_array())
      throw std::invalid_argument(where + ": " + key + " must be an array");
    for (const auto& p : v) out.push_back(pair_from(p, where));
    return out;
  };
  std::vector<NodePair> black = pairs("black");
  std::sort(black.begin(), black.end());
  std::vector<NodePair> edges = host.edges();
  if (black != edges)
    throw std::invalid_argument(where + ": black pairs must be exactly the host's edges");
  return make_coloring(host, pairs("red"), pairs("blue"));
}

}  // namespace pcg
