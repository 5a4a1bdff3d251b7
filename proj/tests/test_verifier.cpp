#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcg/certificate.hpp"
#include "pcg/coloring.hpp"
#include "pcg/graph.hpp"
#include "pcg/prover.hpp"
#include "pcg/verifier.hpp"

using namespace pcg;

namespace {

RuleSelection certified_rules() {
  RuleSelection r = default_rules();
  r.certified_ids = r.pattern_ids;
  return r;
}

ProofCertificate proved_cert(const Graph& g, const ProverProblem& p,
                             bool symmetry = false) {
  ProverOptions opt;
  opt.symmetry = symmetry;
  ProverOutcome out = prove_not_pcg(p, opt);
  REQUIRE(out.kind == ProverOutcome::Kind::NotPCG);
  (void)g;
  return std::move(*out.certificate);
}

CertNode* first_leaf(CertNode* n) {
  if (!n) return nullptr;
  if (n->kind == CertNode::Kind::Leaf) return n;
  if (CertNode* r = first_leaf(n->red.get())) return r;
  return first_leaf(n->blue.get());
}

}  // namespace

TEST_CASE("the prover's own certificates verify") {
  for (Graph g : {build_wheel(8), build_cycle_strong_p2(4)}) {
    ProverProblem p = compile(g, certified_rules());
    ProofCertificate cert = proved_cert(g, p);
    VerifyResult r = verify_certificate(g, cert, p);
    CHECK(r.ok);
    CHECK(r.message.empty());

    // and they survive a serialization round trip
    ProofCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(verify_certificate(g, back, p).ok);
    CHECK(certificate_to_json(back) == certificate_to_json(cert));
  }
}

TEST_CASE("symmetry certificates verify") {
  Graph g = build_wheel(8);
  ProverProblem p = compile(g, certified_rules());
  ProofCertificate cert = proved_cert(g, p, true);
  REQUIRE(cert.root->kind == CertNode::Kind::Symmetry);
  CHECK(verify_certificate(g, cert, p).ok);

  SUBCASE("tampered orbit is rejected") {
    cert.root->orbit.pop_back();
    VerifyResult r = verify_certificate(g, cert, p);
    CHECK(!r.ok);
    CHECK(!r.message.empty());
  }
  SUBCASE("symmetry below the root is rejected") {
    ProofCertificate plain = proved_cert(g, p);
    REQUIRE(plain.root->kind == CertNode::Kind::Branch);
    auto wrapped = std::make_unique<CertNode>();
    wrapped->kind = CertNode::Kind::Branch;
    wrapped->var = plain.root->var;
    wrapped->red = clone_tree(cert.root.get());
    wrapped->blue = clone_tree(cert.root.get());
    ProofCertificate bad;
    bad.host = cert.host;
    bad.pattern_ids = cert.pattern_ids;
    bad.symmetry = true;
    bad.root = std::move(wrapped);
    VerifyResult r = verify_certificate(g, bad, p);
    CHECK(!r.ok);
  }
}

TEST_CASE("flipped literal color is rejected") {
  Graph g = build_cycle_strong_p2(4);
  ProverProblem p = compile(g, certified_rules());
  ProofCertificate cert = proved_cert(g, p);
  CertNode* leaf = first_leaf(cert.root.get());
  REQUIRE(leaf != nullptr);
  REQUIRE(!leaf->clause.literals.empty());
  leaf->clause.literals[0].color = opposite(leaf->clause.literals[0].color);
  std::sort(leaf->clause.literals.begin(), leaf->clause.literals.end());
  VerifyResult r = verify_certificate(g, cert, p);
  CHECK(!r.ok);
  CHECK(!r.path.empty());
}

TEST_CASE("dropped literal is rejected") {
  Graph g = build_cycle_strong_p2(4);
  ProverProblem p = compile(g, certified_rules());
  ProofCertificate cert = proved_cert(g, p);
  CertNode* leaf = first_leaf(cert.root.get());
  REQUIRE(leaf != nullptr);
  leaf->clause.literals.pop_back();
  if (leaf->clause.literals.empty())
    leaf->clause.literals.push_back(Literal{NodePair("u1", "u3"), Color::Red});
  CHECK(!verify_certificate(g, cert, p).ok);
}

TEST_CASE("wrong host is rejected") {
  Graph g = build_wheel(8);
  ProverProblem p = compile(g, certified_rules());
  ProofCertificate cert = proved_cert(g, p);

  Graph other = build_cycle_strong_p2(4);
  ProverProblem po = compile(other, certified_rules());
  VerifyResult r = verify_certificate(other, cert, po);
  CHECK(!r.ok);
  CHECK(!r.message.empty());
}

TEST_CASE("satisfied or unassigned literals do not refute") {
  Graph g = build_wheel(8);
  ProverProblem p = compile(g, certified_rules());
  Clause red2;
  bool found = false;
  for (const auto& c : p.clauses)
    if (c.rule == "cycle-red2") {
      red2 = c;
      found = true;
    }
  REQUIRE(found);

  ProofCertificate cert;
  cert.host = g;
  cert.pattern_ids = certified_rules().pattern_ids;
  auto root = std::make_unique<CertNode>();
  root->kind = CertNode::Kind::Branch;
  root->var = red2.literals[0].pair;
  auto mk_leaf = [&] {
    auto n = std::make_unique<CertNode>();
    n->kind = CertNode::Kind::Leaf;
    n->clause = red2;
    return n;
  };
  root->red = mk_leaf();   // Red(var) is satisfied here, not falsified
  root->blue = mk_leaf();  // other literals unassigned
  cert.root = std::move(root);
  VerifyResult r = verify_certificate(g, cert, p);
  CHECK(!r.ok);
  CHECK(r.path.substr(0, 4) == "root");
}

TEST_CASE("structural defects are rejected") {
  Graph g = build_cycle_strong_p2(4);
  ProverProblem p = compile(g, certified_rules());
  ProofCertificate cert = proved_cert(g, p);

  SUBCASE("missing child") {
    REQUIRE(cert.root->kind == CertNode::Kind::Branch);
    cert.root->blue.reset();
    CHECK(!verify_certificate(g, cert, p).ok);
  }
  SUBCASE("branch on an edge pair") {
    cert.root->var = g.edges()[0];
    CHECK(!verify_certificate(g, cert, p).ok);
  }
  SUBCASE("hole in the tree") {
    auto hole = std::make_unique<CertNode>();
    hole->kind = CertNode::Kind::Hole;
    hole->hole = 0;
    cert.root->red = std::move(hole);
    VerifyResult r = verify_certificate(g, cert, p);
    CHECK(!r.ok);
  }
  SUBCASE("branching the same variable twice") {
    REQUIRE(cert.root->kind == CertNode::Kind::Branch);
    auto rebranch = std::make_unique<CertNode>();
    rebranch->kind = CertNode::Kind::Branch;
    rebranch->var = cert.root->var;
    rebranch->red = std::move(cert.root->red);
    rebranch->blue = clone_tree(rebranch->red.get());
    cert.root->red = std::move(rebranch);
    CHECK(!verify_certificate(g, cert, p).ok);
  }
}

TEST_CASE("tampered pattern map is rejected") {
  Graph g = build_cycle_strong_p2(4);
  ProverProblem p = compile(g, certified_rules());
  ProofCertificate cert = proved_cert(g, p);

  // find a leaf citing a pattern rule and poke its occurrence map
  std::vector<CertNode*> stack = {cert.root.get()};
  CertNode* pat_leaf = nullptr;
  while (!stack.empty() && !pat_leaf) {
    CertNode* n = stack.back();
    stack.pop_back();
    if (!n) continue;
    if (n->kind == CertNode::Kind::Leaf && !n->clause.map.empty()) pat_leaf = n;
    stack.push_back(n->red.get());
    stack.push_back(n->blue.get());
  }
  if (pat_leaf) {
    // rotate the host targets by one; swapping just two can land on a
    // pattern automorphism and still be a valid occurrence, a rotation
    // always moves some pattern edge onto a non-edge for these patterns
    auto& map = pat_leaf->clause.map;
    std::string first = map.front().second;
    for (size_t i = 0; i + 1 < map.size(); ++i) map[i].second = map[i + 1].second;
    map.back().second = first;
    CHECK(!verify_certificate(g, cert, p).ok);
  }
}

TEST_CASE("certificate json rejects malformed input") {
  Graph g = build_cycle_strong_p2(4);
  ProverProblem p = compile(g, certified_rules());
  ProofCertificate cert = proved_cert(g, p);
  std::string json = certificate_to_json(cert);

  CHECK_THROWS_AS(certificate_from_json(json.substr(0, json.size() / 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json("[1,2,3]"), std::invalid_argument);

  // frontier parser refuses certificates and vice versa
  CHECK_THROWS_AS(frontier_from_json(json), std::invalid_argument);

  ProverOptions tiny;
  tiny.budget_seconds = 1e-9;
  ProverOutcome stopped = prove_not_pcg(p, tiny);
  REQUIRE(stopped.frontier.has_value());
  std::string fj = frontier_to_json(*stopped.frontier);
  CHECK_THROWS_AS(certificate_from_json(fj), std::invalid_argument);
}

TEST_CASE("coloring json round trip") {
  Graph g = build_wheel(6);
  ProverProblem p = compile(g, certified_rules());
  ProverOutcome out = prove_not_pcg(p);
  REQUIRE(out.kind == ProverOutcome::Kind::Unknown);
  std::string cj = coloring_to_json(*out.survivor);
  TriColoring back = coloring_from_json(cj, g);
  CHECK(back.assignment == out.survivor->assignment);
  CHECK(coloring_to_json(back) == cj);

  CHECK_THROWS_AS(coloring_from_json("{}", g), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_json(cj, build_wheel(8)), std::invalid_argument);
}
