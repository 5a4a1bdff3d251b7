#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcg/coloring.hpp"
#include "pcg/graph.hpp"

namespace pcg {

// Clause generators to apply. Rim designation follows the generator naming
// conventions (hub "c" with rim v1..vn, or doubled cycle u1..un / v1..vn);
// four_cycles designates every induced 4-cycle structurally. The certified
// list is the soundness gate: requested pattern ids outside it make
// prove_not_pcg refuse unless allow_uncertified is set.
struct RuleSelection {
  std::vector<std::string> pattern_ids;
  bool rim_cycles = true;
  bool four_cycles = true;
  std::vector<std::vector<std::string>> extra_cycles;
  std::vector<std::vector<std::string>> extra_paths;
  std::vector<std::string> certified_ids;
  bool allow_uncertified = false;
};

// Full catalog + rim + 4-cycle rules; certified_ids left empty.
RuleSelection default_rules();

struct ProverProblem {
  Graph host;
  RuleSelection rules;
  std::vector<NodePair> variables;  // = host.non_edges(), canonical order
  std::vector<Clause> clauses;      // deduplicated, deterministic order
  std::vector<std::vector<std::string>> cycles;  // designated cycles, in use order
  std::vector<std::vector<std::string>> paths;
  std::vector<std::string> uncertified;  // requested but not certified
};

// Clause order: patterns (selection order), then designated cycles, then
// paths; global dedup by literal set keeps the first provenance.
ProverProblem compile(const Graph& g, const RuleSelection& rules);

// The cycles compile would designate on g (rims first, then induced
// 4-cycles not already listed). Exposed for the verifier's symmetry check.
std::vector<std::vector<std::string>> designated_cycles(const Graph& g,
                                                        bool rim_cycles,
                                                        bool four_cycles);

struct CertNode {
  enum class Kind { Branch, Leaf, Symmetry, Hole };
  Kind kind = Kind::Leaf;
  std::optional<NodePair> var;          // Branch, Symmetry
  std::unique_ptr<CertNode> red, blue;  // Branch, Symmetry
  std::vector<NodePair> orbit;          // Symmetry: first variable's orbit
  Clause clause;                        // Leaf: the violated clause
  int hole = -1;                        // Hole: index into Frontier::holes
};

// Self-contained refutation: host, the rule selection to recompile it, and
// the decision tree. Worker count and budget are run details, deliberately
// not recorded, so certificates are byte-identical across them.
struct ProofCertificate {
  Graph host;
  std::vector<std::string> pattern_ids;
  bool rim_cycles = true;
  bool four_cycles = true;
  std::vector<std::vector<std::string>> extra_cycles;
  std::vector<std::vector<std::string>> extra_paths;
  bool symmetry = false;
  bool allow_uncertified = false;
  std::unique_ptr<CertNode> root;
};

// Unexplored branch child: the decisions (not propagations) leading to it.
struct FrontierHole {
  int id = -1;
  std::vector<Literal> decisions;
};

// Partial certificate emitted on budget exhaustion; resuming every hole and
// splicing the results reproduces the unbudgeted certificate byte for byte.
struct Frontier {
  ProofCertificate partial;  // tree containing Hole nodes
  std::vector<FrontierHole> holes;
};

struct ProverOptions {
  int workers = 1;
  double budget_seconds = 0;  // 0 = unlimited
  bool symmetry = false;      // orbit split on the first branched variable
};

struct ProverStats {
  uint64_t branches = 0;
  uint64_t leaves = 0;
  uint64_t propagations = 0;
  uint64_t max_depth = 0;
  double seconds = 0;
};

struct ProverOutcome {
  enum class Kind { NotPCG, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ProofCertificate> certificate;  // NotPCG (elided for brute force)
  std::optional<TriColoring> survivor;          // Unknown, definitive
  bool budget_exhausted = false;                // Unknown, indefinite
  std::optional<Frontier> frontier;             // set when budget_exhausted
  ProverStats stats;
};

// DPLL over non-edge colors: unit propagation, conflict detection, branching
// on the unassigned variable with most clause occurrences (ties by canonical
// pair order), Red child first. Deterministic certificate for fixed options,
// independent of worker count. Refuses uncertified patterns unless allowed.
ProverOutcome prove_not_pcg(const ProverProblem& problem, const ProverOptions& options = {});

// Continue a budgeted run: solves every hole and splices the subtrees.
ProverOutcome resume_frontier(const ProverProblem& problem, const Frontier& frontier,
                              const ProverOptions& options = {});

// Exhaustive 2^m oracle, m <= 24; certificate elided. Survivor is the first
// in canonical order (variable 0 = most significant bit, Red = 0).
ProverOutcome brute_force_refute(const ProverProblem& problem);

// Deep copy helper for certificate trees (used by resume and tests).
std::unique_ptr<CertNode> clone_tree(const CertNode* node);

}  // namespace pcg
