#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcg/coloring.hpp"
#include "pcg/tree.hpp"

namespace pcg {

// Unrooted binary tree shape: nodes 0..2k-3 with leaves 0..k-1, every
// internal node of degree 3, edge count 2k-3.
struct Topology {
  int leaf_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// All leaf-labeled topologies on k leaves, 3 <= k <= 8, generated by
// inserting leaf j into every edge of every (j-1)-leaf topology.
// Deterministic order; count = (2k-5)!!.
std::vector<Topology> enumerate_topologies(int leaf_count);

// Requirement on the realized distance of a leaf pair: Black inside
// [dmin, dmax], Red strictly below, Blue strictly above, NonEdge outside on
// either side (the side is searched), Free unconstrained.
enum class PairClass : uint8_t { Black, Red, Blue, NonEdge, Free };

struct TreeWitness {
  WeightedTree tree;
  DistanceBounds bounds;
  // The pre-lift solution put weight 0 on a leaf edge (coincident leaves);
  // the emitted tree is strictly positive either way.
  bool zero_leaf_weight = false;
};

// Exact feasibility of one topology against a complete coloring (leaf i of t
// is host node i) or a partial class matrix. NonEdge pairs are handled by
// trying every red/blue completion (deterministic order), since "outside the
// bounds" is a disjunction the linear system cannot state directly. On
// success the witness has strictly positive integer weights and is
// re-verified: its PCG coloring reproduces every constrained pair exactly.
std::optional<TreeWitness> feasible_on_topology(const Topology& t,
                                                const TriColoring& c);
std::optional<TreeWitness> feasible_on_topology(
    const Topology& t, const std::vector<std::string>& names,
    const std::vector<std::vector<PairClass>>& classes);

struct RealizabilityResult {
  std::optional<TreeWitness> witness;      // set iff realizable
  std::vector<int> infeasible_topologies;  // topology indices proved infeasible
  int topology_count = 0;
  bool realizable() const { return witness.has_value(); }
};

// Search every topology in generation order; witness from the earliest
// feasible topology (deterministic for any worker count), else the
// infeasibility record covers all of them. Host size 2..8.
RealizabilityResult realizable(const TriColoring& c, int workers = 1);

// Same search for a partial pattern: base edges Black, listed pairs Red/Blue.
// Every other base non-edge must still be a non-edge of the realization; only
// its side (red or blue) is open.
RealizabilityResult realize_pattern(const ForbiddenPattern& p, int workers = 1);

struct PatternReport {
  std::string id;
  int topology_count = 0;
  bool infeasible_all = false;
  std::optional<TreeWitness> witness;  // counterexample when realizable
};

struct CatalogReport {
  std::vector<PatternReport> patterns;
  std::vector<std::string> certified;  // ids infeasible on every topology
  bool all_ok = false;                 // every checked pattern certified
  uint64_t stamp = 0;                  // content hash of the certified set
};

// Certify the catalog patterns (optionally also the weak 2K2 variant) by
// exhaustive per-topology infeasibility. The stamp gates the prover.
CatalogReport verify_catalog(bool include_weak = false, int workers = 1);

// Same certification over an explicit pattern list (testing hook: lets the
// CLI demonstrate that a corrupted pattern is caught as realizable).
CatalogReport verify_catalog_patterns(const std::vector<ForbiddenPattern>& patterns,
                                      int workers = 1);

// FNV-1a 64 over a canonical serialization of the patterns, sorted by id.
uint64_t catalog_stamp(std::vector<ForbiddenPattern> patterns);

struct RecognitionResult {
  bool is_pcg = false;
  std::optional<TreeWitness> witness;  // set iff is_pcg
  // Colorings confirmed unrealizable before the witness (all 2^m on
  // exhaustion; exhaustion is a complete proof of non-membership).
  uint64_t colorings_tried = 0;
};

// Decide PCG membership for a small graph by enumerating every complete
// tri-coloring of its non-edges (canonical order: first variable = most
// significant bit, Red = 0) against every topology. Guards: 2..7 nodes,
// at most 16 non-edges.
RecognitionResult recognize_pcg_small(const Graph& g, int workers = 1);

}  // namespace pcg
