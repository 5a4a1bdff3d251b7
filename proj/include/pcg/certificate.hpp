#pragma once

#include <string>

#include "pcg/coloring.hpp"
#include "pcg/prover.hpp"

namespace pcg {

// Certificate file: {"format": "pcg-cert-1", "host": ..., "options": ...,
// "root": node} with node one of
//   {"branch": [pair, {"red": node, "blue": node}]}
//   {"leaf": {"clause": {"rule": ..., provenance..., "literals": ...}}}
//   {"symmetry": [pair, {"orbit": [pair...], "red": node, "blue": node}]}
//   {"hole": id}
// Options record the rule selection, not run details (workers, budget), so
// the same refutation serializes identically however it was computed.
std::string certificate_to_json(const ProofCertificate& cert);
ProofCertificate certificate_from_json(const std::string& text);

// Frontier file: same shape with "format": "pcg-frontier-1" plus
// "holes": [{"id": n, "decisions": [[pair, color], ...]}, ...].
// Hole ids are 0..n-1 in depth-first order and must match the tree.
std::string frontier_to_json(const Frontier& frontier);
Frontier frontier_from_json(const std::string& text);

// Coloring file: {"black": [pair...], "red": [pair...], "blue": [pair...]},
// each list sorted. black must equal the host's edges, red/blue its non-edges.
std::string coloring_to_json(const TriColoring& c);
TriColoring coloring_from_json(const std::string& text, const Graph& host);

}  // namespace pcg
