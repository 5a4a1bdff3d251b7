#pragma once

#include <string>

#include "pcg/prover.hpp"

namespace pcg {

struct VerifyResult {
  bool ok = false;
  std::string path;     // node where verification failed, e.g. "root.red.blue"
  std::string message;  // failure description; empty on success

  explicit operator bool() const { return ok; }
};

// Independent replay of a refutation certificate against host graph g:
//   - every branch has both children, on an unassigned non-edge variable;
//   - every leaf's clause is re-derived from scratch (pattern occurrences
//     re-matched against g, cycle/path structure re-checked) and every one
//     of its literals is falsified by the root-to-leaf trail;
//   - a symmetry split may appear only at the root, its orbit must equal the
//     recomputed automorphism orbit, and the problem's clause set must be
//     closed under the host's automorphisms.
// None of this reuses the prover's propagation or conflict machinery.
VerifyResult verify_certificate(const Graph& g, const ProofCertificate& cert,
                                const ProverProblem& problem);

}  // namespace pcg
