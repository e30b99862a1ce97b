#ifndef LPSEM_FUZZ_HPP
#define LPSEM_FUZZ_HPP

#include <optional>
#include <string>

#include "lpsem/generate.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// Runs the cross-semantics invariant suite on one ground program and
// returns a description of the first violated invariant, or nothing.
// Covers: operator consistency and chain growth, unfounded-set maximality
// against subset enumeration, alternating fixpoint vs. well-founded model,
// the Fitting/weakly-perfect/well-founded containments, stable-model
// bracketing and Fages equivalence, canonical-levels certification, and the
// greatest-model oracle on small bases.
std::optional<std::string> check_invariants(const GroundProgram& g);

struct FuzzReport {
  std::size_t checked = 0;
  std::optional<std::string> failure;      // first violated invariant
  std::string counterexample;              // offending program text, verbatim
};

// Generates `count` programs from consecutive seeds and checks each.
FuzzReport run_fuzz(std::size_t count, std::uint64_t seed, const GeneratorParams& shape);

}  // namespace lpsem

#endif
