#ifndef LPSEM_GENERATE_HPP
#define LPSEM_GENERATE_HPP

#include <cstdint>

#include "lpsem/syntax.hpp"

namespace lpsem {

struct GeneratorParams {
  std::size_t num_atoms = 4;
  std::size_t num_clauses = 6;
  std::size_t max_body = 3;
  double neg_prob = 0.5;
  std::uint64_t seed = 0;
};

// Deterministic propositional program generator for the property sweeps.
// All atoms are declared, so the base does not depend on which atoms happen
// to occur; bodies never repeat an atom; neg_prob 0 yields definite programs.
Program random_program(const GeneratorParams& params);

}  // namespace lpsem

#endif
