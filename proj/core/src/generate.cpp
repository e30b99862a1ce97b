#include "lpsem/generate.hpp"

#include <algorithm>
#include <random>

namespace lpsem {

Program random_program(const GeneratorParams& params) {
  // mt19937_64 with plain modulo sampling keeps output identical across
  // standard libraries; distribution classes are not portable.
  std::mt19937_64 rng(params.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto coin = [&](double p) {
    return static_cast<double>(rng() % 1000000) < p * 1000000.0;
  };

  std::vector<Atom> atoms;
  atoms.reserve(params.num_atoms);
  for (std::size_t k = 0; k < params.num_atoms; ++k)
    atoms.push_back(Atom{"a" + std::to_string(k), {}});

  Program p;
  for (const Atom& a : atoms) p.declared_atoms.insert(a);

  for (std::size_t c = 0; c < params.num_clauses; ++c) {
    Clause clause;
    clause.head = atoms[pick(params.num_atoms)];
    std::size_t body_len = params.max_body == 0 ? 0 : pick(params.max_body + 1);
    body_len = std::min(body_len, params.num_atoms);
    // body atoms without replacement
    std::vector<std::size_t> order(params.num_atoms);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    for (std::size_t k = 0; k < body_len; ++k) {
      std::size_t j = k + pick(order.size() - k);
      std::swap(order[k], order[j]);
      clause.body.push_back({coin(params.neg_prob), atoms[order[k]]});
    }
    p.clauses.push_back(std::move(clause));
  }
  return p;
}

}  // namespace lpsem
