#pragma once

#include <random>
#include <string>
#include <vector>

#include "sft/hamiltonian.hpp"

namespace sft {

// Randomized checks of the algebra laws on a mixed-parity table: graded
// commutativity, associativity of both products, the graded Jacobi
// identity, the Leibniz rule for the classical differentials, and the
// hbar-leading commutator against the bracket. Tests and the CLI share
// this battery so a reported seed reproduces exactly.

// Table with even and odd conjugate pairs of assorted multiplicities,
// scalar t's of both parities, and hbar.
std::shared_ptr<VariableTable> law_table();

// Parity-homogeneous random element: up to max_terms monomials of at most
// max_factors factors each, small rational coefficients.
SuperElement random_element(std::mt19937_64& rng, const VariableTable& tab, Parity parity,
                            int max_terms, int max_factors);

struct LawFailure {
  std::string law;
  std::string detail;
};

struct LawReport {
  int cases_per_law = 0;
  int hbar_pairs = 0;
  std::vector<LawFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Runs `cases` instances of every law plus `hbar_pairs` leading-order
// comparisons, all driven by the seed.
LawReport run_law_suite(unsigned long seed, int cases, int hbar_pairs);

}  // namespace sft
