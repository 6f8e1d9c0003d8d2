#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sft/rational.hpp"
#include "sft/variables.hpp"

namespace sft {

struct Factor {
  VarId v;
  long e;  // exponent; negative only for Z and HBAR kinds
  bool operator==(const Factor& o) const { return v == o.v && e == o.e; }
};

// A canonical monomial: factors sorted by table rank, no repeats, no zero
// exponents, odd variables at most to the first power. The empty factor
// list is the unit monomial.
struct Monomial {
  std::vector<Factor> factors;

  bool operator==(const Monomial& o) const { return factors == o.factors; }
  bool is_unit() const { return factors.empty(); }
  long exponent_of(VarId v) const;
};

// Strict weak order on canonical monomials, independent of any table. Used
// as the term-map comparator; display order is sorted separately.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sorts an arbitrary factor word into canonical order, tracking the Koszul
// sign of the permutation (odd-past-odd swaps flip it). Returns sign 0 when
// an odd variable ends up squared. Exponents of the same variable merge;
// exact cancellations (possible for z/hbar) drop out.
std::pair<int, Monomial> normalize_word(const VariableTable& tab, std::vector<Factor> word);

Rat monomial_degree(const VariableTable& tab, const Monomial& m);
Parity monomial_parity(const VariableTable& tab, const Monomial& m);
long monomial_winding(const VariableTable& tab, const Monomial& m);

// Weight = sum of exponent * kappa over orbit (P/Q) factors; the slice
// truncation parameter for Hamiltonians and homology.
long monomial_weight(const VariableTable& tab, const Monomial& m);

// Same sum restricted to factors of one kind (P or Q sector weight).
long monomial_kind_weight(const VariableTable& tab, const Monomial& m, Kind kind);

long hbar_exponent(const VariableTable& tab, const Monomial& m);
long z_degree(const VariableTable& tab, const Monomial& m);

std::string monomial_str(const VariableTable& tab, const Monomial& m);

}  // namespace sft
