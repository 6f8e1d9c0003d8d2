#pragma once

#include <memory>
#include <tuple>
#include <vector>

#include "sft/element.hpp"

namespace sft {

// Which layer of the algebra the element lives in: full Weyl (hbar
// present), rational (single 1/hbar stripped off), or classical
// (p-linear data only matters).
enum class Level { Quantum, Rational, Classical };

const char* level_name(Level l);

// How p's pair with q's in brackets and differentials. Each entry is an
// ordered pair (p, q) with weight kappa * eta for that pair; the bracket
// sums over entries as written, so both (p_{k,i}, q_{k,j}) orientations of
// an off-diagonal intersection form appear as separate entries.
struct Pairing {
  struct Entry {
    VarId p;
    VarId q;
    Rat weight;
  };
  std::vector<Entry> entries;

  // Pairs each p with its linked conjugate q, weight = kappa.
  static Pairing conjugate(const VariableTable& tab);

  // Pairs p_{k,i} with q_{k,j} at weight k * eta[i][j], indices read from
  // base_index. Entries with eta[i][j] == 0 are dropped.
  static Pairing intersection_form(const VariableTable& tab,
                                   const std::vector<std::vector<Rat>>& eta);
};

struct Hamiltonian {
  SuperElement body;
  int dimension_n = 0;
  Level level = Level::Classical;
  Pairing pairing;
};

struct Potential {
  SuperElement body;
  int dimension_n = 0;
};

// Sum of degree * exponent over all factors, hbar included; the structure
// equations make every Hamiltonian term come out at the same total degree.
bool degree_homogeneous(const SuperElement& e, const Rat& expected);

}  // namespace sft
