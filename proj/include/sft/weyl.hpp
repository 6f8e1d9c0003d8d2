#pragma once

#include "sft/hamiltonian.hpp"

namespace sft {

// Koszul sign relating a stored monomial (p-block first) to its normal-
// ordered word (p-block last); -1 exactly when the monomial holds an odd
// number of odd p's and an odd number of other odd factors.
int pbw_sign(const VariableTable& tab, const Monomial& m);

// Associative product on the quantized algebra. A stored monomial stands
// for the normal-ordered word of its factors (q's left of p's) times the
// Koszul sign of freely moving its p-block rightward; the product Wick-
// contracts p-factors of the left element against conjugate q-factors of
// the right one, each contraction paying kappa * hbar.
SuperElement weyl_mul(const SuperElement& F, const SuperElement& G, VarId hbar,
                      const TruncationPolicy& policy = TruncationPolicy::none());

// F o G - (-1)^{|F||G|} G o F, extended bilinearly over parity parts.
SuperElement weyl_commutator(const SuperElement& F, const SuperElement& G, VarId hbar,
                             const TruncationPolicy& policy = TruncationPolicy::none());

// D_H(G) = [H, G]. With the master equation [H, H] = 0 this squares to
// zero, which is what the dw-style checks exercise.
SuperElement weyl_d(const Hamiltonian& H, const SuperElement& G, VarId hbar,
                    const TruncationPolicy& policy = TruncationPolicy::none());

}  // namespace sft
