#pragma once

#include <map>

#include "sft/hamiltonian.hpp"

namespace sft {

// Graded Poisson bracket: sum over pairing entries (p, q, w) of
//   w * (df/dp * dg/dq - (-1)^{|f||g|} dg/dp * df/dq),
// p-derivatives from the right, q-derivatives from the left (the side
// matters only for odd pairs, where it is what makes Jacobi hold).
// Mixed-parity inputs split bilinearly.
SuperElement poisson_bracket(const SuperElement& f, const SuperElement& g,
                             const Pairing& pairing,
                             const TruncationPolicy& policy = TruncationPolicy::none());

// Generator rules of the classical differential d(q) = {h, q}|_{p=0}:
// for each pairing entry (p, q, w), d(q) += w * (dh/dp)|_{p:=0}.
std::map<VarId, SuperElement> classical_rules(const SuperElement& h, const Pairing& pairing);

// Extends generator rules to the whole algebra as an odd derivation:
// d(m) = sum over variables v of rule(v) * df/dv.
SuperElement apply_derivation(const std::map<VarId, SuperElement>& rules,
                              const SuperElement& f,
                              const TruncationPolicy& policy = TruncationPolicy::none());

// d_h(f) = {h, f}|_{p=0} computed through the generator rules.
SuperElement d_h(const Hamiltonian& h, const SuperElement& f,
                 const TruncationPolicy& policy = TruncationPolicy::none());

}  // namespace sft
