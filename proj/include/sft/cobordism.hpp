#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sft/hamiltonian.hpp"

namespace sft {

// An interface pair: the p variable consumed on one side against the q
// variable of the same orbit on the other side.
struct InterfacePair {
  VarId p;
  VarId q;
};

// Left action F |-> H(F): every interface p of H becomes kappa * hbar *
// (left d/dq of the paired q), everything else in H multiplies from the
// left in normal order.
SuperElement weyl_act_left(const SuperElement& H, const SuperElement& F,
                           const std::vector<InterfacePair>& pairs, VarId hbar,
                           const TruncationPolicy& policy);

// Right action F |-> F(H): every interface q of H becomes kappa * hbar *
// (right d/dp of the paired p) acting on F from the right.
SuperElement weyl_act_right(const SuperElement& F, const SuperElement& H,
                            const std::vector<InterfacePair>& pairs, VarId hbar,
                            const TruncationPolicy& policy);

// Composition product: interface p's of F differentiate G, then the
// leftover interface q's are set to zero. F's other variables multiply.
SuperElement star(const SuperElement& F, const SuperElement& G,
                  const std::vector<InterfacePair>& pairs, VarId hbar,
                  const TruncationPolicy& policy);

// diamond(F, G) = log(exp(F) * exp(G)) under the star product.
SuperElement diamond(const SuperElement& F, const SuperElement& G,
                     const std::vector<InterfacePair>& pairs, VarId hbar,
                     const TruncationPolicy& policy);

// Genus-zero composition of potentials along the constraint surface
//   q = kappa * df_minus/dp (interface q's), p = kappa * df_plus/dq,
// solved by iteration under the policy; the value is
//   f_minus + f_plus - sum kappa^{-1} q p on the constraint.
SuperElement sharp(const SuperElement& f_minus, const SuperElement& f_plus,
                   const std::vector<InterfacePair>& pairs,
                   const TruncationPolicy& policy);

enum class RestrictSide { ReplaceQ, ReplaceP };

// Substitutes each paired q := weight * df/dp (or p := weight * df/dq)
// into h, the constraint-surface restriction used by the evolution
// equations.
SuperElement lagrangian_restrict(const SuperElement& h, const SuperElement& f,
                                 const Pairing& pairing, RestrictSide side,
                                 const TruncationPolicy& policy);

// D_W applied to exp(F) for the cobordism with ends (H_minus, H_plus):
// returns H_minus(exp F) - (exp F)(H_plus); zero certifies the potential.
SuperElement dw_defect(const Hamiltonian& h_minus, const Hamiltonian& h_plus,
                       const SuperElement& F,
                       const std::vector<InterfacePair>& minus_pairs,
                       const std::vector<InterfacePair>& plus_pairs, VarId hbar,
                       const TruncationPolicy& policy);

// Linearization at the zero section: q_plus -> kappa * (coefficient of the
// matching p_plus in the p-linear part of f).
std::map<VarId, SuperElement> psi_from_potential(const SuperElement& f,
                                                 const std::vector<InterfacePair>& pairs);

// Checks the energy positivity constraint omega(d) + sum of orbit actions
// > 0 on every monomial; returns a violating monomial's display string.
std::optional<std::string> novikov_violation(const SuperElement& e, const Rat& omega_per_z,
                                             const std::map<VarId, Rat>& actions);

}  // namespace sft
