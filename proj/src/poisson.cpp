#include "sft/poisson.hpp"

namespace sft {

namespace {

SuperElement bracket_homogeneous(const SuperElement& f, const SuperElement& g,
                                 Parity pf, Parity pg, const Pairing& pairing,
                                 const TruncationPolicy& policy) {
  SuperElement out(f.table());
  bool both_odd = pf == Parity::Odd && pg == Parity::Odd;
  for (const auto& e : pairing.entries) {
    // p-slot derivatives act from the right, q-slot from the left; with
    // left derivatives on both slots the odd-pair Jacobi identity fails.
    SuperElement t1 = f.right_partial(e.p).mul(g.left_partial(e.q), policy);
    SuperElement t2 = g.right_partial(e.p).mul(f.left_partial(e.q), policy);
    // t1 - (-1)^{|f||g|} t2
    out += (both_odd ? t1 + t2 : t1 - t2) * e.weight;
  }
  return out;
}

}  // namespace

SuperElement poisson_bracket(const SuperElement& f, const SuperElement& g,
                             const Pairing& pairing, const TruncationPolicy& policy) {
  SuperElement out(f.table());
  for (Parity pf : {Parity::Even, Parity::Odd}) {
    SuperElement fp = f.parity_part(pf);
    if (fp.is_zero()) continue;
    for (Parity pg : {Parity::Even, Parity::Odd}) {
      SuperElement gp = g.parity_part(pg);
      if (gp.is_zero()) continue;
      out += bracket_homogeneous(fp, gp, pf, pg, pairing, policy);
    }
  }
  return out;
}

std::map<VarId, SuperElement> classical_rules(const SuperElement& h, const Pairing& pairing) {
  const VariableTable& tab = h.table();
  std::map<VarId, SuperElement> rules;
  for (const auto& e : pairing.entries) {
    SuperElement r = h.right_partial(e.p) * e.weight;
    auto [it, inserted] = rules.try_emplace(e.q, r);
    if (!inserted) it->second += r;
  }
  for (auto& [q, r] : rules) {
    for (VarId p : tab.of_kind(Kind::P)) r = r.evaluated(p, 0);
  }
  return rules;
}

SuperElement apply_derivation(const std::map<VarId, SuperElement>& rules,
                              const SuperElement& f, const TruncationPolicy& policy) {
  SuperElement out(f.table());
  for (const auto& [v, rule] : rules) {
    if (rule.is_zero()) continue;
    SuperElement df = f.left_partial(v);
    if (df.is_zero()) continue;
    out += rule.mul(df, policy);
  }
  return out;
}

SuperElement d_h(const Hamiltonian& h, const SuperElement& f, const TruncationPolicy& policy) {
  SuperElement out = poisson_bracket(h.body, f, h.pairing, policy);
  for (VarId p : out.table().of_kind(Kind::P)) out = out.evaluated(p, 0);
  return out;
}

}  // namespace sft
