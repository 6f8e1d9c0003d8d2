#include "sft/cobordism.hpp"

#include <stdexcept>
#include <unordered_map>

#include "sft/weyl.hpp"

namespace sft {

namespace {

SuperElement hbar_power(const VariableTable& tab, VarId hbar, long e) {
  if (e == 0) return SuperElement::constant(tab, 1);
  return SuperElement::var(tab, hbar, e);
}

SuperElement substitute_set(const SuperElement& e,
                            const std::map<VarId, SuperElement>& images,
                            const TruncationPolicy& policy) {
  if (images.empty()) return e;
  return e.substituted(e.table(), images, policy);
}

}  // namespace

SuperElement weyl_act_left(const SuperElement& H, const SuperElement& F,
                           const std::vector<InterfacePair>& pairs, VarId hbar,
                           const TruncationPolicy& policy) {
  const VariableTable& tab = H.table();
  std::unordered_map<VarId, VarId> pq;
  for (const auto& pr : pairs) pq.emplace(pr.p, pr.q);

  SuperElement out(tab);
  for (const auto& [m, c] : H.terms()) {
    std::vector<Factor> deriv, rest;
    for (const auto& f : m.factors) {
      if (tab.spec(f.v).kind == Kind::P && pq.count(f.v))
        deriv.push_back(f);
      else
        rest.push_back(f);
    }
    SuperElement acc = F;
    long hshift = 0;
    // Operators compose right-to-left: the last p in normal order acts
    // first.
    for (auto it = deriv.rbegin(); it != deriv.rend() && !acc.is_zero(); ++it) {
      Rat kappa(tab.spec(it->v).kappa);
      for (long i = 0; i < it->e; ++i) acc = acc.left_partial(pq.at(it->v)) * kappa;
      hshift += it->e;
    }
    if (acc.is_zero()) continue;
    acc = acc.mul(hbar_power(tab, hbar, hshift), policy);
    Rat coeff = c;
    if (pbw_sign(tab, m) < 0) coeff = -coeff;
    SuperElement rest_elem(tab);
    rest_elem.add_term(Monomial{rest}, 1);
    out += (rest_elem.mul(acc, policy)) * coeff;
  }
  return out;
}

SuperElement weyl_act_right(const SuperElement& F, const SuperElement& H,
                            const std::vector<InterfacePair>& pairs, VarId hbar,
                            const TruncationPolicy& policy) {
  const VariableTable& tab = H.table();
  std::unordered_map<VarId, VarId> qp;
  for (const auto& pr : pairs) qp.emplace(pr.q, pr.p);

  SuperElement out(tab);
  for (const auto& [m, c] : H.terms()) {
    std::vector<Factor> pblock, rest;
    for (const auto& f : m.factors) {
      if (tab.spec(f.v).kind == Kind::P)
        pblock.push_back(f);
      else
        rest.push_back(f);
    }
    SuperElement acc = F;
    long hshift = 0;
    // Normal order reads rest then p-block; as right operators they apply
    // left-to-right.
    for (const auto& f : rest) {
      if (acc.is_zero()) break;
      if (tab.spec(f.v).kind == Kind::Q && qp.count(f.v)) {
        Rat kappa(tab.spec(f.v).kappa);
        for (long i = 0; i < f.e; ++i) acc = acc.right_partial(qp.at(f.v)) * kappa;
        hshift += f.e;
      } else {
        acc = acc.mul(SuperElement::var(tab, f.v, f.e), policy);
      }
    }
    for (const auto& f : pblock) {
      if (acc.is_zero()) break;
      acc = acc.mul(SuperElement::var(tab, f.v, f.e), policy);
    }
    if (acc.is_zero()) continue;
    acc = acc.mul(hbar_power(tab, hbar, hshift), policy);
    Rat coeff = c;
    if (pbw_sign(tab, m) < 0) coeff = -coeff;
    out += acc * coeff;
  }
  return out;
}

SuperElement star(const SuperElement& F, const SuperElement& G,
                  const std::vector<InterfacePair>& pairs, VarId hbar,
                  const TruncationPolicy& policy) {
  SuperElement out = weyl_act_left(F, G, pairs, hbar, policy);
  for (const auto& pr : pairs) out = out.evaluated(pr.q, 0);
  return out;
}

SuperElement diamond(const SuperElement& F, const SuperElement& G,
                     const std::vector<InterfacePair>& pairs, VarId hbar,
                     const TruncationPolicy& policy) {
  SuperElement eF = exp_truncated(F, policy);
  SuperElement eG = exp_truncated(G, policy);
  SuperElement prod = star(eF, eG, pairs, hbar, policy);
  SuperElement one = SuperElement::constant(F.table(), 1);
  return log1p_truncated(prod - one, policy);
}

SuperElement sharp(const SuperElement& f_minus, const SuperElement& f_plus,
                   const std::vector<InterfacePair>& pairs,
                   const TruncationPolicy& policy) {
  const VariableTable& tab = f_minus.table();
  std::map<VarId, SuperElement> pimg, qimg;
  for (const auto& pr : pairs) {
    pimg.emplace(pr.p, SuperElement(tab));
    qimg.emplace(pr.q, SuperElement(tab));
  }
  for (int iter = 0; iter < 60; ++iter) {
    bool changed = false;
    std::map<VarId, SuperElement> new_q, new_p;
    for (const auto& pr : pairs) {
      Rat kappa(tab.spec(pr.p).kappa);
      SuperElement qv = substitute_set(f_minus.left_partial(pr.p), pimg, policy) * kappa;
      SuperElement pv = substitute_set(f_plus.left_partial(pr.q), qimg, policy) * kappa;
      if (!(qv == qimg.at(pr.q))) changed = true;
      if (!(pv == pimg.at(pr.p))) changed = true;
      new_q.emplace(pr.q, std::move(qv));
      new_p.emplace(pr.p, std::move(pv));
    }
    qimg = std::move(new_q);
    pimg = std::move(new_p);
    if (!changed) {
      SuperElement out = substitute_set(f_minus, pimg, policy);
      out += substitute_set(f_plus, qimg, policy);
      for (const auto& pr : pairs) {
        Rat kappa(tab.spec(pr.p).kappa);
        out -= qimg.at(pr.q).mul(pimg.at(pr.p), policy) * (Rat(1) / kappa);
      }
      return out;
    }
  }
  throw std::domain_error("sharp: constraint iteration did not stabilize");
}

SuperElement lagrangian_restrict(const SuperElement& h, const SuperElement& f,
                                 const Pairing& pairing, RestrictSide side,
                                 const TruncationPolicy& policy) {
  const VariableTable& tab = h.table();
  std::map<VarId, SuperElement> images;
  for (const auto& e : pairing.entries) {
    VarId target = side == RestrictSide::ReplaceQ ? e.q : e.p;
    VarId source = side == RestrictSide::ReplaceQ ? e.p : e.q;
    SuperElement img = f.left_partial(source) * e.weight;
    auto [it, inserted] = images.try_emplace(target, img);
    if (!inserted) it->second += img;
  }
  return h.substituted(tab, images, policy);
}

SuperElement dw_defect(const Hamiltonian& h_minus, const Hamiltonian& h_plus,
                       const SuperElement& F,
                       const std::vector<InterfacePair>& minus_pairs,
                       const std::vector<InterfacePair>& plus_pairs, VarId hbar,
                       const TruncationPolicy& policy) {
  SuperElement eF = exp_truncated(F, policy);
  SuperElement left = weyl_act_left(h_minus.body, eF, minus_pairs, hbar, policy);
  SuperElement right = weyl_act_right(eF, h_plus.body, plus_pairs, hbar, policy);
  return left - right;
}

std::map<VarId, SuperElement> psi_from_potential(const SuperElement& f,
                                                 const std::vector<InterfacePair>& pairs) {
  const VariableTable& tab = f.table();
  std::map<VarId, SuperElement> psi;
  for (const auto& pr : pairs) {
    SuperElement img = f.coefficient_of(pr.p, 1);
    for (const auto& other : pairs) img = img.evaluated(other.p, 0);
    psi.emplace(pr.q, img * Rat(tab.spec(pr.p).kappa));
  }
  return psi;
}

std::optional<std::string> novikov_violation(const SuperElement& e, const Rat& omega_per_z,
                                             const std::map<VarId, Rat>& actions) {
  const VariableTable& tab = e.table();
  for (const auto& [m, c] : e.terms()) {
    long zd = z_degree(tab, m);
    bool has_orbit = false;
    Rat total = omega_per_z * zd;
    for (const auto& f : m.factors) {
      auto it = actions.find(f.v);
      if (it != actions.end()) {
        has_orbit = true;
        total += it->second * f.e;
      }
    }
    // Constant curves (no z twist, no orbit asymptotics) carry no energy
    // constraint.
    if (zd == 0 && !has_orbit) continue;
    if (total <= 0) return monomial_str(tab, m);
  }
  return std::nullopt;
}

}  // namespace sft
