#include "sft/weyl.hpp"

#include <stdexcept>

namespace sft {

namespace {

bool factor_odd(const VariableTable& tab, const Factor& f) {
  return tab.is_odd(f.v) && (f.e % 2 != 0);
}

struct Contraction {
  size_t p_pos;   // index into the P part of the left monomial
  size_t q_pos;   // index into the non-P part of the right monomial
  long a, b;      // available exponents
  long kappa;
  bool odd;
};

void weyl_term_product(const VariableTable& tab, const Monomial& m1, const Rat& c1,
                       const Monomial& m2, const Rat& c2, VarId hbar,
                       const TruncationPolicy& policy, SuperElement& out) {
  std::vector<Factor> p1, rest1, rest2, p2;
  for (const auto& f : m1.factors)
    (tab.spec(f.v).kind == Kind::P ? p1 : rest1).push_back(f);
  for (const auto& f : m2.factors)
    (tab.spec(f.v).kind == Kind::P ? p2 : rest2).push_back(f);

  std::vector<Contraction> cands;
  for (size_t i = 0; i < p1.size(); ++i) {
    VarId conj = tab.spec(p1[i].v).conjugate;
    if (conj == kNoVar) continue;
    for (size_t j = 0; j < rest2.size(); ++j) {
      if (rest2[j].v != conj) continue;
      cands.push_back({i, j, p1[i].e, rest2[j].e, tab.spec(p1[i].v).kappa,
                       tab.is_odd(p1[i].v)});
    }
  }

  Rat base = c1 * c2;
  int sigma = pbw_sign(tab, m1) * pbw_sign(tab, m2);
  if (sigma < 0) base = -base;

  std::vector<long> js(cands.size(), 0);
  for (;;) {
    Rat coeff = base;
    long hshift = 0;
    for (size_t i = 0; i < cands.size(); ++i) {
      long j = js[i];
      if (j == 0) continue;
      hshift += j;
      Rat factor(binomial(cands[i].a, j) * binomial(cands[i].b, j) * factorial(j));
      coeff *= factor * rat_pow(Rat(cands[i].kappa), j);
    }

    // Koszul cost of extracting each contracted odd pair: the odd factors
    // still standing between the p and its q. Even pairs cost nothing.
    std::vector<bool> gone_p(p1.size(), false), gone_q(rest2.size(), false);
    int csign = 1;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (js[i] == 0 || !cands[i].odd) continue;
      long crossings = 0;
      for (size_t k = cands[i].p_pos + 1; k < p1.size(); ++k)
        if (!gone_p[k] && factor_odd(tab, p1[k])) ++crossings;
      for (size_t k = 0; k < cands[i].q_pos; ++k)
        if (!gone_q[k] && factor_odd(tab, rest2[k])) ++crossings;
      if (crossings % 2) csign = -csign;
      gone_p[cands[i].p_pos] = true;
      gone_q[cands[i].q_pos] = true;
    }
    if (csign < 0) coeff = -coeff;

    std::vector<Factor> word;
    word.reserve(m1.factors.size() + m2.factors.size() + 1);
    word.insert(word.end(), rest1.begin(), rest1.end());
    std::vector<long> reduce_q(rest2.size(), 0);
    for (size_t i = 0; i < p1.size(); ++i) {
      Factor f = p1[i];
      for (size_t c = 0; c < cands.size(); ++c)
        if (cands[c].p_pos == i) f.e -= js[c];
      if (f.e != 0) word.push_back(f);
    }
    for (size_t c = 0; c < cands.size(); ++c) reduce_q[cands[c].q_pos] += js[c];
    for (size_t j = 0; j < rest2.size(); ++j) {
      Factor f = rest2[j];
      f.e -= reduce_q[j];
      if (f.e != 0) word.push_back(f);
    }
    word.insert(word.end(), p2.begin(), p2.end());
    if (hshift != 0) word.push_back({hbar, hshift});

    auto [s, key] = normalize_word(tab, word);
    if (s != 0 && policy.keeps(tab, key))
      out.add_term(key, s < 0 ? Rat(-coeff) : coeff);

    // Next contraction multi-index.
    size_t pos = 0;
    while (pos < js.size()) {
      long cap = std::min(cands[pos].a, cands[pos].b);
      if (js[pos] < cap) {
        ++js[pos];
        break;
      }
      js[pos] = 0;
      ++pos;
    }
    if (pos == js.size()) break;
  }
}

}  // namespace

int pbw_sign(const VariableTable& tab, const Monomial& m) {
  long odd_p = 0, odd_rest = 0;
  for (const auto& f : m.factors) {
    if (!factor_odd(tab, f)) continue;
    if (tab.spec(f.v).kind == Kind::P)
      ++odd_p;
    else
      ++odd_rest;
  }
  return (odd_p * odd_rest) % 2 ? -1 : 1;
}

SuperElement weyl_mul(const SuperElement& F, const SuperElement& G, VarId hbar,
                      const TruncationPolicy& policy) {
  const VariableTable& tab = F.table();
  if (tab.spec(hbar).kind != Kind::HBAR)
    throw std::invalid_argument("weyl_mul: hbar variable has wrong kind");
  SuperElement out(tab);
  for (const auto& [m1, c1] : F.terms())
    for (const auto& [m2, c2] : G.terms())
      weyl_term_product(tab, m1, c1, m2, c2, hbar, policy, out);
  return out;
}

SuperElement weyl_commutator(const SuperElement& F, const SuperElement& G, VarId hbar,
                             const TruncationPolicy& policy) {
  SuperElement out(F.table());
  for (Parity pf : {Parity::Even, Parity::Odd}) {
    SuperElement fp = F.parity_part(pf);
    if (fp.is_zero()) continue;
    for (Parity pg : {Parity::Even, Parity::Odd}) {
      SuperElement gp = G.parity_part(pg);
      if (gp.is_zero()) continue;
      SuperElement fg = weyl_mul(fp, gp, hbar, policy);
      SuperElement gf = weyl_mul(gp, fp, hbar, policy);
      bool both_odd = pf == Parity::Odd && pg == Parity::Odd;
      out += both_odd ? fg + gf : fg - gf;
    }
  }
  return out;
}

SuperElement weyl_d(const Hamiltonian& H, const SuperElement& G, VarId hbar,
                    const TruncationPolicy& policy) {
  return weyl_commutator(H.body, G, hbar, policy);
}

}  // namespace sft
