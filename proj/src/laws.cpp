#include "sft/laws.hpp"

#include "sft/poisson.hpp"
#include "sft/weyl.hpp"

namespace sft {
namespace {

std::string clip(const std::string& s) {
  return s.size() <= 160 ? s : s.substr(0, 157) + "...";
}

Rat comm_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? Rat(-1) : Rat(1);
}

Rat par_sign(Parity a) { return a == Parity::Odd ? Rat(-1) : Rat(1); }

SuperElement zero_p(const SuperElement& e) {
  SuperElement r = e;
  for (VarId v : e.table().of_kind(Kind::P)) r = r.evaluated(v, 0);
  return r;
}

}  // namespace

std::shared_ptr<VariableTable> law_table() {
  auto tab = std::make_shared<VariableTable>();
  auto pair = [&](const char* l, Parity par, long kappa, long deg) {
    tab->add_pair({std::string("p_") + l, Kind::P, par, Rat(deg), kappa, 0, 0, kNoVar},
                  {std::string("q_") + l, Kind::Q, par, Rat(deg), kappa, 0, 0, kNoVar});
  };
  pair("a", Parity::Even, 1, -2);
  pair("b", Parity::Even, 2, -4);
  pair("c", Parity::Odd, 1, -1);
  pair("d", Parity::Odd, 3, -3);
  tab->add({"t0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  tab->add({"t1", Kind::T, Parity::Odd, Rat(-1), 1, 0, -1, kNoVar});
  tab->add({"hbar", Kind::HBAR, Parity::Even, Rat(-4), 1, 0, -1, kNoVar});
  tab->freeze();
  return tab;
}

SuperElement random_element(std::mt19937_64& rng, const VariableTable& tab, Parity parity,
                            int max_terms, int max_factors) {
  std::vector<VarId> pool;
  for (VarId v = 0; v < tab.size(); ++v)
    if (tab.spec(v).kind != Kind::HBAR) pool.push_back(v);
  SuperElement e(tab);
  int nterms = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_terms));
  for (int t = 0; t < nterms; ++t) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      int k = static_cast<int>(rng() % static_cast<unsigned long>(max_factors + 1));
      std::vector<Factor> word;
      int par = 0;
      for (int j = 0; j < k; ++j) {
        VarId v = pool[rng() % pool.size()];
        long exp = tab.is_odd(v) ? 1 : 1 + static_cast<long>(rng() % 2);
        if (tab.is_odd(v)) par ^= 1;
        word.push_back({v, exp});
      }
      if (par != (parity == Parity::Odd ? 1 : 0)) continue;
      long num = 1 + static_cast<long>(rng() % 5);
      if (rng() & 1) num = -num;
      long den = 1 + static_cast<long>(rng() % 4);
      e.add_word(std::move(word), rat(num, den));
      break;
    }
  }
  return e;
}

LawReport run_law_suite(unsigned long seed, int cases, int hbar_pairs) {
  LawReport rep;
  rep.cases_per_law = cases;
  rep.hbar_pairs = hbar_pairs;
  auto tab_ptr = law_table();
  const VariableTable& tab = *tab_ptr;
  Pairing pr = Pairing::conjugate(tab);
  VarId hb = tab.require("hbar");
  std::mt19937_64 rng(seed);
  auto pick = [&] { return (rng() & 1) ? Parity::Odd : Parity::Even; };
  auto draw = [&](Parity p) { return random_element(rng, tab, p, 3, 3); };
  auto fail = [&](const char* law, int i, const SuperElement& witness) {
    rep.failures.push_back({law, "case " + std::to_string(i) + ": residual " +
                                     clip(witness.str())});
  };

  for (int i = 0; i < cases; ++i) {
    Parity pf = pick(), pg = pick(), ph = pick();
    SuperElement f = draw(pf), g = draw(pg), h = draw(ph);

    SuperElement comm = f * g - comm_sign(pf, pg) * (g * f);
    if (!comm.is_zero()) fail("supercommutativity", i, comm);

    SuperElement assoc = (f * g) * h - f * (g * h);
    if (!assoc.is_zero()) fail("associativity", i, assoc);

    SuperElement wassoc =
        weyl_mul(weyl_mul(f, g, hb), h, hb) - weyl_mul(f, weyl_mul(g, h, hb), hb);
    if (!wassoc.is_zero()) fail("weyl associativity", i, wassoc);

    SuperElement jac = poisson_bracket(f, poisson_bracket(g, h, pr), pr) -
                       poisson_bracket(poisson_bracket(f, g, pr), h, pr) -
                       comm_sign(pf, pg) * poisson_bracket(g, poisson_bracket(f, h, pr), pr);
    if (!jac.is_zero()) fail("jacobi", i, jac);

    SuperElement ho = draw(Parity::Odd);
    auto rules = classical_rules(ho, pr);
    SuperElement leib = apply_derivation(rules, f * g) - apply_derivation(rules, f) * g -
                        par_sign(pf) * (f * apply_derivation(rules, g));
    if (!leib.is_zero()) fail("leibniz derivation", i, leib);

    Hamiltonian hodd{ho, 0, Level::Classical, pr};
    SuperElement f0 = zero_p(f), g0 = zero_p(g);
    SuperElement leib2 = d_h(hodd, f0 * g0) - d_h(hodd, f0) * g0 -
                         par_sign(pf) * (f0 * d_h(hodd, g0));
    if (!leib2.is_zero()) fail("leibniz d_h", i, leib2);
  }

  for (int i = 0; i < hbar_pairs; ++i) {
    SuperElement F = draw(pick()), G = draw(pick());
    SuperElement lead = weyl_commutator(F, G, hb).hbar_component(1) - poisson_bracket(F, G, pr);
    if (!lead.is_zero()) fail("hbar leading bracket", i, lead);
  }
  return rep;
}

}  // namespace sft
