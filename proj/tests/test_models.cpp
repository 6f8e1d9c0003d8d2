#include <stdexcept>

#include "doctest.h"
#include "sft/models.hpp"

using namespace sft;

TEST_CASE("circle hamiltonian matches the hand expansion at four modes") {
  Model m = circle_model(4);
  const VariableTable& tab = *m.tab;
  VarId t0 = tab.require("t0"), t1 = tab.require("t1"), hb = tab.require("hbar");

  SuperElement want(tab);
  want.add_word({{hb, -1}, {t1, 1}, {t0, 2}}, rat(1, 2));
  for (long k = 1; k <= 4; ++k)
    want.add_word({{hb, -1},
                   {t1, 1},
                   {tab.require("p_" + std::to_string(k)), 1},
                   {tab.require("q_" + std::to_string(k)), 1}},
                  1);
  want.add_word({{t1, 1}}, rat(-1, 24));

  CHECK(m.ham.body == want);
  CHECK(m.ham.level == Level::Quantum);
}

TEST_CASE("three-sphere hamiltonian matches the hand expansion at weight four") {
  Model m = sphere3_model(4);
  const VariableTable& tab = *m.tab;
  VarId tau = tab.require("tau"), t0 = tab.require("t0");

  // tau * (t0^2/2 + sum pq + winding-1 part of exp(sum p_{k,2}) exp(sum q_{k,2}))
  SuperElement want(tab);
  want.add_word({{t0, 2}, {tau, 1}}, rat(1, 2));
  for (long k = 1; k <= 4; ++k) {
    std::string ks = std::to_string(k);
    want.add_word({{tab.require("p_{" + ks + ",0}"), 1},
                   {tab.require("q_{" + ks + ",0}"), 1},
                   {tau, 1}},
                  1);
  }
  VarId p12 = tab.require("p_{1,2}"), p22 = tab.require("p_{2,2}");
  VarId q12 = tab.require("q_{1,2}");
  want.add_word({{p12, 1}, {tau, 1}}, 1);
  want.add_word({{p22, 1}, {q12, 1}, {tau, 1}}, 1);
  want.add_word({{p12, 2}, {q12, 1}, {tau, 1}}, rat(1, 2));

  CHECK(m.ham.body == want);
}

TEST_CASE("lens space hamiltonian picks up the winding-two ring terms") {
  Model m = lens_model(2, 4);
  const VariableTable& tab = *m.tab;
  VarId tau = tab.require("tau"), t0 = tab.require("t0");

  SuperElement want(tab);
  want.add_word({{t0, 2}, {tau, 1}}, rat(1, 2));
  for (long k = 1; k <= 4; ++k) {
    std::string ks = std::to_string(k);
    want.add_word({{tab.require("p_{" + ks + ",0}"), 1},
                   {tab.require("q_{" + ks + ",0}"), 1},
                   {tau, 1}},
                  1);
  }
  VarId p12 = tab.require("p_{1,2}"), p22 = tab.require("p_{2,2}");
  VarId p32 = tab.require("p_{3,2}"), q12 = tab.require("q_{1,2}");
  want.add_word({{p22, 1}, {tau, 1}}, 1);
  want.add_word({{p12, 2}, {tau, 1}}, rat(1, 2));
  want.add_word({{p32, 1}, {q12, 1}, {tau, 1}}, 1);
  want.add_word({{p12, 3}, {q12, 1}, {tau, 1}}, rat(1, 6));
  want.add_word({{p12, 1}, {p22, 1}, {q12, 1}, {tau, 1}}, 1);

  CHECK(m.ham.body == want);
  CHECK_THROWS_AS(lens_model(0, 4), std::invalid_argument);
}

TEST_CASE("descending polynomials of the three-sphere") {
  Model m = sphere3_model(6);
  const VariableTable& tab = *m.tab;
  auto hk = hk_polynomials(m, 4);
  REQUIRE(hk.size() == 4);

  VarId q12 = tab.require("q_{1,2}"), q22 = tab.require("q_{2,2}");
  VarId q32 = tab.require("q_{3,2}");

  CHECK(hk[0] == SuperElement::constant(tab, 1));
  CHECK(hk[1] == SuperElement::var(tab, q12));

  SuperElement h3(tab);
  h3.add_word({{q22, 1}}, 1);
  h3.add_word({{q12, 2}}, rat(1, 2));
  CHECK(hk[2] == h3);

  SuperElement h4(tab);
  h4.add_word({{q32, 1}}, 1);
  h4.add_word({{q12, 1}, {q22, 1}}, 1);
  h4.add_word({{q12, 3}}, rat(1, 6));
  CHECK(hk[3] == h4);
}

TEST_CASE("projective line potential is the closed-form series") {
  PotentialModel pm = cp1_potential(3);
  const VariableTable& tab = *pm.tab;
  VarId t0 = tab.require("t0"), t2 = tab.require("t2"), z = tab.require("z");

  SuperElement want(tab);
  want.add_word({{t0, 2}, {t2, 1}}, rat(1, 2));
  want.add_word({{z, 1}}, 1);
  want.add_word({{z, 1}, {t2, 1}}, 1);
  want.add_word({{z, 1}, {t2, 2}}, rat(1, 2));
  want.add_word({{z, 1}, {t2, 3}}, rat(1, 6));
  CHECK(pm.body == want);
  CHECK(pm.dimension_n == 1);
  CHECK(pm.evolution == t2);
}

TEST_CASE("prequantization rejects a theta class that is not the top one") {
  CHECK_THROWS_AS(prequantization_h1(cp1_potential(3), 1, 4, 3), std::invalid_argument);
}

TEST_CASE("satellite one-forms on the circle") {
  // No derivatives, one variation slot: only the constant mode survives.
  SatelliteModel s01 = circle_satellite(0, 1, 2);
  SuperElement want01(*s01.tab);
  want01.add_word({{s01.dt0, 1}, {s01.dt1, 1}}, 1);
  CHECK(s01.form == want01);

  // One u_xx and one variation: each mode pairs with its own variation,
  // weighted by -k^2, and the constant mode drops out.
  SatelliteModel s11 = circle_satellite(1, 1, 4);
  SuperElement want11(*s11.tab);
  for (long k = 1; k <= 4; ++k) {
    Rat w(-k * k);
    want11.add_word({{s11.p[k - 1], 1}, {s11.dq[k - 1], 1}, {s11.dt1, 1}}, w);
    want11.add_word({{s11.q[k - 1], 1}, {s11.dp[k - 1], 1}, {s11.dt1, 1}}, w);
  }
  CHECK(s11.form == want11);
}

TEST_CASE("classical differential of the circle model") {
  DGA dga = classical_dga(circle_model(4));
  const VariableTable& tab = *dga.tab;
  VarId t1 = tab.require("t1");
  VarId q1 = tab.require("q_1"), q2 = tab.require("q_2");

  SuperElement want(tab);
  want.add_word({{q2, 1}, {t1, 1}}, 2);  // pairing weight is the multiplicity
  CHECK(dga.diff.at(q2) == want);

  SuperElement prod(tab);
  prod.add_word({{q1, 1}, {q2, 1}}, 1);
  SuperElement dprod(tab);
  dprod.add_word({{q1, 1}, {q2, 1}, {t1, 1}}, 3);
  CHECK(dga_apply(dga, prod) == dprod);
}
