#include <memory>

#include "doctest.h"
#include "sft/element.hpp"

using namespace sft;

namespace {

// Two odd scalars, one even pair, one even scalar, hbar. Enough structure
// to exercise signs, windings, and every truncation axis.
struct Fix {
  std::shared_ptr<VariableTable> tab;
  VarId th1, th2, p, q, t, hbar;
};

Fix make_fix() {
  Fix f;
  f.tab = std::make_shared<VariableTable>();
  auto [p, q] = f.tab->add_pair({"p1", Kind::P, Parity::Even, Rat(-3), 2, 2, 0, kNoVar},
                                {"q1", Kind::Q, Parity::Even, Rat(-1), 2, -2, 0, kNoVar});
  f.p = p;
  f.q = q;
  f.th1 = f.tab->add({"th1", Kind::T, Parity::Odd, Rat(-1), 1, 0, -1, kNoVar});
  f.th2 = f.tab->add({"th2", Kind::T, Parity::Odd, Rat(1), 1, 0, -1, kNoVar});
  f.t = f.tab->add({"t", Kind::T, Parity::Even, Rat(0), 1, 0, -1, kNoVar});
  f.hbar = f.tab->add({"hbar", Kind::HBAR, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  f.tab->freeze();
  return f;
}

}  // namespace

TEST_CASE("koszul normalization of unordered words") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;

  // Reversing two odd factors flips the sign.
  SuperElement a = SuperElement::term(tab, 1, {{f.th1, 1}, {f.th2, 1}});
  SuperElement b = SuperElement::term(tab, 1, {{f.th2, 1}, {f.th1, 1}});
  CHECK(a == -b);

  // Odd squares vanish, directly and through cancellation.
  CHECK(SuperElement::term(tab, 1, {{f.th1, 2}}).is_zero());
  SuperElement s = SuperElement::var(tab, f.th1) + SuperElement::var(tab, f.th2);
  CHECK((s * s).is_zero());

  // Even factors commute freely.
  SuperElement c = SuperElement::term(tab, 1, {{f.q, 1}, {f.p, 1}});
  SuperElement d = SuperElement::term(tab, 1, {{f.p, 1}, {f.q, 1}});
  CHECK(c == d);
}

TEST_CASE("addition cancels to exact zero") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;
  SuperElement e(tab);
  e.add_word({{f.p, 1}, {f.q, 1}}, rat(1, 3));
  e.add_word({{f.q, 1}, {f.p, 1}}, rat(-1, 3));
  CHECK(e.is_zero());
  CHECK(e.num_terms() == 0);
}

TEST_CASE("left and right derivatives on odd factors") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;
  SuperElement w = SuperElement::term(tab, 1, {{f.th1, 1}, {f.th2, 1}});

  // Left derivative pulls the variable out through the factors to its
  // left: no crossing for th1, one odd crossing for th2.
  CHECK(w.left_partial(f.th1) == SuperElement::var(tab, f.th2));
  CHECK(w.left_partial(f.th2) == -SuperElement::var(tab, f.th1));

  // Right derivative mirrors it.
  CHECK(w.right_partial(f.th2) == SuperElement::var(tab, f.th1));
  CHECK(w.right_partial(f.th1) == -SuperElement::var(tab, f.th2));

  // Even variables see the plain power rule on both sides.
  SuperElement pw = SuperElement::var(tab, f.p, 3);
  CHECK(pw.left_partial(f.p) == Rat(3) * SuperElement::var(tab, f.p, 2));
  CHECK(pw.right_partial(f.p) == Rat(3) * SuperElement::var(tab, f.p, 2));
}

TEST_CASE("coefficient extraction and evaluation") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;
  SuperElement e(tab);
  e.add_word({{f.t, 2}, {f.p, 1}}, rat(5, 2));
  e.add_word({{f.t, 1}}, 1);
  e.add_word({{f.q, 1}}, 7);

  CHECK(e.coefficient_of(f.t, 2) == rat(5, 2) * SuperElement::var(tab, f.p));
  CHECK(e.coefficient_of(f.t, 0) == Rat(7) * SuperElement::var(tab, f.q));
  CHECK(e.max_exponent_of(f.t) == 2);

  SuperElement at2 = e.evaluated(f.t, Rat(2));
  SuperElement want(tab);
  want.add_word({{f.p, 1}}, 10);
  want.add_word({}, 2);
  want.add_word({{f.q, 1}}, 7);
  CHECK(at2 == want);
  CHECK(at2.scalar_part() == Rat(2));
}

TEST_CASE("winding, parity, and hbar components") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;
  SuperElement e(tab);
  e.add_word({{f.p, 1}}, 1);                          // winding +2
  e.add_word({{f.p, 1}, {f.q, 1}}, 3);                // winding 0
  e.add_word({{f.th1, 1}, {f.q, 1}}, 1);              // winding -2, odd
  e.add_word({{f.hbar, -1}, {f.t, 1}}, rat(1, 2));    // hbar^{-1}

  CHECK(e.winding_component(2) == SuperElement::var(tab, f.p));
  CHECK(e.winding_component(-2) ==
        SuperElement::term(tab, 1, {{f.th1, 1}, {f.q, 1}}));
  CHECK(e.parity_part(Parity::Odd) ==
        SuperElement::term(tab, 1, {{f.th1, 1}, {f.q, 1}}));
  CHECK(e.hbar_component(-1) == rat(1, 2) * SuperElement::var(tab, f.t));
  // hbar_component strips the power, so the 0 layer is everything else.
  CHECK(e.hbar_component(0).num_terms() == 3);
}

TEST_CASE("truncation policy axes") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;

  // kappa = 2 on the pair: p*q has weight 4 and survives a cap of 4 but
  // not 3.
  SuperElement pq = SuperElement::term(tab, 1, {{f.p, 1}, {f.q, 1}});
  CHECK(pq.truncated(TruncationPolicy::weight(4)) == pq);
  CHECK(pq.truncated(TruncationPolicy::weight(3)).is_zero());

  TruncationPolicy sector;
  sector.max_p_weight = 2;
  SuperElement p2 = SuperElement::var(tab, f.p, 2);  // p-weight 4
  CHECK(p2.truncated(sector).is_zero());
  CHECK(SuperElement::var(tab, f.q, 2).truncated(sector) ==
        SuperElement::var(tab, f.q, 2));

  TruncationPolicy tp;
  tp.max_t_power = 1;
  SuperElement t2 = SuperElement::var(tab, f.t, 2);
  CHECK(t2.truncated(tp).is_zero());

  TruncationPolicy window;
  window.hbar_lo = -1;
  window.hbar_hi = 0;
  SuperElement h(tab);
  h.add_word({{f.hbar, -2}}, 1);
  h.add_word({{f.hbar, -1}}, 1);
  h.add_word({{f.hbar, 1}}, 1);
  CHECK(h.truncated(window) == SuperElement::term(tab, 1, {{f.hbar, -1}}));

  // mul applies the policy to the product terms.
  SuperElement prod = SuperElement::var(tab, f.p).mul(SuperElement::var(tab, f.q),
                                                      TruncationPolicy::weight(3));
  CHECK(prod.is_zero());
}

TEST_CASE("exponential and logarithm series") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;
  TruncationPolicy pol;
  pol.max_t_power = 3;

  SuperElement t = SuperElement::var(tab, f.t);
  SuperElement et = exp_truncated(t, pol);
  SuperElement want(tab);
  want.add_word({}, 1);
  want.add_word({{f.t, 1}}, 1);
  want.add_word({{f.t, 2}}, rat(1, 2));
  want.add_word({{f.t, 3}}, rat(1, 6));
  CHECK(et == want);

  SuperElement lt = log1p_truncated(t, pol);
  SuperElement lwant(tab);
  lwant.add_word({{f.t, 1}}, 1);
  lwant.add_word({{f.t, 2}}, rat(-1, 2));
  lwant.add_word({{f.t, 3}}, rat(1, 3));
  CHECK(lt == lwant);

  // Composition comes back to 1 + t under the same cap.
  SuperElement one_plus_t = SuperElement::constant(tab, 1) + t;
  CHECK(exp_truncated(lt, pol) == one_plus_t);

  // exp of an odd variable terminates by itself.
  SuperElement eth = exp_truncated(SuperElement::var(tab, f.th1), TruncationPolicy::none());
  CHECK(eth == SuperElement::constant(tab, 1) + SuperElement::var(tab, f.th1));

  CHECK_THROWS_AS(exp_truncated(SuperElement::constant(tab, 1), pol), std::invalid_argument);
}

TEST_CASE("substitution transports by name and checks parity") {
  Fix f = make_fix();
  const VariableTable& src = *f.tab;

  VariableTable target;
  target.add({"p1", Kind::P, Parity::Even, Rat(-3), 2, 2, 0, kNoVar});
  target.add({"q1", Kind::Q, Parity::Even, Rat(-1), 2, -2, 0, kNoVar});
  target.add({"th1", Kind::T, Parity::Odd, Rat(-1), 1, 0, -1, kNoVar});
  target.add({"t", Kind::T, Parity::Even, Rat(0), 1, 0, -1, kNoVar});
  target.freeze();

  SuperElement e(src);
  e.add_word({{f.p, 1}, {f.th1, 1}}, 2);
  SuperElement moved = e.substituted(target, {}, TruncationPolicy::none());
  SuperElement want(target);
  want.add_word({{target.require("p1"), 1}, {target.require("th1"), 1}}, 2);
  CHECK(moved == want);

  // Mapping p1 to an element changes the result accordingly.
  std::map<VarId, SuperElement> images;
  images[f.p] = SuperElement::var(target, target.require("t"), 2);
  SuperElement mapped = e.substituted(target, images, TruncationPolicy::none());
  SuperElement want2(target);
  want2.add_word({{target.require("t"), 2}, {target.require("th1"), 1}}, 2);
  CHECK(mapped == want2);

  // A variable missing from the target by name is an error.
  SuperElement lone = SuperElement::var(src, f.th2);
  CHECK_THROWS_AS(lone.substituted(target, {}, TruncationPolicy::none()),
                  std::invalid_argument);

  // Parity flips between source and image are rejected.
  std::map<VarId, SuperElement> flip;
  flip[f.th1] = SuperElement::var(target, target.require("t"));
  CHECK_THROWS_AS(e.substituted(target, flip, TruncationPolicy::none()),
                  std::invalid_argument);
}

TEST_CASE("negative powers need invertible images") {
  Fix f = make_fix();
  const VariableTable& src = *f.tab;
  SuperElement e = SuperElement::term(src, 1, {{f.hbar, -2}, {f.t, 1}});

  VariableTable target;
  target.add({"t", Kind::T, Parity::Even, Rat(0), 1, 0, -1, kNoVar});
  target.add({"hbar", Kind::HBAR, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  target.freeze();

  std::map<VarId, SuperElement> ok;
  ok[f.hbar] = rat(1, 3) * SuperElement::var(target, target.require("hbar"));
  SuperElement inv = e.substituted(target, ok, TruncationPolicy::none());
  SuperElement want =
      Rat(9) * SuperElement::term(target, 1, {{target.require("hbar"), -2},
                                              {target.require("t"), 1}});
  CHECK(inv == want);

  std::map<VarId, SuperElement> bad;
  bad[f.hbar] = SuperElement::constant(target, 1) + SuperElement::var(target, target.require("t"));
  CHECK_THROWS_AS(e.substituted(target, bad, TruncationPolicy::none()),
                  std::invalid_argument);
}

TEST_CASE("homogeneity reports") {
  Fix f = make_fix();
  const VariableTable& tab = *f.tab;

  SuperElement e(tab);
  e.add_word({{f.th1, 1}, {f.th2, 1}}, 1);   // degree 0, even
  e.add_word({{f.t, 3}}, 5);                 // degree 0, even
  REQUIRE(e.homogeneous_degree());
  CHECK(*e.homogeneous_degree() == Rat(0));
  REQUIRE(e.homogeneous_parity());
  CHECK(*e.homogeneous_parity() == Parity::Even);

  e.add_word({{f.q, 1}}, 1);  // degree -1 breaks it
  CHECK(!e.homogeneous_degree());

  SuperElement mixed = SuperElement::var(tab, f.th1) + SuperElement::var(tab, f.t);
  CHECK(!mixed.homogeneous_parity());
}
