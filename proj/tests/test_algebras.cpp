#include <memory>

#include "doctest.h"
#include "sft/poisson.hpp"
#include "sft/weyl.hpp"

using namespace sft;

namespace {

// One even orbit pair of multiplicity 2, one odd pair of multiplicity 1,
// tau and hbar. All expected values below are worked out by hand from the
// bracket definition before touching the implementation.
struct Fix {
  std::shared_ptr<VariableTable> tab;
  VarId p, q, thp, thq, tau, hbar;
  Pairing pairing;
};

Fix make_fix() {
  Fix f;
  f.tab = std::make_shared<VariableTable>();
  auto [p, q] = f.tab->add_pair({"p1", Kind::P, Parity::Even, Rat(-4), 2, 2, 0, kNoVar},
                                {"q1", Kind::Q, Parity::Even, Rat(0), 2, -2, 0, kNoVar});
  auto [tp, tq] = f.tab->add_pair({"pth", Kind::P, Parity::Odd, Rat(-3), 1, 1, 1, kNoVar},
                                  {"qth", Kind::Q, Parity::Odd, Rat(-1), 1, -1, 1, kNoVar});
  f.p = p;
  f.q = q;
  f.thp = tp;
  f.thq = tq;
  f.tau = f.tab->add({"tau", Kind::TAU, Parity::Odd, Rat(1), 1, 0, -1, kNoVar});
  f.hbar = f.tab->add({"hbar", Kind::HBAR, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  f.tab->freeze();
  f.pairing = Pairing::conjugate(*f.tab);
  return f;
}

SuperElement v(const Fix& f, VarId x, long e = 1) { return SuperElement::var(*f.tab, x, e); }

}  // namespace

TEST_CASE("poisson bracket on conjugate pairs") {
  Fix f = make_fix();
  auto none = TruncationPolicy::none();

  // Even pair at multiplicity 2: {p, q} = 2, antisymmetric.
  CHECK(poisson_bracket(v(f, f.p), v(f, f.q), f.pairing, none) ==
        SuperElement::constant(*f.tab, 2));
  CHECK(poisson_bracket(v(f, f.q), v(f, f.p), f.pairing, none) ==
        SuperElement::constant(*f.tab, -2));

  // Odd pair: the bracket is symmetric.
  CHECK(poisson_bracket(v(f, f.thp), v(f, f.thq), f.pairing, none) ==
        SuperElement::constant(*f.tab, 1));
  CHECK(poisson_bracket(v(f, f.thq), v(f, f.thp), f.pairing, none) ==
        SuperElement::constant(*f.tab, 1));

  // Leibniz in the second slot: {p, q^2} = 4q.
  CHECK(poisson_bracket(v(f, f.p), v(f, f.q, 2), f.pairing, none) ==
        Rat(4) * v(f, f.q));

  // {p^2, q^2} = 8pq.
  SuperElement want = Rat(8) * SuperElement::term(*f.tab, 1, {{f.p, 1}, {f.q, 1}});
  CHECK(poisson_bracket(v(f, f.p, 2), v(f, f.q, 2), f.pairing, none) == want);
}

TEST_CASE("poisson jacobi on a fixed even triple") {
  Fix f = make_fix();
  auto none = TruncationPolicy::none();
  SuperElement a = v(f, f.p, 2);
  SuperElement b = SuperElement::term(*f.tab, 1, {{f.p, 1}, {f.q, 1}});
  SuperElement c = v(f, f.q, 2);

  auto br = [&](const SuperElement& x, const SuperElement& y) {
    return poisson_bracket(x, y, f.pairing, none);
  };
  SuperElement sum = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b));
  CHECK(sum.is_zero());
}

TEST_CASE("weyl product contraction terms") {
  Fix f = make_fix();
  auto none = TruncationPolicy::none();

  // p * q picks up one contraction worth kappa * hbar = 2 hbar.
  SuperElement pq = SuperElement::term(*f.tab, 1, {{f.p, 1}, {f.q, 1}});
  CHECK(weyl_mul(v(f, f.p), v(f, f.q), f.hbar, none) ==
        pq + Rat(2) * v(f, f.hbar));
  // The reverse order has nothing to contract.
  CHECK(weyl_mul(v(f, f.q), v(f, f.p), f.hbar, none) == pq);
  CHECK(weyl_commutator(v(f, f.p), v(f, f.q), f.hbar, none) == Rat(2) * v(f, f.hbar));

  // p^2 * q^2: single contractions come in 4 ways, the double in 2.
  SuperElement p2q2 = SuperElement::term(*f.tab, 1, {{f.p, 2}, {f.q, 2}});
  SuperElement want = p2q2 +
                      Rat(8) * SuperElement::term(*f.tab, 1, {{f.hbar, 1}, {f.p, 1}, {f.q, 1}}) +
                      Rat(8) * v(f, f.hbar, 2);
  CHECK(weyl_mul(v(f, f.p, 2), v(f, f.q, 2), f.hbar, none) == want);

  // Leading order of the scaled commutator is the Poisson bracket.
  SuperElement comm = weyl_commutator(v(f, f.p, 2), v(f, f.q, 2), f.hbar, none);
  SuperElement leading = comm.hbar_component(1);
  CHECK(leading == poisson_bracket(v(f, f.p, 2), v(f, f.q, 2), f.pairing, none));
}

TEST_CASE("weyl associativity on a fixed triple") {
  Fix f = make_fix();
  auto none = TruncationPolicy::none();
  SuperElement a = v(f, f.p, 2);
  SuperElement b = SuperElement::term(*f.tab, 1, {{f.p, 1}, {f.q, 1}});
  SuperElement c = v(f, f.q, 2);
  SuperElement lhs = weyl_mul(weyl_mul(a, b, f.hbar, none), c, f.hbar, none);
  SuperElement rhs = weyl_mul(a, weyl_mul(b, c, f.hbar, none), f.hbar, none);
  CHECK(lhs == rhs);
  CHECK(!lhs.is_zero());
}

TEST_CASE("odd variables square to zero under the weyl product") {
  Fix f = make_fix();
  auto none = TruncationPolicy::none();
  // No self-contraction: pth * pth is plain supercommutative zero.
  CHECK(weyl_mul(v(f, f.thp), v(f, f.thp), f.hbar, none).is_zero());
  // pth * qth contracts once at weight 1.
  SuperElement cross = weyl_mul(v(f, f.thp), v(f, f.thq), f.hbar, none);
  SuperElement base = SuperElement::term(*f.tab, 1, {{f.thp, 1}, {f.thq, 1}});
  CHECK(cross == base + v(f, f.hbar));
}

TEST_CASE("classical differential from a hamiltonian") {
  Fix f = make_fix();
  auto none = TruncationPolicy::none();

  // h = tau p q: the rule for q reads off the p-slope at p = 0.
  SuperElement h = SuperElement::term(*f.tab, 1, {{f.tau, 1}, {f.p, 1}, {f.q, 1}});
  auto rules = classical_rules(h, f.pairing);
  REQUIRE(rules.count(f.q));
  SuperElement dq = rules.at(f.q);
  SuperElement want = Rat(2) * SuperElement::term(*f.tab, 1, {{f.q, 1}, {f.tau, 1}});
  CHECK(dq == want);

  // Terms quadratic in p contribute nothing after the restriction.
  SuperElement h2 = h + SuperElement::term(*f.tab, rat(1, 2), {{f.tau, 1}, {f.p, 2}});
  auto rules2 = classical_rules(h2, f.pairing);
  CHECK(rules2.at(f.q) == want);

  Hamiltonian ham{h, 2, Level::Rational, f.pairing};
  CHECK(d_h(ham, v(f, f.q), none) == want);

  // Odd derivation on a square: d(q^2) = d(q) q + q d(q) = 4 q^2 tau.
  SuperElement wq2 = Rat(4) * SuperElement::term(*f.tab, 1, {{f.q, 2}, {f.tau, 1}});
  CHECK(d_h(ham, v(f, f.q, 2), none) == wq2);

  // apply_derivation treats variables without a rule as closed.
  SuperElement mixed = SuperElement::term(*f.tab, 1, {{f.q, 1}, {f.thq, 1}});
  SuperElement dm = apply_derivation(rules, mixed, none);
  SuperElement wdm(*f.tab);
  wdm.add_word({{f.q, 1}, {f.tau, 1}, {f.thq, 1}}, 2);
  CHECK(dm == wdm);
}
