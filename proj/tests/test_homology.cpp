#include <map>
#include <memory>

#include "doctest.h"
#include "sft/homology.hpp"
#include "sft/models.hpp"

using namespace sft;

namespace {

VariableSpec qvar(const std::string& name, Parity par, long degree) {
  return {name, Kind::Q, par, Rat(degree), 1, 0, -1, kNoVar};
}

// d(b) = a on one odd/even generator pair: the whole slice is acyclic
// except for the constants.
DGA acyclic_pair() {
  DGA dga;
  dga.tab = std::make_shared<VariableTable>();
  VarId a = dga.tab->add(qvar("q_a", Parity::Odd, 1));
  VarId b = dga.tab->add(qvar("q_b", Parity::Even, 2));
  dga.tab->freeze();
  dga.generators = {a, b};
  dga.diff[a] = SuperElement(*dga.tab);
  dga.diff[b] = SuperElement::var(*dga.tab, a);
  return dga;
}

// Six generators whose differential squares to zero only through a
// cancellation between the product rule and the correction term:
//   d(b_i) = a_i, d(c) = a_1 b_2 + b_1 a_2, d(e) = b_1 b_2 - c.
// Flipping the coefficient of c in d(e) breaks d^2 on e and nothing else.
DGA coupled_dga(const Rat& c_coeff) {
  DGA dga;
  dga.tab = std::make_shared<VariableTable>();
  VarId a1 = dga.tab->add(qvar("q_a1", Parity::Odd, 1));
  VarId a2 = dga.tab->add(qvar("q_a2", Parity::Odd, 1));
  VarId b1 = dga.tab->add(qvar("q_b1", Parity::Even, 2));
  VarId b2 = dga.tab->add(qvar("q_b2", Parity::Even, 2));
  VarId c = dga.tab->add(qvar("q_c", Parity::Even, 4));
  VarId e = dga.tab->add(qvar("q_e", Parity::Odd, 5));
  dga.tab->freeze();
  const VariableTable& tab = *dga.tab;
  dga.generators = {a1, a2, b1, b2, c, e};
  dga.diff[b1] = SuperElement::var(tab, a1);
  dga.diff[b2] = SuperElement::var(tab, a2);
  SuperElement dc(tab);
  dc.add_word({{a1, 1}, {b2, 1}}, 1);
  dc.add_word({{b1, 1}, {a2, 1}}, 1);
  dga.diff[c] = dc;
  SuperElement de(tab);
  de.add_word({{b1, 1}, {b2, 1}}, 1);
  de.add_word({{c, 1}}, c_coeff);
  dga.diff[e] = de;
  return dga;
}

}  // namespace

TEST_CASE("acyclic pair has homology only in degree zero") {
  DGA dga = acyclic_pair();
  ChainComplexSlice slice = build_slice(dga, 4);
  CHECK(betti(slice, Rat(0)) == 1);
  for (long d = 1; d <= 4; ++d) CHECK(betti(slice, Rat(d)) == 0);

  // The generator a is a boundary and the machinery can name a primitive.
  SuperElement a = SuperElement::var(*dga.tab, dga.tab->require("q_a"));
  CHECK(is_cycle(dga, a));
  auto w = find_boundary_witness(slice, dga, a);
  REQUIRE(w);
  CHECK(dga_apply(dga, *w) == a);
}

TEST_CASE("coupled differential squares to zero through cancellation") {
  DGA good = coupled_dga(-1);
  ChainComplexSlice slice = build_slice(good, 4);  // throws if d^2 != 0
  const VariableTable& tab = *good.tab;

  // d(e) is a cycle by construction, e itself is not.
  CHECK(is_cycle(good, good.diff.at(tab.require("q_e"))));
  CHECK(!is_cycle(good, SuperElement::var(tab, tab.require("q_e"))));
  CHECK(!is_cycle(good, SuperElement::var(tab, tab.require("q_c"))));

  // b_1 b_2 - c is closed only with the right relative coefficient.
  SuperElement good_cycle(tab);
  good_cycle.add_word({{tab.require("q_b1"), 1}, {tab.require("q_b2"), 1}}, 1);
  good_cycle.add_word({{tab.require("q_c"), 1}}, -1);
  CHECK(is_cycle(good, good_cycle));

  SuperElement bad_cycle(tab);
  bad_cycle.add_word({{tab.require("q_b1"), 1}, {tab.require("q_b2"), 1}}, 1);
  bad_cycle.add_word({{tab.require("q_c"), 1}}, -2);
  CHECK(!is_cycle(good, bad_cycle));
}

TEST_CASE("corrupted coupling coefficient fails the square check with a witness") {
  DGA bad = coupled_dga(-2);
  try {
    build_slice(bad, 4);
    FAIL("square check should have tripped");
  } catch (const SquareError& e) {
    CHECK(e.monomial == "q_e");
    CHECK(std::string(e.what()).find("q_e") != std::string::npos);
  }
}

TEST_CASE("slice enumeration rejects even weightless generators") {
  DGA dga;
  dga.tab = std::make_shared<VariableTable>();
  VarId s = dga.tab->add({"t2", Kind::T, Parity::Even, Rat(0), 1, 0, -1, kNoVar});
  dga.tab->freeze();
  dga.generators = {s};
  dga.diff[s] = SuperElement(*dga.tab);
  CHECK_THROWS_AS(build_slice(dga, 3), std::invalid_argument);
}

TEST_CASE("three-sphere cycles and the tau-zero quotient counts") {
  DGA dga = sphere3_dga(4);
  const VariableTable& tab = *dga.tab;

  SuperElement g1(tab);
  g1.add_word({{tab.require("q_{1,2}"), 1}}, 1);
  g1.add_word({{tab.require("q_{1,0}"), 2}}, rat(-1, 2));
  CHECK(is_cycle(dga, g1));
  CHECK(!is_cycle(dga, SuperElement::var(tab, tab.require("q_{1,0}"))));
  CHECK(!is_cycle(dga, SuperElement::var(tab, tab.require("q_{1,2}"))));

  // With the differential switched off, ranks are monomial counts in the
  // generators q_{k,0} (degree 4k - 2) and q_{k,2} (degree 4k). The
  // expected numbers come from a direct knapsack over those degrees.
  DGA free = free_quotient(dga);
  ChainComplexSlice slice = build_slice(free, 4);
  std::map<long, long> counts;
  counts[0] = 1;
  for (long k = 1; k <= 4; ++k)
    for (long d : {4 * k - 2, 4 * k})
      for (long total = d; total <= 8; ++total)
        counts[total] += counts.count(total - d) ? counts[total - d] : 0;
  for (long d = 0; d <= 8; ++d) {
    long want = counts.count(d) ? counts[d] : 0;
    CHECK(betti(slice, Rat(d)) == want);
  }

  // The quotient really forgets tau: its differential is zero.
  for (VarId g : free.generators) {
    auto it = free.diff.find(g);
    CHECK((it == free.diff.end() || it->second.is_zero()));
  }
}
