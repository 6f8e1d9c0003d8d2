#include "sft/gw.hpp"

#include <algorithm>
#include <stdexcept>

namespace sft {

TruncationPolicy hj_default_policy(long order) {
  TruncationPolicy p;
  p.max_weight = order + 1;
  p.max_t_power = order;
  return p;
}

SuperElement hj_solve(const HJProblem& pb) {
  if (pb.order < 0) throw std::invalid_argument("hj_solve: negative order");
  if (pb.evolution == kNoVar) throw std::invalid_argument("hj_solve: no evolution variable");
  if (pb.policy.max_weight >= 0 && pb.policy.max_weight < pb.order)
    throw std::invalid_argument(
        "hj_solve: weight cap below the requested order would silently drop "
        "orbit multiplicities up to " +
        std::to_string(pb.order));
  if (pb.initial.max_exponent_of(pb.evolution) > 0)
    throw std::invalid_argument("hj_solve: initial data depends on the evolution variable");

  SuperElement f = pb.initial;
  for (long j = 0; j < pb.order; ++j) {
    SuperElement rhs =
        lagrangian_restrict(pb.h1, f, pb.pairing, RestrictSide::ReplaceQ, pb.policy);
    SuperElement cj = rhs.coefficient_of(pb.evolution, j);
    if (cj.is_zero()) continue;
    f += SuperElement::var(*pb.tab, pb.evolution, j + 1) * cj * rat(1, j + 1);
  }
  return f;
}

PotentialModel close_up(const PotentialModel& cone, long t2_cap) {
  const int n = cone.dimension_n;
  if (n < 1) throw std::invalid_argument("close_up: dimension must be positive");

  auto tab = std::make_shared<VariableTable>();
  VarId t0 = tab->add({"t0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  (void)t0;
  std::vector<VarId> tv(n + 1, kNoVar);
  for (int j = 1; j <= n; ++j)
    tv[j] = tab->add({"t" + std::to_string(2 * j), Kind::T, Parity::Even, Rat(2 * j - 2), 1,
                      0, -1, kNoVar});
  VarId z = tab->add({"z", Kind::Z, Parity::Even, Rat(-2 * (n + 1)), 1, 0, -1, kNoVar});
  tab->freeze();

  TruncationPolicy pol;
  pol.max_t_power = t2_cap;

  // S_i = sum over s_2..s_{n-1} with sum s_j (j-1) = i of prod t_{2j}^{s_j}/s_j!,
  // times the unconstrained e^{t2} factor (absent for n = 1).
  std::vector<SuperElement> S(n, SuperElement(*tab));
  {
    std::vector<long> s(std::max(n, 2), 0);
    // Recursive enumeration over j = 2..n-1.
    auto rec = [&](auto&& self, int j, long i_acc) -> void {
      if (i_acc >= n) return;
      if (j >= n) {
        SuperElement term = SuperElement::constant(*tab, 1);
        for (int jj = 2; jj < n; ++jj) {
          if (s[jj] == 0) continue;
          term = term * SuperElement::term(*tab, Rat(1) / Rat(factorial(s[jj])),
                                           {{tv[jj], s[jj]}});
        }
        S[i_acc] += term;
        return;
      }
      for (long sj = 0; i_acc + sj * (j - 1) < n; ++sj) {
        s[j] = sj;
        self(self, j + 1, i_acc + sj * (j - 1));
      }
      s[j] = 0;
    };
    rec(rec, 2, 0);
  }
  if (n >= 2) {
    SuperElement e2 = exp_truncated(SuperElement::var(*tab, tv[1]), pol);
    for (int i = 0; i < n; ++i) S[i] = S[i].mul(e2, pol);
  }

  std::map<VarId, SuperElement> images;
  for (VarId p : cone.tab->of_kind(Kind::P)) {
    const VariableSpec& sp = cone.tab->spec(p);
    if (sp.kappa == 1 && sp.base_index >= 0 && sp.base_index < n)
      images[p] = SuperElement::var(*tab, z) * S[sp.base_index];
    else
      images[p] = SuperElement(*tab);
  }

  PotentialModel out;
  out.tab = tab;
  out.body = cone.body.substituted(*tab, images, pol);
  out.dimension_n = n;
  out.zvar = z;
  out.evolution = tv[n];
  return out;
}

NdTable extract_nd(const PotentialModel& f_cp2, long d_max) {
  NdTable table;
  if (d_max < 1) return table;
  if (f_cp2.dimension_n != 2)
    throw std::invalid_argument("extract_nd: potential is not the plane one");
  const VariableTable& tab = *f_cp2.tab;
  VarId t2 = tab.require("t2");
  VarId t4 = tab.require("t4");
  VarId z = f_cp2.zvar;
  SuperElement at0 = f_cp2.body.evaluated(t2, 0);
  if (at0.max_exponent_of(t4) < 3 * d_max - 1)
    throw std::invalid_argument("extract_nd: potential not deep enough in t4 for d_max");
  for (long d = 1; d <= d_max; ++d) {
    SuperElement c = at0.coefficient_of(z, d).coefficient_of(t4, 3 * d - 1);
    // All other variables must be gone at this point.
    Rat v = c.scalar_part();
    SuperElement rest = c;
    rest.add_term(Monomial{}, -v);
    if (!rest.is_zero())
      throw std::runtime_error("extract_nd: leftover variables in the z^" +
                               std::to_string(d) + " coefficient");
    Rat nd = v * Rat(factorial(3 * d - 1));
    if (!rat_is_integer(nd))
      throw std::runtime_error("extract_nd: non-integer count at d = " + std::to_string(d) +
                               " (convention bug)");
    table.entries[d] = nd.get_num();
  }
  if (table.entries.at(1) != 1)
    throw std::runtime_error("extract_nd: N_1 != 1, the pipeline is inconsistent");
  return table;
}

namespace {

Model stage1_model(long K) {
  auto tab = std::make_shared<VariableTable>();
  VarId t0 = tab->add({"t0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  tab->add({"t2", Kind::T, Parity::Even, Rat(0), 1, 0, -1, kNoVar});
  std::vector<std::pair<VarId, VarId>> pq;
  for (long k = 1; k <= K; ++k) {
    pq.push_back(tab->add_pair({"p_{" + std::to_string(k) + ",0}", Kind::P, Parity::Even,
                                Rat(-2 - 2 * k), k, k, 0, kNoVar},
                               {"q_{" + std::to_string(k) + ",0}", Kind::Q, Parity::Even,
                                Rat(-2 + 2 * k), k, -k, 0, kNoVar}));
  }
  tab->freeze();

  SuperElement h1(*tab);
  h1.add_word({{t0, 2}}, rat(1, 2));
  for (auto [p, q] : pq) h1.add_word({{p, 1}, {q, 1}}, 1);

  Model m;
  m.tab = tab;
  m.ham = Hamiltonian{h1, 1, Level::Classical, Pairing::conjugate(*tab)};
  m.name = "circle-h1";
  m.weight_cap = K;
  return m;
}

}  // namespace

BootstrapResult bootstrap(int n_max, std::vector<long> orders) {
  if (n_max < 1 || n_max > 3)
    throw std::invalid_argument("bootstrap: n_max must be between 1 and 3");
  if (static_cast<int>(orders.size()) < n_max)
    throw std::invalid_argument("bootstrap: need one order per stage");
  for (int k = 0; k < n_max; ++k)
    if (orders[k] < 1) throw std::invalid_argument("bootstrap: orders must be positive");

  // A later stage substitutes t-powers of the previous closed potential
  // into its winding ring, which needs depth 2*order - 1 there.
  std::vector<long> eff(orders.begin(), orders.begin() + n_max);
  for (int k = n_max - 1; k >= 1; --k) eff[k - 1] = std::max(eff[k - 1], 2 * eff[k] - 1);

  BootstrapResult res;

  // Stage 1: the cone over the circle.
  Model m1 = stage1_model(eff[0]);
  HJProblem pb1;
  pb1.tab = m1.tab;
  pb1.h1 = m1.ham.body;
  pb1.pairing = m1.ham.pairing;
  pb1.initial = SuperElement::var(*m1.tab, m1.tab->require("p_{1,0}"));
  pb1.evolution = m1.tab->require("t2");
  pb1.order = eff[0];
  pb1.policy = hj_default_policy(eff[0]);
  PotentialModel cone1;
  cone1.tab = m1.tab;
  cone1.body = hj_solve(pb1);
  cone1.dimension_n = 1;
  cone1.evolution = pb1.evolution;
  cone1.pairing = pb1.pairing;
  PotentialModel closed1 = close_up(cone1, eff[0]);
  res.stages.push_back({m1, cone1, closed1});

  for (int stage = 2; stage <= n_max; ++stage) {
    const PotentialModel& base = res.stages.back().f_closed;
    long order = eff[stage - 1];
    TruncationPolicy ring_pol;
    ring_pol.max_weight = 2 * order;
    ring_pol.max_p_weight = order;
    ring_pol.max_q_weight = order - 1;
    Model m = prequantization_h1(base, 1, 2 * (stage - 1), order, ring_pol);

    HJProblem pb;
    pb.tab = m.tab;
    pb.h1 = m.ham.body.coefficient_of(m.tau, 1);
    pb.pairing = m.ham.pairing;
    pb.initial = SuperElement(*m.tab);
    pb.evolution = m.tab->require("t" + std::to_string(2 * stage));
    pb.order = order;
    pb.policy = hj_default_policy(order);

    PotentialModel cone;
    cone.tab = m.tab;
    cone.body = hj_solve(pb);
    cone.dimension_n = stage;
    cone.evolution = pb.evolution;
    cone.pairing = pb.pairing;
    PotentialModel closed = close_up(cone, eff[0]);
    res.stages.push_back({m, cone, closed});

    if (stage == 2) res.nd = extract_nd(closed, (order + 1) / 3);
  }
  return res;
}

}  // namespace sft
