#include "sft/models.hpp"

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sft/poisson.hpp"

namespace sft {

namespace {

std::string orbit_name(char base, long k, long j) {
  std::ostringstream os;
  os << base << "_{" << k << "," << j << "}";
  return os.str();
}

std::string indexed_name(const char* base, long k) {
  std::ostringstream os;
  os << base << k;
  return os.str();
}

}  // namespace

Model circle_model(long K) {
  auto tab = std::make_shared<VariableTable>();
  VarId t0 = tab->add({"t0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  VarId t1 = tab->add({"t1", Kind::T, Parity::Odd, Rat(-1), 1, 0, -1, kNoVar});
  VarId hb = tab->add({"hbar", Kind::HBAR, Parity::Even, Rat(-4), 1, 0, -1, kNoVar});
  std::vector<std::pair<VarId, VarId>> pq;
  for (long k = 1; k <= K; ++k) {
    pq.push_back(tab->add_pair(
        {indexed_name("p_", k), Kind::P, Parity::Even, Rat(-2), k, k, 0, kNoVar},
        {indexed_name("q_", k), Kind::Q, Parity::Even, Rat(-2), k, -k, 0, kNoVar}));
  }
  tab->freeze();

  SuperElement body(*tab);
  body.add_word({{hb, -1}, {t1, 1}, {t0, 2}}, rat(1, 2));
  for (auto [p, q] : pq) body.add_word({{hb, -1}, {t1, 1}, {p, 1}, {q, 1}}, 1);
  body.add_word({{t1, 1}}, rat(-1, 24));

  Model m;
  m.tab = tab;
  m.ham = Hamiltonian{body, 1, Level::Quantum, Pairing::conjugate(*tab)};
  m.name = "circle";
  m.hbar = hb;
  m.weight_cap = K;
  return m;
}

Model fibered_sphere_model(long l, long orbit_max, const TruncationPolicy& ring_policy,
                           std::string name) {
  if (l < 1) throw std::invalid_argument("fiber winding must be positive");
  auto tab = std::make_shared<VariableTable>();
  // Degree bookkeeping: base classes of the projective line have degrees 0
  // and 2, each orbit shifts by 2ck per multiplicity k with c = n/l = 2/l.
  const Rat c = rat(2, l);
  VarId t0 = tab->add({"t0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  VarId tau = tab->add({"tau", Kind::TAU, Parity::Odd, Rat(1), 1, 0, -1, kNoVar});
  std::vector<std::array<VarId, 2>> pv(orbit_max + 1), qv(orbit_max + 1);
  for (long k = 1; k <= orbit_max; ++k) {
    for (int j = 0; j <= 1; ++j) {
      Rat base_deg = Rat(2 * j - 2);
      auto [p, q] = tab->add_pair({orbit_name('p', k, 2 * j), Kind::P, Parity::Even,
                                   base_deg - 2 * c * k, k, k, j, kNoVar},
                                  {orbit_name('q', k, 2 * j), Kind::Q, Parity::Even,
                                   base_deg + 2 * c * k, k, -k, j, kNoVar});
      pv[k][j] = p;
      qv[k][j] = q;
    }
  }
  tab->freeze();

  // The winding-l part of e^{u_2}. Building e^{p-sector} and e^{q-sector}
  // separately keeps the intermediate series at single-sector size.
  SuperElement up(*tab), uq(*tab);
  for (long k = 1; k <= orbit_max; ++k) {
    up += SuperElement::var(*tab, pv[k][1]);
    uq += SuperElement::var(*tab, qv[k][1]);
  }
  SuperElement ring =
      exp_truncated(up, ring_policy).mul(exp_truncated(uq, ring_policy), ring_policy);
  ring = ring.winding_component(l);

  SuperElement core(*tab);
  core.add_word({{t0, 2}}, rat(1, 2));
  for (long k = 1; k <= orbit_max; ++k) core.add_word({{pv[k][0], 1}, {qv[k][0], 1}}, 1);
  core += ring;
  SuperElement body = SuperElement::var(*tab, tau) * core;

  std::vector<std::vector<Rat>> eta = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  Model m;
  m.tab = tab;
  m.ham = Hamiltonian{body, 2, Level::Rational, Pairing::intersection_form(*tab, eta)};
  m.name = std::move(name);
  m.tau = tau;
  m.weight_cap = ring_policy.max_weight;
  return m;
}

Model sphere3_model(long W) {
  return fibered_sphere_model(1, W, TruncationPolicy::weight(W), "sphere3");
}

Model lens_model(long l, long W) {
  return fibered_sphere_model(l, W, TruncationPolicy::weight(W), "lens:" + std::to_string(l));
}

std::vector<SuperElement> hk_polynomials(const Model& m, long K) {
  const VariableTable& tab = *m.tab;
  SuperElement uq(tab);
  for (VarId q : tab.of_kind(Kind::Q))
    if (tab.spec(q).base_index == 1) uq += SuperElement::var(tab, q);
  SuperElement e = exp_truncated(uq, TruncationPolicy::weight(K));
  std::vector<SuperElement> hk;
  for (long k = 1; k <= K; ++k) hk.push_back(e.winding_component(-(k - 1)));
  return hk;
}

Model prequantization_h1(const PotentialModel& base, long l, int theta_index, long W) {
  return prequantization_h1(base, l, theta_index, W, TruncationPolicy::weight(W));
}

Model prequantization_h1(const PotentialModel& base, long l, int theta_index, long orbit_max,
                         const TruncationPolicy& policy) {
  const VariableTable& src = *base.tab;
  const int n = base.dimension_n + 1;
  if (theta_index != 2 * (n - 1))
    throw std::invalid_argument("theta_index must pick the top class of the base");
  const Rat c = rat(n, l);

  auto tab = std::make_shared<VariableTable>();
  VarId t0 = tab->add({"t0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  VarId tau = tab->add({"tau", Kind::TAU, Parity::Odd, Rat(2 * n - 3), 1, 0, -1, kNoVar});
  // The next evolution variable rides along so the output table is ready
  // for another recursion stage.
  tab->add({indexed_name("t", 2 * n), Kind::T, Parity::Even, Rat(2 * n - 2), 1, 0, -1, kNoVar});
  std::vector<std::vector<VarId>> pv(orbit_max + 1, std::vector<VarId>(n)),
      qv(orbit_max + 1, std::vector<VarId>(n));
  for (long k = 1; k <= orbit_max; ++k) {
    for (int j = 0; j < n; ++j) {
      Rat base_deg = Rat(2 * j - 2);
      auto [p, q] = tab->add_pair({orbit_name('p', k, 2 * j), Kind::P, Parity::Even,
                                   base_deg - 2 * c * k, k, k, j, kNoVar},
                                  {orbit_name('q', k, 2 * j), Kind::Q, Parity::Even,
                                   base_deg + 2 * c * k, k, -k, j, kNoVar});
      pv[k][j] = p;
      qv[k][j] = q;
    }
  }
  // Fiber marker: tracks where the base z went so the winding-zero
  // projection can see the fiber class; set to 1 afterwards.
  VarId zm = tab->add({"zfiber", Kind::Z, Parity::Even, Rat(0), 1, -l, -1, kNoVar});
  tab->freeze();

  SuperElement fhat = base.body.left_partial(src.require(indexed_name("t", theta_index)));

  std::map<VarId, SuperElement> images;
  SuperElement u0 = SuperElement::var(*tab, t0);
  for (long k = 1; k <= orbit_max; ++k)
    u0 += SuperElement::var(*tab, pv[k][0]) + SuperElement::var(*tab, qv[k][0]);
  images[src.require("t0")] = u0;
  for (int j = 1; j < n; ++j) {
    SuperElement uj(*tab);
    for (long k = 1; k <= orbit_max; ++k)
      uj += SuperElement::var(*tab, pv[k][j]) + SuperElement::var(*tab, qv[k][j]);
    images[src.require(indexed_name("t", 2 * j))] = uj;
  }
  if (base.zvar != kNoVar) images[base.zvar] = SuperElement::var(*tab, zm);

  SuperElement mixed = fhat.substituted(*tab, images, policy);
  SuperElement body =
      SuperElement::var(*tab, tau) * mixed.winding_component(0).evaluated(zm, 1);

  std::vector<std::vector<Rat>> eta(n, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j < n; ++j) eta[j][n - 1 - j] = 1;

  Model m;
  m.tab = tab;
  m.ham = Hamiltonian{body, n, Level::Rational, Pairing::intersection_form(*tab, eta)};
  m.name = "prequantization:" + std::to_string(l);
  m.tau = tau;
  m.weight_cap = policy.max_weight;
  return m;
}

DGA classical_dga(const Model& m) {
  DGA dga;
  dga.tab = m.tab;
  // Quantum bodies keep their genus-0 part at hbar^{-1}; the classical
  // differential only sees that layer.
  SuperElement body =
      m.ham.level == Level::Quantum ? m.ham.body.hbar_component(-1) : m.ham.body;
  auto rules = classical_rules(body, m.ham.pairing);
  for (VarId q : m.tab->of_kind(Kind::Q)) {
    dga.generators.push_back(q);
    auto it = rules.find(q);
    dga.diff[q] = it != rules.end() ? it->second : SuperElement(*m.tab);
  }
  if (m.tau != kNoVar) {
    dga.generators.push_back(m.tau);
    dga.diff[m.tau] = SuperElement(*m.tab);
  }
  // Odd scalars showing up in images (the circle's t1) have to live in the
  // slice basis too; they square to zero, so they keep it finite.
  std::set<VarId> have(dga.generators.begin(), dga.generators.end());
  std::set<VarId> extra;
  for (const auto& [g, img] : dga.diff)
    for (const auto& [mono, c] : img.terms())
      for (const auto& f : mono.factors)
        if (!have.count(f.v) && m.tab->is_odd(f.v)) extra.insert(f.v);
  for (VarId v : extra) {
    dga.generators.push_back(v);
    dga.diff[v] = SuperElement(*m.tab);
  }
  return dga;
}

DGA sphere3_dga(long W) { return classical_dga(sphere3_model(W)); }

DGA lens_dga(long l, long W) { return classical_dga(lens_model(l, W)); }

DGA free_quotient(const DGA& dga) {
  DGA out;
  out.tab = dga.tab;
  for (VarId g : dga.generators) {
    if (dga.tab->spec(g).kind == Kind::TAU) continue;
    out.generators.push_back(g);
    // Setting tau = 0 in the image, not clearing it: that the quotient
    // differential vanishes is a computed fact about the rules.
    auto it = dga.diff.find(g);
    if (it == dga.diff.end()) continue;
    SuperElement img = it->second;
    for (VarId t : dga.tab->of_kind(Kind::TAU)) img = img.evaluated(t, 0);
    out.diff[g] = std::move(img);
  }
  return out;
}

PotentialModel cp1_potential(long t2_max) {
  auto tab = std::make_shared<VariableTable>();
  VarId t0 = tab->add({"t0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  VarId t2 = tab->add({"t2", Kind::T, Parity::Even, Rat(0), 1, 0, -1, kNoVar});
  VarId z = tab->add({"z", Kind::Z, Parity::Even, Rat(-4), 1, 0, -1, kNoVar});
  tab->freeze();

  SuperElement body(*tab);
  body.add_word({{t2, 1}, {t0, 2}}, rat(1, 2));
  TruncationPolicy tp;
  tp.max_t_power = t2_max;
  body += SuperElement::var(*tab, z) *
          exp_truncated(SuperElement::var(*tab, t2), tp);

  PotentialModel pm;
  pm.tab = tab;
  pm.body = body;
  pm.dimension_n = 1;
  pm.zvar = z;
  pm.evolution = t2;
  return pm;
}

}  // namespace sft
