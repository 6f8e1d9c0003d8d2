#include <string>

#include "sft/models.hpp"

namespace sft {
namespace {

std::string indexed_name(const char* prefix, long k) {
  return std::string(prefix) + std::to_string(k);
}

}  // namespace

SatelliteModel circle_satellite(long g, long n_slots, long K) {
  auto tab = std::make_shared<VariableTable>();
  SatelliteModel sat;
  sat.g = g;
  sat.n_slots = n_slots;
  sat.dt0 = tab->add({"dt0", Kind::T, Parity::Even, Rat(-2), 1, 0, -1, kNoVar});
  sat.dt1 = tab->add({"dt1", Kind::T, Parity::Odd, Rat(-1), 1, 0, -1, kNoVar});
  for (long k = 1; k <= K; ++k) {
    auto [p, q] = tab->add_pair(
        {indexed_name("p_", k), Kind::P, Parity::Even, Rat(-2), k, k, 0, kNoVar},
        {indexed_name("q_", k), Kind::Q, Parity::Even, Rat(-2), k, -k, 0, kNoVar});
    sat.p.push_back(p);
    sat.q.push_back(q);
    sat.dp.push_back(tab->add({indexed_name("dp_", k), Kind::T, Parity::Even, Rat(-2),
                               1, k, -1, kNoVar}));
    sat.dq.push_back(tab->add({indexed_name("dq_", k), Kind::T, Parity::Even, Rat(-2),
                               1, -k, -1, kNoVar}));
  }
  tab->freeze();
  sat.tab = tab;

  // u_xx drops the constant mode and weights each Fourier mode by -k^2;
  // du collects one variation slot per coordinate of u.
  SuperElement uxx(*tab), du(*tab);
  for (long k = 1; k <= K; ++k) {
    Rat w(-k * k);
    uxx += w * SuperElement::var(*tab, sat.p[k - 1]);
    uxx += w * SuperElement::var(*tab, sat.q[k - 1]);
    du += SuperElement::var(*tab, sat.dp[k - 1]) + SuperElement::var(*tab, sat.dq[k - 1]);
  }
  du += SuperElement::var(*tab, sat.dt0);

  SuperElement integrand = SuperElement::constant(*tab, 1);
  for (long i = 0; i < g; ++i) integrand = integrand * uxx;
  for (long i = 0; i < n_slots; ++i) integrand = integrand * du;
  sat.form = SuperElement::var(*tab, sat.dt1) * integrand.winding_component(0) *
             (Rat(1) / Rat(factorial(n_slots)));
  return sat;
}

SuperElement delta_component(const SatelliteModel& sat, const SuperElement& e, long deg) {
  const VariableTable& tab = *sat.tab;
  SuperElement out(tab);
  for (const auto& [m, c] : e.terms()) {
    long d = 0;
    for (const auto& f : m.factors)
      if (tab.spec(f.v).kind == Kind::T) d += f.e;
    if (d == deg) out.add_term(m, c);
  }
  return out;
}

SuperElement form_component(const SuperElement& form, const std::vector<VarId>& dirs) {
  SuperElement r = form;
  for (VarId v : dirs) r = r.left_partial(v);
  return r;
}

}  // namespace sft
