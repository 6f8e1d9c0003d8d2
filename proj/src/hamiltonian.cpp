#include "sft/hamiltonian.hpp"

#include <stdexcept>

namespace sft {

const char* level_name(Level l) {
  switch (l) {
    case Level::Quantum: return "quantum";
    case Level::Rational: return "rational";
    case Level::Classical: return "classical";
  }
  return "?";
}

Pairing Pairing::conjugate(const VariableTable& tab) {
  Pairing out;
  for (VarId p : tab.of_kind(Kind::P)) {
    const auto& spec = tab.spec(p);
    if (spec.conjugate == kNoVar)
      throw std::invalid_argument("Pairing::conjugate: unpaired p variable " + spec.name);
    out.entries.push_back({p, spec.conjugate, Rat(spec.kappa)});
  }
  return out;
}

Pairing Pairing::intersection_form(const VariableTable& tab,
                                   const std::vector<std::vector<Rat>>& eta) {
  Pairing out;
  auto qs = tab.of_kind(Kind::Q);
  for (VarId p : tab.of_kind(Kind::P)) {
    const auto& ps = tab.spec(p);
    if (ps.base_index < 0)
      throw std::invalid_argument("intersection_form: p without base_index: " + ps.name);
    for (VarId q : qs) {
      const auto& qspec = tab.spec(q);
      if (qspec.kappa != ps.kappa) continue;
      if (qspec.base_index < 0)
        throw std::invalid_argument("intersection_form: q without base_index: " + qspec.name);
      const Rat& eta_ij = eta.at(ps.base_index).at(qspec.base_index);
      if (eta_ij == 0) continue;
      out.entries.push_back({p, q, Rat(ps.kappa) * eta_ij});
    }
  }
  return out;
}

bool degree_homogeneous(const SuperElement& e, const Rat& expected) {
  auto d = e.homogeneous_degree();
  return d && (e.is_zero() || *d == expected);
}

}  // namespace sft
