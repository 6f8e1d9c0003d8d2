#pragma once

#include <optional>

#include "sft/monomial.hpp"

namespace sft {

// Term filter applied after every product and series step. A value of -1
// means the bound is off. max_t_power caps each T-kind variable's exponent
// individually. The hbar window brackets the allowed hbar exponent; -1 is a
// legitimate lower end (rational Hamiltonians carry a single 1/hbar).
struct TruncationPolicy {
  long max_weight = -1;
  long max_p_weight = -1;  // weight counted over P factors only
  long max_q_weight = -1;  // same for Q factors
  long max_t_power = -1;
  long max_z_degree = -1;
  std::optional<long> hbar_lo;
  std::optional<long> hbar_hi;

  bool keeps(const VariableTable& tab, const Monomial& m) const;

  static TruncationPolicy none() { return {}; }
  static TruncationPolicy weight(long w) {
    TruncationPolicy p;
    p.max_weight = w;
    return p;
  }
};

}  // namespace sft
