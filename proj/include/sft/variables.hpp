#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sft/rational.hpp"

namespace sft {

// Variable kinds, listed in canonical sort order. P before Q means a stored
// monomial reads p-factors first; the Weyl layer reinterprets stored keys in
// normal (q-left) order with a Koszul sign, see weyl.cpp.
enum class Kind : uint8_t { P = 0, Q, T, TAU, Z, HBAR };

enum class Parity : uint8_t { Even = 0, Odd = 1 };

using VarId = uint32_t;
inline constexpr VarId kNoVar = UINT32_MAX;

const char* kind_name(Kind k);

struct VariableSpec {
  std::string name;          // display name, e.g. "p_{2,0}" or "t2"
  Kind kind = Kind::T;
  Parity parity = Parity::Even;
  Rat degree = 0;            // rational to allow fractional gradings
  long kappa = 1;            // orbit multiplicity; 1 for non-orbit kinds
  long winding = 0;          // loop-coordinate winding weight, 0 if none
  int base_index = -1;       // cohomology index pairing p_{k,i} with q_{k,j}
  VarId conjugate = kNoVar;  // paired variable for Weyl/Poisson, if any
};

// Registry of variables for one algebra. Registration happens up front;
// freeze() fixes the canonical order and must be called before monomial
// construction so sort ranks never shift under existing keys.
class VariableTable {
 public:
  VarId add(VariableSpec spec);

  // Convenience: register a conjugate (p,q) orbit pair and link the two.
  // Returns {p_id, q_id}.
  std::pair<VarId, VarId> add_pair(VariableSpec p_spec, VariableSpec q_spec);

  void freeze();
  bool frozen() const { return frozen_; }

  size_t size() const { return specs_.size(); }
  const VariableSpec& spec(VarId v) const { return specs_.at(v); }
  const std::string& name(VarId v) const { return specs_.at(v).name; }

  // Canonical position of v: sorted by (kind, base_index, kappa, name).
  uint32_t rank(VarId v) const { return ranks_.at(v); }

  std::optional<VarId> find(const std::string& name) const;
  VarId require(const std::string& name) const;

  std::vector<VarId> of_kind(Kind k) const;

  bool is_odd(VarId v) const { return specs_[v].parity == Parity::Odd; }

 private:
  std::vector<VariableSpec> specs_;
  std::vector<uint32_t> ranks_;
  std::unordered_map<std::string, VarId> by_name_;
  bool frozen_ = false;
};

}  // namespace sft
