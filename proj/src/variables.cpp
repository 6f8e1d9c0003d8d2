#include "sft/variables.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sft {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::P: return "p";
    case Kind::Q: return "q";
    case Kind::T: return "t";
    case Kind::TAU: return "tau";
    case Kind::Z: return "z";
    case Kind::HBAR: return "hbar";
  }
  return "?";
}

VarId add_checked(std::vector<VariableSpec>& specs, VariableSpec&& spec) {
  if (spec.parity == Parity::Odd &&
      (spec.kind == Kind::Z || spec.kind == Kind::HBAR))
    throw std::invalid_argument("odd parity not allowed for z/hbar variables");
  specs.push_back(std::move(spec));
  return static_cast<VarId>(specs.size() - 1);
}

VarId VariableTable::add(VariableSpec spec) {
  if (frozen_) throw std::logic_error("VariableTable: add after freeze");
  if (by_name_.count(spec.name))
    throw std::invalid_argument("VariableTable: duplicate name " + spec.name);
  if (spec.kappa < 1)
    throw std::invalid_argument("VariableTable: kappa must be positive for " + spec.name);
  std::string name = spec.name;
  VarId id = add_checked(specs_, std::move(spec));
  by_name_.emplace(std::move(name), id);
  return id;
}

std::pair<VarId, VarId> VariableTable::add_pair(VariableSpec p_spec, VariableSpec q_spec) {
  if (p_spec.kind != Kind::P || q_spec.kind != Kind::Q)
    throw std::invalid_argument("add_pair expects a P spec and a Q spec");
  VarId p = add(std::move(p_spec));
  VarId q = add(std::move(q_spec));
  specs_[p].conjugate = q;
  specs_[q].conjugate = p;
  return {p, q};
}

void VariableTable::freeze() {
  if (frozen_) return;
  std::vector<VarId> order(specs_.size());
  for (VarId v = 0; v < specs_.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VarId a, VarId b) {
    const auto& sa = specs_[a];
    const auto& sb = specs_[b];
    return std::tie(sa.kind, sa.base_index, sa.kappa, sa.name) <
           std::tie(sb.kind, sb.base_index, sb.kappa, sb.name);
  });
  ranks_.assign(specs_.size(), 0);
  for (uint32_t i = 0; i < order.size(); ++i) ranks_[order[i]] = i;
  frozen_ = true;
}

std::optional<VarId> VariableTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VarId VariableTable::require(const std::string& name) const {
  auto v = find(name);
  if (!v) throw std::out_of_range("VariableTable: no variable named " + name);
  return *v;
}

std::vector<VarId> VariableTable::of_kind(Kind k) const {
  std::vector<VarId> out;
  for (VarId v = 0; v < specs_.size(); ++v)
    if (specs_[v].kind == k) out.push_back(v);
  return out;
}

}  // namespace sft
