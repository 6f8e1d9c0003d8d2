#include "sft/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace sft {

SuperElement dga_apply(const DGA& dga, const SuperElement& e, const TruncationPolicy& policy) {
  return apply_derivation(dga.diff, e, policy);
}

size_t ChainComplexSlice::dim(const Rat& degree) const {
  auto it = basis.find(degree);
  return it == basis.end() ? 0 : it->second.size();
}

namespace {

long generator_weight(const VariableTable& tab, VarId v) {
  Kind k = tab.spec(v).kind;
  return (k == Kind::P || k == Kind::Q) ? tab.spec(v).kappa : 0;
}

void enumerate_basis(const VariableTable& tab, const std::vector<VarId>& gens, size_t i,
                     long budget, std::vector<Factor>& current,
                     std::vector<Monomial>& out) {
  if (i == gens.size()) {
    auto [sign, m] = normalize_word(tab, current);
    if (sign == 0) throw std::logic_error("enumerate_basis: degenerate monomial");
    out.push_back(std::move(m));
    return;
  }
  VarId v = gens[i];
  long w = generator_weight(tab, v);
  bool odd = tab.is_odd(v);
  if (w == 0 && !odd)
    throw std::invalid_argument("build_slice: even weight-0 generator " + tab.name(v) +
                                " makes the slice infinite");
  long emax = odd ? 1 : budget / w;
  for (long e = 0; e <= emax; ++e) {
    if (e > 0) current.push_back({v, e});
    enumerate_basis(tab, gens, i + 1, budget - e * w, current, out);
    if (e > 0) current.pop_back();
  }
}

}  // namespace

ChainComplexSlice build_slice(const DGA& dga, long max_weight) {
  const VariableTable& tab = *dga.tab;
  ChainComplexSlice slice;
  slice.max_weight = max_weight;

  std::vector<VarId> gens = dga.generators;
  std::sort(gens.begin(), gens.end(),
            [&](VarId a, VarId b) { return tab.rank(a) < tab.rank(b); });
  std::vector<Monomial> all;
  std::vector<Factor> current;
  enumerate_basis(tab, gens, 0, max_weight, current, all);

  for (auto& m : all) slice.basis[monomial_degree(tab, m)].push_back(std::move(m));

  std::map<Monomial, std::pair<Rat, size_t>, MonoLess> index;
  for (auto& [deg, monos] : slice.basis) {
    std::sort(monos.begin(), monos.end(), MonoLess{});
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], std::make_pair(deg, i));
  }

  for (const auto& [deg, monos] : slice.basis) {
    Rat lower = deg - 1;
    auto lower_it = slice.basis.find(lower);
    Matrix m_d(lower_it == slice.basis.end() ? 0 : lower_it->second.size(), monos.size());
    for (size_t col = 0; col < monos.size(); ++col) {
      SuperElement elem(tab);
      elem.add_term(monos[col], 1);
      SuperElement image = dga_apply(dga, elem);
      if (image.is_zero()) continue;
      for (const auto& [im, c] : image.terms()) {
        auto it = index.find(im);
        if (it == index.end() || it->second.first != lower)
          throw std::logic_error("build_slice: differential leaves the slice at " +
                                 monomial_str(tab, monos[col]));
        m_d.at(it->second.second, col) = c;
      }
      SuperElement sq = dga_apply(dga, image);
      if (!sq.is_zero())
        throw SquareError(monomial_str(tab, monos[col]), sq.str());
    }
    slice.boundary.emplace(deg, std::move(m_d));
  }
  return slice;
}

long betti(const ChainComplexSlice& slice, const Rat& degree) {
  auto bit = slice.basis.find(degree);
  if (bit == slice.basis.end()) return 0;
  long dim = static_cast<long>(bit->second.size());
  long rank_out = 0, rank_in = 0;
  if (auto it = slice.boundary.find(degree); it != slice.boundary.end())
    rank_out = static_cast<long>(matrix_rank(it->second));
  if (auto it = slice.boundary.find(degree + 1); it != slice.boundary.end())
    rank_in = static_cast<long>(matrix_rank(it->second));
  return dim - rank_out - rank_in;
}

std::map<Rat, long> betti_table(const ChainComplexSlice& slice) {
  std::map<Rat, long> out;
  for (const auto& [deg, monos] : slice.basis) out[deg] = betti(slice, deg);
  return out;
}

bool is_cycle(const DGA& dga, const SuperElement& e) {
  return dga_apply(dga, e).is_zero();
}

std::optional<SuperElement> find_boundary_witness(const ChainComplexSlice& slice,
                                                  const DGA& dga, const SuperElement& cycle) {
  if (cycle.is_zero()) return SuperElement(*dga.tab);
  if (!is_cycle(dga, cycle)) return std::nullopt;
  auto deg_opt = cycle.homogeneous_degree();
  if (!deg_opt) return std::nullopt;
  Rat deg = *deg_opt;
  auto bit = slice.basis.find(deg);
  auto upper_it = slice.basis.find(deg + 1);
  auto mat_it = slice.boundary.find(deg + 1);
  if (bit == slice.basis.end() || upper_it == slice.basis.end() ||
      mat_it == slice.boundary.end())
    return std::nullopt;

  const auto& monos = bit->second;
  std::vector<Rat> b(monos.size(), Rat(0));
  std::map<Monomial, size_t, MonoLess> index;
  for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  for (const auto& [m, c] : cycle.terms()) {
    auto it = index.find(m);
    if (it == index.end()) return std::nullopt;
    b[it->second] = c;
  }
  auto x = solve(mat_it->second, std::move(b));
  if (!x) return std::nullopt;
  SuperElement witness(*dga.tab);
  for (size_t i = 0; i < upper_it->second.size(); ++i)
    witness.add_term(upper_it->second[i], (*x)[i]);
  return witness;
}

}  // namespace sft
