#include "sft/floer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sft/homology.hpp"

namespace sft {

namespace {

// Laurent polynomials in z, just enough arithmetic to run Gaussian
// elimination on fractions of them.
struct Laurent {
  std::map<long, Rat> c;
  bool zero() const { return c.empty(); }
};

Laurent lp_const(const Rat& v) {
  Laurent l;
  if (v != 0) l.c[0] = v;
  return l;
}

void lp_add_term(Laurent& l, long e, const Rat& v) {
  auto it = l.c.find(e);
  if (it == l.c.end()) {
    if (v != 0) l.c.emplace(e, v);
    return;
  }
  it->second += v;
  if (it->second == 0) l.c.erase(it);
}

Laurent lp_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.c)
    for (const auto& [eb, cb] : b.c) lp_add_term(r, ea + eb, ca * cb);
  return r;
}

Laurent lp_sub(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, v] : b.c) lp_add_term(r, e, -v);
  return r;
}

// Rational function num/den without gcd reduction; matrices here are tiny.
struct RatFunc {
  Laurent num, den;
};

RatFunc rf_zero() { return {Laurent{}, lp_const(1)}; }

bool rf_is_zero(const RatFunc& f) { return f.num.zero(); }

RatFunc rf_sub(const RatFunc& a, const RatFunc& b) {
  return {lp_sub(lp_mul(a.num, b.den), lp_mul(b.num, a.den)), lp_mul(a.den, b.den)};
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return {lp_mul(a.num, b.num), lp_mul(a.den, b.den)};
}

RatFunc rf_div(const RatFunc& a, const RatFunc& b) {
  if (b.num.zero()) throw std::logic_error("division by zero rational function");
  return {lp_mul(a.num, b.den), lp_mul(a.den, b.num)};
}

long rf_rank(std::vector<std::vector<RatFunc>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && rf_is_zero(m[pr][c])) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (rf_is_zero(m[i][c])) continue;
      RatFunc f = rf_div(m[i][c], m[r][c]);
      for (size_t j = c; j < cols; ++j) m[i][j] = rf_sub(m[i][j], rf_mul(f, m[r][j]));
    }
    ++r;
  }
  return static_cast<long>(r);
}

Parity parity_of_degree(const Rat& deg) {
  if (!rat_is_integer(deg)) return Parity::Even;
  return mpz_odd_p(deg.get_num().get_mpz_t()) ? Parity::Odd : Parity::Even;
}

// Splits a term of a linear element into (z exponent, orbit var); the
// orbit factor must appear exactly once.
std::pair<long, VarId> split_linear_term(const VariableTable& tab, const Monomial& m) {
  long zexp = 0;
  VarId orbit = kNoVar;
  for (const auto& f : m.factors) {
    if (tab.spec(f.v).kind == Kind::Z) {
      zexp = f.e;
    } else if (tab.spec(f.v).kind == Kind::Q && f.e == 1 && orbit == kNoVar) {
      orbit = f.v;
    } else {
      throw std::logic_error("non-linear term in a linear complex");
    }
  }
  if (orbit == kNoVar) throw std::logic_error("term without an orbit factor");
  return {zexp, orbit};
}

}  // namespace

FloerComplex floer_complex(const FloerComplexSpec& spec) {
  FloerComplex fc;
  fc.spec = spec;
  fc.tab = std::make_shared<VariableTable>();
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < spec.orbits.size(); ++i) {
    const FloerOrbit& o = spec.orbits[i];
    if (o.kappa < 1) throw std::invalid_argument("orbit multiplicity must be positive");
    if (!index.emplace(o.label, i).second)
      throw std::invalid_argument("duplicate orbit label " + o.label);
    Rat deg = o.cz + (spec.dimension_n - 3);
    fc.gens.push_back(fc.tab->add(
        {o.label, Kind::Q, parity_of_degree(deg), deg, o.kappa, 0, -1, kNoVar}));
  }
  fc.zvar = fc.tab->add({"z", Kind::Z, Parity::Even, Rat(-2) * spec.c1, 1, 0, -1, kNoVar});
  fc.tab->freeze();

  for (VarId g : fc.gens) fc.diff[g] = SuperElement(*fc.tab);
  for (const auto& cnt : spec.counts) {
    auto fi = index.find(cnt.from), ti = index.find(cnt.to);
    if (fi == index.end() || ti == index.end())
      throw std::invalid_argument("count references unknown orbit");
    const FloerOrbit& from = spec.orbits[fi->second];
    const FloerOrbit& to = spec.orbits[ti->second];
    if (from.h1_class != to.h1_class)
      throw std::invalid_argument("count connects different H1 classes: " + cnt.from +
                                  " -> " + cnt.to);
    if (to.cz != from.cz + 2 * spec.c1 * cnt.d - 1) {
      std::ostringstream os;
      os << "count " << cnt.from << " -> " << cnt.to << " (d=" << cnt.d
         << ") violates the index constraint";
      throw std::invalid_argument(os.str());
    }
    if (cnt.n == 0) continue;
    fc.diff[fc.gens[fi->second]] +=
        SuperElement::term(*fc.tab, Rat(cnt.n, to.kappa),
                           {{fc.zvar, cnt.d}, {fc.gens[ti->second], 1}});
  }

  for (size_t i = 0; i < fc.gens.size(); ++i) {
    SuperElement sq(*fc.tab);
    for (const auto& [m, c] : fc.diff[fc.gens[i]].terms()) {
      auto [zexp, orbit] = split_linear_term(*fc.tab, m);
      sq += SuperElement::term(*fc.tab, c, {{fc.zvar, zexp}}) * fc.diff.at(orbit);
    }
    if (!sq.is_zero()) throw SquareError(spec.orbits[i].label, sq.str());
  }
  return fc;
}

namespace {

// Degree class key: plain degree when z does not shift degrees, otherwise
// the degree modulo 2*c1 (z-multiplication identifies those slices).
Rat degree_class(const Rat& deg, const Rat& c1) {
  if (c1 == 0) return deg;
  Rat period = 2 * c1;
  if (period < 0) period = -period;
  Rat q = deg / period;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return deg - period * Rat(fl);
}

}  // namespace

std::map<Rat, long> floer_betti(const FloerComplex& fc) {
  const Rat& c1 = fc.spec.c1;
  std::map<Rat, std::vector<size_t>> classes;
  std::vector<Rat> degs(fc.gens.size());
  for (size_t i = 0; i < fc.gens.size(); ++i) {
    degs[i] = fc.tab->spec(fc.gens[i]).degree;
    classes[degree_class(degs[i], c1)].push_back(i);
  }

  std::map<VarId, size_t> gen_index;
  for (size_t i = 0; i < fc.gens.size(); ++i) gen_index[fc.gens[i]] = i;

  // Block of the differential leaving one degree class; rows run over the
  // class one lower.
  auto block_rank = [&](const std::vector<size_t>& cols_src) -> long {
    if (cols_src.empty()) return 0;
    Rat target = degree_class(degs[cols_src.front()] - 1, c1);
    auto it = classes.find(target);
    if (it == classes.end()) return 0;
    const std::vector<size_t>& rows_src = it->second;
    std::map<size_t, size_t> row_of;
    for (size_t r = 0; r < rows_src.size(); ++r) row_of[rows_src[r]] = r;
    std::vector<std::vector<RatFunc>> m(rows_src.size(),
                                        std::vector<RatFunc>(cols_src.size(), rf_zero()));
    for (size_t cj = 0; cj < cols_src.size(); ++cj) {
      for (const auto& [mono, c] : fc.diff.at(fc.gens[cols_src[cj]]).terms()) {
        auto [zexp, orbit] = split_linear_term(*fc.tab, mono);
        lp_add_term(m[row_of.at(gen_index.at(orbit))][cj].num, zexp, c);
      }
    }
    return rf_rank(std::move(m));
  };

  std::map<Rat, long> betti;
  for (const auto& [cls, members] : classes) {
    long out_rank = block_rank(members);
    // Rank entering this class: the block leaving the class one higher.
    long in_rank = 0;
    for (const auto& [cls2, members2] : classes) {
      if (members2.empty()) continue;
      if (degree_class(degs[members2.front()] - 1, c1) == cls) {
        in_rank += block_rank(members2);
      }
    }
    Rat key = degs[members.front()];
    for (size_t i : members) key = std::min(key, degs[i]);
    betti[key] = static_cast<long>(members.size()) - out_rank - in_rank;
  }
  return betti;
}

FloerChainMap floer_chain_map(const FloerComplex& minus, const FloerComplex& plus,
                              const std::vector<FloerCount>& counts, const Rat& c1) {
  std::unordered_map<std::string, size_t> pidx, midx;
  for (size_t i = 0; i < plus.spec.orbits.size(); ++i) pidx[plus.spec.orbits[i].label] = i;
  for (size_t i = 0; i < minus.spec.orbits.size(); ++i) midx[minus.spec.orbits[i].label] = i;

  FloerChainMap cm;
  for (VarId g : plus.gens) cm.images[g] = SuperElement(*minus.tab);
  for (const auto& cnt : counts) {
    auto fi = pidx.find(cnt.from);
    auto ti = midx.find(cnt.to);
    if (fi == pidx.end() || ti == midx.end())
      throw std::invalid_argument("chain map count references unknown orbit");
    const FloerOrbit& from = plus.spec.orbits[fi->second];
    const FloerOrbit& to = minus.spec.orbits[ti->second];
    if (from.h1_class != to.h1_class)
      throw std::invalid_argument("chain map count connects different H1 classes");
    if (to.cz != from.cz + 2 * c1 * cnt.d)
      throw std::invalid_argument("chain map count " + cnt.from + " -> " + cnt.to +
                                  " violates the index constraint");
    if (cnt.n == 0) continue;
    cm.images[plus.gens[fi->second]] +=
        SuperElement::term(*minus.tab, Rat(cnt.n, to.kappa),
                           {{minus.zvar, cnt.d}, {minus.gens[ti->second], 1}});
  }

  auto push_linear = [](const SuperElement& e, const VariableTable& tab,
                        const std::map<VarId, SuperElement>& img, const VariableTable& out_tab,
                        VarId out_z) {
    SuperElement r(out_tab);
    for (const auto& [m, c] : e.terms()) {
      auto [zexp, orbit] = split_linear_term(tab, m);
      r += SuperElement::term(out_tab, c, {{out_z, zexp}}) * img.at(orbit);
    }
    return r;
  };

  for (size_t i = 0; i < plus.gens.size(); ++i) {
    VarId g = plus.gens[i];
    SuperElement phi_d =
        push_linear(plus.diff.at(g), *plus.tab, cm.images, *minus.tab, minus.zvar);
    SuperElement d_phi = push_linear(cm.images.at(g), *minus.tab, minus.diff, *minus.tab,
                                     minus.zvar);
    cm.residual[g] = phi_d - d_phi;
    if (!cm.residual[g].is_zero()) cm.commutes = false;
  }
  return cm;
}

FloerComplexSpec ellipsoid_spec(int n, long i_max) {
  if (n < 1 || i_max < 0) throw std::invalid_argument("ellipsoid_spec: bad parameters");
  FloerComplexSpec spec;
  spec.name = "ellipsoid:" + std::to_string(n);
  spec.dimension_n = n;
  spec.c1 = 0;
  for (long i = 1; i <= i_max; ++i) {
    spec.orbits.push_back({"gamma_" + std::to_string(i), 1, Rat(n + 2 * i - 1), ""});
  }
  return spec;
}

}  // namespace sft
