#include "sft/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sft {

long Monomial::exponent_of(VarId v) const {
  for (const auto& f : factors)
    if (f.v == v) return f.e;
  return 0;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  return std::lexicographical_compare(
      a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
      [](const Factor& x, const Factor& y) {
        if (x.v != y.v) return x.v < y.v;
        return x.e < y.e;
      });
}

std::pair<int, Monomial> normalize_word(const VariableTable& tab, std::vector<Factor> word) {
  if (!tab.frozen()) throw std::logic_error("normalize_word: table not frozen");
  std::erase_if(word, [](const Factor& f) { return f.e == 0; });

  // Insertion sort by rank; moving an odd-exponent odd factor past another
  // one flips the Koszul sign.
  int sign = 1;
  for (size_t i = 1; i < word.size(); ++i) {
    Factor cur = word[i];
    bool cur_odd = tab.is_odd(cur.v) && (cur.e % 2 != 0);
    size_t j = i;
    while (j > 0 && tab.rank(word[j - 1].v) > tab.rank(cur.v)) {
      bool other_odd = tab.is_odd(word[j - 1].v) && (word[j - 1].e % 2 != 0);
      if (cur_odd && other_odd) sign = -sign;
      word[j] = word[j - 1];
      --j;
    }
    word[j] = cur;
  }

  Monomial m;
  for (const auto& f : word) {
    if (!m.factors.empty() && m.factors.back().v == f.v) {
      m.factors.back().e += f.e;
      if (m.factors.back().e == 0) m.factors.pop_back();
    } else {
      m.factors.push_back(f);
    }
  }
  for (const auto& f : m.factors) {
    const auto& spec = tab.spec(f.v);
    if (spec.parity == Parity::Odd && (f.e < 0 || f.e > 1)) return {0, Monomial{}};
    if (f.e < 0 && spec.kind != Kind::Z && spec.kind != Kind::HBAR)
      throw std::invalid_argument("negative exponent on non-invertible variable " + spec.name);
  }
  return {sign, std::move(m)};
}

Rat monomial_degree(const VariableTable& tab, const Monomial& m) {
  Rat d = 0;
  for (const auto& f : m.factors) d += tab.spec(f.v).degree * f.e;
  return d;
}

Parity monomial_parity(const VariableTable& tab, const Monomial& m) {
  long odd = 0;
  for (const auto& f : m.factors)
    if (tab.is_odd(f.v)) odd += f.e;
  return odd % 2 ? Parity::Odd : Parity::Even;
}

long monomial_winding(const VariableTable& tab, const Monomial& m) {
  long w = 0;
  for (const auto& f : m.factors) w += tab.spec(f.v).winding * f.e;
  return w;
}

long monomial_weight(const VariableTable& tab, const Monomial& m) {
  long w = 0;
  for (const auto& f : m.factors) {
    Kind k = tab.spec(f.v).kind;
    if (k == Kind::P || k == Kind::Q) w += tab.spec(f.v).kappa * f.e;
  }
  return w;
}

long monomial_kind_weight(const VariableTable& tab, const Monomial& m, Kind kind) {
  long w = 0;
  for (const auto& f : m.factors)
    if (tab.spec(f.v).kind == kind) w += tab.spec(f.v).kappa * f.e;
  return w;
}

long hbar_exponent(const VariableTable& tab, const Monomial& m) {
  long e = 0;
  for (const auto& f : m.factors)
    if (tab.spec(f.v).kind == Kind::HBAR) e += f.e;
  return e;
}

long z_degree(const VariableTable& tab, const Monomial& m) {
  long e = 0;
  for (const auto& f : m.factors)
    if (tab.spec(f.v).kind == Kind::Z) e += f.e;
  return e;
}

std::string monomial_str(const VariableTable& tab, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : m.factors) {
    if (!first) os << " ";
    first = false;
    os << tab.name(f.v);
    if (f.e != 1) os << "^" << f.e;
  }
  return os.str();
}

bool TruncationPolicy::keeps(const VariableTable& tab, const Monomial& m) const {
  if (max_weight >= 0 && monomial_weight(tab, m) > max_weight) return false;
  if (max_p_weight >= 0 && monomial_kind_weight(tab, m, Kind::P) > max_p_weight) return false;
  if (max_q_weight >= 0 && monomial_kind_weight(tab, m, Kind::Q) > max_q_weight) return false;
  if (max_t_power >= 0) {
    for (const auto& f : m.factors)
      if (tab.spec(f.v).kind == Kind::T && f.e > max_t_power) return false;
  }
  if (max_z_degree >= 0 && z_degree(tab, m) > max_z_degree) return false;
  if (hbar_lo || hbar_hi) {
    long h = hbar_exponent(tab, m);
    if (hbar_lo && h < *hbar_lo) return false;
    if (hbar_hi && h > *hbar_hi) return false;
  }
  return true;
}

SuperElement SuperElement::constant(const VariableTable& tab, Rat c) {
  SuperElement e(tab);
  if (c != 0) e.terms_.emplace(Monomial{}, std::move(c));
  return e;
}

SuperElement SuperElement::var(const VariableTable& tab, VarId v, long e) {
  return term(tab, 1, {{v, e}});
}

SuperElement SuperElement::term(const VariableTable& tab, Rat c, std::vector<Factor> word) {
  SuperElement out(tab);
  out.add_word(std::move(word), c);
  return out;
}

const VariableTable& SuperElement::table() const {
  if (!tab_) throw std::logic_error("SuperElement: no table");
  return *tab_;
}

void SuperElement::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SuperElement::add_word(std::vector<Factor> word, const Rat& c) {
  if (c == 0) return;
  auto [sign, m] = normalize_word(table(), std::move(word));
  if (sign == 0) return;
  add_term(m, sign < 0 ? Rat(-c) : c);
}

void SuperElement::check_same_table(const SuperElement& o) const {
  if (tab_ && o.tab_ && tab_ != o.tab_)
    throw std::invalid_argument("SuperElement: mixing variable tables");
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  check_same_table(o);
  if (!tab_) tab_ = o.tab_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  check_same_table(o);
  if (!tab_) tab_ = o.tab_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperElement SuperElement::operator-() const {
  SuperElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SuperElement& SuperElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SuperElement SuperElement::operator*(const SuperElement& o) const {
  return mul(o, TruncationPolicy::none());
}

SuperElement SuperElement::mul(const SuperElement& o, const TruncationPolicy& policy) const {
  check_same_table(o);
  SuperElement out(table());
  std::vector<Factor> word;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      word.clear();
      word.insert(word.end(), m1.factors.begin(), m1.factors.end());
      word.insert(word.end(), m2.factors.begin(), m2.factors.end());
      auto [sign, m] = normalize_word(table(), word);
      if (sign == 0 || !policy.keeps(table(), m)) continue;
      Rat c = c1 * c2;
      if (sign < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

SuperElement SuperElement::left_partial(VarId v) const {
  SuperElement out(table());
  bool v_odd = table().is_odd(v);
  for (const auto& [m, c] : terms_) {
    long odd_prefix = 0;
    for (size_t i = 0; i < m.factors.size(); ++i) {
      const Factor& f = m.factors[i];
      if (f.v == v) {
        Monomial stripped = m;
        if (f.e == 1)
          stripped.factors.erase(stripped.factors.begin() + i);
        else
          stripped.factors[i].e -= 1;
        Rat coeff = c * f.e;
        if (v_odd && odd_prefix % 2) coeff = -coeff;
        out.add_term(stripped, coeff);
        break;
      }
      if (table().is_odd(f.v)) odd_prefix += f.e;
    }
  }
  return out;
}

SuperElement SuperElement::right_partial(VarId v) const {
  SuperElement out(table());
  bool v_odd = table().is_odd(v);
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.factors.size(); ++i) {
      const Factor& f = m.factors[i];
      if (f.v != v) continue;
      Monomial stripped = m;
      if (f.e == 1)
        stripped.factors.erase(stripped.factors.begin() + i);
      else
        stripped.factors[i].e -= 1;
      Rat coeff = c * f.e;
      if (v_odd) {
        long odd_suffix = 0;
        for (size_t k = i + 1; k < m.factors.size(); ++k)
          if (table().is_odd(m.factors[k].v)) odd_suffix += m.factors[k].e;
        if (odd_suffix % 2) coeff = -coeff;
      }
      out.add_term(stripped, coeff);
      break;
    }
  }
  return out;
}

SuperElement SuperElement::coefficient_of(VarId v, long e) const {
  SuperElement out(table());
  bool v_odd = table().is_odd(v);
  for (const auto& [m, c] : terms_) {
    if (m.exponent_of(v) != e) continue;
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Monomial stripped;
    long odd_prefix = 0;
    bool seen = false;
    Rat coeff = c;
    for (const auto& f : m.factors) {
      if (f.v == v) {
        seen = true;
        if (v_odd && odd_prefix % 2) coeff = -coeff;
        continue;
      }
      if (!seen && table().is_odd(f.v)) odd_prefix += f.e;
      stripped.factors.push_back(f);
    }
    out.add_term(stripped, coeff);
  }
  return out;
}

SuperElement SuperElement::evaluated(VarId v, const Rat& value) const {
  if (table().is_odd(v) && value != 0)
    throw std::invalid_argument("evaluated: odd variable needs value 0");
  SuperElement out(table());
  for (const auto& [m, c] : terms_) {
    long e = m.exponent_of(v);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    if (value == 0) continue;
    Monomial stripped;
    for (const auto& f : m.factors)
      if (f.v != v) stripped.factors.push_back(f);
    out.add_term(stripped, c * rat_pow(value, e));
  }
  return out;
}

SuperElement SuperElement::truncated(const TruncationPolicy& policy) const {
  SuperElement out(table());
  for (const auto& [m, c] : terms_)
    if (policy.keeps(table(), m)) out.add_term(m, c);
  return out;
}

SuperElement SuperElement::winding_component(long w) const {
  SuperElement out(table());
  for (const auto& [m, c] : terms_)
    if (monomial_winding(table(), m) == w) out.add_term(m, c);
  return out;
}

SuperElement SuperElement::parity_part(Parity p) const {
  SuperElement out(table());
  for (const auto& [m, c] : terms_)
    if (monomial_parity(table(), m) == p) out.add_term(m, c);
  return out;
}

SuperElement SuperElement::hbar_component(long e) const {
  SuperElement out(table());
  for (const auto& [m, c] : terms_) {
    if (hbar_exponent(table(), m) != e) continue;
    Monomial stripped;
    for (const auto& f : m.factors)
      if (table().spec(f.v).kind != Kind::HBAR) stripped.factors.push_back(f);
    out.add_term(stripped, c);
  }
  return out;
}

namespace {

// Integer power with truncation applied at each step.
SuperElement element_pow(const SuperElement& base, long e, const TruncationPolicy& policy) {
  SuperElement acc = SuperElement::constant(base.table(), 1);
  for (long i = 0; i < e; ++i) acc = acc.mul(base, policy);
  return acc;
}

}  // namespace

SuperElement SuperElement::substituted(const VariableTable& target,
                                       const std::map<VarId, SuperElement>& images,
                                       const TruncationPolicy& policy) const {
  const VariableTable& src = table();
  std::vector<std::optional<SuperElement>> image_cache(src.size());
  auto image_of = [&](VarId v) -> const SuperElement& {
    if (!image_cache[v]) {
      auto it = images.find(v);
      if (it != images.end()) {
        if (&it->second.table() != &target)
          throw std::invalid_argument("substituted: image not over target table");
        auto ip = it->second.homogeneous_parity();
        if (!it->second.is_zero() && (!ip || *ip != src.spec(v).parity))
          throw std::invalid_argument("substituted: parity mismatch for " + src.name(v));
        image_cache[v] = it->second;
      } else {
        VarId tv = target.require(src.name(v));
        if (target.spec(tv).parity != src.spec(v).parity)
          throw std::invalid_argument("substituted: parity mismatch transporting " + src.name(v));
        image_cache[v] = SuperElement::var(target, tv);
      }
    }
    return *image_cache[v];
  };

  std::map<std::pair<VarId, long>, SuperElement> pow_cache;
  auto power_of = [&](VarId v, long e) -> const SuperElement& {
    auto key = std::make_pair(v, e);
    auto it = pow_cache.find(key);
    if (it == pow_cache.end())
      it = pow_cache.emplace(key, element_pow(image_of(v), e, policy)).first;
    return it->second;
  };

  SuperElement out(target);
  for (const auto& [m, c] : terms_) {
    SuperElement acc = SuperElement::constant(target, c);
    for (const auto& f : m.factors) {
      if (acc.is_zero()) break;
      if (f.e >= 0) {
        acc = acc.mul(power_of(f.v, f.e), policy);
      } else {
        const SuperElement& img = image_of(f.v);
        // Negative powers only make sense for an invertible single term.
        if (img.num_terms() != 1)
          throw std::invalid_argument("substituted: negative power of non-monomial image");
        const auto& [im, ic] = *img.terms().begin();
        Monomial inv;
        for (const auto& g : im.factors) inv.factors.push_back({g.v, g.e * f.e});
        auto [sign, canon] = normalize_word(target, inv.factors);
        SuperElement pw(target);
        pw.add_term(canon, Rat(sign) * rat_pow(ic, f.e));
        acc = acc.mul(pw, policy);
      }
    }
    out += acc;
  }
  return out;
}

std::optional<Rat> SuperElement::homogeneous_degree() const {
  if (terms_.empty()) return Rat(0);
  std::optional<Rat> deg;
  for (const auto& [m, c] : terms_) {
    Rat d = monomial_degree(table(), m);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::optional<Parity> SuperElement::homogeneous_parity() const {
  if (terms_.empty()) return Parity::Even;
  std::optional<Parity> par;
  for (const auto& [m, c] : terms_) {
    Parity p = monomial_parity(table(), m);
    if (!par)
      par = p;
    else if (*par != p)
      return std::nullopt;
  }
  return par;
}

Rat SuperElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat SuperElement::scalar_part() const { return coeff(Monomial{}); }

long SuperElement::max_exponent_of(VarId v) const {
  long best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.exponent_of(v));
  return best;
}

std::string SuperElement::str() const {
  if (terms_.empty()) return "0";
  const VariableTable& tab = table();
  std::vector<const std::pair<const Monomial, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    const auto& fa = a->first.factors;
    const auto& fb = b->first.factors;
    return std::lexicographical_compare(
        fa.begin(), fa.end(), fb.begin(), fb.end(), [&](const Factor& x, const Factor& y) {
          if (tab.rank(x.v) != tab.rank(y.v)) return tab.rank(x.v) < tab.rank(y.v);
          return x.e > y.e;
        });
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    Rat c = t->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool unit = t->first.is_unit();
    if (c != 1 || unit) {
      os << rat_str(c);
      if (!unit) os << " ";
    }
    if (!unit) os << monomial_str(tab, t->first);
  }
  return os.str();
}

SuperElement exp_truncated(const SuperElement& x, const TruncationPolicy& policy) {
  if (x.scalar_part() != 0)
    throw std::domain_error("exp_truncated: nonzero constant term");
  SuperElement result = SuperElement::constant(x.table(), 1);
  SuperElement term = result;
  for (long k = 1; k <= 4096; ++k) {
    term = term.mul(x, policy) * rat(1, k);
    if (term.is_zero()) return result;
    result += term;
  }
  throw std::domain_error("exp_truncated: series does not terminate under policy");
}

SuperElement log1p_truncated(const SuperElement& x, const TruncationPolicy& policy) {
  if (x.scalar_part() != 0)
    throw std::domain_error("log1p_truncated: nonzero constant term");
  SuperElement result(x.table());
  SuperElement power = SuperElement::constant(x.table(), 1);
  for (long k = 1; k <= 4096; ++k) {
    power = power.mul(x, policy);
    if (power.is_zero()) return result;
    Rat c = rat(k % 2 ? 1 : -1, k);
    result += power * c;
  }
  throw std::domain_error("log1p_truncated: series does not terminate under policy");
}

}  // namespace sft
