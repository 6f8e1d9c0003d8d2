#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sft/monomial.hpp"
#include "sft/truncation.hpp"

namespace sft {

// Element of the free super-commutative algebra over a variable table:
// a finite rational combination of canonical monomials. This is the common
// substrate; the Poisson and Weyl layers put their products on top of it.
class SuperElement {
 public:
  SuperElement() = default;
  explicit SuperElement(const VariableTable& tab) : tab_(&tab) {}

  static SuperElement constant(const VariableTable& tab, Rat c);
  static SuperElement var(const VariableTable& tab, VarId v, long e = 1);
  // Accepts an unordered word; normalizes and keeps the Koszul sign.
  static SuperElement term(const VariableTable& tab, Rat c, std::vector<Factor> word);

  const VariableTable& table() const;
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Monomial, Rat, MonoLess>& terms() const { return terms_; }

  // Adds c * m to the element, canonicalizing and erasing exact zeros.
  void add_term(const Monomial& m, const Rat& c);
  void add_word(std::vector<Factor> word, const Rat& c);

  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement operator-() const;
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }

  SuperElement& operator*=(const Rat& c);
  friend SuperElement operator*(SuperElement a, const Rat& c) { return a *= c; }
  friend SuperElement operator*(const Rat& c, SuperElement a) { return a *= c; }

  // Supercommutative product (graded signs, odd squares vanish).
  SuperElement operator*(const SuperElement& o) const;
  SuperElement mul(const SuperElement& o, const TruncationPolicy& policy) const;

  bool operator==(const SuperElement& o) const { return terms_ == o.terms_; }

  // Left derivative: each occurrence of v is pulled out through the factors
  // to its left, at the Koszul sign cost of an odd v passing odd factors.
  SuperElement left_partial(VarId v) const;

  // Right derivative: v is pulled out past the factors to its right.
  SuperElement right_partial(VarId v) const;

  // Terms whose v-exponent is exactly e, with v^e stripped by left
  // extraction (sign for odd v, none for even).
  SuperElement coefficient_of(VarId v, long e) const;

  // Substitute v := value (a scalar).
  SuperElement evaluated(VarId v, const Rat& value) const;

  SuperElement truncated(const TruncationPolicy& policy) const;
  SuperElement winding_component(long w) const;
  SuperElement parity_part(Parity p) const;
  SuperElement hbar_component(long e) const;  // strips hbar^e

  // Simultaneous parity-preserving substitution into `target`. Source
  // variables without an image map to the target variable of the same name.
  // Images for variables with negative exponents must be single invertible
  // monomials.
  SuperElement substituted(const VariableTable& target,
                           const std::map<VarId, SuperElement>& images,
                           const TruncationPolicy& policy) const;

  std::optional<Rat> homogeneous_degree() const;  // nullopt if mixed; 0 for zero
  std::optional<Parity> homogeneous_parity() const;
  Rat coeff(const Monomial& m) const;
  Rat scalar_part() const;
  long max_exponent_of(VarId v) const;

  std::string str() const;

 private:
  void check_same_table(const SuperElement& o) const;

  const VariableTable* tab_ = nullptr;
  std::map<Monomial, Rat, MonoLess> terms_;
};

// exp(x) as a truncated series; x must have zero scalar part so everything
// stays rational and the series terminates under the policy.
SuperElement exp_truncated(const SuperElement& x, const TruncationPolicy& policy);

// log(1 + x), same preconditions as exp_truncated.
SuperElement log1p_truncated(const SuperElement& x, const TruncationPolicy& policy);

}  // namespace sft
