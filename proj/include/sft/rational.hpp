#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace sft {

// Exact rational scalars. All coefficient and degree arithmetic in the
// library goes through mpq_class so nothing ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw std::domain_error("rat_to_long: not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("rat_to_long: overflow");
  return r.get_num().get_si();
}

// "num/den" with the "/den" suppressed for integers; the form used in all
// JSON and text output.
inline std::string rat_str(const Rat& r) {
  if (rat_is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && base == 0) throw std::domain_error("rat_pow: zero to negative power");
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
  Rat r = invert ? Rat(den, num) : Rat(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace sft
