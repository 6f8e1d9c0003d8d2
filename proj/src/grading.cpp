#include "sft/grading.hpp"

#include <stdexcept>

namespace sft {

long moduli_dim(const std::vector<long>& cz_plus, const std::vector<long>& cz_minus,
                long g, long r, long c1_of_class, int n) {
  long dim = 0;
  for (long cz : cz_plus) dim += cz;
  for (long cz : cz_minus) dim -= cz;
  long punctures = static_cast<long>(cz_plus.size() + cz_minus.size());
  dim += (n - 3) * (2 - 2 * g - punctures);
  dim += 2 * c1_of_class + 2 * r;
  return dim;
}

std::pair<Rat, Rat> degrees_pq(const Rat& cz, int n) {
  return {-cz + (n - 3), cz + (n - 3)};
}

BottDegrees bott_degrees(long k, const Rat& delta_deg, long c1_A0, long l) {
  if (k < 1) throw std::out_of_range("bott_degrees: multiplicity k must be positive");
  if (l < 1) throw std::out_of_range("bott_degrees: l must be positive");
  Rat c = Rat(c1_A0, l);
  c.canonicalize();
  BottDegrees d;
  d.p = delta_deg - 2 - 2 * c * k;
  d.q = delta_deg - 2 + 2 * c * k;
  d.t = delta_deg - 2;
  d.tau = Rat(2 * c1_A0 - 3);
  return d;
}

Rat fractional_degree(long cz_g, long twice_m, long l) {
  if (l < 1) throw std::out_of_range("fractional_degree: l must be positive");
  Rat r = Rat(cz_g) - Rat(twice_m, l);
  r.canonicalize();
  return r;
}

Parity parity_from_return_map(int n, int det_sign) {
  if (det_sign != 1 && det_sign != -1)
    throw std::invalid_argument("parity_from_return_map: det sign must be +1 or -1");
  // (-1)^cz = (-1)^(n-1) * det_sign
  int e = (n - 1) % 2;
  if (det_sign < 0) e += 1;
  return e % 2 ? Parity::Odd : Parity::Even;
}

bool is_bad_even_multiple(const OrbitGradingData& data, long multiple) {
  if (multiple < 1) throw std::out_of_range("is_bad_even_multiple: multiple must be positive");
  if (multiple % 2 != 0) return false;
  return data.return_map_neg_eigen_mult % 2 != 0;
}

long brieskorn_ck(long p, long n, long k) {
  if (p % 8 != 1 || p < 9) throw std::invalid_argument("brieskorn_ck: need p = 1 mod 8, p > 1");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("brieskorn_ck: need odd n >= 3");
  if (k % 2 != 0) return 0;
  if (k < 2 * n - 4) return 0;
  // k(N) = 2 floor(2N/p) + 2(N+1)(n-2) is strictly increasing in N, so at
  // most one N can match and the clauses never collide.
  for (long N = 1;; ++N) {
    long kN = 2 * ((2 * N) / p) + 2 * (N + 1) * (n - 2);
    if (kN > k) break;
    if (kN == k) return (2 * N + 1) % p == 0 ? 1 : 2;
  }
  return 1;
}

std::vector<std::pair<std::string, Rat>> yau_generators(
    int n, const std::vector<std::pair<std::string, long>>& homology_dims, long i_max) {
  std::vector<std::pair<std::string, Rat>> out;
  for (const auto& [label, dim] : homology_dims) {
    if (dim >= n)
      throw std::invalid_argument("yau_generators: homology dimension " + std::to_string(dim) +
                                  " is not subcritical for n = " + std::to_string(n));
    if (dim < 0) throw std::invalid_argument("yau_generators: negative dimension");
  }
  for (long i = 1; i <= i_max; ++i) {
    for (const auto& [label, dim] : homology_dims) {
      out.emplace_back("q_{" + std::to_string(i) + "," + label + "}",
                       Rat(2 * (n + i - 2) - dim));
    }
  }
  return out;
}

}  // namespace sft
