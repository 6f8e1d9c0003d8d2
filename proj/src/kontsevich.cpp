#include "sft/gw.hpp"

namespace sft {

// Classical recursion for counts of degree-d rational plane curves through
// 3d-1 generic points. Kept free of any machinery from the rest of the
// library so it can serve as an independent cross-check.
NdTable kontsevich_oracle(long d_max) {
  NdTable t;
  if (d_max < 1) return t;
  std::vector<mpz_class> N(d_max + 1);
  N[1] = 1;
  for (long d = 2; d <= d_max; ++d) {
    mpz_class acc = 0;
    for (long d1 = 1; d1 < d; ++d1) {
      long d2 = d - d1;
      mpz_class b1, b2;
      mpz_bin_uiui(b1.get_mpz_t(), 3 * d - 4, 3 * d1 - 2);
      mpz_bin_uiui(b2.get_mpz_t(), 3 * d - 4, 3 * d1 - 1);
      mpz_class d1z(d1), d2z(d2);
      acc += N[d1] * N[d2] * (d1z * d1z * d2z * d2z * b1 - d1z * d1z * d1z * d2z * b2);
    }
    N[d] = acc;
  }
  for (long d = 1; d <= d_max; ++d) t.entries[d] = N[d];
  return t;
}

}  // namespace sft
