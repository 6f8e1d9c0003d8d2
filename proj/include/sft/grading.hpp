#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sft/variables.hpp"

namespace sft {

// Pure evaluators for the index and degree formulas. Conley-Zehnder
// indices are always inputs; nothing here looks at actual dynamics.

// Grading data for one closed orbit, as supplied by the user.
struct OrbitGradingData {
  long cz = 0;
  long multiplicity = 1;
  // Total multiplicity of return-map eigenvalues in (-1, 0).
  long return_map_neg_eigen_mult = 0;
  int n = 0;
};

// Expected dimension of a moduli component:
// sum cz+ - sum cz- + (n-3)(2 - 2g - s+ - s-) + 2 c1 + 2 r.
long moduli_dim(const std::vector<long>& cz_plus, const std::vector<long>& cz_minus,
                long g, long r, long c1_of_class, int n);

// (deg p, deg q) = (-cz + n - 3, cz + n - 3).
std::pair<Rat, Rat> degrees_pq(const Rat& cz, int n);

struct BottDegrees {
  Rat p, q, t, tau;
};

// Orbit-variable degrees in a fibered family: with c = c1_A0 / l,
// deg p_{k,i} = delta_deg - 2 - 2ck and deg q_{k,i} = delta_deg - 2 + 2ck,
// plus deg t = delta_deg - 2 and the odd class tau at 2*c1_A0 - 3.
BottDegrees bott_degrees(long k, const Rat& delta_deg, long c1_A0, long l);

// Torsion grading: cz measured in the frame g minus the transported
// correction, cz - (2m)/l. The caller passes 2m directly.
Rat fractional_degree(long cz_g, long twice_m, long l);

// Parity of the Conley-Zehnder index from (-1)^cz = (-1)^(n-1) sign det(I - A).
Parity parity_from_return_map(int n, int det_sign);

// An even multiple of an orbit is bad exactly when the count of return-map
// eigenvalues in (-1, 0) is odd; odd multiples never are.
bool is_bad_even_multiple(const OrbitGradingData& data, long multiple);

// Rank of the degree-k part of cylindrical homology for the Brieskorn
// sphere Sigma(p, 2, ..., 2), p = 1 mod 8, n odd.
long brieskorn_ck(long p, long n, long k);

// Generator degrees 2(n + i - 2) - dim for a subcritical Weinstein domain
// with the given homology generators, i = 1..i_max.
std::vector<std::pair<std::string, Rat>> yau_generators(
    int n, const std::vector<std::pair<std::string, long>>& homology_dims, long i_max);

}  // namespace sft
