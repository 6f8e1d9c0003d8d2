#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sft/element.hpp"

namespace sft {

// Linear chain-level machinery over user-supplied cylinder counts. The
// library only checks the index bookkeeping; whether the counts come from
// an actual moduli problem is the caller's business.

struct FloerOrbit {
  std::string label;
  long kappa = 1;
  Rat cz = 0;            // rational to admit torsion gradings
  std::string h1_class;  // orbits in different classes cannot be connected
};

// One count n_{from,to,d}. For a differential the index constraint is
// cz(to) = cz(from) + 2*c1*d - 1; for a chain map the -1 drops.
struct FloerCount {
  std::string from;
  std::string to;
  long d = 0;
  long n = 0;
};

struct FloerComplexSpec {
  std::string name;
  int dimension_n = 0;
  Rat c1 = 0;  // pairing of c1 with the curve class behind one power of z
  std::vector<FloerOrbit> orbits;
  std::vector<FloerCount> counts;
};

// The assembled complex: one q variable per orbit of degree cz + (n-3),
// plus z of degree -2*c1, and the differential dq = sum (n/kappa') z^d q'.
struct FloerComplex {
  FloerComplexSpec spec;
  std::shared_ptr<VariableTable> tab;
  std::vector<VarId> gens;  // aligned with spec.orbits
  VarId zvar = kNoVar;
  std::map<VarId, SuperElement> diff;
};

// Validates the count constraints and d^2 = 0 over the Laurent
// coefficients; throws std::invalid_argument with a witness otherwise.
FloerComplex floer_complex(const FloerComplexSpec& spec);

// Homology ranks over the fraction field of Q[z, z^-1]. When c1 != 0 a
// power of z shifts degree, so ranks are taken per degree class modulo
// 2*c1 and keyed by the smallest generator degree in the class; for
// c1 = 0 the keys are plain degrees.
std::map<Rat, long> floer_betti(const FloerComplex& fc);

struct FloerChainMap {
  std::map<VarId, SuperElement> images;    // plus generator -> element over minus table
  std::map<VarId, SuperElement> residual;  // (Phi d - d Phi) per plus generator
  bool commutes = true;
};

// Assembles Phi(q) = sum (n/kappa') z^d q' from plus to minus and reports
// the commutation defect with the two differentials.
FloerChainMap floer_chain_map(const FloerComplex& minus, const FloerComplex& plus,
                              const std::vector<FloerCount>& counts, const Rat& c1);

// One orbit per Conley-Zehnder index n + 2i - 1, i = 1..i_max, no counts:
// the irrational ellipsoid reference complex.
FloerComplexSpec ellipsoid_spec(int n, long i_max);

}  // namespace sft
