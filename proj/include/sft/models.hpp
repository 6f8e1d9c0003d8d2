#pragma once

#include "sft/cobordism.hpp"
#include "sft/homology.hpp"

namespace sft {

// A built model: table, Hamiltonian, and the handles tests need.
struct Model {
  std::shared_ptr<VariableTable> tab;
  Hamiltonian ham;
  std::string name;
  VarId hbar = kNoVar;
  VarId tau = kNoVar;
  long weight_cap = 0;
};

// A closed-string potential with its variable table. For the open cone
// stages the p/q orbit variables are live; after close-up only t's and z
// remain.
struct PotentialModel {
  std::shared_ptr<VariableTable> tab;
  SuperElement body;
  int dimension_n = 0;
  VarId zvar = kNoVar;
  VarId evolution = kNoVar;  // the t-variable the evolution equation runs in
  Pairing pairing;           // orbit pairing, empty once closed up
};

// Full loop-space Hamiltonian of the circle with orbits up to multiplicity
// K: hbar^{-1} t1 (t0^2/2 + sum p_k q_k) - t1/24.
Model circle_model(long K);

// Rational Hamiltonian of the round 3-sphere fibered over the projective
// line, orbits and weight up to W.
Model sphere3_model(long W);

// Same for the lens space quotient of order l (fiber winding l).
Model lens_model(long l, long W);

// The builder behind both, with an explicit term filter. The evolution
// recursion wants asymmetric p/q sector caps so the winding-l ring stays
// small; pass them through ring_policy.
Model fibered_sphere_model(long l, long orbit_max, const TruncationPolicy& ring_policy,
                           std::string name);

// h_k = the weight k-1 part of exp(sum_l q_{l,2}) picked out by winding;
// returns h_1 .. h_K over the model's table.
std::vector<SuperElement> hk_polynomials(const Model& m, long K);

// Builds the tau-linear Hamiltonian of the prequantization circle bundle
// of the base from its closed-string potential: differentiate by
// t_<theta_index>, shift t0 by u_0, replace the other base classes by
// their u-variables and z by the fiber marker, then keep winding zero.
// The policy overload threads sector caps through the substitution.
Model prequantization_h1(const PotentialModel& base, long l, int theta_index, long W);
Model prequantization_h1(const PotentialModel& base, long l, int theta_index, long orbit_max,
                         const TruncationPolicy& policy);

// The q-generator DGA carved out of a Hamiltonian model by the classical
// differential rules (tau rides along with zero differential).
DGA classical_dga(const Model& m);

DGA sphere3_dga(long W);
DGA lens_dga(long l, long W);

// The same generators with the zero differential; its Betti numbers are
// plain monomial counts (the tau = 0 quotient).
DGA free_quotient(const DGA& dga);

// The closed-string potential of the projective line:
// t2 t0^2/2 + z e^{t2}, with e^{t2} truncated at t2^t2_max.
PotentialModel cp1_potential(long t2_max);

// Multilinear satellite data over the circle: delta_t1 * (u_xx)^g *
// (delta u)^n / n! with the winding-zero part kept. Returned as a
// polynomial in the base p_k, q_k and the variation slots.
struct SatelliteModel {
  std::shared_ptr<VariableTable> tab;
  SuperElement form;
  long g = 0;
  long n_slots = 0;
  VarId dt0 = kNoVar, dt1 = kNoVar;
  std::vector<VarId> dp, dq;  // index k-1
  std::vector<VarId> p, q;
};

SatelliteModel circle_satellite(long g, long n_slots, long K);

// Total variation degree of the delta-variables in each monomial; used to
// compare against Taylor coefficients of the Hamiltonian.
SuperElement delta_component(const SatelliteModel& sat, const SuperElement& e, long deg);

// Taylor component of a multilinear form in the listed directions:
// iterated left derivatives, so repeated-direction multiplicities divide
// out and odd directions anticommute. The result still depends on the
// base p, q variables.
SuperElement form_component(const SuperElement& form, const std::vector<VarId>& dirs);

}  // namespace sft
