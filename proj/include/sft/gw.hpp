#pragma once

#include "sft/models.hpp"

namespace sft {

// Evolution data for the potential recursion: df/dT equals h1 restricted
// to the Lagrangian graph q = kappa df/dp, integrated order by order in
// the evolution variable as an exact polynomial recursion.
struct HJProblem {
  std::shared_ptr<VariableTable> tab;
  SuperElement h1;
  Pairing pairing;
  SuperElement initial;  // value at T = 0; must not involve T
  VarId evolution = kNoVar;
  long order = 0;
  TruncationPolicy policy;
};

// The truncation the recursion stays exact under: coefficients at T-order
// j only ever reach orbit weight j, so weight <= order + 1 with all
// t-powers <= order loses nothing.
TruncationPolicy hj_default_policy(long order);

SuperElement hj_solve(const HJProblem& problem);

// Caps the cone potential off: p_{1,2i} becomes z times the constrained
// t-polynomial (with the free e^{t2} factor cut at t2_cap), higher
// multiplicities vanish. Returns the potential over a fresh t/z table.
PotentialModel close_up(const PotentialModel& cone, long t2_cap);

struct NdTable {
  std::map<long, Int> entries;
};

// Reads N_d = (3d-1)! times the z^d t4^(3d-1) coefficient at t2 = 0 and
// checks integrality and the N_1 = 1 seed.
NdTable extract_nd(const PotentialModel& f_cp2, long d_max);

// Independent recursion for the same plane-curve counts; deliberately
// shares no code with the machinery above.
NdTable kontsevich_oracle(long d_max);

struct BootstrapStage {
  Model h_model;            // Hamiltonian driving the stage
  PotentialModel f_cone;    // potential of C^n
  PotentialModel f_closed;  // potential of CP^n
};

struct BootstrapResult {
  std::vector<BootstrapStage> stages;  // index k-1 holds stage k
  NdTable nd;                          // filled once stage 2 has run
};

// Chains the stages: each one derives its Hamiltonian from the previous
// closed potential, solves the evolution, and caps off. orders[k-1] is the
// requested t-order of stage k; earlier stages are deepened automatically
// when a later stage needs more of them.
BootstrapResult bootstrap(int n_max, std::vector<long> orders);

}  // namespace sft
