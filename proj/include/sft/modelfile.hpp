#pragma once

#include <map>
#include <optional>
#include <string>

#include "sft/floer.hpp"
#include "sft/gw.hpp"
#include "sft/models.hpp"

namespace sft {

// A model as the CLI sees it, whichever of the four payload shapes the
// file carried. Exactly one of the optionals is set, named by `kind`.
struct LoadedModel {
  std::string kind;  // "hamiltonian", "differential", "potential", "floer"
  std::string name;
  std::optional<Model> hamiltonian;
  std::optional<DGA> dga;
  std::optional<PotentialModel> potential;
  std::optional<FloerComplex> floer;
  std::map<std::string, SuperElement> cycles;  // differential models only
  TruncationPolicy policy = TruncationPolicy::none();
};

// Parses and validates a ModelFile document. Top-level keys:
//   model         builtin name, or "custom" with the data inline
//   dimension_n   ambient complex dimension n
//   truncation    {weight, t_powers, z_degree}, all optional
//   orbits        [{label, kappa, cz, winding?, base_index?, parity?,
//                   h1_class?}]; creates the pair p_<label>, q_<label> with
//                   deg q = cz + (n-3), deg p = -cz + (n-3)
//   pairing       intersection-form matrix over base_index, else conjugate
//   hamiltonian / differential / base_potential / floer_counts
//                 exactly one, fixing the kind; term lists are
//                 [{coeff_num, coeff_den, factors: [{var, exp}]}] and the
//                 differential is an object {generator: term list}
//   evolution     potential models only: the t-variable the evolution
//                 equation runs in
//   cycles        differential models only, optional: named elements the
//                 homology command reports is_cycle for
//   c1            floer models only, default 0
// Scalar variables are registered on first use by name: t<i> (degree
// i - 2), tau (odd, degree 2n - 3), hbar (degree 2(n - 3)), z (degree
// -2(n + 1)). Throws std::invalid_argument on malformed or inconsistent
// input; the message names the offending key or term.
LoadedModel load_model_file(const std::string& json_text);

// The builtin models by CLI name: circle, sphere3, lens:<l>,
// ellipsoid:<n>. `weight` caps orbit multiplicities and the truncation
// weight (ellipsoid: the orbit list length).
LoadedModel load_builtin(const std::string& name, long weight);

// Emitters for the same schema, deterministic (keys sorted, exact
// rationals as "num/den" strings, two-space indent).
std::string model_file_json(const Model& m, const TruncationPolicy& policy);
std::string dga_file_json(const DGA& dga, int dimension_n, const TruncationPolicy& policy);
std::string potential_file_json(const PotentialModel& pm, const TruncationPolicy& policy);
std::string floer_file_json(const FloerComplexSpec& spec);

}  // namespace sft
