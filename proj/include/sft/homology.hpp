#pragma once

#include <memory>

#include "sft/linalg.hpp"
#include "sft/poisson.hpp"

namespace sft {

// Differential graded algebra data: generator variables (orbit q's plus
// odd coefficient variables like tau) and the differential on each of
// them, extended to products as an odd derivation. Generators without a
// rule are closed.
struct DGA {
  std::shared_ptr<VariableTable> tab;
  std::vector<VarId> generators;
  std::map<VarId, SuperElement> diff;
};

SuperElement dga_apply(const DGA& dga, const SuperElement& e,
                       const TruncationPolicy& policy = TruncationPolicy::none());

// Monomial basis of all generator products up to the weight cap, graded by
// exact degree, with the boundary matrices between adjacent degrees.
// build_slice checks d(d(m)) = 0 on every basis monomial and throws
// SquareError naming the first offender otherwise.
struct ChainComplexSlice {
  long max_weight = 0;
  std::map<Rat, std::vector<Monomial>> basis;
  std::map<Rat, Matrix> boundary;  // keyed by source degree d, maps C_d -> C_{d-1}

  size_t dim(const Rat& degree) const;
};

struct SquareError : std::runtime_error {
  std::string monomial;
  std::string image;
  SquareError(std::string m, std::string im)
      : std::runtime_error("differential does not square to zero on " + m + " (image " + im + ")"),
        monomial(std::move(m)),
        image(std::move(im)) {}
};

ChainComplexSlice build_slice(const DGA& dga, long max_weight);

long betti(const ChainComplexSlice& slice, const Rat& degree);
std::map<Rat, long> betti_table(const ChainComplexSlice& slice);

bool is_cycle(const DGA& dga, const SuperElement& e);

// If the cycle is a boundary within the slice, returns a primitive.
std::optional<SuperElement> find_boundary_witness(const ChainComplexSlice& slice,
                                                  const DGA& dga, const SuperElement& cycle);

}  // namespace sft
