#pragma once

#include <optional>
#include <vector>

#include "sft/rational.hpp"

namespace sft {

// Dense exact matrix over the rationals, row major.
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
  Rat& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

size_t matrix_rank(Matrix m);

// Solves A x = b exactly; empty optional if inconsistent.
std::optional<std::vector<Rat>> solve(Matrix a, std::vector<Rat> b);

}  // namespace sft
