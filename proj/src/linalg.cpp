#include "sft/linalg.hpp"

namespace sft {

size_t matrix_rank(Matrix m) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (size_t c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    Rat inv = Rat(1) / m.at(rank, col);
    for (size_t c = col; c < m.cols; ++c) m.at(rank, c) *= inv;
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      Rat factor = m.at(r, col);
      for (size_t c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> solve(Matrix a, std::vector<Rat> b) {
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < a.cols && rank < a.rows; ++col) {
    size_t pivot = rank;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != rank) {
      for (size_t c = col; c < a.cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
      std::swap(b[pivot], b[rank]);
    }
    Rat inv = Rat(1) / a.at(rank, col);
    for (size_t c = col; c < a.cols; ++c) a.at(rank, c) *= inv;
    b[rank] *= inv;
    for (size_t r = 0; r < a.rows; ++r) {
      if (r == rank || a.at(r, col) == 0) continue;
      Rat factor = a.at(r, col);
      for (size_t c = col; c < a.cols; ++c) a.at(r, c) -= factor * a.at(rank, c);
      b[r] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < a.rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rat> x(a.cols, Rat(0));
  for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace sft
