#include "monopole/matrix.hpp"

#include <utility>

#include "monopole/error.hpp"

namespace monopole {

std::size_t exact_rank(RatMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rat factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

RatMatrix exact_inverse(RatMatrix m) {
  const std::size_t n = m.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(Errc::invariant_violation, "singular matrix");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(m(pivot, c), m(col, c));
      std::swap(inv(pivot, c), inv(col, c));
    }
    const Rat scale = m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rat f = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace monopole
