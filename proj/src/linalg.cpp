#include "cliffcheck/linalg.hpp"

namespace linalg {

std::size_t rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r)
      for (std::size_t k = c; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(r, k));
    const Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational factor = m.at(i, c);
      for (std::size_t k = c; k < m.cols; ++k) m.at(i, k) -= factor * m.at(r, k);
    }
    ++r;
  }
  return r;
}

std::size_t nullity(const RatMatrix& m) { return m.cols - rank(m); }

}  // namespace linalg
