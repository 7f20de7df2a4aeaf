#pragma once

#include <cstddef>
#include <vector>

#include "cliffcheck/rational.hpp"

namespace linalg {

using rat::Rational;

/// Dense matrix of exact rationals.
struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Row-reduction rank; exact.
std::size_t rank(RatMatrix m);

/// cols - rank: dimension of the kernel of the column-variable system.
std::size_t nullity(const RatMatrix& m);

}  // namespace linalg
