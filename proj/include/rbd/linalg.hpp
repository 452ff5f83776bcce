#pragma once

#include <optional>

#include "rbd/matrix.hpp"

namespace rbd {

/// U * A * V = D, with U and V unimodular and the nonzero diagonal
/// entries of D nonnegative and forming a divisibility chain.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  // Diagonal of D, length min(rows, cols).
  IntVector invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

RatMatrix invert(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

bool is_negative_definite(const IntMatrix& a);

// Primitive generator of a one-dimensional right kernel, last nonzero entry
// positive. Empty when the kernel is trivial.
std::optional<IntVector> kernel_primitive(const IntMatrix& a);

// Integer solution of A x = b for square nonsingular A, or none.
std::optional<IntVector> solve_integer(const SnfResult& snf, const IntVector& b);

}  // namespace rbd
