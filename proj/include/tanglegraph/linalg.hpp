#pragma once

#include "tanglegraph/frac.hpp"

#include <vector>

namespace tg {

using Matrix = std::vector<std::vector<Integer>>;

/// Fraction-free Gaussian elimination. The empty matrix has determinant 1.
Integer bareiss_determinant(Matrix m);

/// Invariant factors d1 | d2 | ... of the Smith normal form, one per row or
/// column up to min(rows, cols); zeros mark free summands.
std::vector<Integer> smith_diagonal(Matrix m);

/// Order of the abelian group with `generators` generators and the given
/// relation rows, or 0 when it is infinite.
Integer presentation_order(const Matrix& relations, std::size_t generators);

}  // namespace tg
