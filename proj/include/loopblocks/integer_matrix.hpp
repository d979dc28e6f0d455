#pragma once

#include <cstdint>
#include <vector>

#include "loopblocks/rational.hpp"

namespace loopblocks {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<Rational>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);
IntMatrix transpose(const IntMatrix& a);

/// Exact inverse of a square nonsingular integer matrix.
RationalMatrix rational_inverse(const IntMatrix& a);

std::int64_t determinant(const IntMatrix& a);

// D = left * input * right with D diagonal, d_1 | d_2 | ..., entries >= 0,
// left and right unimodular.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;
    IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& input);

/// Row-style Hermite normal form: the nonzero rows of the result form a basis
/// of the Z-span of the input rows, in echelon form with positive pivots and
/// reduced entries above each pivot.
IntMatrix hermite_normal_form(const IntMatrix& rows);

std::int64_t gcd_of(const IntVector& values);

} // namespace loopblocks
