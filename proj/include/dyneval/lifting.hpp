#pragma once
#include "dyneval/smallmat.hpp"

namespace dyneval {

// A rectangular coefficient matrix (d rows, one column per basis function)
// augmented to an invertible square matrix whose first d rows are the
// original coefficients.
struct Lifted {
    DenseMatrix matrix;
    DenseMatrix inverse;
    double condition;
};

// Augmentation strategy: append rows selecting distinct standard unit
// coordinates, trying column subsets in lexicographic order and accepting
// the first whose full condition estimate is <= 1e8; if none qualifies,
// fall back to rows drawn from a seeded orthonormal complement of the
// coefficient row space (accepted up to condition 1e12). Throws
// LiftingError when nothing acceptable exists. Square input is validated
// and passed through unchanged.
Lifted lift_to_square(const DenseMatrix& coeffs);

inline constexpr double kPreferredLiftCondition = 1e8;

}  // namespace dyneval
