#pragma once

#include "osculo/types.hpp"

namespace osculo {

// Exact linear algebra over the rationals. Eigen's full-pivot LU with a
// zero pivot threshold (NumTraits<Rational>::dummy_precision() == 0) keeps
// every pivot decision exact, so rank, kernel and determinant are the true
// values, not floating-point estimates.

long exact_rank(const RatMatrix& m);

// Columns form a basis of the null space (empty matrix when the kernel is
// trivial).
RatMatrix exact_kernel(const RatMatrix& m);

Rational exact_determinant(const RatMatrix& m);

// Rank of the rows of `m` together with the rows of `extra`.
long stacked_rank(const RatMatrix& m, const RatMatrix& extra);

Rational dot(const RatVector& a, const RatVector& b);
Rational squared_norm(const RatVector& v);

bool vectors_equal(const RatVector& a, const RatVector& b);

// Strict ordering usable as a map key comparator: by length, then
// lexicographically by exact entry comparison.
struct RatVectorLess {
  bool operator()(const RatVector& a, const RatVector& b) const;
};

}  // namespace osculo
