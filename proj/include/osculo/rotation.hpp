#pragma once

#include "osculo/sphere.hpp"

namespace osculo {

// Exact rotation: orthogonal rational matrix with determinant +1.
struct RationalRotation {
  RatMatrix matrix;

  int dimension() const { return static_cast<int>(matrix.rows()); }
  bool is_identity() const;
};

RationalRotation identity_rotation(int n);

// Cayley transform (I - A)(I + A)^{-1} of a rational skew-symmetric A.
// Always orthogonal with determinant +1, and every such rotation without
// the eigenvalue -1 arises this way.
RationalRotation cayley_rotation(const RatMatrix& skew);

// Throws InputError unless MᵀM = I exactly and det M = 1.
void check_rotation(const RationalRotation& r);

RatVector rotate_point(const RationalRotation& r, const RatVector& x);

// Maps every center through R; radii and ids unchanged.
Collection apply_rotation(const Collection& c, const RationalRotation& r);

// Deterministic search for a rotation placing the collection in generic
// position: after rotating, every contact point x of every tangent pair has
// last coordinate different from the last coordinate of both centers.
// Tries the identity, then Cayley rotations with skew entries drawn from the
// rational_tuple enumeration. Throws InputError when the budget runs out.
RationalRotation find_generic_rotation(const Collection& c, TangencyMode mode,
                                       int budget = 500);

// True iff the generic-position property above already holds.
bool is_generic_position(const Collection& c, TangencyMode mode);

}  // namespace osculo
