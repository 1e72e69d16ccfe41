#pragma once

#include "osculo/multipoly.hpp"
#include "osculo/sphere.hpp"
#include "osculo/tangency.hpp"

#include <optional>
#include <vector>

namespace osculo {

// A point of the lifted variety of some sphere: x on the sphere (off the
// equator X_n = c_n) paired with the slope vector y of the tangent
// hyperplane (y, 1)·(X - x) = 0 at x.
struct LiftedPoint {
  RatVector x;  // n entries
  RatVector y;  // n - 1 entries

  RatVector xy() const;  // concatenation, the evaluation point for MultiPoly
};

// Exact membership in the lift of s: S(x) = 0, all Q_j(x, y) = 0, and
// x_n ≠ c_n.
bool on_lift(const Sphere& s, const LiftedPoint& p);

// y_j = (x_j - c_j)/(x_n - c_n). Errors when x is off the sphere or on the
// equator.
LiftedPoint lift_point(const Sphere& s, const RatVector& x);

// The unique common point of the two lifts when the spheres are tangent,
// absent otherwise. Errors if the contact lies on either equator (the
// collection was not rotated to generic position first).
std::optional<LiftedPoint> lifted_intersection(const Sphere& s1, const Sphere& s2,
                                               TangencyMode mode);

// n×(2n-1) Jacobian of (S, Q_1..Q_{n-1}) at p; its rank is n at every
// point of the lift.
RatMatrix lift_jacobian(const Sphere& s, const LiftedPoint& p);
long jacobian_rank(const Sphere& s, const LiftedPoint& p);

// Rows are the n-1 tangent vectors v_j = (e_j, dφ_j, w_j) of the lift at p,
// from the closed-form first and second derivatives of the graph
// parametrisation: dφ_j = -y_j and
// w_j = e_j/(x_n - c_n) + (x_j - c_j)(x̃ - c̃)/(x_n - c_n)³.
// Every row lies in the kernel of the Jacobian.
struct TangentBasis {
  RatMatrix vectors;  // (n-1) × (2n-1)
};
TangentBasis tangent_basis(const Sphere& s, const LiftedPoint& p);

// True iff the span of rows already contains every vertical direction
// (0, e_j); checked by exact rank comparison.
bool verticals_in_span(const RatMatrix& rows, int n);

struct VerticalSpanCertificate {
  bool contained = false;
  long rank_joint = 0;
  long rank_with_verticals = 0;
  Rational lambda;              // x - c2 = λ(x - c1)
  Rational det_value;           // det(I + zzᵀ) with z = (x̃ - c̃1)/(x_n - c1_n)
  Rational det_expected;        // 1 + ‖z‖²
  LiftedPoint witness;
};

// At the lifted contact of a tangent pair: do the two tangent spaces span
// all vertical directions? Also certifies the collinearity factor λ and the
// determinant identity det(I + zzᵀ) = 1 + ‖z‖².
VerticalSpanCertificate vertical_span_check(const Sphere& s1, const Sphere& s2,
                                            TangencyMode mode);

// Deterministic rational points on the sphere via the stereographic
// parametrisation x = c + r·(2u, 1 - ‖u‖²)/(1 + ‖u‖²) over the
// rational_tuple net; parameters with ‖u‖² = 1 (the equator image) are
// skipped. Prefix-stable: growing count only appends points.
std::vector<RatVector> sphere_rational_points(const Sphere& s, int count);

}  // namespace osculo
