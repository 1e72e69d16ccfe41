#include "osculo/lift.hpp"

#include "osculo/errors.hpp"
#include "osculo/linalg.hpp"

#include <string>

namespace osculo {

RatVector LiftedPoint::xy() const {
  RatVector out(x.size() + y.size());
  out.head(x.size()) = x;
  out.tail(y.size()) = y;
  return out;
}

bool on_lift(const Sphere& s, const LiftedPoint& p) {
  const int n = s.dimension();
  if (p.x.size() != n || p.y.size() != n - 1) return false;
  if (!on_sphere(s, p.x)) return false;
  const Rational depth = p.x[n - 1] - s.center[n - 1];
  if (depth.is_zero()) return false;
  for (int j = 0; j < n - 1; ++j) {
    if (depth * p.y[j] != p.x[j] - s.center[j]) return false;
  }
  return true;
}

LiftedPoint lift_point(const Sphere& s, const RatVector& x) {
  const int n = s.dimension();
  if (!on_sphere(s, x)) {
    throw InputError("point is not on sphere id " + std::to_string(s.id));
  }
  const Rational depth = x[n - 1] - s.center[n - 1];
  if (depth.is_zero()) {
    throw InputError("point lies on the equator of sphere id " + std::to_string(s.id));
  }
  LiftedPoint p;
  p.x = x;
  p.y.resize(n - 1);
  for (int j = 0; j < n - 1; ++j) p.y[j] = (x[j] - s.center[j]) / depth;
  if (!on_lift(s, p)) throw InternalError("lift membership identity failed");
  return p;
}

std::optional<LiftedPoint> lifted_intersection(const Sphere& s1, const Sphere& s2,
                                               TangencyMode mode) {
  if (tangency_status(s1, s2, mode) == TangencyStatus::NotTangent) return std::nullopt;
  const RatVector x = contact_point(s1, s2, mode);
  const int n = s1.dimension();
  if ((x[n - 1] - s1.center[n - 1]).is_zero() ||
      (x[n - 1] - s2.center[n - 1]).is_zero()) {
    throw InputError("contact of ids " + std::to_string(s1.id) + ", " +
                     std::to_string(s2.id) +
                     " lies on an equator; rotate the collection to generic "
                     "position first");
  }
  const LiftedPoint p1 = lift_point(s1, x);
  const LiftedPoint p2 = lift_point(s2, x);
  // Both lifts carry the shared tangent hyperplane at the contact, so the
  // slope vectors must agree.
  if (!vectors_equal(p1.y, p2.y)) {
    throw InternalError("tangent pair produced two different lifted points");
  }
  return p1;
}

RatMatrix lift_jacobian(const Sphere& s, const LiftedPoint& p) {
  const int n = s.dimension();
  if (!on_lift(s, p)) {
    throw InputError("point is not on the lift of sphere id " + std::to_string(s.id));
  }
  RatMatrix jac = RatMatrix::Zero(n, 2 * n - 1);
  // Row 0: S = r² - Σ(X_i - c_i)², so ∂S/∂X_i = -2(x_i - c_i), ∂S/∂Y = 0.
  for (int i = 0; i < n; ++i) jac(0, i) = Rational(-2) * (p.x[i] - s.center[i]);
  // Row j: Q_j = (X_n - c_n)Y_j - (X_j - c_j), so ∂Q_j/∂X_i = -δ_{ij} + δ_{in}y_j
  // and ∂Q_j/∂Y_k = δ_{jk}(x_n - c_n).
  const Rational depth = p.x[n - 1] - s.center[n - 1];
  for (int j = 1; j < n; ++j) {
    jac(j, j - 1) = Rational(-1);
    jac(j, n - 1) += p.y[j - 1];
    jac(j, n + j - 1) = depth;
  }
  return jac;
}

long jacobian_rank(const Sphere& s, const LiftedPoint& p) {
  return exact_rank(lift_jacobian(s, p));
}

TangentBasis tangent_basis(const Sphere& s, const LiftedPoint& p) {
  const int n = s.dimension();
  if (!on_lift(s, p)) {
    throw InputError("point is not on the lift of sphere id " + std::to_string(s.id));
  }
  const Rational depth = p.x[n - 1] - s.center[n - 1];
  const Rational depth3 = depth * depth * depth;
  RatMatrix rows = RatMatrix::Zero(n - 1, 2 * n - 1);
  for (int j = 0; j < n - 1; ++j) {
    rows(j, j) = Rational(1);
    rows(j, n - 1) = -p.y[j];
    for (int k = 0; k < n - 1; ++k) {
      rows(j, n + k) = (p.x[j] - s.center[j]) * (p.x[k] - s.center[k]) / depth3;
    }
    rows(j, n + j) += Rational(1) / depth;
  }
  // Exact kernel check: every basis vector is annihilated by the Jacobian.
  const RatMatrix jac = lift_jacobian(s, p);
  for (int j = 0; j < n - 1; ++j) {
    const RatVector image = jac * rows.row(j).transpose();
    for (Eigen::Index i = 0; i < image.size(); ++i) {
      if (!image[i].is_zero()) {
        throw InternalError("tangent vector escaped the Jacobian kernel");
      }
    }
  }
  return TangentBasis{rows};
}

bool verticals_in_span(const RatMatrix& rows, int n) {
  RatMatrix verticals = RatMatrix::Zero(n - 1, 2 * n - 1);
  for (int j = 0; j < n - 1; ++j) verticals(j, n + j) = Rational(1);
  return exact_rank(rows) == stacked_rank(rows, verticals);
}

VerticalSpanCertificate vertical_span_check(const Sphere& s1, const Sphere& s2,
                                            TangencyMode mode) {
  const std::optional<LiftedPoint> p = lifted_intersection(s1, s2, mode);
  if (!p) {
    throw InputError("vertical span check requires a tangent pair (ids " +
                     std::to_string(s1.id) + ", " + std::to_string(s2.id) + ")");
  }
  const int n = s1.dimension();
  VerticalSpanCertificate cert;
  cert.witness = *p;

  const RatMatrix t1 = tangent_basis(s1, *p).vectors;
  const RatMatrix t2 = tangent_basis(s2, *p).vectors;
  RatMatrix joint(t1.rows() + t2.rows(), t1.cols());
  joint.topRows(t1.rows()) = t1;
  joint.bottomRows(t2.rows()) = t2;

  cert.rank_joint = exact_rank(joint);
  RatMatrix verticals = RatMatrix::Zero(n - 1, 2 * n - 1);
  for (int j = 0; j < n - 1; ++j) verticals(j, n + j) = Rational(1);
  cert.rank_with_verticals = stacked_rank(joint, verticals);
  cert.contained = cert.rank_joint == cert.rank_with_verticals;

  // Collinearity: the contact lies on the segment through both centers, so
  // x - c2 = λ(x - c1) for a single rational λ.
  const RatVector d1 = p->x - s1.center;
  const RatVector d2 = p->x - s2.center;
  bool lambda_set = false;
  for (int i = 0; i < n; ++i) {
    if (d1[i].is_zero()) continue;
    cert.lambda = d2[i] / d1[i];
    lambda_set = true;
    break;
  }
  if (!lambda_set) throw InternalError("contact coincides with a center");
  for (int i = 0; i < n; ++i) {
    if (d2[i] != cert.lambda * d1[i]) {
      throw InternalError("contact point is not collinear with the centers");
    }
  }

  // Determinant identity det(I + zzᵀ) = 1 + ‖z‖² with z the slope vector of
  // the first sphere at the contact.
  const Rational depth = d1[n - 1];
  RatVector z(n - 1);
  for (int j = 0; j < n - 1; ++j) z[j] = d1[j] / depth;
  RatMatrix m = RatMatrix::Identity(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) m(i, j) += z[i] * z[j];
  }
  cert.det_value = exact_determinant(m);
  cert.det_expected = Rational(1) + squared_norm(z);
  if (cert.det_value != cert.det_expected) {
    throw InternalError("determinant identity failed");
  }
  return cert;
}

std::vector<RatVector> sphere_rational_points(const Sphere& s, int count) {
  if (count < 1) throw InputError("sample count must be >= 1");
  const int n = s.dimension();
  std::vector<RatVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long index = 0; static_cast<int>(out.size()) < count; ++index) {
    const std::vector<Rational> u = rational_tuple(n - 1, index);
    Rational u2(0);
    for (const Rational& v : u) u2 += v * v;
    if (u2.is_one()) continue;  // maps to the equator
    const Rational denom = Rational(1) + u2;
    RatVector x(n);
    for (int j = 0; j < n - 1; ++j) {
      x[j] = s.center[j] + s.radius * Rational(2) * u[static_cast<std::size_t>(j)] / denom;
    }
    x[n - 1] = s.center[n - 1] + s.radius * (Rational(1) - u2) / denom;
    if (!on_sphere(s, x)) throw InternalError("stereographic point left the sphere");
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace osculo
