#include "osculo/rotation.hpp"

#include "osculo/errors.hpp"
#include "osculo/linalg.hpp"
#include "osculo/tangency.hpp"

#include <Eigen/LU>

#include <utility>
#include <vector>

namespace osculo {

bool RationalRotation::is_identity() const {
  const int n = dimension();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (matrix(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

RationalRotation identity_rotation(int n) {
  return RationalRotation{RatMatrix::Identity(n, n)};
}

RationalRotation cayley_rotation(const RatMatrix& skew) {
  const Eigen::Index n = skew.rows();
  if (skew.cols() != n) throw InputError("skew parameter must be square");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (skew(i, j) != -skew(j, i)) {
        throw InputError("skew parameter is not antisymmetric");
      }
    }
  }
  const RatMatrix id = RatMatrix::Identity(n, n);
  // I + A is invertible for every rational skew A (its kernel would give
  // vᵀv = -vᵀAᵀAv... more directly: vᵀ(I+A)v = vᵀv for skew A).
  Eigen::FullPivLU<RatMatrix> lu(id + skew);
  lu.setThreshold(Rational(0));
  if (!lu.isInvertible()) throw InternalError("I + skew not invertible");
  RatMatrix r = (id - skew) * lu.inverse();
  return RationalRotation{std::move(r)};
}

void check_rotation(const RationalRotation& r) {
  const Eigen::Index n = r.matrix.rows();
  if (r.matrix.cols() != n) throw InputError("rotation matrix must be square");
  const RatMatrix gram = r.matrix.transpose() * r.matrix;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (gram(i, j) != Rational(i == j ? 1 : 0)) {
        throw InputError("matrix is not orthogonal");
      }
    }
  }
  if (exact_determinant(r.matrix) != Rational(1)) {
    throw InputError("rotation determinant must be +1");
  }
}

RatVector rotate_point(const RationalRotation& r, const RatVector& x) {
  if (x.size() != r.matrix.rows()) throw InputError("rotation dimension mismatch");
  return r.matrix * x;
}

Collection apply_rotation(const Collection& c, const RationalRotation& r) {
  c.validate();
  check_rotation(r);
  if (r.dimension() != c.dimension) throw InputError("rotation dimension mismatch");
  Collection out = c;
  for (Sphere& s : out.spheres) s.center = r.matrix * s.center;
  return out;
}

namespace {

// Tangent edges as (x - c1, x - c2) difference pairs. The generic-position
// test for a rotation R reduces to: last row of R is non-orthogonal to every
// difference, because (Rx)_n - (Rc)_n = row_n(R)·(x - c).
std::vector<std::pair<RatVector, RatVector>> contact_differences(const Collection& c,
                                                                 TangencyMode mode) {
  std::vector<std::pair<RatVector, RatVector>> diffs;
  const std::size_t count = c.spheres.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Sphere& s1 = c.spheres[i];
      const Sphere& s2 = c.spheres[j];
      if (tangency_status(s1, s2, mode) == TangencyStatus::NotTangent) continue;
      const RatVector x = contact_point(s1, s2, mode);
      diffs.emplace_back(x - s1.center, x - s2.center);
    }
  }
  return diffs;
}

bool last_row_admissible(const RatMatrix& rotation,
                         const std::vector<std::pair<RatVector, RatVector>>& diffs) {
  const RatVector last = rotation.row(rotation.rows() - 1).transpose();
  for (const auto& [d1, d2] : diffs) {
    if (dot(last, d1).is_zero() || dot(last, d2).is_zero()) return false;
  }
  return true;
}

}  // namespace

RationalRotation find_generic_rotation(const Collection& c, TangencyMode mode,
                                       int budget) {
  c.validate();
  const int n = c.dimension;
  const auto diffs = contact_differences(c, mode);
  if (diffs.empty()) return identity_rotation(n);

  const int free_entries = n * (n - 1) / 2;
  for (int candidate = 0; candidate < budget; ++candidate) {
    RationalRotation r;
    if (candidate == 0) {
      r = identity_rotation(n);
    } else {
      const std::vector<Rational> params = rational_tuple(free_entries, candidate);
      RatMatrix skew = RatMatrix::Zero(n, n);
      int pos = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          skew(i, j) = params[static_cast<std::size_t>(pos)];
          skew(j, i) = -params[static_cast<std::size_t>(pos)];
          ++pos;
        }
      }
      r = cayley_rotation(skew);
    }
    if (last_row_admissible(r.matrix, diffs)) return r;
  }
  throw InputError("no generic rotation found after trying " + std::to_string(budget) +
                   " candidates");
}

bool is_generic_position(const Collection& c, TangencyMode mode) {
  c.validate();
  const auto diffs = contact_differences(c, mode);
  return last_row_admissible(RatMatrix::Identity(c.dimension, c.dimension), diffs);
}

}  // namespace osculo
