#include "osculo/linalg.hpp"

#include "osculo/errors.hpp"

#include <Eigen/LU>

namespace osculo {

long exact_rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::FullPivLU<RatMatrix> lu(m);
  lu.setThreshold(Rational(0));
  return lu.rank();
}

RatMatrix exact_kernel(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    return RatMatrix::Identity(m.cols(), m.cols());
  }
  Eigen::FullPivLU<RatMatrix> lu(m);
  lu.setThreshold(Rational(0));
  if (lu.dimensionOfKernel() == 0) return RatMatrix(m.cols(), 0);
  return lu.kernel();
}

Rational exact_determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
  if (m.rows() == 0) return Rational(1);
  Eigen::FullPivLU<RatMatrix> lu(m);
  lu.setThreshold(Rational(0));
  return lu.determinant();
}

long stacked_rank(const RatMatrix& m, const RatMatrix& extra) {
  if (extra.rows() == 0) return exact_rank(m);
  if (m.rows() == 0) return exact_rank(extra);
  if (m.cols() != extra.cols()) throw InternalError("stacked_rank column mismatch");
  RatMatrix stacked(m.rows() + extra.rows(), m.cols());
  stacked.topRows(m.rows()) = m;
  stacked.bottomRows(extra.rows()) = extra;
  return exact_rank(stacked);
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InternalError("dot product size mismatch");
  Rational acc(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational squared_norm(const RatVector& v) { return dot(v, v); }

bool vectors_equal(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool RatVectorLess::operator()(const RatVector& a, const RatVector& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace osculo
