#include "osculo/tangency.hpp"

#include "osculo/errors.hpp"
#include "osculo/linalg.hpp"

namespace osculo {

std::string status_name(TangencyStatus status) {
  switch (status) {
    case TangencyStatus::External: return "external";
    case TangencyStatus::Internal: return "internal";
    case TangencyStatus::NotTangent: return "not_tangent";
  }
  throw InternalError("unreachable tangency status");
}

namespace {

void check_pair(const Sphere& s1, const Sphere& s2) {
  if (s1.center.size() != s2.center.size()) {
    throw InputError("sphere dimension mismatch between ids " + std::to_string(s1.id) +
                     " and " + std::to_string(s2.id));
  }
  if (vectors_equal(s1.center, s2.center) && s1.radius == s2.radius) {
    throw InputError("identical spheres (ids " + std::to_string(s1.id) + ", " +
                     std::to_string(s2.id) + ")");
  }
}

}  // namespace

TangencyStatus tangency_status(const Sphere& s1, const Sphere& s2, TangencyMode mode) {
  check_pair(s1, s2);
  const Rational dist2 = squared_norm(s1.center - s2.center);
  if (mode == TangencyMode::Signed) {
    const Rational gap = s1.radius - s2.radius;
    if (dist2 != gap * gap) return TangencyStatus::NotTangent;
    return s1.radius.sign() == s2.radius.sign() ? TangencyStatus::Internal
                                                : TangencyStatus::External;
  }
  const Rational a1 = abs(s1.radius);
  const Rational a2 = abs(s2.radius);
  const Rational sum = a1 + a2;
  if (dist2 == sum * sum) return TangencyStatus::External;
  const Rational gap = a1 - a2;
  if (!dist2.is_zero() && dist2 == gap * gap) return TangencyStatus::Internal;
  return TangencyStatus::NotTangent;
}

RatVector contact_point(const Sphere& s1, const Sphere& s2, TangencyMode mode) {
  const TangencyStatus status = tangency_status(s1, s2, mode);
  if (status == TangencyStatus::NotTangent) {
    throw InputError("contact_point called on a non-tangent pair (ids " +
                     std::to_string(s1.id) + ", " + std::to_string(s2.id) + ")");
  }
  Rational t;
  if (mode == TangencyMode::Signed) {
    // dist² = (r1-r2)² > 0 here, so r1 ≠ r2 and t is defined.
    t = s1.radius / (s1.radius - s2.radius);
  } else {
    const Rational a1 = abs(s1.radius);
    const Rational a2 = abs(s2.radius);
    t = status == TangencyStatus::External ? a1 / (a1 + a2) : a1 / (a1 - a2);
  }
  RatVector x = s1.center + t * (s2.center - s1.center);
  if (!on_sphere(s1, x) || !on_sphere(s2, x)) {
    throw InternalError("contact point failed the on-sphere identity");
  }
  return x;
}

}  // namespace osculo
