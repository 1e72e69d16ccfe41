#pragma once

#include "osculo/sphere.hpp"

#include <string>

namespace osculo {

enum class TangencyStatus { External, Internal, NotTangent };

std::string status_name(TangencyStatus status);

// Exact tangency predicate. Unsigned: External iff dist² = (|r1|+|r2|)²,
// Internal iff dist² = (|r1|-|r2|)² with dist > 0 (concentric equal-|r| pairs
// are NotTangent). Signed: contact iff dist² = (r1-r2)²; Internal when the
// radii share a sign, External otherwise. No tolerances anywhere.
TangencyStatus tangency_status(const Sphere& s1, const Sphere& s2, TangencyMode mode);

// Contact point of a tangent pair, always rational: c1 + t(c2 - c1) with
// t = r1/(r1 - r2) in signed mode and t = |r1|/(|r1|±|r2|) in unsigned mode
// (+ external, - internal). The result is verified to lie on both spheres.
RatVector contact_point(const Sphere& s1, const Sphere& s2, TangencyMode mode);

}  // namespace osculo
