#pragma once

#include "osculo/multipoly.hpp"
#include "osculo/sphere.hpp"
#include "osculo/tangency.hpp"

#include <optional>
#include <vector>

namespace osculo {

// Deduplicated exact contact points of s against every other sphere of the
// collection.
std::vector<RatVector> tangency_points_on(const Collection& c, int sphere_id,
                                          TangencyMode mode);

// Affine hyperplane normal·x = offset with exact rational coefficients.
struct Hyperplane {
  RatVector normal;
  Rational offset;
};

struct HyperplaneWitness {
  Hyperplane plane;
  long count = 0;  // points of the input lying on the plane, exactly
};

// Exact maximum, over all hyperplanes, of the number of input points
// contained. When the points do not affinely span ℝⁿ one hyperplane holds
// them all; otherwise the maximum is attained on a hyperplane spanned by n
// affinely independent input points, and those are enumerated exhaustively.
HyperplaneWitness hyperplane_witness(const std::vector<RatVector>& points, int n);

struct VeroneseCertificate {
  long raw_rank = 0;            // evaluation matrix of all monomials deg ≤ d
  long raw_monomials = 0;
  long reduced_rank = 0;        // columns restricted to monomials with
                                // X1-exponent ≤ 1 (reduced mod the sphere)
  long reduced_monomials = 0;
  long point_count = 0;
  // A nonzero polynomial vanishing on every point and not vanishing on the
  // sphere, when the reduced kernel is nontrivial.
  std::optional<MultiPoly> kernel_witness;
};

// Exact ranks of the degree-≤d monomial evaluation matrix at the points,
// raw and modulo the sphere relation. Full column rank certifies that no
// nonzero polynomial of degree ≤ d (respectively none that is nontrivial on
// the sphere) vanishes on all points.
VeroneseCertificate veronese_certificate(const std::vector<RatVector>& points,
                                         const Sphere& s, int d);

struct SphereAudit {
  int sphere_id = 0;
  long partner_count = 0;       // distinct tangent partner spheres
  long point_count = 0;         // distinct contact points
  long best_witness_count = 0;  // partners whose contact lies on the witness
  int best_witness_degree = 0;
  MultiPoly witness;            // polynomial in X cutting the witness variety
};

struct AuditVerdict {
  bool violation = false;
  long b_found = 0;             // largest verified witness count, if violation
  int worst_sphere_id = 0;
  std::vector<SphereAudit> per_sphere;  // sorted by sphere id
};

// Per-sphere search for low-degree subvarieties carrying many tangencies:
// the exact hyperplane maximum always, plus a greedy kernel search at each
// degree 2..d. Every reported witness is re-verified exactly (each counted
// contact satisfies the witness polynomial and the sphere equation). A
// verified witness with more than b partners makes the verdict a violation.
// Requires that no three spheres are mutually tangent at one point; throws
// InputError naming such a point otherwise.
AuditVerdict audit(const Collection& c, long b, int d, TangencyMode mode);

}  // namespace osculo
