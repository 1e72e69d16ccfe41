#include "osculo/errors.hpp"
#include "osculo/generators.hpp"
#include "osculo/linalg.hpp"
#include "osculo/nondegeneracy.hpp"
#include "osculo/tangency.hpp"

#include <doctest.h>

using namespace osculo;

namespace {

RatVector point3(long x, long y, long z) {
  RatVector v(3);
  v << Rational(x), Rational(y), Rational(z);
  return v;
}

Sphere make_sphere(int id, std::initializer_list<Rational> center,
                   Rational radius) {
  Sphere s;
  s.id = id;
  s.center = RatVector(static_cast<long>(center.size()));
  long i = 0;
  for (const Rational& value : center) {
    s.center(i++) = value;
  }
  s.radius = radius;
  return s;
}

}  // namespace

TEST_CASE("contact points of one sphere are collected and deduplicated") {
  Collection c;
  c.dimension = 3;
  c.mode = TangencyMode::Unsigned;
  c.spheres.push_back(
      make_sphere(1, {Rational(0), Rational(0), Rational(0)}, Rational(1)));
  c.spheres.push_back(
      make_sphere(2, {Rational(0), Rational(0), Rational(3)}, Rational(2)));
  c.spheres.push_back(
      make_sphere(3, {Rational(0), Rational(0), Rational(-3)}, Rational(2)));
  c.spheres.push_back(
      make_sphere(4, {Rational(9), Rational(9), Rational(9)}, Rational(1)));
  c.validate();
  const auto points = tangency_points_on(c, 1, c.mode);
  REQUIRE(points.size() == 2);  // north and south pole contacts
  CHECK(vectors_equal(points[0], point3(0, 0, -1)));
  CHECK(vectors_equal(points[1], point3(0, 0, 1)));
  CHECK(tangency_points_on(c, 4, c.mode).empty());
  CHECK_THROWS_AS(tangency_points_on(c, 99, c.mode), InputError);
}

// Oracle fixture: six points of which exactly four are coplanar. Any
// hyperplane containing five would have to contain four of the coplanar
// ones plus an outside point, which fails by direct check of all planes.
TEST_CASE("hyperplane witness finds the exact maximum") {
  const std::vector<RatVector> points = {
      point3(0, 0, 0), point3(1, 0, 0), point3(0, 1, 0),
      point3(1, 1, 0), point3(0, 0, 1), point3(1, 2, 3),
  };
  const HyperplaneWitness w = hyperplane_witness(points, 3);
  CHECK(w.count == 4);
  // The witness plane must actually contain `count` of the points.
  long on_plane = 0;
  for (const RatVector& x : points) {
    if (dot(w.plane.normal, x) == w.plane.offset) {
      ++on_plane;
    }
  }
  CHECK(on_plane == w.count);
}

TEST_CASE("hyperplane witness handles degenerate layouts") {
  SUBCASE("collinear points all lie in one plane") {
    std::vector<RatVector> points;
    for (long t = 0; t < 5; ++t) {
      points.push_back(point3(t, 2 * t, -t));
    }
    const HyperplaneWitness w = hyperplane_witness(points, 3);
    CHECK(w.count == 5);
  }
  SUBCASE("no points") {
    const HyperplaneWitness w = hyperplane_witness({}, 3);
    CHECK(w.count == 0);
  }
  SUBCASE("fewer points than the dimension") {
    const HyperplaneWitness w =
        hyperplane_witness({point3(1, 2, 3), point3(4, 5, 6)}, 3);
    CHECK(w.count == 2);
  }
}

TEST_CASE("kernel search certifies curved witnesses") {
  // Five contact points on the equator circle of the unit sphere: they lie
  // in the plane X3 = 0, and the certificate must find a vanishing
  // polynomial at degree one already.
  const Sphere s =
      make_sphere(1, {Rational(0), Rational(0), Rational(0)}, Rational(1));
  std::vector<RatVector> points = {
      point3(1, 0, 0), point3(0, 1, 0), point3(-1, 0, 0), point3(0, -1, 0)};
  RatVector p5(3);
  p5 << Rational(3, 5), Rational(4, 5), Rational(0);
  points.push_back(p5);

  const VeroneseCertificate cert = veronese_certificate(points, s, 2);
  CHECK(cert.point_count == 5);
  REQUIRE(cert.kernel_witness.has_value());
  for (const RatVector& x : points) {
    CHECK(cert.kernel_witness->evaluate(x).is_zero());
  }
  CHECK(cert.raw_rank < cert.raw_monomials);
}

TEST_CASE("audit flags concentrated families and clears spread ones") {
  SUBCASE("complementary families concentrate half the collection") {
    const Collection c = complementary_conics(8);
    const AuditVerdict v = audit(c, 3, 1, c.mode);
    CHECK(v.violation);
    CHECK(v.b_found == 4);
    REQUIRE(!v.per_sphere.empty());
    // Every sphere is tangent to the four members of the other family.
    for (const auto& row : v.per_sphere) {
      CHECK(row.partner_count == 4);
    }
  }
  SUBCASE("a sparse chain stays below the threshold") {
    Collection c;
    c.dimension = 3;
    c.mode = TangencyMode::Unsigned;
    Rational z(0);
    for (int k = 1; k <= 5; ++k) {
      const Rational radius(2 * k + 1);
      c.spheres.push_back(
          make_sphere(k, {Rational(0), Rational(0), z + radius}, radius));
      z = z + Rational(2) * radius;
    }
    c.validate();
    const AuditVerdict v = audit(c, 3, 2, c.mode);
    CHECK(!v.violation);
    for (const auto& row : v.per_sphere) {
      CHECK(row.partner_count <= 2);
      CHECK(row.best_witness_count <= 2);
    }
  }
}

TEST_CASE("audit rejects collections with a three-fold contact point") {
  const Collection h = hawaiian(4, 3);
  CHECK_THROWS_AS(audit(h, 10, 1, h.mode), InputError);
  try {
    audit(h, 10, 1, h.mode);
  } catch (const InputError& e) {
    const std::string message = e.what();
    CHECK(message.find("point") != std::string::npos);
  }
}

TEST_CASE("audit parameter validation") {
  const Collection c = complementary_conics(8);
  CHECK_THROWS_AS(audit(c, 0, 1, c.mode), InputError);
  CHECK_THROWS_AS(audit(c, 3, 0, c.mode), InputError);
}
