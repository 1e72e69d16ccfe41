#include "osculo/errors.hpp"
#include "osculo/incidence.hpp"
#include "osculo/multipoly.hpp"
#include "osculo/tangency_graph.hpp"

#include <doctest.h>

using namespace osculo;

namespace {

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

// Two spheres tangent at (0,0,1), well away from both equators.
Collection vertical_pair() {
  Collection c;
  c.dimension = 3;
  c.mode = TangencyMode::Unsigned;
  c.spheres.push_back(
      make_sphere(1, {Rational(0), Rational(0), Rational(0)}, Rational(1)));
  c.spheres.push_back(
      make_sphere(2, {Rational(0), Rational(0), Rational(3)}, Rational(2)));
  c.validate();
  return c;
}

}  // namespace

TEST_CASE("a sphere lift lies inside its own zero sets") {
  const Sphere s = make_sphere(
      1, {Rational(1), Rational(-1), Rational(2)}, Rational(3, 2));
  CHECK(lift_contained(s, sphere_polynomial(s, 2)));
  CHECK(lift_contained(s, slope_polynomial(s, 1)));
  CHECK(lift_contained(s, slope_polynomial(s, 2)));
  // Products with arbitrary factors stay containing.
  const MultiPoly extra = MultiPoly::variable_x(3, 2, 1);
  CHECK(lift_contained(s, sphere_polynomial(s, 2) * extra));
  // A generic affine form does not contain the two-dimensional lift.
  MultiPoly plane(3, 2);
  plane.add_term({1, 0, 0, 0, 0}, Rational(1));
  plane.add_term({0, 0, 0, 0, 0}, Rational(100));
  CHECK(!lift_contained(s, plane));
  // The zero polynomial contains everything.
  CHECK(lift_contained(s, MultiPoly(3, 2)));
}

TEST_CASE("incidences split by witness sign and containment") {
  const Collection c = vertical_pair();
  const Sphere& s1 = c.spheres[0];
  const Sphere& s2 = c.spheres[1];

  SUBCASE("witness off the zero set: both directions are class 1") {
    MultiPoly plane(3, 2);
    plane.add_term({1, 0, 0, 0, 0}, Rational(1));
    plane.add_term({0, 0, 0, 0, 0}, Rational(7));  // X1 + 7, nonzero at contact
    const IncidenceReport r = classify_incidences(c, plane, c.mode);
    CHECK(r.i1.size() == 2);
    CHECK(r.i3.empty());
    CHECK(r.i4.empty());
    CHECK(r.total() == 2);
    CHECK(r.contained_ids.empty());
    CHECK(r.uncontained_count == 2);
    CHECK(r.i3_bound_ok);
    CHECK(r.tilde_witnesses_ok);
  }

  SUBCASE("one contained sphere: both directions are class 3") {
    const IncidenceReport r =
        classify_incidences(c, sphere_polynomial(s1, 2), c.mode);
    CHECK(r.i1.empty());
    CHECK(r.i3.size() == 2);
    CHECK(r.i4.empty());
    CHECK(r.contained_ids == std::vector<int>{1});
    CHECK(r.uncontained_count == 1);
    // The single zero-set contact of sphere 2 bounds class 3 by 2*1*1.
    CHECK(r.max_zero_incidences == 1);
    CHECK(r.i3_bound_ok);
    CHECK(r.tilde_witnesses_ok);
  }

  SUBCASE("both contained: both directions are class 4") {
    const MultiPoly p = sphere_polynomial(s1, 2) * sphere_polynomial(s2, 2);
    const IncidenceReport r = classify_incidences(c, p, c.mode);
    CHECK(r.i1.empty());
    CHECK(r.i3.empty());
    CHECK(r.i4.size() == 2);
    CHECK(r.contained_ids == std::vector<int>{1, 2});
    CHECK(r.tilde_witnesses_ok);
  }
}

TEST_CASE("every ordered tangency lands in exactly one class") {
  // A chain of spheres along the third axis: consecutive ones touch.
  Collection c;
  c.dimension = 3;
  c.mode = TangencyMode::Unsigned;
  Rational z(0);
  for (int k = 1; k <= 6; ++k) {
    const Rational radius(2 * k + 1);
    c.spheres.push_back(
        make_sphere(k, {Rational(0), Rational(0), z + radius}, radius));
    z = z + Rational(2) * radius;
  }
  c.validate();
  const TangencyGraph g = count_pairs_bruteforce(c, c.mode);
  REQUIRE(g.edges.size() >= 5);

  const std::vector<MultiPoly> polys = {
      sphere_polynomial(c.spheres[0], 2),
      sphere_polynomial(c.spheres[2], 2) * sphere_polynomial(c.spheres[3], 2),
      MultiPoly::variable_x(3, 2, 2),
      MultiPoly::variable_y(3, 2, 1),
  };
  for (const MultiPoly& p : polys) {
    const IncidenceReport r = classify_incidences(c, p, c.mode);
    CHECK(r.total() == 2 * static_cast<long>(g.edges.size()));
    CHECK(r.i3_bound_ok);
    CHECK(r.tilde_witnesses_ok);
  }
}

TEST_CASE("variable space of the polynomial must match the collection") {
  const Collection c = vertical_pair();
  const MultiPoly wrong(3, 1);
  CHECK_THROWS_AS(classify_incidences(c, wrong, c.mode), InputError);
  CHECK_THROWS_AS(
      algebraic_chain(c, MultiPoly::variable_y(2, 1, 1), c.mode), InputError);
}

// Differentiating away the slope variables: starting from S(X)*Y1 the
// derivative in Y1 leaves exactly the sphere polynomial, whose zero set
// still contains the sphere lift. The terminal polynomial is Y-free and its
// sphere count obeys the degree bound.
TEST_CASE("derivative chain on a sphere polynomial times a slope variable") {
  const Collection c = vertical_pair();
  const MultiPoly p =
      sphere_polynomial(c.spheres[0], 2) * MultiPoly::variable_y(3, 2, 1);
  const AlgebraicChain chain = algebraic_chain(c, p, c.mode);
  // One differentiation step, then the terminal entry.
  REQUIRE(chain.steps.size() == 2);
  CHECK(chain.steps[0].derivative_index == 1);
  CHECK(chain.steps[0].collection_ids == std::vector<int>{1});
  CHECK(chain.steps[1].derivative_index == 0);
  CHECK(chain.steps[1].poly == chain.terminal);
  CHECK(!chain.terminal.depends_on_y());
  CHECK(chain.terminal == sphere_polynomial(c.spheres[0], 2));
  CHECK(chain.terminal_ids == std::vector<int>{1});
  CHECK(chain.terminal.degree() == 2);
  CHECK(chain.terminal_bound_ok);  // 2 * 1 <= 2
  CHECK(chain.witness_violations.empty());
}

TEST_CASE("derivative chain with no contained spheres is immediate") {
  const Collection c = vertical_pair();
  const MultiPoly p = MultiPoly::variable_y(3, 2, 1);
  const AlgebraicChain chain = algebraic_chain(c, p, c.mode);
  CHECK(chain.steps.size() == 2);
  CHECK(chain.steps[0].collection_ids.empty());
  CHECK(!chain.terminal.depends_on_y());
  CHECK(chain.terminal_ids.empty());
  CHECK(chain.terminal_bound_ok);
  CHECK(chain.witness_violations.empty());
}

TEST_CASE("derivative chain rejects the zero polynomial") {
  const Collection c = vertical_pair();
  CHECK_THROWS_AS(algebraic_chain(c, MultiPoly(3, 2), c.mode), InputError);
}
