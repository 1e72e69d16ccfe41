#include "osculo/errors.hpp"
#include "osculo/generators.hpp"
#include "osculo/linalg.hpp"
#include "osculo/tangency.hpp"
#include "osculo/tangency_graph.hpp"

#include <doctest.h>

using namespace osculo;

TEST_CASE("nested spheres through the origin") {
  const Collection c = hawaiian(5, 3);
  CHECK(c.dimension == 3);
  CHECK(c.mode == TangencyMode::Unsigned);
  REQUIRE(c.spheres.size() == 5);
  for (int k = 1; k <= 5; ++k) {
    const Sphere& s = c.spheres[static_cast<std::size_t>(k - 1)];
    CHECK(s.id == k);
    CHECK(s.radius == Rational(k));
    // Every sphere passes through the origin.
    CHECK(squared_norm(s.center) == s.radius * s.radius);
  }
  // All pairs touch (at the origin), giving the complete graph.
  const TangencyGraph g = count_pairs_bruteforce(c, c.mode);
  CHECK(g.edges.size() == 10);
  const Collection high = hawaiian(4, 5);
  CHECK(high.dimension == 5);
  CHECK(count_pairs_bruteforce(high, high.mode).edges.size() == 6);
  CHECK_THROWS_AS(hawaiian(1, 3), InputError);
  CHECK_THROWS_AS(hawaiian(4, 1), InputError);
}

TEST_CASE("two complementary families touch across but not within") {
  const Collection c = complementary_conics(12);
  REQUIRE(c.spheres.size() == 12);
  CHECK(c.mode == TangencyMode::Unsigned);
  for (int i = 0; i < 6; ++i) {
    CHECK(c.spheres[static_cast<std::size_t>(i)].radius == Rational(1));
  }
  const TangencyGraph g = count_pairs_bruteforce(c, c.mode);
  // Exactly the 6 x 6 cross-family contacts.
  CHECK(g.edges.size() == 36);
  for (const auto& edge : g.edges) {
    CHECK(edge.id1 <= 6);
    CHECK(edge.id2 >= 7);
    CHECK(edge.status == TangencyStatus::External);
  }
  CHECK_THROWS_AS(complementary_conics(7), InputError);
  CHECK_THROWS_AS(complementary_conics(2), InputError);
}

TEST_CASE("grid family sizes and hand-counted tangencies") {
  const Collection c = zahl_grid(2);
  CHECK(c.mode == TangencyMode::Signed);
  CHECK(c.spheres.size() == 16);
  const TangencyGraph g = count_pairs_bruteforce(c, c.mode);
  CHECK(g.edges.size() == 24);

  const Collection larger = zahl_grid(3);
  CHECK(larger.spheres.size() == 81);
  CHECK(same_edge_set(count_pairs_bruteforce(larger, larger.mode),
                      count_pairs_hashed(larger, larger.mode)));
  CHECK_THROWS_AS(zahl_grid(1), InputError);
}

TEST_CASE("seeded random collections are reproducible and in range") {
  const Collection a = random_collection(20, 3, 42, 10);
  const Collection b = random_collection(20, 3, 42, 10);
  const Collection other = random_collection(20, 3, 43, 10);
  REQUIRE(a.spheres.size() == 20);
  CHECK(a.mode == TangencyMode::Unsigned);
  bool any_difference = false;
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(vectors_equal(a.spheres[i].center, b.spheres[i].center));
    CHECK(a.spheres[i].radius == b.spheres[i].radius);
    if (!vectors_equal(a.spheres[i].center, other.spheres[i].center)) {
      any_difference = true;
    }
    CHECK(!a.spheres[i].radius.is_zero());
    for (long k = 0; k < 3; ++k) {
      CHECK(abs(a.spheres[i].center(k)) <= Rational(10));
    }
    CHECK(abs(a.spheres[i].radius) <= Rational(10));
  }
  CHECK(any_difference);
  CHECK(random_collection(6, 4, 7, 50).dimension == 4);
}

TEST_CASE("the generator dispatcher validates its input") {
  GeneratorSpec spec;
  spec.kind = "zahl_grid";
  spec.m = 2;
  CHECK(generate(spec).spheres.size() == 16);
  spec.kind = "hawaiian";
  spec.count = 4;
  spec.n = 3;
  CHECK(generate(spec).spheres.size() == 4);
  spec.kind = "complementary_conics";
  spec.count = 8;
  CHECK(generate(spec).spheres.size() == 8);
  spec.kind = "random";
  spec.count = 5;
  spec.seed = 99;
  CHECK(generate(spec).spheres.size() == 5);
  spec.kind = "unknown";
  CHECK_THROWS_AS(generate(spec), InputError);
}
