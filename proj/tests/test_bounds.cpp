#include "osculo/bounds.hpp"
#include "osculo/errors.hpp"

#include <doctest.h>

#include <vector>

using namespace osculo;

namespace {

// Independent re-statement of the two degree constraints, used as the
// oracle for choose_degree: the degree must beat the occupancy constant,
// and the epsilon-weighted growth comparison must hold with integer
// exponents after raising both sides to the common power n*q.
bool constraints_hold(int n, const Rational& epsilon, const Rational& c1,
                      const Rational& c2, long d) {
  const Rational c3 = c1 * Rational(2).pow(n);
  const Rational c4 = c2 * Rational(2).pow(1 - 2 * n);
  if (!(Rational(d).pow(n) > c3)) {
    return false;
  }
  const long p = static_cast<long>(epsilon.numerator().get_si());
  const long q = static_cast<long>(epsilon.denominator().get_si());
  const Rational lhs =
      c4.pow(n * q) * c3.pow(q * (2 * n - 1) + n * p);
  const Rational rhs = Rational(d).pow(n * n * p);
  return lhs <= rhs;
}

}  // namespace

TEST_CASE("degree selection matches the constraint oracle") {
  // Hand-pinned base case: dimension 3, epsilon 1/10, unit constants.
  CHECK(choose_degree(3, Rational(1, 10), Rational(1), Rational(1)) == 4);
  CHECK(constraints_hold(3, Rational(1, 10), Rational(1), Rational(1), 4));
  // Degree 2 fails already on the first constraint: 2^3 = 8 is not > 8.
  CHECK(!constraints_hold(3, Rational(1, 10), Rational(1), Rational(1), 2));

  const std::vector<std::tuple<int, Rational, Rational, Rational>> cases = {
      {3, Rational(1, 10), Rational(1), Rational(1)},
      {3, Rational(1, 5), Rational(2), Rational(1)},
      {3, Rational(1, 20), Rational(1), Rational(3)},
      {4, Rational(1, 10), Rational(1), Rational(1)},
      {5, Rational(1, 7), Rational(2), Rational(2)},
  };
  for (const auto& [n, eps, c1, c2] : cases) {
    const long d = choose_degree(n, eps, c1, c2);
    CHECK(d % 2 == 0);
    CHECK(constraints_hold(n, eps, c1, c2, d));
    if (d > 2) {
      CHECK(!constraints_hold(n, eps, c1, c2, d - 2));
    }
  }
  CHECK_THROWS_AS(choose_degree(3, Rational(0), Rational(1), Rational(1)),
                  InputError);
  CHECK_THROWS_AS(choose_degree(3, Rational(-1, 10), Rational(1), Rational(1)),
                  InputError);
  CHECK_THROWS_AS(choose_degree(3, Rational(1, 10), Rational(0), Rational(1)),
                  InputError);
}

TEST_CASE("derived constants") {
  const BoundParams params =
      make_params(3, Rational(1, 10), Rational(1), Rational(1));
  CHECK(params.d == 4);
  CHECK(params.c3() == Rational(8));
  CHECK(params.c4() == Rational(1, 32));
  CHECK(params.rho() == Rational(1, 8));
}

TEST_CASE("critical recursion depth") {
  const BoundParams params =
      make_params(3, Rational(1, 10), Rational(1), Rational(1));
  // rho = 1/8: scaling a million spheres down to threshold 1 takes 6 halvings
  // of the exponent 8.
  CHECK(critical_k(1, 1000000, params) == 6);
  CHECK(critical_k(1000000, 1000000, params) == 0);
  CHECK(critical_k(1, 1, params) == 0);

  // Property: k is the first exponent where rho^(k+1) * N drops below b.
  for (long b : {1L, 3L, 17L, 400L}) {
    for (long n_count : {b, 10 * b, 1000 * b, 12345 * b}) {
      const long k = critical_k(b, n_count, params);
      const Rational rho = params.rho();
      CHECK(rho.pow(k) * Rational(n_count) >= Rational(b));
      CHECK(rho.pow(k + 1) * Rational(n_count) < Rational(b));
    }
  }
}

TEST_CASE("recursion bound closed forms") {
  const BoundParams params =
      make_params(3, Rational(1, 10), Rational(1), Rational(1));
  // At b = N the recursion stops immediately: N^2 + 2N^2 + d^2.
  CHECK(theta_bound(100, 100, params) ==
        Rational(3) * Rational(100) * Rational(100) + Rational(16));
  // One level deep (b=100, N=1000: 1000/8 >= 100 > 1000/64), expanded by
  // hand: lead = c4*d^5 = 32, shrink = N/8, factor c3*c4*d^2 = 4.
  const Rational expected = Rational(32) * Rational(1000 / 8).pow(2) +
                            Rational(2) * Rational(100) * Rational(1000) *
                                Rational(4) +
                            Rational(16) * Rational(32);
  CHECK(critical_k(100, 1000, params) == 1);
  CHECK(theta_bound(100, 1000, params) == expected);
  // Monotone in the collection size.
  CHECK(theta_bound(10, 2000, params) > theta_bound(10, 1000, params));
  CHECK_THROWS_AS(theta_bound(0, 100, params), InputError);
  CHECK_THROWS_AS(theta_bound(10, 0, params), InputError);
}

TEST_CASE("comparison report flags violations and inapplicable rows") {
  const BoundParams params =
      make_params(3, Rational(1, 10), Rational(1), Rational(1));
  ObservedRow fine{"fine", 4, 100, 50, false};
  ObservedRow broken{"broken", 4, 100, 100000000, false};
  ObservedRow degenerate{"degenerate", 4, 100, 50, true};
  const CompareReport report =
      compare_report({fine, broken, degenerate}, params);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].applicable);
  CHECK(!report.rows[0].inconsistent);
  CHECK(report.rows[0].asymptotic > 0);
  CHECK(report.rows[1].applicable);
  CHECK(report.rows[1].inconsistent);
  CHECK(!report.rows[2].applicable);
  CHECK(report.any_inconsistent);
}

TEST_CASE("log-log slope recovery") {
  // Exact quadratic growth.
  const double quadratic =
      fit_loglog_slope({{10, 100}, {100, 10000}, {1000, 1000000}});
  CHECK(quadratic == doctest::Approx(2.0).epsilon(1e-9));
  // Nonpositive counts are skipped, leaving the same slope.
  const double skipping = fit_loglog_slope(
      {{10, 100}, {5, 0}, {100, 10000}, {1000, 1000000}});
  CHECK(skipping == doctest::Approx(2.0).epsilon(1e-9));
  // Linear growth.
  const double linear = fit_loglog_slope({{2, 6}, {4, 12}, {8, 24}});
  CHECK(linear == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(fit_loglog_slope({{10, 100}}), InputError);
}
