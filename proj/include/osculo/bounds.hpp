#pragma once

#include "osculo/rational.hpp"

#include <string>
#include <vector>

namespace osculo {

// Constants for the recursion arithmetic. c1 bounds cell occupancy, c2 cell
// counts; both are caller-supplied knobs with the derived values
// c3 = 2ⁿ·c1 and c4 = 2^{1-2n}·c2 and a chosen even degree d satisfying
// c3·d⁻ⁿ < 1 and c4·c3^{2-1/n} ≤ c3^{-ε}·d^{nε}.
struct BoundParams {
  int n = 3;
  Rational epsilon;
  Rational c1;
  Rational c2;
  long d = 0;

  Rational c3() const { return c1 * Rational(2).pow(n); }
  Rational c4() const { return c2 * Rational(2).pow(1L - 2L * n); }
  // The contraction ratio c3·d⁻ⁿ of the recursion.
  Rational rho() const { return c3() / Rational(d).pow(n); }
};

// Smallest even degree satisfying both invariants above. The ε-power
// comparison is exact: with ε = p/q both sides are raised to the common
// power nq, leaving integer exponents only.
long choose_degree(int n, const Rational& epsilon, const Rational& c1,
                   const Rational& c2);

// Convenience: params with d already chosen.
BoundParams make_params(int n, const Rational& epsilon, const Rational& c1,
                        const Rational& c2);

// The unique k ≥ 0 with rho^{k+1}·N < b ≤ rho^k·N.
long critical_k(long b, long n_count, const BoundParams& params);

// The recursion evaluated at the critical k with the trivial quadratic
// closure: (c4·d^{2n-1})^k·(rho^k·N)² + 2bN·(c3·c4·d^{n-1})^k
// + d²·(c4·d^{2n-1})^k.
Rational theta_bound(long b, long n_count, const BoundParams& params);

struct ObservedRow {
  std::string label;
  long b = 0;            // witnessed tangency concentration
  long n_count = 0;      // collection size
  long pair_count = 0;   // tangent pairs (graph edges)
  bool condition_i_violated = false;
};

struct CompareRow {
  ObservedRow observed;
  Rational bound;          // theta_bound, when applicable
  double asymptotic = 0;   // b^{1/n-ε}·N^{2-1/n+ε}, display only
  bool applicable = false; // condition (i) held, so the bound is meaningful
  bool inconsistent = false;  // observed beyond the bound: a hard error
};

struct CompareReport {
  std::vector<CompareRow> rows;
  bool any_inconsistent = false;
};

CompareReport compare_report(const std::vector<ObservedRow>& observed,
                             const BoundParams& params);

// Least-squares slope of log(count) against log(n) in double precision;
// rows with nonpositive counts are skipped.
double fit_loglog_slope(const std::vector<std::pair<long, long>>& n_and_count);

}  // namespace osculo
