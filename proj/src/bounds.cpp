#include "osculo/bounds.hpp"

#include "osculo/errors.hpp"

#include <cmath>

namespace osculo {

namespace {

void check_constants(int n, const Rational& epsilon, const Rational& c1,
                     const Rational& c2) {
  if (n < 3) throw InputError("bound arithmetic needs n >= 3");
  if (epsilon.sign() <= 0) throw InputError("epsilon must be positive");
  if (c1.sign() <= 0 || c2.sign() <= 0) throw InputError("c1, c2 must be positive");
}

bool degree_admissible(long d, int n, const Rational& epsilon, const Rational& c3,
                       const Rational& c4) {
  // Invariant 1: c3·d⁻ⁿ < 1.
  if (Rational(d).pow(n) <= c3) return false;
  // Invariant 2: c4·c3^{2-1/n} ≤ c3^{-ε}·d^{nε}, i.e. with ε = p/q:
  // c4^{nq}·c3^{q(2n-1)+np} ≤ d^{n²p}, exactly.
  const long p = [&] {
    mpz_class num = epsilon.numerator();
    if (!num.fits_slong_p()) throw InputError("epsilon numerator too large");
    return num.get_si();
  }();
  const long q = [&] {
    mpz_class den = epsilon.denominator();
    if (!den.fits_slong_p()) throw InputError("epsilon denominator too large");
    return den.get_si();
  }();
  const Rational lhs = c4.pow(n * q) * c3.pow(q * (2L * n - 1) + n * p);
  const Rational rhs = Rational(d).pow(static_cast<long>(n) * n * p);
  return lhs <= rhs;
}

}  // namespace

long choose_degree(int n, const Rational& epsilon, const Rational& c1,
                   const Rational& c2) {
  check_constants(n, epsilon, c1, c2);
  const Rational c3 = c1 * Rational(2).pow(n);
  const Rational c4 = c2 * Rational(2).pow(1L - 2L * n);
  for (long d = 2;; d += 2) {
    if (degree_admissible(d, n, epsilon, c3, c4)) return d;
  }
}

BoundParams make_params(int n, const Rational& epsilon, const Rational& c1,
                        const Rational& c2) {
  BoundParams params;
  params.n = n;
  params.epsilon = epsilon;
  params.c1 = c1;
  params.c2 = c2;
  params.d = choose_degree(n, epsilon, c1, c2);
  return params;
}

long critical_k(long b, long n_count, const BoundParams& params) {
  if (b < 1 || b > n_count) {
    throw InputError("critical_k needs 1 <= b <= collection size");
  }
  const Rational rho = params.rho();
  if (rho >= Rational(1)) throw InputError("degree too small: contraction ratio >= 1");
  const Rational bq(b);
  const Rational nq(n_count);
  long k = 0;
  Rational power = rho;  // rho^{k+1}
  while (power * nq >= bq) {
    ++k;
    power *= rho;
  }
  return k;
}

Rational theta_bound(long b, long n_count, const BoundParams& params) {
  const long k = critical_k(b, n_count, params);
  const int n = params.n;
  const Rational d(params.d);
  const Rational c3 = params.c3();
  const Rational c4 = params.c4();
  const Rational nq(n_count);

  const Rational shrink = params.rho().pow(k) * nq;               // rho^k·N
  const Rational lead = (c4 * d.pow(2L * n - 1)).pow(k);
  const Rational term1 = lead * shrink * shrink;
  const Rational term2 = Rational(2) * Rational(b) * nq * (c3 * c4 * d.pow(n - 1)).pow(k);
  const Rational term3 = d * d * lead;
  return term1 + term2 + term3;
}

CompareReport compare_report(const std::vector<ObservedRow>& observed,
                             const BoundParams& params) {
  CompareReport report;
  for (const ObservedRow& row : observed) {
    CompareRow out;
    out.observed = row;
    out.applicable = !row.condition_i_violated && row.b >= 1 && row.b <= row.n_count;
    if (out.applicable) {
      out.bound = theta_bound(row.b, row.n_count, params);
      out.inconsistent = Rational(row.pair_count) > out.bound;
      report.any_inconsistent = report.any_inconsistent || out.inconsistent;
    }
    const double n_d = static_cast<double>(row.n_count);
    const double b_d = static_cast<double>(row.b < 1 ? 1 : row.b);
    const double eps = params.epsilon.to_double();
    const double inv_n = 1.0 / static_cast<double>(params.n);
    out.asymptotic = std::pow(b_d, inv_n - eps) * std::pow(n_d, 2.0 - inv_n + eps);
    report.rows.push_back(std::move(out));
  }
  return report;
}

double fit_loglog_slope(const std::vector<std::pair<long, long>>& n_and_count) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long m = 0;
  for (const auto& [n, count] : n_and_count) {
    if (n <= 0 || count <= 0) continue;
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(static_cast<double>(count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw InputError("slope fit needs at least two positive data points");
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  if (denom == 0) throw InputError("slope fit is degenerate");
  return (static_cast<double>(m) * sxy - sx * sy) / denom;
}

}  // namespace osculo
