#pragma once

#include "osculo/sphere.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace osculo {

// Graded-lex order on exponent vectors: total degree first, then
// lexicographic with earlier variables heavier. The map's largest element is
// the leading monomial.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over the rationals in variables
// X1..Xnx, Y1..Yny (exponent slots in that order). Canonical form: no zero
// coefficients stored, so equality is structural.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int nx, int ny);

  static MultiPoly constant(int nx, int ny, const Rational& c);
  static MultiPoly variable_x(int nx, int ny, int j);  // X_{j}, 1-based
  static MultiPoly variable_y(int nx, int ny, int j);  // Y_{j}, 1-based

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int var_count() const { return nx_ + ny_; }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; the zero polynomial reports 0.
  long degree() const;
  bool depends_on_y() const;

  const std::map<std::vector<int>, Rational, GrlexLess>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, const Rational& coeff);

  Rational evaluate(const RatVector& xy) const;
  MultiPoly partial_derivative(int var) const;  // var: 0-based over X then Y

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(int exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Y-elimination: substitute Y_j := (X_j - c_j)/(X_n - c_n) for the given
  // sphere and clear denominators with the factor (X_n - c_n)^degree(). The
  // result is a polynomial in X alone with degree at most 2·degree(), and at
  // every lifted point (x, y) of the sphere it equals
  // evaluate(x, y)·(x_n - c_n)^degree().
  MultiPoly tilde_substitute(const Sphere& s) const;

  std::string str() const;
  static MultiPoly parse(std::string_view text, int nx, int ny);

 private:
  int nx_ = 0;
  int ny_ = 0;
  std::map<std::vector<int>, Rational, GrlexLess> terms_;
};

// Exact divisibility by a single polynomial via leading-term reduction.
// For one divisor the division remainder is unique, so a zero remainder is
// both a sound and complete divisibility test.
bool divides(const MultiPoly& divisor, const MultiPoly& dividend);

// The sphere polynomial S(X) = r² - Σ (X_j - c_j)², embedded in the full
// (X, Y) variable space of the collection's lift.
MultiPoly sphere_polynomial(const Sphere& s, int ny);

// The tangent-slope polynomial Q_j(X, Y) = (X_n - c_n)·Y_j - (X_j - c_j),
// j 1-based in 1..n-1.
MultiPoly slope_polynomial(const Sphere& s, int j);

}  // namespace osculo
