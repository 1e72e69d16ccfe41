#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace osculo {

// Exact rational scalar backed by GMP. Every value is kept in canonical form
// (lowest terms, positive denominator), so operator== is representation
// equality and values hash consistently. There is no rounding anywhere: all
// arithmetic and comparisons are exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Parses "p" or "p/q" with an optional leading sign. Rejects zero
  // denominators and any other lexical form.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  // Canonical text form: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  // Exact integer power; negative exponents invert (error on zero base).
  Rational pow(long exponent) const;
  Rational reciprocal() const;

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::size_t hash_value(const Rational& r);

// Fixed enumeration of small rationals: 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...
// in waves of increasing max(|num|, den). Used wherever a deterministic
// supply of small exact parameters is needed (rotation search, sample nets).
Rational small_rational(int index);

// Deterministic enumeration of ℚ^arity without repetition: index 0 is the
// all-zero tuple, and the sequence is prefix-stable (growing the index never
// reorders earlier tuples). Integer m-tuples are enumerated by total sum,
// lexicographically within a sum, and each integer is mapped through
// small_rational.
std::vector<Rational> rational_tuple(int arity, long index);

}  // namespace osculo

namespace Eigen {

template <>
struct NumTraits<osculo::Rational> : GenericNumTraits<osculo::Rational> {
  typedef osculo::Rational Real;
  typedef osculo::Rational NonInteger;
  typedef osculo::Rational Nested;

  static inline Real epsilon() { return osculo::Rational(0); }
  static inline Real dummy_precision() { return osculo::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

template <>
struct std::hash<osculo::Rational> {
  std::size_t operator()(const osculo::Rational& r) const { return osculo::hash_value(r); }
};
