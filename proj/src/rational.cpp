#include "osculo/rational.hpp"

#include "osculo/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <vector>

namespace osculo {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational denominator is zero");
  q_ = mpq_class(static_cast<signed long>(num), 1);
  q_ /= mpq_class(static_cast<signed long>(den), 1);
  q_.canonicalize();
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part;
  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!valid_integer_token(num_part) ||
      (slash != std::string_view::npos && !valid_integer_token(den_part))) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = mpz_class(std::string(den_part), 10);
    if (den == 0) {
      throw InputError("rational denominator is zero in '" + std::string(text) + "'");
    }
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  Rational base = *this;
  if (exponent < 0) {
    base = base.reciprocal();
    exponent = -exponent;
  }
  Rational acc(1);
  Rational sq = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1u) acc *= sq;
    sq *= sq;
    e >>= 1;
  }
  return acc;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw InternalError("reciprocal of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(inv));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InternalError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t hash_value(const Rational& r) {
  // FNV-1a over the canonical text form. Canonicalization makes equal values
  // hash equal.
  const std::string s = r.str();
  std::size_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

Rational small_rational(int index) {
  if (index < 0) throw InputError("small_rational index must be nonnegative");
  // Enumerate reduced fractions num/den (den >= 1) in waves of increasing
  // height max(|num|, den); inside a wave sort by absolute value, positive
  // before negative. The sequence starts:
  // 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 2/3, -2/3, 3/2, -3/2, 3, -3, ...
  static std::vector<Rational> cache;
  static long height_done = 0;
  while (static_cast<int>(cache.size()) <= index) {
    const long height = height_done + 1;
    std::vector<Rational> wave;
    for (long den = 1; den <= height; ++den) {
      for (long num = 0; num <= height; ++num) {
        if (std::max(num, den) != height) continue;
        if (num == 0 && den != 1) continue;
        if (num != 0 && std::gcd(num, den) != 1) continue;
        wave.emplace_back(num, den);
        if (num != 0) wave.emplace_back(-num, den);
      }
    }
    std::sort(wave.begin(), wave.end(), [](const Rational& a, const Rational& b) {
      const Rational aa = abs(a);
      const Rational bb = abs(b);
      if (aa != bb) return aa < bb;
      return b < a;
    });
    for (auto& r : wave) cache.push_back(std::move(r));
    height_done = height;
  }
  return cache[static_cast<std::size_t>(index)];
}

namespace {

// Number of m-tuples of nonnegative integers with the given sum:
// C(sum + m - 1, m - 1). Exact via GMP; our indices stay far below overflow
// territory anyway.
mpz_class tuple_block_size(int m, long sum) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(sum + m - 1),
               static_cast<unsigned long>(m - 1));
  return c;
}

}  // namespace

std::vector<Rational> rational_tuple(int arity, long index) {
  if (arity < 1) throw InputError("rational_tuple arity must be >= 1");
  if (index < 0) throw InputError("rational_tuple index must be nonnegative");
  mpz_class rest(index);
  long sum = 0;
  while (rest >= tuple_block_size(arity, sum)) {
    rest -= tuple_block_size(arity, sum);
    ++sum;
  }
  // Within a block, the first coordinate runs from sum down to 0 so that the
  // very first tuples load earlier coordinates first.
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(arity));
  long remaining = sum;
  for (int pos = 0; pos < arity - 1; ++pos) {
    long coord = remaining;
    for (;; --coord) {
      const mpz_class inner = tuple_block_size(arity - pos - 1, remaining - coord);
      if (rest < inner) break;
      rest -= inner;
    }
    out.push_back(small_rational(static_cast<int>(coord)));
    remaining -= coord;
  }
  out.push_back(small_rational(static_cast<int>(remaining)));
  return out;
}

}  // namespace osculo
