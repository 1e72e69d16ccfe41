#include "osculo/errors.hpp"
#include "osculo/linalg.hpp"
#include "osculo/rational.hpp"
#include "osculo/types.hpp"

#include <doctest.h>

#include <random>

using osculo::RatMatrix;
using osculo::Rational;
using osculo::RatVector;

namespace {

RatMatrix hilbert(int n) {
  RatMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h(i, j) = Rational(1, i + j + 1);
    }
  }
  return h;
}

// Deterministic small random rationals for structured rank tests.
Rational draw(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 7) + 1;
  return Rational(num, den);
}

}  // namespace

// Hilbert matrices are the classic case where floating point rank detection
// collapses; exact arithmetic must see them as invertible, with the known
// closed-form determinants for small sizes.
TEST_CASE("hilbert matrices are exactly invertible") {
  CHECK(osculo::exact_determinant(hilbert(3)) == Rational(1, 2160));
  CHECK(osculo::exact_determinant(hilbert(4)) == Rational(1, 6048000));
  CHECK(osculo::exact_rank(hilbert(10)) == 10);
  const RatMatrix kernel = osculo::exact_kernel(hilbert(10));
  CHECK(kernel.cols() == 0);
}

TEST_CASE("rank of a structured product is the inner dimension") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 5;
    const int r = 1 + static_cast<int>(rng() % 4);
    RatMatrix a(n, r);
    RatMatrix b(r, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < r; ++j) {
        a(i, j) = draw(rng);
        b(j, i) = draw(rng);
      }
    }
    const RatMatrix m = a * b;
    const long rank = osculo::exact_rank(m);
    CHECK(rank <= r);
    // The kernel always complements the rank exactly and annihilates m.
    const RatMatrix kernel = osculo::exact_kernel(m);
    CHECK(rank + kernel.cols() == n);
    if (kernel.cols() > 0) {
      const RatMatrix product = m * kernel;
      for (long i = 0; i < product.rows(); ++i) {
        for (long j = 0; j < product.cols(); ++j) {
          CHECK(product(i, j).is_zero());
        }
      }
    }
  }
}

TEST_CASE("determinant is multiplicative and alternating") {
  std::mt19937_64 rng(99);
  RatMatrix a(4, 4);
  RatMatrix b(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a(i, j) = draw(rng);
      b(i, j) = draw(rng);
    }
  }
  CHECK(osculo::exact_determinant(a * b) ==
        osculo::exact_determinant(a) * osculo::exact_determinant(b));
  RatMatrix swapped = a;
  swapped.row(0).swap(swapped.row(1));
  CHECK(osculo::exact_determinant(swapped) == -osculo::exact_determinant(a));
}

// A matrix that floating point sees as singular: rows differ by 1e-30-scale
// rationals. Exact rank must still be full.
TEST_CASE("tiny perturbations keep full rank") {
  RatMatrix m(2, 2);
  const Rational tiny(1, 1000000000L);
  m(0, 0) = Rational(1);
  m(0, 1) = Rational(1);
  m(1, 0) = Rational(1);
  m(1, 1) = Rational(1) + tiny * tiny * tiny;
  CHECK(osculo::exact_rank(m) == 2);
  CHECK(osculo::exact_determinant(m) == tiny * tiny * tiny);
}

TEST_CASE("stacked rank detects new directions") {
  RatMatrix m(2, 3);
  m.setConstant(Rational(0));
  m(0, 0) = Rational(1);
  m(1, 1) = Rational(1);
  RatMatrix extra(1, 3);
  extra.setConstant(Rational(0));
  extra(0, 2) = Rational(1);
  CHECK(osculo::stacked_rank(m, extra) == 3);
  RatMatrix dependent(1, 3);
  dependent.setConstant(Rational(0));
  dependent(0, 0) = Rational(5, 7);
  CHECK(osculo::stacked_rank(m, dependent) == 2);
}

TEST_CASE("vector helpers") {
  RatVector a(3);
  a << Rational(1), Rational(2), Rational(3);
  RatVector b(3);
  b << Rational(1, 2), Rational(1, 3), Rational(1, 5);
  CHECK(osculo::dot(a, b) == Rational(1, 2) + Rational(2, 3) + Rational(3, 5));
  CHECK(osculo::squared_norm(a) == Rational(14));
  RatVector c = a;
  CHECK(osculo::vectors_equal(a, c));
  c(2) = Rational(4);
  CHECK(!osculo::vectors_equal(a, c));
  const osculo::RatVectorLess less;
  CHECK(less(a, c));
  CHECK(!less(c, a));
}
