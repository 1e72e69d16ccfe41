#include "osculo/generators.hpp"

#include "osculo/errors.hpp"

#include <random>

namespace osculo {

Collection hawaiian(int count, int n) {
  if (count < 2) throw InputError("hawaiian needs at least 2 spheres");
  if (n < 2) throw InputError("dimension must be >= 2");
  Collection c;
  c.dimension = n;
  c.mode = TangencyMode::Unsigned;
  for (int k = 1; k <= count; ++k) {
    Sphere s;
    s.id = k;
    s.center = RatVector::Zero(n);
    s.center[0] = Rational(k);
    s.radius = Rational(k);
    c.spheres.push_back(std::move(s));
  }
  return c;
}

Collection complementary_conics(int count) {
  if (count < 4 || count % 2 != 0) {
    throw InputError("complementary_conics needs an even count >= 4");
  }
  Collection c;
  c.dimension = 3;
  c.mode = TangencyMode::Unsigned;
  const int half = count / 2;

  // Unit spheres at rational points of the unit circle: for t = 0, 1, 2, ...
  // the point ((1-t²)/(1+t²), 2t/(1+t²), 0).
  for (int t = 0; t < half; ++t) {
    const Rational tt(t);
    const Rational denom = Rational(1) + tt * tt;
    Sphere s;
    s.id = t + 1;
    s.center = RatVector::Zero(3);
    s.center[0] = (Rational(1) - tt * tt) / denom;
    s.center[1] = Rational(2) * tt / denom;
    s.radius = Rational(1);
    c.spheres.push_back(std::move(s));
  }

  // Axis spheres tangent to every unit sphere above: center (0, 0, h) with
  // h = (m²-1)/(2m), radius (m²+1)/(2m) - 1 = (m-1)²/(2m), for m = 2, 3, ...
  for (int i = 0; i < half; ++i) {
    const Rational m(i + 2);
    Sphere s;
    s.id = half + i + 1;
    s.center = RatVector::Zero(3);
    s.center[2] = (m * m - Rational(1)) / (Rational(2) * m);
    s.radius = (m * m + Rational(1)) / (Rational(2) * m) - Rational(1);
    c.spheres.push_back(std::move(s));
  }
  return c;
}

Collection zahl_grid(int m) {
  if (m < 2) throw InputError("zahl_grid needs m >= 2");
  Collection c;
  c.dimension = 3;
  c.mode = TangencyMode::Signed;
  int id = 1;
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      for (int d = 1; d <= m; ++d) {
        for (int r = 1; r <= m; ++r) {
          Sphere s;
          s.id = id++;
          s.center = RatVector::Zero(3);
          s.center[0] = Rational(a);
          s.center[1] = Rational(b);
          s.center[2] = Rational(d);
          s.radius = Rational(r);
          c.spheres.push_back(std::move(s));
        }
      }
    }
  }
  return c;
}

Collection random_collection(int count, int n, std::uint64_t seed, int coord_bound) {
  if (count < 1) throw InputError("random collection needs count >= 1");
  if (n < 2) throw InputError("dimension must be >= 2");
  if (coord_bound < 1) throw InputError("coord_bound must be >= 1");
  std::mt19937_64 rng(seed);
  // Draw via modulo on the raw stream: uniform_int_distribution is not
  // reproducible across standard libraries, the engine stream is.
  const auto draw = [&rng](long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
  };
  Collection c;
  c.dimension = n;
  c.mode = TangencyMode::Unsigned;
  for (int i = 0; i < count; ++i) {
    Sphere s;
    s.id = i + 1;
    s.center.resize(n);
    for (int j = 0; j < n; ++j) {
      s.center[j] = Rational(draw(-coord_bound, coord_bound), draw(1, coord_bound));
    }
    do {
      s.radius = Rational(draw(-coord_bound, coord_bound), draw(1, coord_bound));
    } while (s.radius.is_zero());
    c.spheres.push_back(std::move(s));
  }
  return c;
}

Collection generate(const GeneratorSpec& spec) {
  if (spec.kind == "hawaiian") return hawaiian(spec.count, spec.n);
  if (spec.kind == "complementary_conics") return complementary_conics(spec.count);
  if (spec.kind == "zahl_grid") return zahl_grid(spec.m);
  if (spec.kind == "random") {
    return random_collection(spec.count, spec.n, spec.seed, spec.coord_bound);
  }
  throw InputError("unknown generator kind '" + spec.kind + "'");
}

}  // namespace osculo
