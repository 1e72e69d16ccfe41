#pragma once

#include "osculo/sphere.hpp"

#include <cstdint>
#include <string>

namespace osculo {

// Spheres centered (k, 0, ..., 0) with radius k for k = 1..count: every pair
// is internally tangent at the origin, the maximally degenerate family.
Collection hawaiian(int count, int n);

// Two families in ℝ³ with every cross pair externally tangent: unit spheres
// centered at rational points of the unit circle in the x1x2-plane, and
// spheres centered on the x3-axis at height (m²-1)/(2m) with radius
// (m²+1)/(2m) - 1 for m = 2, 3, ... Contact points are pairwise distinct,
// and the contacts of each sphere are coplanar.
Collection complementary_conics(int count);

// All m⁴ signed spheres with centers (a, b, c) and radii d, each ranging
// over {1..m}; tangency in signed mode iff ‖Δcenter‖² = (Δradius)².
Collection zahl_grid(int m);

// Seeded rational collection: centers and radii with numerators and
// denominators bounded by coord_bound. Identical parameters give identical
// output on every platform (the raw mt19937_64 stream is standardized).
Collection random_collection(int count, int n, std::uint64_t seed, int coord_bound);

struct GeneratorSpec {
  std::string kind;  // hawaiian | complementary_conics | zahl_grid | random
  int count = 0;     // hawaiian, complementary_conics, random
  int n = 3;         // hawaiian, random
  int m = 0;         // zahl_grid
  std::uint64_t seed = 0;    // random
  int coord_bound = 100;     // random
};

Collection generate(const GeneratorSpec& spec);

}  // namespace osculo
