#pragma once

#include "osculo/types.hpp"

#include <string>
#include <vector>

namespace osculo {

// How radii are interpreted. Signed: two spheres are in contact iff
// ‖c1 - c2‖² = (r1 - r2)², with the radius signs encoding orientation.
// Unsigned: classic geometric tangency of |r|-radius spheres.
enum class TangencyMode { Signed, Unsigned };

std::string mode_name(TangencyMode mode);
TangencyMode parse_mode(const std::string& name);

struct Sphere {
  int id = 0;
  RatVector center;
  Rational radius;

  int dimension() const { return static_cast<int>(center.size()); }
};

// Point membership on the sphere boundary: ‖x - c‖² = r², exactly.
bool on_sphere(const Sphere& s, const RatVector& x);

struct Collection {
  int dimension = 0;
  TangencyMode mode = TangencyMode::Unsigned;
  std::vector<Sphere> spheres;

  // Checks nonzero radii, unique ids, dimension >= 2, and per-sphere
  // dimension consistency. Throws InputError on any violation.
  void validate() const;

  const Sphere& by_id(int id) const;
};

}  // namespace osculo
