#include "osculo/sphere.hpp"

#include "osculo/errors.hpp"
#include "osculo/linalg.hpp"

#include <unordered_set>

namespace osculo {

std::string mode_name(TangencyMode mode) {
  return mode == TangencyMode::Signed ? "signed" : "unsigned";
}

TangencyMode parse_mode(const std::string& name) {
  if (name == "signed") return TangencyMode::Signed;
  if (name == "unsigned") return TangencyMode::Unsigned;
  throw InputError("unknown tangency mode '" + name + "' (expected signed or unsigned)");
}

bool on_sphere(const Sphere& s, const RatVector& x) {
  if (x.size() != s.center.size()) throw InputError("point dimension mismatch");
  return squared_norm(x - s.center) == s.radius * s.radius;
}

void Collection::validate() const {
  if (dimension < 2) throw InputError("collection dimension must be >= 2");
  std::unordered_set<int> seen;
  for (const Sphere& s : spheres) {
    if (s.dimension() != dimension) {
      throw InputError("sphere id " + std::to_string(s.id) + " has dimension " +
                       std::to_string(s.dimension()) + ", collection expects " +
                       std::to_string(dimension));
    }
    if (s.radius.is_zero()) {
      throw InputError("sphere id " + std::to_string(s.id) + " has zero radius");
    }
    if (!seen.insert(s.id).second) {
      throw InputError("duplicate sphere id " + std::to_string(s.id));
    }
  }
}

const Sphere& Collection::by_id(int id) const {
  for (const Sphere& s : spheres) {
    if (s.id == id) return s;
  }
  throw InputError("no sphere with id " + std::to_string(id) + " in collection");
}

}  // namespace osculo
