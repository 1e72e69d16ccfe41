#pragma once

#include "osculo/lift.hpp"
#include "osculo/multipoly.hpp"
#include "osculo/sphere.hpp"

#include <vector>

namespace osculo {

// Whole-lift containment in the zero set of p: true iff the sphere
// polynomial divides the Y-eliminated form of p. Sound because the lift is
// irreducible and dense in the sphere's graph variety.
bool lift_contained(const Sphere& s, const MultiPoly& p);

struct OrderedIncidence {
  int id1 = 0;  // ordered: (id1, id2) and (id2, id1) are distinct entries
  int id2 = 0;
  LiftedPoint witness;
};

// The exact three-way split of ordered tangencies relative to a polynomial:
// class 1 when p is nonzero at the witness; class 4 when both lifts are
// entirely inside Z(p); class 3 otherwise (witness in Z(p), at least one
// sphere not contained).
struct IncidenceReport {
  std::vector<OrderedIncidence> i1, i3, i4;
  std::vector<int> contained_ids;       // spheres with lift inside Z(p), sorted
  long uncontained_count = 0;
  long max_zero_incidences = 0;         // over uncontained spheres
  bool i3_bound_ok = false;             // |I3| ≤ 2·max·uncontained
  bool tilde_witnesses_ok = false;      // Z(p)-witnesses vanish on the
                                        // Y-eliminated polynomial of each
                                        // uncontained participant
  long total() const { return static_cast<long>(i1.size() + i3.size() + i4.size()); }
};

IncidenceReport classify_incidences(const Collection& c, const MultiPoly& p,
                                    TangencyMode mode);

struct ChainStep {
  MultiPoly poly;                   // P_k
  std::vector<int> collection_ids;  // spheres of the previous stage whose
                                    // lifts are inside Z(P_k), sorted
  int derivative_index = 0;         // 1-based Y index producing the next
                                    // polynomial; 0 at the terminal step
};

struct AlgebraicChain {
  std::vector<ChainStep> steps;
  MultiPoly terminal;               // the final Y-free polynomial R(X)
  std::vector<int> terminal_ids;    // survivors with sphere polynomial dividing R
  bool terminal_bound_ok = false;   // 2·|terminal_ids| ≤ deg R (when R ≠ 0)
  // Pairs of surviving spheres whose tangency witness failed to vanish on
  // the step polynomial; empty on every well-formed input.
  std::vector<std::pair<int, int>> witness_violations;
};

// Iterated Y-derivative chain: start from the spheres whose lifts lie in
// Z(p), differentiate by the smallest Y variable with nonzero derivative,
// refilter, and repeat until the polynomial is Y-free. Each step verifies
// that every tangency witness among the survivors vanishes on the new
// polynomial.
AlgebraicChain algebraic_chain(const Collection& c, const MultiPoly& p,
                               TangencyMode mode);

}  // namespace osculo
