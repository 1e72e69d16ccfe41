#pragma once

#include "osculo/multipoly.hpp"
#include "osculo/sphere.hpp"
#include "osculo/tangency.hpp"

#include <map>
#include <string>
#include <vector>

namespace osculo {

// Sampled sign-cell assignment. Cells are connected components of the
// complement of Z(p), approximated from below: deterministic rational sample
// nets on each lift, joined when a straight segment between two same-sign
// samples keeps that sign at eight interior probe points. Labels are "C0",
// "C1", ... in order of first appearance (sphere id, then sample index).
struct CellAssignment {
  std::map<std::string, std::vector<int>> cells;  // label → sorted sphere ids
  int samples_per_sphere = 0;
  long sample_count = 0;         // samples with nonzero sign
  long zero_sign_samples = 0;    // samples on Z(p); they join no cell
};

CellAssignment assign_cells(const Collection& c, const MultiPoly& p,
                            int samples_per_sphere);

struct CellBoundReport {
  long max_occupancy = 0;
  long nonempty_cells = 0;
  Rational occupancy_bound;  // c1·2ⁿ·N/Dⁿ
  Rational count_bound;      // c2·(D/2)^{2n-1}
  bool occupancy_ok = false;
  bool count_ok = false;
};

// Checks the assignment against the partition guarantees for the supplied
// constants: no cell may meet more than c1·2ⁿ·N/Dⁿ lifts, and there may be
// at most c2·(D/2)^{2n-1} nonempty cells.
CellBoundReport verify_cell_bound(const CellAssignment& assignment, const Rational& c1,
                                  const Rational& c2, long d_degree, int n, long n_count);

// Candidate partition polynomial: a product of d_target/2 affine forms in
// the lifted variables, with axes chosen by descending spread of the lifted
// contact cloud and cut values at binary-refined quantiles (1/2, then 1/4,
// 3/4, ...). Fewer than two contact points fall back to a single hyperplane
// through the centroid of the sphere centers.
MultiPoly heuristic_partition(const Collection& c, int d_target, TangencyMode mode);

}  // namespace osculo
