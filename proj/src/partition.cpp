#include "osculo/partition.hpp"

#include "osculo/errors.hpp"
#include "osculo/lift.hpp"
#include "osculo/linalg.hpp"
#include "osculo/tangency_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace osculo {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Sign constancy along the straight segment between two points, probed at
// eight interior rational parameters.
bool segment_keeps_sign(const MultiPoly& p, const RatVector& a, const RatVector& b,
                        int sign) {
  for (int i = 1; i <= 8; ++i) {
    const Rational t(i, 9);
    const RatVector mid = a + t * (b - a);
    if (p.evaluate(mid).sign() != sign) return false;
  }
  return true;
}

}  // namespace

CellAssignment assign_cells(const Collection& c, const MultiPoly& p,
                            int samples_per_sphere) {
  c.validate();
  if (samples_per_sphere < 1) throw InputError("samples_per_sphere must be >= 1");
  if (p.nx() != c.dimension || p.ny() != c.dimension - 1) {
    throw InputError("polynomial variable space does not match the collection");
  }

  // Deterministic global sample order: spheres by id, then net index.
  std::vector<const Sphere*> by_id;
  for (const Sphere& s : c.spheres) by_id.push_back(&s);
  std::sort(by_id.begin(), by_id.end(),
            [](const Sphere* a, const Sphere* b) { return a->id < b->id; });

  struct Sample {
    int sphere_id;
    RatVector point;  // lifted, 2n-1 coordinates
    int sign;
  };
  std::vector<Sample> samples;
  CellAssignment out;
  out.samples_per_sphere = samples_per_sphere;
  for (const Sphere* s : by_id) {
    for (const RatVector& x : sphere_rational_points(*s, samples_per_sphere)) {
      const LiftedPoint lifted = lift_point(*s, x);
      const RatVector xy = lifted.xy();
      const int sign = p.evaluate(xy).sign();
      if (sign == 0) {
        out.zero_sign_samples += 1;
        continue;
      }
      samples.push_back(Sample{s->id, xy, sign});
    }
  }
  out.sample_count = static_cast<long>(samples.size());

  UnionFind uf(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].sign != samples[j].sign) continue;
      if (uf.find(i) == uf.find(j)) continue;
      if (segment_keeps_sign(p, samples[i].point, samples[j].point, samples[i].sign)) {
        uf.join(i, j);
      }
    }
  }

  // Labels in order of first appearance.
  std::map<std::size_t, std::string> labels;
  std::map<std::string, std::set<int>> members;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto it = labels.find(root);
    if (it == labels.end()) {
      it = labels.emplace(root, "C" + std::to_string(labels.size())).first;
    }
    members[it->second].insert(samples[i].sphere_id);
  }
  for (auto& [label, ids] : members) {
    out.cells[label] = std::vector<int>(ids.begin(), ids.end());
  }
  return out;
}

CellBoundReport verify_cell_bound(const CellAssignment& assignment, const Rational& c1,
                                  const Rational& c2, long d_degree, int n,
                                  long n_count) {
  if (d_degree < 1) throw InputError("degree must be >= 1");
  if (n < 2) throw InputError("dimension must be >= 2");
  CellBoundReport report;
  for (const auto& [label, ids] : assignment.cells) {
    report.max_occupancy =
        std::max(report.max_occupancy, static_cast<long>(ids.size()));
    if (!ids.empty()) report.nonempty_cells += 1;
  }
  const Rational d(d_degree);
  report.occupancy_bound =
      c1 * Rational(2).pow(n) * Rational(n_count) / d.pow(n);
  report.count_bound = c2 * (d / Rational(2)).pow(2L * n - 1);
  report.occupancy_ok = Rational(report.max_occupancy) <= report.occupancy_bound;
  report.count_ok = Rational(report.nonempty_cells) <= report.count_bound;
  return report;
}

MultiPoly heuristic_partition(const Collection& c, int d_target, TangencyMode mode) {
  c.validate();
  if (d_target < 2 || d_target % 2 != 0) {
    throw InputError("partition degree target must be an even integer >= 2");
  }
  const int n = c.dimension;
  const int vars = 2 * n - 1;

  // Lifted witnesses of all tangencies; equatorial contacts (possible on an
  // unrotated collection) contribute nothing to the cloud.
  std::vector<RatVector> cloud;
  const TangencyGraph graph = count_pairs_bruteforce(c, mode);
  for (const TangencyEdge& e : graph.edges) {
    try {
      const auto witness = lifted_intersection(c.by_id(e.id1), c.by_id(e.id2), mode);
      if (witness) cloud.push_back(witness->xy());
    } catch (const InputError&) {
      continue;
    }
  }

  if (cloud.size() < 2) {
    // Centroid hyperplane over the sphere centers, along the widest axis.
    if (c.spheres.empty()) return MultiPoly::variable_x(n, n - 1, 1);
    int axis = 0;
    Rational best_spread(-1);
    for (int a = 0; a < n; ++a) {
      Rational lo = c.spheres[0].center[a];
      Rational hi = lo;
      for (const Sphere& s : c.spheres) {
        lo = std::min(lo, s.center[a]);
        hi = std::max(hi, s.center[a]);
      }
      if (hi - lo > best_spread) {
        best_spread = hi - lo;
        axis = a;
      }
    }
    Rational sum(0);
    for (const Sphere& s : c.spheres) sum += s.center[axis];
    const Rational cut = sum / Rational(static_cast<long>(c.spheres.size()));
    return MultiPoly::variable_x(n, n - 1, axis + 1) -
           MultiPoly::constant(n, n - 1, cut);
  }

  // Axes ordered by descending spread of the cloud, ties by index.
  std::vector<Rational> spreads(static_cast<std::size_t>(vars));
  for (int a = 0; a < vars; ++a) {
    Rational lo = cloud[0][a];
    Rational hi = cloud[0][a];
    for (const RatVector& pt : cloud) {
      lo = std::min(lo, pt[a]);
      hi = std::max(hi, pt[a]);
    }
    spreads[static_cast<std::size_t>(a)] = hi - lo;
  }
  std::vector<int> axis_order(static_cast<std::size_t>(vars));
  std::iota(axis_order.begin(), axis_order.end(), 0);
  std::sort(axis_order.begin(), axis_order.end(), [&](int a, int b) {
    if (spreads[static_cast<std::size_t>(a)] != spreads[static_cast<std::size_t>(b)]) {
      return spreads[static_cast<std::size_t>(b)] < spreads[static_cast<std::size_t>(a)];
    }
    return a < b;
  });

  // Binary-refinement quantile fractions per axis: 1/2, then 1/4, 3/4, then
  // eighths, ...
  auto fraction = [](int occurrence) {
    int level = 0;
    int first = 0;
    while (occurrence + 1 >= (2 << level)) {
      first += 1 << level;
      ++level;
    }
    const int pos = occurrence - first;
    return Rational(2L * pos + 1, 2L << level);
  };

  const int factor_count = d_target / 2;
  std::vector<int> occurrences(static_cast<std::size_t>(vars), 0);
  MultiPoly partition = MultiPoly::constant(n, n - 1, Rational(1));
  for (int f = 0; f < factor_count; ++f) {
    const int axis = axis_order[static_cast<std::size_t>(f % vars)];
    const Rational frac = fraction(occurrences[static_cast<std::size_t>(axis)]++);

    std::vector<Rational> coords;
    coords.reserve(cloud.size());
    for (const RatVector& pt : cloud) coords.push_back(pt[axis]);
    std::sort(coords.begin(), coords.end());

    // Quantile with midpoint averaging between neighbours when the rank is
    // fractional.
    const Rational rank = frac * Rational(static_cast<long>(coords.size()) - 1);
    mpz_class floor_rank;
    mpz_fdiv_q(floor_rank.get_mpz_t(), rank.numerator().get_mpz_t(),
               rank.denominator().get_mpz_t());
    const std::size_t k = static_cast<std::size_t>(floor_rank.get_ui());
    Rational cut = coords[k];
    if (Rational(static_cast<long>(k)) != rank && k + 1 < coords.size()) {
      cut = (coords[k] + coords[k + 1]) / Rational(2);
    }

    const MultiPoly form = (axis < n ? MultiPoly::variable_x(n, n - 1, axis + 1)
                                     : MultiPoly::variable_y(n, n - 1, axis - n + 1)) -
                           MultiPoly::constant(n, n - 1, cut);
    partition = partition * form;
  }
  return partition;
}

}  // namespace osculo
