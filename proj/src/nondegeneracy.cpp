#include "osculo/nondegeneracy.hpp"

#include "osculo/errors.hpp"
#include "osculo/linalg.hpp"
#include "osculo/tangency_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace osculo {

std::vector<RatVector> tangency_points_on(const Collection& c, int sphere_id,
                                          TangencyMode mode) {
  c.validate();
  const Sphere& s = c.by_id(sphere_id);
  std::set<RatVector, RatVectorLess> points;
  for (const Sphere& other : c.spheres) {
    if (other.id == sphere_id) continue;
    if (tangency_status(s, other, mode) == TangencyStatus::NotTangent) continue;
    points.insert(contact_point(s, other, mode));
  }
  return std::vector<RatVector>(points.begin(), points.end());
}

namespace {

// Any nonzero kernel vector of the rows (xᵢᵀ, 1) has a nonzero normal part,
// because (0, b) in the kernel forces b = 0.
Hyperplane hyperplane_from_kernel(const RatMatrix& rows_with_one) {
  const RatMatrix kernel = exact_kernel(rows_with_one);
  if (kernel.cols() == 0) throw InternalError("expected a nontrivial hyperplane kernel");
  const Eigen::Index n = rows_with_one.cols() - 1;
  Hyperplane h;
  h.normal = kernel.col(0).head(n);
  h.offset = -kernel.col(0)[n];
  return h;
}

RatMatrix affine_rows(const std::vector<RatVector>& points, int n) {
  RatMatrix m(static_cast<Eigen::Index>(points.size()), n + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)).head(n) = points[i].transpose();
    m(static_cast<Eigen::Index>(i), n) = Rational(1);
  }
  return m;
}

bool on_plane(const Hyperplane& h, const RatVector& x) {
  return dot(h.normal, x) == h.offset;
}

long plane_count(const Hyperplane& h, const std::vector<RatVector>& points) {
  long count = 0;
  for (const RatVector& x : points) {
    if (on_plane(h, x)) ++count;
  }
  return count;
}

}  // namespace

HyperplaneWitness hyperplane_witness(const std::vector<RatVector>& points, int n) {
  if (n < 2) throw InputError("hyperplane witness needs dimension >= 2");
  for (const RatVector& x : points) {
    if (x.size() != n) throw InputError("point dimension mismatch");
  }
  HyperplaneWitness w;
  if (points.empty()) {
    w.plane.normal = RatVector::Zero(n);
    w.plane.normal[0] = Rational(1);
    w.plane.offset = Rational(0);
    return w;
  }

  const RatMatrix all_rows = affine_rows(points, n);
  if (exact_rank(all_rows) <= n) {
    // The whole set is affinely degenerate, so one hyperplane carries it.
    w.plane = hyperplane_from_kernel(all_rows);
    w.count = static_cast<long>(points.size());
    return w;
  }

  // The maximum is attained on a hyperplane spanned by n affinely
  // independent input points; enumerate n-subsets in lexicographic order.
  const std::size_t m = points.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  bool done = false;
  while (!done) {
    std::vector<RatVector> subset;
    subset.reserve(static_cast<std::size_t>(n));
    for (std::size_t i : idx) subset.push_back(points[i]);
    const RatMatrix rows = affine_rows(subset, n);
    if (exact_rank(rows) == n) {
      const Hyperplane h = hyperplane_from_kernel(rows);
      const long count = plane_count(h, points);
      if (count > w.count) {
        w.plane = h;
        w.count = count;
      }
    }

    // Next lexicographic combination.
    int pos = n - 1;
    while (pos >= 0 &&
           idx[static_cast<std::size_t>(pos)] == m - static_cast<std::size_t>(n - pos)) {
      --pos;
    }
    if (pos < 0) {
      done = true;
    } else {
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < n; ++i) {
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
  if (w.count == 0) throw InternalError("hyperplane scan found no spanning subset");
  return w;
}

namespace {

// Exponent vectors of degree ≤ d in n variables, grlex ascending.
std::vector<std::vector<int>> monomials_up_to(int n, int d, bool reduced) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (;;) {
    int total = 0;
    for (int v : e) total += v;
    if (total <= d && (!reduced || e[0] <= 1)) out.push_back(e);
    // Odometer over exponents bounded by d.
    int pos = 0;
    while (pos < n && e[static_cast<std::size_t>(pos)] == d) {
      e[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++e[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

Rational eval_monomial(const std::vector<int>& e, const RatVector& x) {
  Rational acc(1);
  for (std::size_t v = 0; v < e.size(); ++v) {
    for (int k = 0; k < e[v]; ++k) acc *= x[static_cast<Eigen::Index>(v)];
  }
  return acc;
}

RatMatrix evaluation_matrix(const std::vector<RatVector>& points,
                            const std::vector<std::vector<int>>& monomials) {
  RatMatrix m(static_cast<Eigen::Index>(points.size()),
              static_cast<Eigen::Index>(monomials.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          eval_monomial(monomials[j], points[i]);
    }
  }
  return m;
}

MultiPoly poly_from_coeffs(const std::vector<std::vector<int>>& monomials,
                           const RatVector& coeffs, int n) {
  MultiPoly p(n, 0);
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    p.add_term(monomials[j], coeffs[static_cast<Eigen::Index>(j)]);
  }
  return p;
}

}  // namespace

VeroneseCertificate veronese_certificate(const std::vector<RatVector>& points,
                                         const Sphere& s, int d) {
  if (d < 1) throw InputError("certificate degree must be >= 1");
  const int n = s.dimension();
  for (const RatVector& x : points) {
    if (x.size() != n) throw InputError("point dimension mismatch");
  }
  VeroneseCertificate cert;
  cert.point_count = static_cast<long>(points.size());

  const auto raw = monomials_up_to(n, d, false);
  const auto reduced = monomials_up_to(n, d, true);
  cert.raw_monomials = static_cast<long>(raw.size());
  cert.reduced_monomials = static_cast<long>(reduced.size());

  cert.raw_rank = exact_rank(evaluation_matrix(points, raw));
  const RatMatrix reduced_matrix = evaluation_matrix(points, reduced);
  cert.reduced_rank = exact_rank(reduced_matrix);

  if (cert.reduced_rank < cert.reduced_monomials) {
    const RatMatrix kernel = exact_kernel(reduced_matrix);
    cert.kernel_witness = poly_from_coeffs(reduced, kernel.col(0), n);
  }
  return cert;
}

namespace {

std::string point_text(const RatVector& x) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << x[i].str();
  }
  os << ")";
  return os.str();
}

MultiPoly plane_poly(const Hyperplane& h, int n) {
  MultiPoly p(n, 0);
  for (int j = 1; j <= n; ++j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    p.add_term(e, h.normal[j - 1]);
  }
  p.add_term(std::vector<int>(static_cast<std::size_t>(n), 0), -h.offset);
  return p;
}

}  // namespace

AuditVerdict audit(const Collection& c, long b, int d, TangencyMode mode) {
  c.validate();
  if (b < 1) throw InputError("audit bound b must be >= 1");
  if (d < 1) throw InputError("audit degree must be >= 1");
  const int n = c.dimension;

  const TangencyGraph graph = count_pairs_bruteforce(c, mode);
  const auto triples = common_point_triples(graph);
  if (!triples.empty()) {
    std::ostringstream os;
    os << "three spheres are mutually tangent at one point: ids";
    for (int id : triples.front().sphere_ids) os << " " << id;
    os << " at " << point_text(triples.front().point);
    throw InputError(os.str());
  }

  // Contacts per sphere as (partner id, point) pairs.
  std::map<int, std::vector<std::pair<int, RatVector>>> contacts;
  for (const Sphere& s : c.spheres) contacts[s.id];
  for (const TangencyEdge& e : graph.edges) {
    contacts[e.id1].emplace_back(e.id2, e.contact);
    contacts[e.id2].emplace_back(e.id1, e.contact);
  }

  AuditVerdict verdict;
  for (const auto& [id, partner_points] : contacts) {
    const Sphere& s = c.by_id(id);
    SphereAudit entry;
    entry.sphere_id = id;
    entry.partner_count = static_cast<long>(partner_points.size());
    entry.witness = MultiPoly(n, 0);

    std::set<RatVector, RatVectorLess> dedup;
    for (const auto& [pid, x] : partner_points) dedup.insert(x);
    const std::vector<RatVector> points(dedup.begin(), dedup.end());
    entry.point_count = static_cast<long>(points.size());

    if (!points.empty()) {
      auto partners_on = [&](const MultiPoly& g) {
        long count = 0;
        for (const auto& [pid, x] : partner_points) {
          if (g.evaluate(x).is_zero()) ++count;
        }
        return count;
      };

      // Exact hyperplane maximum (degree-1 witness polynomial).
      const HyperplaneWitness hw = hyperplane_witness(points, n);
      entry.witness = plane_poly(hw.plane, n);
      entry.best_witness_count = partners_on(entry.witness);
      entry.best_witness_degree = 1;

      // Greedy kernel witnesses for higher degrees: keep adding points while
      // some degree-deg polynomial still vanishes on all of them, then count
      // against the full contact set.
      for (int deg = 2; deg <= d; ++deg) {
        const auto reduced = monomials_up_to(n, deg, true);
        std::vector<RatVector> kept;
        for (const RatVector& x : points) {
          kept.push_back(x);
          if (exact_rank(evaluation_matrix(kept, reduced)) ==
              static_cast<long>(reduced.size())) {
            kept.pop_back();
          }
        }
        if (kept.empty()) continue;
        const RatMatrix matrix = evaluation_matrix(kept, reduced);
        const RatMatrix kernel = exact_kernel(matrix);
        if (kernel.cols() == 0) continue;
        const MultiPoly g = poly_from_coeffs(reduced, kernel.col(0), n);
        const long count = partners_on(g);
        if (count > entry.best_witness_count) {
          entry.best_witness_count = count;
          entry.best_witness_degree = deg;
          entry.witness = g;
        }
      }

      // Exact re-verification of the winning witness.
      long recount = 0;
      for (const auto& [pid, x] : partner_points) {
        if (!entry.witness.evaluate(x).is_zero()) continue;
        if (!on_sphere(s, x)) throw InternalError("witness point is off its sphere");
        ++recount;
      }
      if (recount != entry.best_witness_count) {
        throw InternalError("witness count failed re-verification");
      }
    }

    if (entry.best_witness_count > verdict.b_found) {
      verdict.b_found = entry.best_witness_count;
      verdict.worst_sphere_id = id;
    }
    verdict.per_sphere.push_back(std::move(entry));
  }
  verdict.violation = verdict.b_found > b;
  if (!verdict.violation) verdict.b_found = 0;
  return verdict;
}

}  // namespace osculo
