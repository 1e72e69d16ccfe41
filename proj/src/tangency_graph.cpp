#include "osculo/tangency_graph.hpp"

#include "osculo/errors.hpp"
#include "osculo/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace osculo {

bool operator==(const TangencyEdge& a, const TangencyEdge& b) {
  return a.id1 == b.id1 && a.id2 == b.id2 && a.status == b.status &&
         vectors_equal(a.contact, b.contact);
}

bool same_edge_set(const TangencyGraph& a, const TangencyGraph& b) {
  if (a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (!(a.edges[i] == b.edges[i])) return false;
  }
  return true;
}

namespace {

TangencyEdge make_edge(const Sphere& s1, const Sphere& s2, TangencyStatus status,
                       TangencyMode mode) {
  const Sphere& lo = s1.id < s2.id ? s1 : s2;
  const Sphere& hi = s1.id < s2.id ? s2 : s1;
  return TangencyEdge{lo.id, hi.id, status, contact_point(lo, hi, mode)};
}

void sort_edges(std::vector<TangencyEdge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const TangencyEdge& a, const TangencyEdge& b) {
    if (a.id1 != b.id1) return a.id1 < b.id1;
    return a.id2 < b.id2;
  });
}

std::vector<int> sorted_vertex_ids(const Collection& c) {
  std::vector<int> ids;
  ids.reserve(c.spheres.size());
  for (const Sphere& s : c.spheres) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

TangencyGraph count_pairs_bruteforce(const Collection& c, TangencyMode mode,
                                     int threads) {
  c.validate();
  if (threads < 1) throw InputError("thread count must be >= 1");
  const std::size_t count = c.spheres.size();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count == 0 ? 1 : count);

  std::vector<std::vector<TangencyEdge>> found(workers);
  std::vector<std::exception_ptr> failures(workers);
  auto scan = [&](std::size_t worker) {
    try {
      for (std::size_t i = worker; i < count; i += workers) {
        for (std::size_t j = i + 1; j < count; ++j) {
          const Sphere& s1 = c.spheres[i];
          const Sphere& s2 = c.spheres[j];
          const TangencyStatus status = tangency_status(s1, s2, mode);
          if (status == TangencyStatus::NotTangent) continue;
          found[worker].push_back(make_edge(s1, s2, status, mode));
        }
      }
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  TangencyGraph g;
  g.vertex_ids = sorted_vertex_ids(c);
  for (auto& part : found) {
    g.edges.insert(g.edges.end(), part.begin(), part.end());
  }
  sort_edges(g.edges);
  return g;
}

namespace {

// Floor of a rational as a machine integer; false when it does not fit.
bool rational_floor_long(const Rational& r, long& out) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  if (!q.fits_slong_p()) return false;
  out = q.get_si();
  return true;
}

struct KeyHash {
  std::size_t operator()(const std::vector<long>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (long v : key) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

TangencyGraph count_pairs_hashed(const Collection& c, TangencyMode mode) {
  c.validate();
  const std::size_t count = c.spheres.size();
  if (count < 2) return count_pairs_bruteforce(c, mode);

  Rational max_r(0);
  for (const Sphere& s : c.spheres) max_r = std::max(max_r, abs(s.radius));
  const Rational scale = max_r;

  // Tangent centers lie within 2·max|r| of each other, so at bucket scale
  // max|r| their floor keys differ by at most 2 per coordinate.
  const int n = c.dimension;
  std::vector<std::vector<long>> keys(count);
  for (std::size_t i = 0; i < count; ++i) {
    keys[i].resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      long cell = 0;
      if (!rational_floor_long(c.spheres[i].center[k] / scale, cell)) {
        return count_pairs_bruteforce(c, mode);
      }
      keys[i][static_cast<std::size_t>(k)] = cell;
    }
  }

  std::unordered_map<std::vector<long>, std::vector<std::size_t>, KeyHash> buckets;
  for (std::size_t i = 0; i < count; ++i) buckets[keys[i]].push_back(i);

  TangencyGraph g;
  g.vertex_ids = sorted_vertex_ids(c);

  std::vector<long> probe(static_cast<std::size_t>(n));
  std::vector<int> offsets(static_cast<std::size_t>(n), -2);
  for (std::size_t i = 0; i < count; ++i) {
    std::fill(offsets.begin(), offsets.end(), -2);
    for (;;) {
      for (int k = 0; k < n; ++k) {
        probe[static_cast<std::size_t>(k)] =
            keys[i][static_cast<std::size_t>(k)] + offsets[static_cast<std::size_t>(k)];
      }
      auto it = buckets.find(probe);
      if (it != buckets.end()) {
        for (std::size_t j : it->second) {
          if (j <= i) continue;
          const Sphere& s1 = c.spheres[i];
          const Sphere& s2 = c.spheres[j];
          const TangencyStatus status = tangency_status(s1, s2, mode);
          if (status == TangencyStatus::NotTangent) continue;
          g.edges.push_back(make_edge(s1, s2, status, mode));
        }
      }
      int k = 0;
      while (k < n && offsets[static_cast<std::size_t>(k)] == 2) {
        offsets[static_cast<std::size_t>(k)] = -2;
        ++k;
      }
      if (k == n) break;
      ++offsets[static_cast<std::size_t>(k)];
    }
  }
  sort_edges(g.edges);
  return g;
}

namespace {

// Maximal cliques of size >= 3 via Bron–Kerbosch; groups at one contact point
// are tiny, so no pivoting is needed.
void bron_kerbosch(std::set<int> r, std::set<int> p, std::set<int> x,
                   const std::map<int, std::set<int>>& adj,
                   std::vector<std::set<int>>& out) {
  if (p.empty() && x.empty()) {
    if (r.size() >= 3) out.push_back(r);
    return;
  }
  const std::set<int> p_copy = p;
  for (int v : p_copy) {
    std::set<int> r2 = r;
    r2.insert(v);
    std::set<int> p2, x2;
    const std::set<int>& nv = adj.at(v);
    for (int u : p) {
      if (nv.count(u)) p2.insert(u);
    }
    for (int u : x) {
      if (nv.count(u)) x2.insert(u);
    }
    bron_kerbosch(std::move(r2), std::move(p2), std::move(x2), adj, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<TriplePoint> common_point_triples(const TangencyGraph& g) {
  std::map<RatVector, std::vector<const TangencyEdge*>, RatVectorLess> by_point;
  for (const TangencyEdge& e : g.edges) by_point[e.contact].push_back(&e);

  std::vector<TriplePoint> out;
  for (const auto& [point, edges] : by_point) {
    if (edges.size() < 3) continue;  // a 3-clique needs 3 edges
    std::map<int, std::set<int>> adj;
    for (const TangencyEdge* e : edges) {
      adj[e->id1].insert(e->id2);
      adj[e->id2].insert(e->id1);
    }
    std::set<int> vertices;
    for (const auto& [v, _] : adj) vertices.insert(v);
    std::vector<std::set<int>> cliques;
    bron_kerbosch({}, vertices, {}, adj, cliques);
    std::sort(cliques.begin(), cliques.end());
    for (const std::set<int>& clique : cliques) {
      out.push_back(TriplePoint{point, std::vector<int>(clique.begin(), clique.end())});
    }
  }
  return out;
}

}  // namespace osculo
