#pragma once

#include "osculo/tangency.hpp"

#include <vector>

namespace osculo {

struct TangencyEdge {
  int id1 = 0;  // id1 < id2 always
  int id2 = 0;
  TangencyStatus status = TangencyStatus::NotTangent;
  RatVector contact;
};

bool operator==(const TangencyEdge& a, const TangencyEdge& b);

// Undirected tangency graph. Edges are sorted by (id1, id2) so equal graphs
// compare equal structurally; the ordered pair count of a graph is twice its
// edge count.
struct TangencyGraph {
  std::vector<int> vertex_ids;
  std::vector<TangencyEdge> edges;
};

bool same_edge_set(const TangencyGraph& a, const TangencyGraph& b);

// Exact O(N²) pair scan. With threads > 1 the scan is chunked and merged in
// id order, so the result is independent of the thread count.
TangencyGraph count_pairs_bruteforce(const Collection& c, TangencyMode mode,
                                     int threads = 1);

// Same graph as the brute-force scan, accelerated by spatial bucketing of
// centers at scale max|r|. Falls back to the full scan when bucket keys
// do not fit machine integers.
TangencyGraph count_pairs_hashed(const Collection& c, TangencyMode mode);

// A point where three or more spheres are pairwise tangent to each other.
struct TriplePoint {
  RatVector point;
  std::vector<int> sphere_ids;  // sorted
};

// Groups edges by exact contact point and reports every maximal set of >= 3
// spheres that are pairwise tangent at the same point. An empty result
// certifies that no such point exists.
std::vector<TriplePoint> common_point_triples(const TangencyGraph& g);

}  // namespace osculo
