#pragma once

#include "osculo/bounds.hpp"
#include "osculo/incidence.hpp"
#include "osculo/nondegeneracy.hpp"
#include "osculo/partition.hpp"
#include "osculo/sphere.hpp"
#include "osculo/tangency_graph.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace osculo {

// Collection file: one JSON record per line. The first line is the header
// {"dimension": n, "mode": "signed"|"unsigned"}; every further line is
// {"center": ["p/q", ...], "id": k, "radius": "p/q"}. Rationals are always
// in canonical lowest-terms form, so write ∘ parse is the identity on
// canonical files, byte for byte.
std::string collection_text(const Collection& c);
Collection parse_collection_text(const std::string& text);
void write_collection(const Collection& c, const std::string& path);
Collection parse_collection(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& bytes);

// CSV with header id1,id2,status,x1..xn; contact coordinates as "p/q".
std::string graph_csv(const TangencyGraph& g, int dimension);

// CSV with header cell,sphere_id.
std::string cells_csv(const CellAssignment& a);

std::string point_to_text(const RatVector& x);

std::string incidence_report_text(const IncidenceReport& r);
std::string chain_report_text(const AlgebraicChain& chain);
std::string audit_report_text(const AuditVerdict& v, long b, int d);
std::string cell_bound_report_text(const CellBoundReport& r);
std::string bound_report_csv(const CompareReport& r);
std::string bound_report_text(const CompareReport& r, const BoundParams& params);
// x = collection size, observed count and bound columns, for external
// plotting.
std::string plot_data_csv(const CompareReport& r);

std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

// Manifest over a set of artifacts: per-file byte count and content hash,
// plus the canonical config echo. No timestamps, so reruns are
// byte-identical.
std::string manifest_json(const std::map<std::string, std::string>& artifacts,
                          const std::string& config_echo_json);

}  // namespace osculo
