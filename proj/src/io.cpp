#include "osculo/io.hpp"

#include "osculo/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace osculo {

namespace {

using nlohmann::json;

void require_keys(const json& record, const std::vector<std::string>& keys,
                  long line, const char* what) {
  for (auto it = record.begin(); it != record.end(); ++it) {
    bool known = false;
    for (const auto& key : keys) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw InputError("collection line " + std::to_string(line) +
                       ": unknown key \"" + it.key() + "\" in " + what +
                       " record");
    }
  }
  for (const auto& key : keys) {
    if (!record.contains(key)) {
      throw InputError("collection line " + std::to_string(line) +
                       ": missing key \"" + key + "\" in " + what +
                       " record");
    }
  }
}

Rational parse_rational_field(const json& value, long line, const char* what) {
  try {
    if (value.is_number_integer()) {
      return Rational(value.get<long>());
    }
    if (value.is_string()) {
      return Rational::parse(value.get<std::string>());
    }
  } catch (const InputError& e) {
    throw InputError("collection line " + std::to_string(line) + ": " +
                     e.what());
  }
  throw InputError("collection line " + std::to_string(line) + ": " + what +
                   " must be an integer or a rational string");
}

json parse_line(const std::string& line, long line_number) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw InputError("collection line " + std::to_string(line_number) +
                     ": invalid JSON record: " + e.what());
  }
}

std::string double_text(double value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

}  // namespace

std::string collection_text(const Collection& c) {
  std::ostringstream out;
  json header;
  header["dimension"] = c.dimension;
  header["mode"] = mode_name(c.mode);
  out << header.dump() << "\n";
  for (const auto& s : c.spheres) {
    json record;
    json center = json::array();
    for (long i = 0; i < s.center.size(); ++i) {
      center.push_back(s.center(i).str());
    }
    record["center"] = std::move(center);
    record["id"] = s.id;
    record["radius"] = s.radius.str();
    out << record.dump() << "\n";
  }
  return out.str();
}

Collection parse_collection_text(const std::string& text) {
  Collection c;
  std::istringstream in(text);
  std::string line;
  long line_number = 0;
  bool header_seen = false;
  std::map<int, long> id_lines;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const json record = parse_line(line, line_number);
    if (!record.is_object()) {
      throw InputError("collection line " + std::to_string(line_number) +
                       ": expected a JSON object");
    }
    if (!header_seen) {
      require_keys(record, {"dimension", "mode"}, line_number, "header");
      if (!record["dimension"].is_number_integer()) {
        throw InputError("collection line " + std::to_string(line_number) +
                         ": dimension must be an integer");
      }
      c.dimension = record["dimension"].get<int>();
      if (!record["mode"].is_string()) {
        throw InputError("collection line " + std::to_string(line_number) +
                         ": mode must be a string");
      }
      c.mode = parse_mode(record["mode"].get<std::string>());
      header_seen = true;
      continue;
    }
    require_keys(record, {"center", "id", "radius"}, line_number, "sphere");
    if (!record["id"].is_number_integer()) {
      throw InputError("collection line " + std::to_string(line_number) +
                       ": id must be an integer");
    }
    Sphere s;
    s.id = record["id"].get<int>();
    const auto previous = id_lines.find(s.id);
    if (previous != id_lines.end()) {
      throw InputError("collection line " + std::to_string(line_number) +
                       ": duplicate sphere id " + std::to_string(s.id) +
                       " (first seen on line " +
                       std::to_string(previous->second) + ")");
    }
    id_lines[s.id] = line_number;
    if (!record["center"].is_array() ||
        static_cast<int>(record["center"].size()) != c.dimension) {
      throw InputError("collection line " + std::to_string(line_number) +
                       ": center must be an array of " +
                       std::to_string(c.dimension) + " rationals");
    }
    s.center = RatVector(c.dimension);
    for (int i = 0; i < c.dimension; ++i) {
      s.center(i) = parse_rational_field(record["center"][i], line_number,
                                         "center coordinate");
    }
    s.radius = parse_rational_field(record["radius"], line_number, "radius");
    c.spheres.push_back(std::move(s));
  }
  if (!header_seen) {
    throw InputError("collection file is empty: expected a header record");
  }
  c.validate();
  return c;
}

void write_collection(const Collection& c, const std::string& path) {
  write_text_file(path, collection_text(c));
}

Collection parse_collection(const std::string& path) {
  return parse_collection_text(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open file for reading: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw InputError("cannot open file for writing: " + path);
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw InternalError("short write while saving " + path);
  }
}

std::string graph_csv(const TangencyGraph& g, int dimension) {
  std::ostringstream out;
  out << "id1,id2,status";
  for (int i = 1; i <= dimension; ++i) {
    out << ",x" << i;
  }
  out << "\n";
  for (const auto& edge : g.edges) {
    out << edge.id1 << "," << edge.id2 << "," << status_name(edge.status);
    for (long i = 0; i < edge.contact.size(); ++i) {
      out << "," << edge.contact(i).str();
    }
    out << "\n";
  }
  return out.str();
}

std::string cells_csv(const CellAssignment& a) {
  std::ostringstream out;
  out << "cell,sphere_id\n";
  for (const auto& [label, ids] : a.cells) {
    for (int id : ids) {
      out << label << "," << id << "\n";
    }
  }
  return out.str();
}

std::string point_to_text(const RatVector& x) {
  std::string out = "(";
  for (long i = 0; i < x.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += x(i).str();
  }
  out += ")";
  return out;
}

std::string incidence_report_text(const IncidenceReport& r) {
  std::ostringstream out;
  out << "ordered tangency incidences: " << r.total() << "\n";
  out << "class I1 (contact off the zero set): " << r.i1.size() << "\n";
  out << "class I3 (contact on the zero set, a sphere lift escapes): "
      << r.i3.size() << "\n";
  out << "class I4 (contact on the zero set, both lifts contained): "
      << r.i4.size() << "\n";
  out << "contained spheres:";
  for (int id : r.contained_ids) {
    out << " " << id;
  }
  out << "\n";
  out << "uncontained spheres: " << r.uncontained_count << "\n";
  out << "max zero-set contacts on an uncontained sphere: "
      << r.max_zero_incidences << "\n";
  out << "I3 count within twice that per uncontained sphere: "
      << yes_no(r.i3_bound_ok) << "\n";
  out << "lifted contacts of contained spheres vanish: "
      << yes_no(r.tilde_witnesses_ok) << "\n";
  const auto dump_class = [&out](const char* name,
                                 const std::vector<OrderedIncidence>& rows) {
    out << name << ":\n";
    for (const auto& row : rows) {
      out << "  (" << row.id1 << "," << row.id2 << ") at "
          << point_to_text(row.witness.x) << "\n";
    }
  };
  dump_class("I1 pairs", r.i1);
  dump_class("I3 pairs", r.i3);
  dump_class("I4 pairs", r.i4);
  return out.str();
}

std::string chain_report_text(const AlgebraicChain& chain) {
  std::ostringstream out;
  out << "derivative chain length: " << chain.steps.size() << "\n";
  for (std::size_t k = 0; k < chain.steps.size(); ++k) {
    const auto& step = chain.steps[k];
    out << "step " << k << ": degree " << step.poly.degree() << ", "
        << step.collection_ids.size() << " spheres contained";
    if (step.derivative_index > 0) {
      out << ", next derivative in Y" << step.derivative_index;
    }
    out << "\n";
    out << "  polynomial: " << step.poly.str() << "\n";
    out << "  spheres:";
    for (int id : step.collection_ids) {
      out << " " << id;
    }
    out << "\n";
  }
  out << "terminal polynomial: " << chain.terminal.str() << "\n";
  out << "terminal degree: " << chain.terminal.degree() << "\n";
  out << "terminal spheres:";
  for (int id : chain.terminal_ids) {
    out << " " << id;
  }
  out << "\n";
  out << "terminal count within half the terminal degree: "
      << yes_no(chain.terminal_bound_ok) << "\n";
  out << "witness violations: " << chain.witness_violations.size() << "\n";
  for (const auto& [id1, id2] : chain.witness_violations) {
    out << "  (" << id1 << "," << id2 << ")\n";
  }
  return out.str();
}

std::string audit_report_text(const AuditVerdict& v, long b, int d) {
  std::ostringstream out;
  out << "low-degree concentration audit (threshold " << b
      << ", degree up to " << d << ")\n";
  out << "violation: " << yes_no(v.violation) << "\n";
  out << "largest contact count on one witness surface: " << v.b_found
      << "\n";
  if (v.violation) {
    out << "worst sphere: " << v.worst_sphere_id << "\n";
  }
  out << "per sphere:\n";
  for (const auto& row : v.per_sphere) {
    out << "  sphere " << row.sphere_id << ": partners=" << row.partner_count
        << " contact_points=" << row.point_count
        << " best=" << row.best_witness_count << " at degree "
        << row.best_witness_degree << "\n";
    out << "    witness: " << row.witness.str() << "\n";
  }
  return out.str();
}

std::string cell_bound_report_text(const CellBoundReport& r) {
  std::ostringstream out;
  out << "partition cell check\n";
  out << "nonempty cells: " << r.nonempty_cells << "\n";
  out << "max spheres meeting one cell: " << r.max_occupancy << "\n";
  out << "occupancy bound: " << r.occupancy_bound.str() << " -> "
      << yes_no(r.occupancy_ok) << "\n";
  out << "cell count bound: " << r.count_bound.str() << " -> "
      << yes_no(r.count_ok) << "\n";
  return out.str();
}

std::string bound_report_csv(const CompareReport& r) {
  std::ostringstream out;
  out << "label,n_count,b,pair_count,bound,bound_approx,asymptotic,"
         "applicable,inconsistent\n";
  for (const auto& row : r.rows) {
    out << row.observed.label << "," << row.observed.n_count << ","
        << row.observed.b << "," << row.observed.pair_count << ","
        << row.bound.str() << "," << double_text(row.bound.to_double()) << ","
        << double_text(row.asymptotic) << "," << yes_no(row.applicable) << ","
        << yes_no(row.inconsistent) << "\n";
  }
  return out.str();
}

std::string bound_report_text(const CompareReport& r,
                              const BoundParams& params) {
  std::ostringstream out;
  out << "tangency count bound report\n";
  out << "ambient dimension n: " << params.n << "\n";
  out << "epsilon: " << params.epsilon.str() << "\n";
  out << "partition constants c1=" << params.c1.str()
      << " c2=" << params.c2.str() << "\n";
  out << "derived constants c3=" << params.c3().str()
      << " c4=" << params.c4().str() << "\n";
  out << "partition degree: " << params.d << "\n";
  out << "shrink factor rho: " << params.rho().str() << "\n";
  for (const auto& row : r.rows) {
    out << "- " << row.observed.label << ": N=" << row.observed.n_count
        << " b=" << row.observed.b << " pairs=" << row.observed.pair_count;
    if (!row.applicable) {
      out << " (bound not applicable: low-degree concentration violated)";
      out << "\n";
      continue;
    }
    out << " bound~" << double_text(row.bound.to_double()) << " asymptotic~"
        << double_text(row.asymptotic);
    if (row.inconsistent) {
      out << " INCONSISTENT (observed count exceeds the proven bound)";
    }
    out << "\n";
  }
  out << "any inconsistency: " << yes_no(r.any_inconsistent) << "\n";
  return out.str();
}

std::string plot_data_csv(const CompareReport& r) {
  std::ostringstream out;
  out << "n_count,pair_count,bound_approx,asymptotic\n";
  for (const auto& row : r.rows) {
    if (!row.applicable) {
      continue;
    }
    out << row.observed.n_count << "," << row.observed.pair_count << ","
        << double_text(row.bound.to_double()) << ","
        << double_text(row.asymptotic) << "\n";
  }
  return out.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : bytes) {
    hash ^= static_cast<std::uint64_t>(byte);
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a(bytes);
  return out.str();
}

std::string manifest_json(const std::map<std::string, std::string>& artifacts,
                          const std::string& config_echo_json) {
  json manifest;
  json rows = json::array();
  for (const auto& [path, bytes] : artifacts) {
    json row;
    row["bytes"] = bytes.size();
    row["hash"] = fnv1a_hex(bytes);
    row["path"] = path;
    rows.push_back(std::move(row));
  }
  manifest["artifacts"] = std::move(rows);
  manifest["config"] = json::parse(config_echo_json);
  manifest["tool"] = {{"name", "osculo"}, {"version", "0.1.0"}};
  return manifest.dump(2) + "\n";
}

}  // namespace osculo
