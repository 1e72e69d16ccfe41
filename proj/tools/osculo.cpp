// Command line front end: loads or generates a sphere collection, runs the
// requested pipeline stages in canonical order, and writes all artifacts
// plus a manifest atomically at the end of a successful run.

#include "osculo/bounds.hpp"
#include "osculo/config.hpp"
#include "osculo/errors.hpp"
#include "osculo/generators.hpp"
#include "osculo/incidence.hpp"
#include "osculo/io.hpp"
#include "osculo/lift.hpp"
#include "osculo/nondegeneracy.hpp"
#include "osculo/partition.hpp"
#include "osculo/rotation.hpp"
#include "osculo/tangency_graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace osculo;

struct PipelineState {
  RunConfig config;
  std::vector<std::string> stages;
  std::map<std::string, std::string> artifacts;

  std::optional<Collection> base;       // as generated or loaded
  std::optional<RationalRotation> rotation;
  std::optional<Collection> rotated;
  std::optional<TangencyGraph> graph;
  std::optional<MultiPoly> partition_poly;
  std::optional<AuditVerdict> verdict;
  std::optional<BoundParams> params;
};

bool stage_selected(const PipelineState& state, const std::string& stage) {
  return std::find(state.stages.begin(), state.stages.end(), stage) !=
         state.stages.end();
}

const Collection& ensure_collection(PipelineState& state) {
  if (!state.base) {
    Collection c;
    if (state.config.generator) {
      c = generate(*state.config.generator);
    } else {
      c = parse_collection(*state.config.input_path);
    }
    if (state.config.mode_override) {
      c.mode = *state.config.mode_override;
    }
    c.validate();
    state.base = std::move(c);
  }
  return *state.base;
}

// The collection every stage after "rotate" works on.
const Collection& working_collection(PipelineState& state) {
  if (state.rotated) {
    return *state.rotated;
  }
  return ensure_collection(state);
}

const TangencyGraph& ensure_graph(PipelineState& state) {
  if (!state.graph) {
    state.graph = count_pairs_bruteforce(working_collection(state),
                                         working_collection(state).mode,
                                         state.config.threads);
  }
  return *state.graph;
}

const BoundParams& ensure_params(PipelineState& state) {
  if (!state.params) {
    const Collection& c = working_collection(state);
    state.params = make_params(c.dimension, state.config.bound.epsilon,
                               state.config.bound.c1, state.config.bound.c2);
  }
  return *state.params;
}

const MultiPoly& ensure_partition_poly(PipelineState& state) {
  if (!state.partition_poly) {
    const Collection& c = working_collection(state);
    if (state.config.partition.source == "file") {
      const std::string text = read_text_file(state.config.partition.path);
      state.partition_poly =
          MultiPoly::parse(text, c.dimension, c.dimension - 1);
    } else {
      int d_target = state.config.partition.d_target;
      if (d_target == 0) {
        d_target = static_cast<int>(ensure_params(state).d);
      }
      state.partition_poly = heuristic_partition(c, d_target, c.mode);
    }
  }
  return *state.partition_poly;
}

// The concentration threshold fed into the bound: the audited violation
// count when the audit found one, otherwise the configured threshold the
// collection is assumed (or verified) to satisfy.
long effective_b(const PipelineState& state) {
  if (state.verdict && state.verdict->violation) {
    return state.verdict->b_found;
  }
  return state.config.audit.b;
}

std::string rotation_csv(const RationalRotation& r) {
  std::ostringstream out;
  for (long i = 0; i < r.matrix.rows(); ++i) {
    for (long j = 0; j < r.matrix.cols(); ++j) {
      if (j > 0) {
        out << ",";
      }
      out << r.matrix(i, j).str();
    }
    out << "\n";
  }
  return out.str();
}

void run_generate(PipelineState& state) {
  const Collection& c = ensure_collection(state);
  state.artifacts["collection.txt"] = collection_text(c);
  std::cout << "generate: " << c.spheres.size() << " spheres in dimension "
            << c.dimension << " (" << mode_name(c.mode) << ")\n";
}

void run_rotate(PipelineState& state) {
  const Collection& c = ensure_collection(state);
  const auto& policy = state.config.rotation;
  RationalRotation rotation;
  if (policy.policy == "identity") {
    rotation = identity_rotation(c.dimension);
  } else if (policy.policy == "explicit") {
    if (policy.skew->rows() != c.dimension) {
      throw InputError("rotation.skew is " +
                       std::to_string(policy.skew->rows()) + "x" +
                       std::to_string(policy.skew->cols()) +
                       " but the collection has dimension " +
                       std::to_string(c.dimension));
    }
    rotation = cayley_rotation(*policy.skew);
  } else {
    rotation = find_generic_rotation(c, c.mode, policy.budget);
  }
  state.rotation = rotation;
  state.rotated = apply_rotation(c, rotation);
  state.artifacts["rotation.csv"] = rotation_csv(rotation);
  state.artifacts["collection_rotated.txt"] = collection_text(*state.rotated);
  std::cout << "rotate: " << policy.policy << " policy, identity="
            << (rotation.is_identity() ? "yes" : "no") << "\n";
}

void run_count(PipelineState& state) {
  const TangencyGraph& g = ensure_graph(state);
  state.artifacts["graph.csv"] =
      graph_csv(g, working_collection(state).dimension);
  std::cout << "count: " << g.edges.size() << " tangent pairs among "
            << g.vertex_ids.size() << " spheres\n";
}

void run_classify(PipelineState& state) {
  const Collection& c = working_collection(state);
  const MultiPoly& poly = ensure_partition_poly(state);
  state.artifacts["partition.txt"] = poly.str() + "\n";

  const CellAssignment assignment =
      assign_cells(c, poly, state.config.samples_per_sphere);
  state.artifacts["cells.csv"] = cells_csv(assignment);
  // Judge the candidate against the premises at the degree the bound
  // arithmetic assumes (or the candidate's own degree if that is higher).
  const BoundParams& params = ensure_params(state);
  const long degree = std::max(params.d, poly.degree());
  const CellBoundReport cell_report = verify_cell_bound(
      assignment, params.c1, params.c2, degree, c.dimension,
      static_cast<long>(c.spheres.size()));
  state.artifacts["cell_bounds.txt"] = cell_bound_report_text(cell_report);

  const IncidenceReport incidences = classify_incidences(c, poly, c.mode);
  state.artifacts["incidence.txt"] = incidence_report_text(incidences);
  if (!incidences.tilde_witnesses_ok) {
    throw InternalError(
        "a contained sphere has a lifted contact off the zero set");
  }

  const AlgebraicChain chain = algebraic_chain(c, poly, c.mode);
  state.artifacts["chain.txt"] = chain_report_text(chain);

  std::cout << "classify: degree " << poly.degree() << " partition, "
            << incidences.total() << " ordered incidences ("
            << incidences.i1.size() << "/" << incidences.i3.size() << "/"
            << incidences.i4.size() << "), " << assignment.cells.size()
            << " cells\n";
}

void run_audit(PipelineState& state) {
  const Collection& c = working_collection(state);
  state.verdict =
      audit(c, state.config.audit.b, state.config.audit.d, c.mode);
  state.artifacts["audit.txt"] =
      audit_report_text(*state.verdict, state.config.audit.b,
                        state.config.audit.d);
  std::cout << "audit: violation="
            << (state.verdict->violation ? "yes" : "no")
            << " largest witness count=" << state.verdict->b_found << "\n";
}

void run_bound(PipelineState& state) {
  const Collection& c = working_collection(state);
  const BoundParams& params = ensure_params(state);
  ObservedRow row;
  row.label = "current";
  row.b = effective_b(state);
  row.n_count = static_cast<long>(c.spheres.size());
  row.pair_count = static_cast<long>(ensure_graph(state).edges.size());
  const CompareReport report = compare_report({row}, params);
  state.artifacts["bound.csv"] = bound_report_csv(report);
  state.artifacts["bound.txt"] = bound_report_text(report, params);
  if (report.any_inconsistent) {
    throw InternalError(
        "observed tangency count exceeds the proven bound; this indicates a "
        "defect in the counting or bound arithmetic");
  }
  std::cout << "bound: pairs=" << row.pair_count << " bound~"
            << report.rows[0].bound.to_double() << "\n";
}

void run_report(PipelineState& state) {
  const Collection& c = working_collection(state);
  const BoundParams& params = ensure_params(state);
  std::vector<ObservedRow> rows;
  ObservedRow current;
  current.label = "current";
  current.b = effective_b(state);
  current.n_count = static_cast<long>(c.spheres.size());
  current.pair_count = static_cast<long>(ensure_graph(state).edges.size());
  rows.push_back(current);

  std::vector<std::pair<long, long>> sweep_counts;
  for (int m : state.config.report_sweep) {
    const Collection grid = zahl_grid(m);
    const TangencyGraph g = count_pairs_hashed(grid, grid.mode);
    ObservedRow row;
    row.label = "zahl_grid m=" + std::to_string(m);
    row.b = state.config.audit.b;
    row.n_count = static_cast<long>(grid.spheres.size());
    row.pair_count = static_cast<long>(g.edges.size());
    rows.push_back(row);
    sweep_counts.emplace_back(row.n_count, row.pair_count);
  }

  const CompareReport report = compare_report(rows, params);
  std::string text = bound_report_text(report, params);
  if (sweep_counts.size() >= 2) {
    std::ostringstream extra;
    extra << "sweep log-log slope: " << fit_loglog_slope(sweep_counts)
          << "\n";
    text += extra.str();
  }
  state.artifacts["report.csv"] = bound_report_csv(report);
  state.artifacts["report.txt"] = text;
  state.artifacts["plot_data.csv"] = plot_data_csv(report);
  if (report.any_inconsistent) {
    throw InternalError(
        "observed tangency count exceeds the proven bound; this indicates a "
        "defect in the counting or bound arithmetic");
  }
  std::cout << "report: " << report.rows.size() << " rows\n";
}

void run_lift_check(PipelineState& state) {
  // Standalone diagnostic: rotate to generic position per policy, then
  // verify every lift-level invariant the later stages rely on.
  run_rotate(state);
  const Collection& c = working_collection(state);
  const auto count = static_cast<long>(c.spheres.size());

  long pairs = 0;
  long tangent_pairs = 0;
  long lift_mismatches = 0;
  long span_failures = 0;
  long det_failures = 0;
  std::ostringstream failures;
  for (long i = 0; i < count; ++i) {
    for (long j = i + 1; j < count; ++j) {
      ++pairs;
      const Sphere& s1 = c.spheres[static_cast<std::size_t>(i)];
      const Sphere& s2 = c.spheres[static_cast<std::size_t>(j)];
      const bool tangent =
          tangency_status(s1, s2, c.mode) != TangencyStatus::NotTangent;
      const auto lifted = lifted_intersection(s1, s2, c.mode);
      if (tangent != lifted.has_value()) {
        ++lift_mismatches;
        failures << "  lift/status mismatch for pair (" << s1.id << ","
                 << s2.id << ")\n";
      }
      if (!lifted) {
        continue;
      }
      ++tangent_pairs;
      if (!on_lift(s1, *lifted) || !on_lift(s2, *lifted)) {
        ++lift_mismatches;
        failures << "  lifted contact escapes a sphere lift for pair ("
                 << s1.id << "," << s2.id << ")\n";
      }
      const VerticalSpanCertificate cert = vertical_span_check(s1, s2, c.mode);
      if (!cert.contained) {
        ++span_failures;
        failures << "  vertical directions escape the tangent span for pair ("
                 << s1.id << "," << s2.id << ")\n";
      }
      if (!(cert.det_value == cert.det_expected)) {
        ++det_failures;
        failures << "  determinant identity fails for pair (" << s1.id << ","
                 << s2.id << ")\n";
      }
    }
  }

  long rank_samples = 0;
  long rank_failures = 0;
  for (const Sphere& s : c.spheres) {
    for (const RatVector& x : sphere_rational_points(s, 4)) {
      const LiftedPoint p = lift_point(s, x);
      ++rank_samples;
      if (jacobian_rank(s, p) != c.dimension) {
        ++rank_failures;
        failures << "  Jacobian rank drop on sphere " << s.id << " at "
                 << point_to_text(x) << "\n";
      }
      tangent_basis(s, p);  // self-checks against the Jacobian kernel
    }
  }

  std::ostringstream out;
  out << "lift check in generic position\n";
  out << "sphere pairs examined: " << pairs << "\n";
  out << "tangent pairs: " << tangent_pairs << "\n";
  out << "lift/status mismatches: " << lift_mismatches << "\n";
  out << "vertical span failures: " << span_failures << "\n";
  out << "determinant identity failures: " << det_failures << "\n";
  out << "Jacobian samples: " << rank_samples << " (rank failures "
      << rank_failures << ")\n";
  const std::string failure_text = failures.str();
  if (!failure_text.empty()) {
    out << "failures:\n" << failure_text;
  }
  state.artifacts["lift_check.txt"] = out.str();
  std::cout << "lift-check: " << tangent_pairs << " tangent pairs, "
            << rank_samples << " Jacobian samples\n";

  if (lift_mismatches + span_failures + det_failures + rank_failures > 0) {
    throw InternalError("lift check failed; see lift_check.txt for details");
  }
}

void flush_artifacts(PipelineState& state) {
  namespace fs = std::filesystem;
  const fs::path dir(state.config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw InputError("cannot create output directory " + dir.string() + ": " +
                     ec.message());
  }
  state.artifacts["manifest.json"] = manifest_json(
      state.artifacts, config_echo_json(state.config));
  for (const auto& [name, bytes] : state.artifacts) {
    write_text_file((dir / name).string(), bytes);
  }
  std::cout << "wrote " << state.artifacts.size() << " artifacts to "
            << dir.string() << "\n";
}

void run_stages(PipelineState& state) {
  for (const auto& stage : state.stages) {
    if (stage == "generate") {
      run_generate(state);
    } else if (stage == "rotate") {
      run_rotate(state);
    } else if (stage == "count") {
      run_count(state);
    } else if (stage == "classify") {
      run_classify(state);
    } else if (stage == "audit") {
      run_audit(state);
    } else if (stage == "bound") {
      run_bound(state);
    } else if (stage == "report") {
      run_report(state);
    } else if (stage == "lift-check") {
      run_lift_check(state);
    } else {
      throw InternalError("unknown stage " + stage);
    }
  }
  flush_artifacts(state);
}

void emit_error(const char* type, const std::string& message) {
  nlohmann::json record;
  record["error"] = {{"type", type}, {"message", message}};
  std::cerr << record.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic toolkit for sphere tangency counting"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir_override;
  int threads_override = 0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "path to the run config (JSON)")
        ->required();
    cmd->add_option("--output-dir", output_dir_override,
                    "override the configured output directory");
    cmd->add_option("--threads", threads_override,
                    "override the configured worker thread count");
  };

  // Each subcommand is the pipeline restricted to the stages it needs;
  // "pipeline" runs the subset configured in the config file (default all).
  const std::map<std::string, std::pair<std::string, std::vector<std::string>>>
      subcommands = {
          {"generate",
           {"generate or load a collection and write it in canonical form",
            {"generate"}}},
          {"count",
           {"count tangent pairs and export the tangency graph",
            {"generate", "count"}}},
          {"lift-check",
           {"verify lift invariants (bijection, Jacobian rank, vertical span)",
            {"generate", "lift-check"}}},
          {"classify",
           {"partition space and classify tangency incidences",
            {"generate", "rotate", "count", "classify"}}},
          {"audit",
           {"search for low-degree concentration of tangencies",
            {"generate", "count", "audit"}}},
          {"bound",
           {"evaluate the tangency count bound for the collection",
            {"generate", "count", "audit", "bound"}}},
          {"report",
           {"run the full pipeline and write the comparison report", {}}},
          {"pipeline", {"run the stages listed in the config", {}}},
      };
  std::string chosen;
  for (const auto& [name, info] : subcommands) {
    CLI::App* cmd = app.add_subcommand(name, info.first);
    add_common(cmd);
    cmd->callback([&chosen, name = name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    emit_error("input", e.what());
    return 1;
  }

  try {
    PipelineState state;
    state.config = load_config(config_path);
    if (!output_dir_override.empty()) {
      state.config.output_dir = output_dir_override;
    }
    if (threads_override > 0) {
      state.config.threads = threads_override;
    }
    const auto& info = subcommands.at(chosen);
    if (chosen == "report") {
      state.stages = all_stages();
    } else if (chosen == "pipeline") {
      state.stages = ordered_stages(state.config);
    } else {
      state.stages = info.second;
    }
    run_stages(state);
    return 0;
  } catch (const InputError& e) {
    emit_error("input", e.what());
    return 1;
  } catch (const InternalError& e) {
    emit_error("internal", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 2;
  }
}
