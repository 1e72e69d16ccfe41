#pragma once

#include "osculo/generators.hpp"
#include "osculo/rational.hpp"
#include "osculo/sphere.hpp"
#include "osculo/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace osculo {

// Run configuration, loaded from a single JSON file. Every object level
// rejects unknown keys so typos fail loudly instead of silently using a
// default.
struct RotationConfig {
  // "auto" searches for a generic rotation, "identity" keeps the input
  // frame, "explicit" builds the rotation from the given skew matrix.
  std::string policy = "auto";
  std::optional<RatMatrix> skew;
  long budget = 500;
};

struct PartitionConfig {
  // "heuristic" builds a product of affine cuts of total degree d_target;
  // "file" reads a polynomial in text form from path. d_target 0 means: use
  // the degree chosen by the bound arithmetic.
  std::string source = "heuristic";
  int d_target = 0;
  std::string path;
};

struct AuditConfig {
  long b = 1;
  int d = 1;
};

struct BoundConfig {
  Rational epsilon = Rational(1, 10);
  Rational c1 = Rational(1);
  Rational c2 = Rational(1);
};

struct RunConfig {
  // Exactly one of generator / input_path is set.
  std::optional<GeneratorSpec> generator;
  std::optional<std::string> input_path;
  std::optional<TangencyMode> mode_override;
  RotationConfig rotation;
  PartitionConfig partition;
  AuditConfig audit;
  BoundConfig bound;
  // Grid sizes for the optional scaling sweep appended to the report.
  std::vector<int> report_sweep;
  int samples_per_sphere = 6;
  std::string output_dir = "out";
  std::uint64_t seed = 1;
  int threads = 1;
  // Subset of generate, rotate, count, classify, audit, bound, report.
  // Empty means all stages, always executed in that order.
  std::vector<std::string> stages;
};

RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Canonical JSON echo of a parsed config, embedded in the run manifest.
std::string config_echo_json(const RunConfig& config);

// The pipeline stages in execution order.
const std::vector<std::string>& all_stages();

// Validates the stage subset and returns it in canonical order.
std::vector<std::string> ordered_stages(const RunConfig& config);

}  // namespace osculo
