#include "osculo/config.hpp"

#include "osculo/errors.hpp"
#include "osculo/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace osculo {

namespace {

using nlohmann::json;

void require_known_keys(const json& object, const std::string& where,
                        const std::set<std::string>& allowed) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      throw InputError("config: unknown key \"" + it.key() + "\" in " +
                       where);
    }
  }
}

const json& require_object(const json& value, const std::string& where) {
  if (!value.is_object()) {
    throw InputError("config: " + where + " must be a JSON object");
  }
  return value;
}

long get_integer(const json& object, const std::string& where,
                 const std::string& key, long fallback) {
  if (!object.contains(key)) {
    return fallback;
  }
  if (!object[key].is_number_integer()) {
    throw InputError("config: " + where + "." + key + " must be an integer");
  }
  return object[key].get<long>();
}

std::string get_string(const json& object, const std::string& where,
                       const std::string& key, const std::string& fallback) {
  if (!object.contains(key)) {
    return fallback;
  }
  if (!object[key].is_string()) {
    throw InputError("config: " + where + "." + key + " must be a string");
  }
  return object[key].get<std::string>();
}

Rational get_rational(const json& object, const std::string& where,
                      const std::string& key, const Rational& fallback) {
  if (!object.contains(key)) {
    return fallback;
  }
  const json& value = object[key];
  try {
    if (value.is_number_integer()) {
      return Rational(value.get<long>());
    }
    if (value.is_string()) {
      return Rational::parse(value.get<std::string>());
    }
  } catch (const InputError& e) {
    throw InputError("config: " + where + "." + key + ": " + e.what());
  }
  throw InputError("config: " + where + "." + key +
                   " must be an integer or a rational string");
}

RatMatrix parse_skew(const json& rows) {
  if (!rows.is_array() || rows.empty()) {
    throw InputError("config: rotation.skew must be a nonempty array of rows");
  }
  const long n = static_cast<long>(rows.size());
  RatMatrix skew(n, n);
  for (long i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != n) {
      throw InputError("config: rotation.skew row " + std::to_string(i) +
                       " must have " + std::to_string(n) + " entries");
    }
    for (long j = 0; j < n; ++j) {
      skew(i, j) = get_rational(json{{"v", row[static_cast<std::size_t>(j)]}},
                                "rotation.skew", "v", Rational(0));
    }
  }
  return skew;
}

GeneratorSpec parse_generator(const json& object, std::uint64_t seed) {
  require_known_keys(object, "generator",
                     {"kind", "count", "n", "m", "coord_bound"});
  GeneratorSpec spec;
  spec.kind = get_string(object, "generator", "kind", "");
  if (spec.kind.empty()) {
    throw InputError("config: generator.kind is required");
  }
  spec.count = static_cast<int>(get_integer(object, "generator", "count", 0));
  spec.n = static_cast<int>(get_integer(object, "generator", "n", 3));
  spec.m = static_cast<int>(get_integer(object, "generator", "m", 0));
  spec.coord_bound =
      static_cast<int>(get_integer(object, "generator", "coord_bound", 100));
  spec.seed = seed;
  return spec;
}

}  // namespace

const std::vector<std::string>& all_stages() {
  static const std::vector<std::string> stages = {
      "generate", "rotate", "count", "classify", "audit", "bound", "report"};
  return stages;
}

std::vector<std::string> ordered_stages(const RunConfig& config) {
  if (config.stages.empty()) {
    return all_stages();
  }
  std::vector<std::string> ordered;
  for (const auto& stage : all_stages()) {
    const long uses = std::count(config.stages.begin(), config.stages.end(),
                                 stage);
    if (uses > 1) {
      throw InputError("config: stage \"" + stage + "\" listed twice");
    }
    if (uses == 1) {
      ordered.push_back(stage);
    }
  }
  for (const auto& stage : config.stages) {
    if (std::find(all_stages().begin(), all_stages().end(), stage) ==
        all_stages().end()) {
      throw InputError("config: unknown stage \"" + stage + "\"");
    }
  }
  return ordered;
}

RunConfig parse_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config: invalid JSON: ") + e.what());
  }
  require_object(root, "top level");
  require_known_keys(root, "top level",
                     {"generator", "input", "mode", "rotation", "partition",
                      "audit", "bound", "report_sweep", "samples_per_sphere",
                      "output_dir", "seed", "threads", "stages"});

  RunConfig config;
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned() &&
        !root["seed"].is_number_integer()) {
      throw InputError("config: seed must be a nonnegative integer");
    }
    if (root["seed"].is_number_integer() && root["seed"].get<long long>() < 0) {
      throw InputError("config: seed must be a nonnegative integer");
    }
    config.seed = root["seed"].get<std::uint64_t>();
  }

  if (root.contains("generator") && root.contains("input")) {
    throw InputError("config: give either generator or input, not both");
  }
  if (root.contains("generator")) {
    config.generator = parse_generator(
        require_object(root["generator"], "generator"), config.seed);
  } else if (root.contains("input")) {
    config.input_path = get_string(root, "top level", "input", "");
    if (config.input_path->empty()) {
      throw InputError("config: input must be a nonempty path");
    }
  } else {
    throw InputError("config: one of generator or input is required");
  }

  if (root.contains("mode")) {
    config.mode_override =
        parse_mode(get_string(root, "top level", "mode", ""));
  }

  if (root.contains("rotation")) {
    const json& rotation = require_object(root["rotation"], "rotation");
    require_known_keys(rotation, "rotation", {"policy", "skew", "budget"});
    config.rotation.policy = get_string(rotation, "rotation", "policy",
                                        config.rotation.policy);
    if (config.rotation.policy != "auto" &&
        config.rotation.policy != "identity" &&
        config.rotation.policy != "explicit") {
      throw InputError(
          "config: rotation.policy must be auto, identity, or explicit");
    }
    config.rotation.budget =
        get_integer(rotation, "rotation", "budget", config.rotation.budget);
    if (config.rotation.budget < 1) {
      throw InputError("config: rotation.budget must be positive");
    }
    if (rotation.contains("skew")) {
      config.rotation.skew = parse_skew(rotation["skew"]);
    }
    if (config.rotation.policy == "explicit" && !config.rotation.skew) {
      throw InputError("config: rotation.policy explicit needs rotation.skew");
    }
  }

  if (root.contains("partition")) {
    const json& partition = require_object(root["partition"], "partition");
    require_known_keys(partition, "partition", {"source", "d_target", "path"});
    config.partition.source = get_string(partition, "partition", "source",
                                         config.partition.source);
    if (config.partition.source != "heuristic" &&
        config.partition.source != "file") {
      throw InputError("config: partition.source must be heuristic or file");
    }
    config.partition.d_target = static_cast<int>(get_integer(
        partition, "partition", "d_target", config.partition.d_target));
    if (config.partition.d_target < 0) {
      throw InputError("config: partition.d_target must be nonnegative");
    }
    config.partition.path = get_string(partition, "partition", "path", "");
    if (config.partition.source == "file" && config.partition.path.empty()) {
      throw InputError("config: partition.source file needs partition.path");
    }
  }

  if (root.contains("audit")) {
    const json& audit = require_object(root["audit"], "audit");
    require_known_keys(audit, "audit", {"b", "d"});
    config.audit.b = get_integer(audit, "audit", "b", config.audit.b);
    config.audit.d =
        static_cast<int>(get_integer(audit, "audit", "d", config.audit.d));
  }

  if (root.contains("bound")) {
    const json& bound = require_object(root["bound"], "bound");
    require_known_keys(bound, "bound", {"epsilon", "c1", "c2"});
    config.bound.epsilon =
        get_rational(bound, "bound", "epsilon", config.bound.epsilon);
    config.bound.c1 = get_rational(bound, "bound", "c1", config.bound.c1);
    config.bound.c2 = get_rational(bound, "bound", "c2", config.bound.c2);
  }

  if (root.contains("report_sweep")) {
    if (!root["report_sweep"].is_array()) {
      throw InputError("config: report_sweep must be an array of grid sizes");
    }
    for (const json& value : root["report_sweep"]) {
      if (!value.is_number_integer() || value.get<long>() < 2) {
        throw InputError("config: report_sweep entries must be integers >= 2");
      }
      config.report_sweep.push_back(value.get<int>());
    }
  }

  config.samples_per_sphere = static_cast<int>(
      get_integer(root, "top level", "samples_per_sphere",
                  config.samples_per_sphere));
  if (config.samples_per_sphere < 1) {
    throw InputError("config: samples_per_sphere must be positive");
  }
  config.output_dir =
      get_string(root, "top level", "output_dir", config.output_dir);
  config.threads = static_cast<int>(
      get_integer(root, "top level", "threads", config.threads));
  if (config.threads < 1) {
    throw InputError("config: threads must be positive");
  }

  if (root.contains("stages")) {
    if (!root["stages"].is_array()) {
      throw InputError("config: stages must be an array of stage names");
    }
    for (const json& value : root["stages"]) {
      if (!value.is_string()) {
        throw InputError("config: stages entries must be strings");
      }
      config.stages.push_back(value.get<std::string>());
    }
    config.stages = ordered_stages(config);
  }

  return config;
}

RunConfig load_config(const std::string& path) {
  return parse_config_text(read_text_file(path));
}

std::string config_echo_json(const RunConfig& config) {
  json root;
  if (config.generator) {
    json generator;
    generator["kind"] = config.generator->kind;
    generator["count"] = config.generator->count;
    generator["n"] = config.generator->n;
    generator["m"] = config.generator->m;
    generator["coord_bound"] = config.generator->coord_bound;
    root["generator"] = std::move(generator);
  }
  if (config.input_path) {
    root["input"] = *config.input_path;
  }
  if (config.mode_override) {
    root["mode"] = mode_name(*config.mode_override);
  }
  json rotation;
  rotation["policy"] = config.rotation.policy;
  rotation["budget"] = config.rotation.budget;
  if (config.rotation.skew) {
    json rows = json::array();
    for (long i = 0; i < config.rotation.skew->rows(); ++i) {
      json row = json::array();
      for (long j = 0; j < config.rotation.skew->cols(); ++j) {
        row.push_back((*config.rotation.skew)(i, j).str());
      }
      rows.push_back(std::move(row));
    }
    rotation["skew"] = std::move(rows);
  }
  root["rotation"] = std::move(rotation);
  json partition;
  partition["source"] = config.partition.source;
  partition["d_target"] = config.partition.d_target;
  if (!config.partition.path.empty()) {
    partition["path"] = config.partition.path;
  }
  root["partition"] = std::move(partition);
  root["audit"] = {{"b", config.audit.b}, {"d", config.audit.d}};
  root["bound"] = {{"epsilon", config.bound.epsilon.str()},
                   {"c1", config.bound.c1.str()},
                   {"c2", config.bound.c2.str()}};
  if (!config.report_sweep.empty()) {
    root["report_sweep"] = config.report_sweep;
  }
  // The output location and worker thread count never influence artifact
  // content, so the echo omits them and reruns hash identically.
  root["samples_per_sphere"] = config.samples_per_sphere;
  root["seed"] = config.seed;
  root["stages"] = ordered_stages(config);
  return root.dump();
}

}  // namespace osculo
