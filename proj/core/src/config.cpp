#include "edgeslicer/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "edgeslicer/text.hpp"

namespace edgeslicer {

using nlohmann::json;

ConfigError::ConfigError(std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message),
      path_(std::move(path)) {}

namespace {

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ConfigError(path.empty() ? key : path + "." + key, "missing field");
  }
  return obj.at(key);
}

double require_number(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number()) {
    throw ConfigError(path.empty() ? key : path + "." + key, "expected a number");
  }
  return v.get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) {
    throw ConfigError(path.empty() ? key : path + "." + key, "expected a string");
  }
  return v.get<std::string>();
}

// Display units -> integer base units; rejects non-integral products.
std::int64_t to_base_units(double display, std::int64_t unit_scale, const std::string& path) {
  const double product = display * static_cast<double>(unit_scale);
  const double rounded = std::round(product);
  if (!std::isfinite(product) ||
      std::abs(product - rounded) > 1e-9 * std::max(1.0, std::abs(product))) {
    throw ConfigError(path, format_real(display) + " display units is not a whole number of base units (unit_scale " +
                                std::to_string(unit_scale) + ")");
  }
  return static_cast<std::int64_t>(rounded);
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("", "top-level JSON value must be an object");

  Instance inst;

  const json& resources = require(root, "resources", "");
  if (!resources.is_array() || resources.empty()) {
    throw ConfigError("resources", "expected a non-empty array");
  }
  std::set<std::string> labels;
  for (std::size_t r = 0; r < resources.size(); ++r) {
    const std::string path = "resources[" + std::to_string(r) + "]";
    ResourceKind kind;
    kind.id = static_cast<int>(r);
    kind.label = require_string(resources[r], "label", path);
    const double scale = require_number(resources[r], "unit_scale", path);
    if (scale < 1.0 || scale != std::floor(scale)) {
      throw ConfigError(path + ".unit_scale", "expected an integer >= 1");
    }
    kind.unit_scale = static_cast<std::int64_t>(scale);
    if (!labels.insert(kind.label).second) {
      throw ConfigError(path + ".label", "duplicate resource label '" + kind.label + "'");
    }
    inst.kinds.push_back(std::move(kind));
  }
  const auto d = inst.kinds.size();

  const json& capacities = require(root, "capacities", "");
  if (!capacities.is_array() || capacities.size() != d) {
    throw ConfigError("capacities", "expected an array with one entry per resource");
  }
  for (std::size_t r = 0; r < d; ++r) {
    const std::string path = "capacities[" + std::to_string(r) + "]";
    if (!capacities[r].is_number()) throw ConfigError(path, "expected a number");
    const std::int64_t base =
        to_base_units(capacities[r].get<double>(), inst.kinds[r].unit_scale, path);
    if (base < 1) throw ConfigError(path, "capacity must be at least 1 base unit");
    inst.pool.capacities.push_back(base);
  }

  const json& sps = require(root, "sps", "");
  if (!sps.is_array() || sps.empty()) {
    throw ConfigError("sps", "expected a non-empty array");
  }
  for (std::size_t p = 0; p < sps.size(); ++p) {
    const std::string path = "sps[" + std::to_string(p) + "]";
    SpProfile sp;
    sp.name = require_string(sps[p], "name", path);
    sp.lambda = require_number(sps[p], "lambda", path);
    sp.mu = require_number(sps[p], "mu", path);
    if (!(sp.lambda > 0.0) || !std::isfinite(sp.lambda)) {
      throw ConfigError(path + ".lambda", "expected a positive finite number");
    }
    if (!(sp.mu > 0.0) || !std::isfinite(sp.mu)) {
      throw ConfigError(path + ".mu", "expected a positive finite number");
    }
    const json& demand = require(sps[p], "demand", path);
    if (!demand.is_array() || demand.size() != d) {
      throw ConfigError(path + ".demand", "expected an array with one entry per resource");
    }
    for (std::size_t r = 0; r < d; ++r) {
      const std::string dpath = path + ".demand[" + std::to_string(r) + "]";
      if (!demand[r].is_number()) throw ConfigError(dpath, "expected a number");
      const std::int64_t base =
          to_base_units(demand[r].get<double>(), inst.kinds[r].unit_scale, dpath);
      if (base < 1) throw ConfigError(dpath, "demand must be at least 1 base unit");
      if (base > inst.pool.capacities[r]) {
        throw ConfigError(dpath, "per-session demand exceeds the pool capacity");
      }
      sp.demand.push_back(base);
    }
    inst.sps.push_back(std::move(sp));
  }

  inst.epsilon = require_number(root, "epsilon", "");
  const double eps_cap = 1.0 / (1.0 + 2.0 * static_cast<double>(d));
  if (!(inst.epsilon > 0.0) || !(inst.epsilon < eps_cap)) {
    throw ConfigError("epsilon", "must lie in (0, 1/(1+2d)) = (0, " + format_real(eps_cap) + ")");
  }
  inst.u_edge = require_number(root, "u_edge", "");
  inst.u_cloud = require_number(root, "u_cloud", "");
  if (!(inst.u_edge > inst.u_cloud) || !(inst.u_cloud > 0.0)) {
    throw ConfigError("u_edge", "utilities must satisfy u_edge > u_cloud > 0");
  }

  inst.validate();
  return inst;
}

Instance load_instance(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("", "cannot open config file " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string instance_to_json(const Instance& inst) {
  json root;
  root["resources"] = json::array();
  for (const ResourceKind& kind : inst.kinds) {
    root["resources"].push_back({{"label", kind.label}, {"unit_scale", kind.unit_scale}});
  }
  root["capacities"] = json::array();
  for (int r = 0; r < inst.dims(); ++r) {
    root["capacities"].push_back(static_cast<double>(inst.pool.capacities[r]) /
                                 static_cast<double>(inst.kinds[r].unit_scale));
  }
  root["sps"] = json::array();
  for (const SpProfile& sp : inst.sps) {
    json entry = {{"name", sp.name}, {"lambda", sp.lambda}, {"mu", sp.mu}};
    entry["demand"] = json::array();
    for (int r = 0; r < inst.dims(); ++r) {
      entry["demand"].push_back(static_cast<double>(sp.demand[r]) /
                                static_cast<double>(inst.kinds[r].unit_scale));
    }
    root["sps"].push_back(std::move(entry));
  }
  root["epsilon"] = inst.epsilon;
  root["u_edge"] = inst.u_edge;
  root["u_cloud"] = inst.u_cloud;
  return root.dump(2);
}

}  // namespace edgeslicer
