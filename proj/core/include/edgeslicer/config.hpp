#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "edgeslicer/model.hpp"

namespace edgeslicer {

/// Config rejection carrying the JSON path of the offending field,
/// e.g. "sps[1].demand[0]".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Loads an instance from JSON:
///   {"resources":[{"label","unit_scale"}], "capacities":[...],
///    "sps":[{"name","lambda","mu","demand":[...]}],
///    "epsilon", "u_edge", "u_cloud"}
/// Capacities and demands are given in display units; the loader multiplies
/// by unit_scale and rejects any product that is not a whole number of base
/// units.
Instance load_instance(const std::filesystem::path& file);
Instance parse_instance(const std::string& json_text);

/// Emits the config form (display units); parse_instance round-trips it.
std::string instance_to_json(const Instance& inst);

}  // namespace edgeslicer
