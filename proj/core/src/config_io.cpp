// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dtdd/errors.hpp"
#include "dtdd/harness.hpp"

namespace dtdd {
namespace {

using nlohmann::json;

void reject_unknown(const json& object, std::string_view where,
                    std::initializer_list<std::string_view> known) {
  if (!object.is_object()) {
    throw ConfigurationError(std::string(where) + " must be an object");
  }
  for (const auto& [key, value] : object.items()) {
    bool found = false;
    for (const auto name : known) {
      found = found || key == name;
    }
    if (!found) {
      throw ConfigurationError("unknown config key '" + std::string(where) + key + "'");
    }
  }
}

template <typename T>
void read(const json& object, const char* key, T& target) {
  if (!object.contains(key)) {
    return;
  }
  try {
    target = object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("config key '") + key + "': " + e.what());
  }
}

// Counts must be non-negative integers; nlohmann happily converts -1 or 2.5
// to size_t, so check the JSON type first.
void read_count(const json& object, const char* key, std::size_t& target) {
  if (!object.contains(key)) {
    return;
  }
  const json& value = object.at(key);
  if (!value.is_number_unsigned()) {
    throw ConfigurationError(std::string("config key '") + key +
                             "' must be a non-negative integer");
  }
  target = value.get<std::size_t>();
}

double rounded(double value) { return std::stod(format_number(value)); }

}  // namespace

SimulationConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigurationError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(root, "", {"version", "topology", "radio", "traffic", "schemes", "delta",
                            "utilizations", "snapshots_per_point", "master_seed",
                            "worker_count"});

  SimulationConfig config;
  if (root.contains("topology")) {
    const json& topology = root.at("topology");
    reject_unknown(topology, "topology.", {"n_bs", "area_side"});
    read_count(topology, "n_bs", config.topology.n_bs);
    read(topology, "area_side", config.topology.area_side);
  }
  if (root.contains("radio")) {
    const json& radio = root.at("radio");
    reject_unknown(radio, "radio.", {"carrier_freq", "bandwidth", "noise_figure",
                                     "p_b_max", "p_u_max"});
    read(radio, "carrier_freq", config.radio.carrier_freq);
    read(radio, "bandwidth", config.radio.bandwidth);
    read(radio, "noise_figure", config.radio.noise_figure);
    read(radio, "p_b_max", config.radio.p_b_max);
    read(radio, "p_u_max", config.radio.p_u_max);
  }
  if (root.contains("traffic")) {
    const json& traffic = root.at("traffic");
    reject_unknown(traffic, "traffic.", {"dl_probability", "require_mixed_traffic"});
    read(traffic, "dl_probability", config.traffic.dl_probability);
    read(traffic, "require_mixed_traffic", config.traffic.require_mixed_traffic);
  }
  if (root.contains("schemes")) {
    std::vector<std::string> names;
    read(root, "schemes", names);
    config.schemes.clear();
    for (const auto& name : names) {
      const auto scheme = parse_scheme(name);
      if (!scheme) {
        throw ConfigurationError("unknown scheme '" + name + "'");
      }
      config.schemes.push_back(*scheme);
    }
  }
  read_count(root, "delta", config.delta);
  read(root, "utilizations", config.utilizations);
  read_count(root, "snapshots_per_point", config.snapshots_per_point);
  if (root.contains("master_seed")) {
    if (!root.at("master_seed").is_number_unsigned()) {
      throw ConfigurationError("master_seed must be a non-negative integer");
    }
    config.master_seed = root.at("master_seed").get<std::uint64_t>();
  }
  if (root.contains("worker_count")) {
    if (root.at("worker_count") == "auto") {
      config.worker_count = 0;
    } else {
      read_count(root, "worker_count", config.worker_count);
    }
  }
  config.validate();
  return config;
}

SimulationConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigurationError("cannot open config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string config_json(const SimulationConfig& config) {
  json root;
  root["version"] = std::string(kVersion);
  root["topology"] = {{"n_bs", config.topology.n_bs},
                      {"area_side", rounded(config.topology.area_side)}};
  root["radio"] = {{"carrier_freq", rounded(config.radio.carrier_freq)},
                   {"bandwidth", rounded(config.radio.bandwidth)},
                   {"noise_figure", rounded(config.radio.noise_figure)},
                   {"p_b_max", rounded(config.radio.p_b_max)},
                   {"p_u_max", rounded(config.radio.p_u_max)}};
  root["traffic"] = {{"dl_probability", rounded(config.traffic.dl_probability)},
                     {"require_mixed_traffic", config.traffic.require_mixed_traffic}};
  json schemes = json::array();
  for (const Scheme scheme : config.schemes) {
    schemes.push_back(std::string(to_string(scheme)));
  }
  root["schemes"] = schemes;
  root["delta"] = config.delta;
  json utilizations = json::array();
  for (const double u : config.utilizations) {
    utilizations.push_back(rounded(u));
  }
  root["utilizations"] = utilizations;
  root["snapshots_per_point"] = config.snapshots_per_point;
  root["master_seed"] = config.master_seed;
  root["worker_count"] = config.worker_count;
  return root.dump(2) + "\n";
}

}  // namespace dtdd
