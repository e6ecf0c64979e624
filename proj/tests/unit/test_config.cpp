// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dtdd/errors.hpp"
#include "dtdd/harness.hpp"

using namespace dtdd;

TEST_CASE("a full config file maps onto SimulationConfig") {
  const SimulationConfig config = parse_config(R"({
    "topology": {"n_bs": 9, "area_side": 30.0},
    "radio": {"carrier_freq": 3.5, "bandwidth": 20e6, "noise_figure": 7,
              "p_b_max": 0.2, "p_u_max": 0.05},
    "traffic": {"dl_probability": 0.3, "require_mixed_traffic": false},
    "schemes": ["jt", "jt-ds"],
    "delta": 2,
    "utilizations": [0.5, 1.0],
    "snapshots_per_point": 123,
    "master_seed": 18446744073709551615,
    "worker_count": 3
  })");
  CHECK(config.topology.n_bs == 9);
  CHECK(config.topology.area_side == 30.0);
  CHECK(config.radio.carrier_freq == 3.5);
  CHECK(config.radio.bandwidth == 20e6);
  CHECK(config.radio.noise_figure == 7.0);
  CHECK(config.radio.p_b_max == 0.2);
  CHECK(config.radio.p_u_max == 0.05);
  CHECK(config.traffic.dl_probability == 0.3);
  CHECK_FALSE(config.traffic.require_mixed_traffic);
  CHECK(config.schemes == std::vector<Scheme>{Scheme::jt, Scheme::jt_ds});
  CHECK(config.delta == 2);
  CHECK(config.utilizations == std::vector<double>{0.5, 1.0});
  CHECK(config.snapshots_per_point == 123);
  CHECK(config.master_seed == 18446744073709551615ULL);
  CHECK(config.worker_count == 3);
}

TEST_CASE("missing keys keep their defaults") {
  const SimulationConfig config = parse_config("{}");
  CHECK(config.topology.n_bs == 16);
  CHECK(config.topology.area_side == 40.0);
  CHECK(config.snapshots_per_point == 10000);
  CHECK(config.traffic.require_mixed_traffic);
  CHECK(config.utilizations == default_utilizations());
  CHECK(config.utilizations.front() == 2.0 / 16.0);
  CHECK(config.utilizations.size() == 8);
  CHECK(config.schemes.size() == 3);
  CHECK(parse_config(R"({"worker_count": "auto"})").worker_count == 0);
}

TEST_CASE("unknown keys and bad values are hard errors") {
  CHECK_THROWS_AS(parse_config(R"({"snapshot_per_point": 10})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"radio": {"bandwith": 1e6}})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"traffic": {"utilization": 0.5}})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"topology": 16})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"delta": -1})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"snapshots_per_point": 2.5})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"radio": {"p_b_max": "high"}})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"schemes": ["zf"]})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"utilizations": [0.0]})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config(R"({"master_seed": -4})"), ConfigurationError);
  CHECK_THROWS_AS(parse_config("{not json"), ConfigurationError);
  CHECK_THROWS_AS(load_config("/nonexistent/dtdd.json"), ConfigurationError);
}

TEST_CASE("the echoed config parses back to the same configuration") {
  SimulationConfig original;
  original.delta = 3;
  original.master_seed = 99;
  original.utilizations = {0.25, 0.75};
  original.schemes = {Scheme::baseline, Scheme::jt_ds};
  original.traffic.dl_probability = 0.4;
  const SimulationConfig echoed = parse_config(config_json(original));
  CHECK(echoed.delta == 3);
  CHECK(echoed.master_seed == 99);
  CHECK(echoed.utilizations == original.utilizations);
  CHECK(echoed.schemes == original.schemes);
  CHECK(echoed.traffic.dl_probability == 0.4);
  CHECK(config_json(echoed) == config_json(original));

  const auto path = std::filesystem::temp_directory_path() / "dtdd_config_test.json";
  std::ofstream(path) << config_json(original);
  CHECK(config_json(load_config(path)) == config_json(original));
  std::filesystem::remove(path);
}
