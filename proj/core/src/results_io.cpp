// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dtdd/harness.hpp"

namespace dtdd {
namespace {

using nlohmann::json;

json number(double value) { return std::stod(format_number(value)); }

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::filesystem::filesystem_error("cannot open for writing", path,
                                            std::make_error_code(std::errc::io_error));
  }
  out << contents;
  out.flush();
  if (!out) {
    throw std::filesystem::filesystem_error("write failed", path,
                                            std::make_error_code(std::errc::io_error));
  }
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string records_csv(const RunResult& result) {
  std::ostringstream out;
  out << "scheme,utilization,delta,snapshot,k_dl,k_ul,v_ul,"
         "dl_sum_rate_bps,ul_sum_rate_bps,sum_rate_bps,failed\n";
  for (const auto& r : result.records) {
    out << to_string(r.scheme) << ',' << format_number(r.utilization) << ','
        << r.delta << ',' << r.snapshot << ',' << r.k_dl << ',' << r.k_ul << ','
        << r.v_ul << ',' << format_number(r.dl_sum_rate) << ','
        << format_number(r.ul_sum_rate) << ',' << format_number(r.sum_rate) << ','
        << (r.failed ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string summary_json(const RunResult& result) {
  json points = json::array();
  for (const auto& point : result.summaries) {
    json entry = {
        {"scheme", std::string(to_string(point.scheme))},
        {"utilization", number(point.utilization)},
        {"delta", result.config.delta},
        {"k", point.k},
        {"snapshots", point.snapshots},
        {"failed", point.failed},
        {"failure_rate", number(point.snapshots ? static_cast<double>(point.failed) /
                                                      static_cast<double>(point.snapshots)
                                                : 0.0)},
    };
    if (point.summary) {
      entry["mean_sum_rate_bps"] = number(point.summary->mean_sum_rate);
      entry["mean_dl_sum_rate_bps"] = number(point.summary->mean_dl_sum_rate);
      entry["mean_ul_sum_rate_bps"] = number(point.summary->mean_ul_sum_rate);
      entry["p5_sum_rate_per_ue_bps"] = number(point.summary->p5_sum_rate_per_ue);
    } else {
      entry["mean_sum_rate_bps"] = nullptr;
      entry["mean_dl_sum_rate_bps"] = nullptr;
      entry["mean_ul_sum_rate_bps"] = nullptr;
      entry["p5_sum_rate_per_ue_bps"] = nullptr;
    }
    points.push_back(entry);
  }
  const json root = {{"version", result.version},
                     {"points", points},
                     {"warnings", result.warnings}};
  return root.dump(2) + "\n";
}

void write_results(const RunResult& result, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "records.csv", records_csv(result));
  write_file(out_dir / "summary.json", summary_json(result));
  write_file(out_dir / "config.json", config_json(result.config));
}

}  // namespace dtdd
