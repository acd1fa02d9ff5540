// Copyright 2026 The survaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "survaudit/harness/report.hpp"

#include <cstdio>
#include <fstream>

namespace survaudit::harness {

MetricReport MetricReport::from_string(const std::string& text) {
  MetricReport report;
  report.data = nlohmann::ordered_json::parse(text);
  report.has_failures = report.data.contains("failures") &&
                        !report.data["failures"].empty();
  return report;
}

void MetricReport::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report file '" + path + "'");
  out << to_string();
  if (!out) throw Error("failed writing '" + path + "'");
}

namespace {

std::string cell(const nlohmann::ordered_json& entry) {
  if (!entry.is_object() || !entry.contains("c_index")) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f (%.3f)",
                entry["c_index"].get<double>(), entry["ibs"].get<double>());
  return buf;
}

}  // namespace

std::string utility_table_csv(const MetricReport& report) {
  std::string out = "dataset,paradigm,cox,rsf\n";
  const auto& data = report.data;
  if (data.contains("real_baseline") &&
      data["real_baseline"].contains("TRTR")) {
    const auto& trtr = data["real_baseline"]["TRTR"];
    out += "real,TRTR," + cell(trtr.value("cox", nlohmann::ordered_json())) +
           "," + cell(trtr.value("rsf", nlohmann::ordered_json())) + "\n";
  }
  if (data.contains("synthetic")) {
    for (const auto& synth : data["synthetic"]) {
      std::string name = synth.value("name", "?");
      if (!synth.contains("utility")) continue;
      for (const auto& [paradigm, entry] : synth["utility"].items()) {
        if (!entry.is_object()) continue;
        out += name + "," + paradigm + "," +
               cell(entry.value("cox", nlohmann::ordered_json())) + "," +
               cell(entry.value("rsf", nlohmann::ordered_json())) + "\n";
      }
    }
  }
  return out;
}

}  // namespace survaudit::harness
