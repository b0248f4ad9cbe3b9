// Copyright 2026 porac authors
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

#include "porac/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace porac {

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json GameReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["g"] = g;
  j["pnc_bound"] = to_string(pnc);
  if (classical_search) {
    j["classical_search"] = {{"mode", classical_search->mode},
                             {"value", to_string(classical_search->value)},
                             {"strategy", classical_search->strategy}};
  }
  if (quantum) {
    j["quantum"] = {{"method", quantum->method},
                    {"value", round12(quantum->value)},
                    {"margin_over_pnc", round12(quantum->margin_over_pnc)}};
  }
  if (delta_trace) j["delta_trace"] = round12(*delta_trace);
  if (ontic_trace_bound) j["ontic_trace_bound"] = round12(*ontic_trace_bound);
  if (bell) {
    j["bell"] = {{"expectation", round12(bell->expectation)},
                 {"success", round12(bell->success)}};
  }
  j["po_checks"] = nlohmann::ordered_json::array();
  for (const auto& c : po_checks)
    j["po_checks"].push_back(
        {{"context", c.context}, {"max_violation", round12(c.max_violation)}});
  j["provenance"] = nlohmann::ordered_json::object();
  for (const auto& [key, tag] : provenance) j["provenance"][key] = tag;
  j["timings"] = nlohmann::ordered_json::object();
  for (const auto& [step, seconds] : timings) j["timings"][step] = round12(seconds);
  return j;
}

std::string GameReport::to_json_string() const { return to_json().dump(2) + "\n"; }

double GameReport::worst_po_violation() const {
  double worst = 0.0;
  for (const auto& c : po_checks) worst = std::max(worst, c.max_violation);
  return worst;
}

std::string csv_row(int n, int g, const Rational& pnc, std::optional<double> quantum_value,
                    const std::string& method, const std::string& provenance) {
  char buf[256];
  if (quantum_value) {
    const double margin = *quantum_value - to_double(pnc);
    std::snprintf(buf, sizeof buf, "%d,%d,%s,%.12g,%.12g,%s,%s", n, g, to_string(pnc).c_str(),
                  round12(*quantum_value), round12(margin), method.c_str(), provenance.c_str());
  } else {
    std::snprintf(buf, sizeof buf, "%d,%d,%s,,,,%s", n, g, to_string(pnc).c_str(),
                  provenance.c_str());
  }
  return buf;
}

}  // namespace porac
