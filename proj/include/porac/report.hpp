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

#ifndef PORAC_REPORT_HPP
#define PORAC_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "porac/rational.hpp"

namespace porac {

/// Machine-readable result of one CLI run. Serialisation is schema-stable:
/// identical inputs (including seeds) produce byte-identical JSON apart from
/// the timings block. Rationals print as "p/q"; floats are rounded to 12
/// significant digits before serialisation.
struct GameReport {
  int n = 0;
  int g = 0;
  Rational pnc{0};

  struct ClassicalSearch {
    std::string mode;
    Rational value{0};
    std::string strategy;
  };
  std::optional<ClassicalSearch> classical_search;

  struct Quantum {
    std::string method;
    double value = 0.0;
    double margin_over_pnc = 0.0;
  };
  std::optional<Quantum> quantum;

  std::optional<double> delta_trace;
  std::optional<double> ontic_trace_bound;

  struct Bell {
    double expectation = 0.0;
    double success = 0.0;
  };
  std::optional<Bell> bell;

  struct PoCheck {
    std::string context;
    double max_violation = 0.0;
  };
  std::vector<PoCheck> po_checks;

  std::vector<std::pair<std::string, std::string>> provenance;  // value name -> tag
  std::vector<std::pair<std::string, double>> timings;          // step -> seconds

  nlohmann::ordered_json to_json() const;
  std::string to_json_string() const;
  double worst_po_violation() const;
};

/// Nearest double with at most 12 significant decimal digits.
double round12(double v);

/// One CSV line for the `table` subcommand (no trailing newline).
std::string csv_row(int n, int g, const Rational& pnc, std::optional<double> quantum_value,
                    const std::string& method, const std::string& provenance);

inline const char* kCsvHeader = "n,g,pnc_bound,quantum_value,margin,method,provenance";

}  // namespace porac

#endif  // PORAC_REPORT_HPP
