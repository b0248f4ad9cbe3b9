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

#include "porac/ontic.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace porac {

namespace {

void check_labels(const CorrelationSpec& spec) {
  std::set<std::string> declared(spec.alice_labels.begin(), spec.alice_labels.end());
  for (const auto& term : spec.terms) {
    if (term.bob < 1 || term.bob > spec.bob_count)
      throw std::invalid_argument("ontic_max: Bob index out of range");
    for (const auto& [label, coeff] : term.coeffs) {
      (void)coeff;
      if (!declared.count(label))
        throw std::invalid_argument("ontic_max: undeclared Alice label '" + label + "'");
    }
  }
  for (const auto& c : spec.constraints) {
    if (!declared.count(c.result))
      throw std::invalid_argument("ontic_max: undeclared constraint result '" + c.result + "'");
    for (const auto& f : c.factors)
      if (!declared.count(f))
        throw std::invalid_argument("ontic_max: undeclared constraint factor '" + f + "'");
    if (c.sign != 1 && c.sign != -1)
      throw std::invalid_argument("ontic_max: constraint sign must be +/-1");
  }
}

}  // namespace

OnticResult ontic_max(const CorrelationSpec& spec) {
  check_labels(spec);

  // Labels appearing as a constraint result are derived; the rest are free.
  std::set<std::string> derived;
  for (const auto& c : spec.constraints) derived.insert(c.result);
  std::vector<std::string> free_labels;
  for (const auto& l : spec.alice_labels)
    if (!derived.count(l)) free_labels.push_back(l);
  if (free_labels.size() > 20)
    throw std::invalid_argument("ontic_max: too many free labels to enumerate");

  OnticResult best;
  bool any_feasible = false;
  long long best_value = 0;

  const std::uint64_t combos = std::uint64_t{1} << free_labels.size();
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    std::map<std::string, int> assign;
    for (std::size_t i = 0; i < free_labels.size(); ++i)
      assign[free_labels[i]] = (bits >> i) & 1 ? -1 : 1;

    // Resolve derived labels to a fixpoint, then verify every constraint.
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& c : spec.constraints) {
        if (assign.count(c.result)) continue;
        int value = c.sign;
        bool ready = true;
        for (const auto& f : c.factors) {
          auto it = assign.find(f);
          if (it == assign.end()) {
            ready = false;
            break;
          }
          value *= it->second;
        }
        if (ready) {
          assign[c.result] = value;
          progress = true;
        }
      }
    }
    if (assign.size() != spec.alice_labels.size()) continue;  // cyclic, unresolvable
    bool consistent = true;
    for (const auto& c : spec.constraints) {
      int value = c.sign;
      for (const auto& f : c.factors) value *= assign.at(f);
      if (value != assign.at(c.result)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    any_feasible = true;

    std::vector<long long> bob_sum(spec.bob_count + 1, 0);
    for (const auto& term : spec.terms)
      for (const auto& [label, coeff] : term.coeffs)
        bob_sum[term.bob] += static_cast<long long>(coeff) * assign.at(label);

    long long value = 0;
    for (int b = 1; b <= spec.bob_count; ++b) value += std::llabs(bob_sum[b]);

    if (!best.witness.empty() && value == best_value) continue;  // first maximiser wins
    if (best.witness.empty() || value > best_value) {
      best_value = value;
      best.witness = assign;
      best.bob_witness.assign(spec.bob_count, 1);
      for (int b = 1; b <= spec.bob_count; ++b)
        best.bob_witness[b - 1] = bob_sum[b] >= 0 ? 1 : -1;
    }
  }

  if (!any_feasible)
    throw std::invalid_argument("ontic_max: constraints admit no satisfying assignment");
  best.max = Rational(best_value);
  return best;
}

CorrelationSpec delta3_spec() {
  CorrelationSpec spec;
  spec.alice_labels = {"A1", "A2", "S1", "T1", "T2"};
  spec.bob_count = 3;
  spec.terms = {
      {{{"A1", 1}, {"A2", 1}}, 1},
      {{{"S1", 2}}, 2},
      {{{"T1", 1}, {"T2", -1}}, 3},
  };
  spec.constraints = {
      {{"A1", "S1"}, "T1", 1},
      {{"A2", "S1"}, "T2", 1},
  };
  return spec;
}

CorrelationSpec delta44_spec() {
  CorrelationSpec spec;
  spec.alice_labels = {"A1", "A2", "S1", "S2", "T1", "T2"};
  spec.bob_count = 4;
  spec.terms = {
      {{{"A1", 1}, {"A2", 1}}, 1},
      {{{"S1", 2}}, 2},
      {{{"S2", 2}}, 3},
      {{{"T1", 1}, {"T2", -1}}, 4},
  };
  spec.constraints = {
      {{"A1", "S1", "S2"}, "T1", 1},
      {{"A2", "S1", "S2"}, "T2", 1},
  };
  return spec;
}

CorrelationSpec delta43_spec() {
  CorrelationSpec spec;
  spec.alice_labels = {"A1", "A2", "A3", "A4", "Ap1", "Ap2"};
  spec.bob_count = 4;
  spec.terms = {
      {{{"A1", 1}, {"A2", 1}, {"A3", 1}, {"A4", 1}}, 1},
      {{{"A1", 1}, {"A2", -1}, {"A3", 1}, {"A4", -1}}, 2},
      {{{"Ap1", 2}, {"Ap2", 1}, {"A1", 1}}, 3},
      {{{"Ap1", 2}, {"Ap2", -1}, {"A1", -1}}, 4},
  };
  return spec;
}

}  // namespace porac
