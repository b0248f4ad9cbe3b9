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

#ifndef PORAC_ONTIC_HPP
#define PORAC_ONTIC_HPP

#include <map>
#include <string>
#include <vector>

#include "porac/rational.hpp"

namespace porac {

/// factors multiply (with the sign) to the result label, e.g. T1 = +A1*S1.
struct ProductConstraint {
  std::vector<std::string> factors;
  std::string result;
  int sign = 1;
};

/// Symbolic skeleton of a correlation expression: per Bob observable, a signed
/// sum of Alice labels. Used to maximise the expression over deterministic
/// +/-1 assignments subject to the product constraints.
struct CorrelationSpec {
  std::vector<std::string> alice_labels;
  int bob_count = 0;
  struct Term {
    std::vector<std::pair<std::string, int>> coeffs;  // (alice label, signed coefficient)
    int bob = 0;                                      // 1-based Bob index
  };
  std::vector<Term> terms;
  std::vector<ProductConstraint> constraints;
};

struct OnticResult {
  Rational max{0};
  std::map<std::string, int> witness;    // +/-1 per Alice label
  std::vector<int> bob_witness;          // +/-1 per Bob index
};

/// Maximum of the expression over all +/-1 assignments to Alice labels that
/// satisfy every product constraint; each Bob observable is optimised in
/// closed form (it contributes |sum of its Alice coefficients|). Free labels
/// are enumerated; constrained labels are derived. Throws if the constraints
/// admit no satisfying assignment.
OnticResult ontic_max(const CorrelationSpec& spec);

// The three correlation skeletons used by the 3- and 4-bit games.
CorrelationSpec delta3_spec();
CorrelationSpec delta44_spec();
CorrelationSpec delta43_spec();

}  // namespace porac

#endif  // PORAC_ONTIC_HPP
