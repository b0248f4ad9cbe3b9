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

#include "porac/family.hpp"

#include <stdexcept>

#include "porac/eig.hpp"
#include "porac/pauli.hpp"

namespace porac {

const Matrix& ObservableFamily::obs(const std::string& label) const {
  auto it = observables.find(label);
  if (it == observables.end())
    throw std::invalid_argument("ObservableFamily: unknown label '" + label + "'");
  return it->second;
}

int ObservableFamily::set_index(const BitString& x) const {
  if (x.n != n) throw std::invalid_argument("ObservableFamily::set_index: length mismatch");
  if (!four_blocks) {
    int p = 0;
    for (int y = 1; y <= n; ++y) p ^= x.bit(y);
    return p;
  }
  const int row = x.bit(1) ^ x.bit(2);
  const int col = x.bit(3) ^ x.bit(4);
  if (row == 0 && col == 0) return 0;
  if (row == 1 && col == 1) return 1;
  if (row == 0 && col == 1) return 2;
  return 3;
}

void ObservableFamily::validate(double tol) const {
  const Matrix id = Matrix::identity(dim);
  for (const auto& [label, m] : observables) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::runtime_error("family: observable '" + label + "' has wrong dimension");
    if ((m * m).max_abs_diff(id) > tol)
      throw std::runtime_error("family: observable '" + label + "' does not square to identity");
  }
  for (const auto& group : commuting_sets) {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const Matrix& a = obs(group[i]);
        const Matrix& b = obs(group[j]);
        if ((a * b - b * a).max_abs() > tol)
          throw std::runtime_error("family: '" + group[i] + "' and '" + group[j] +
                                   "' fail to commute");
      }
  }
  for (const auto& c : product_constraints) {
    Matrix prod = Matrix::identity(dim);
    for (const auto& f : c.factors) prod = prod * obs(f);
    prod *= cdouble(static_cast<double>(c.sign));
    if (prod.max_abs_diff(obs(c.result)) > tol)
      throw std::runtime_error("family: product constraint for '" + c.result + "' fails");
  }
  for (const auto& [a, b] : aliases)
    if (obs(a).max_abs_diff(obs(b)) > tol)
      throw std::runtime_error("family: alias '" + a + "' = '" + b + "' fails");
}

namespace {

ObservableFamily chain_family(int n) {
  ObservableFamily fam;
  fam.n = n;
  fam.g = n;
  fam.dim = std::size_t{1} << (n - 1);

  if (n == 3) {
    fam.observables["A1"] = pauli_string("XX").mat();
    fam.observables["A2"] = pauli_string("XZ").mat();
    fam.observables["S1"] = pauli_string("XI").mat();
    fam.observables["T1"] = pauli_string("IX").mat();
    fam.observables["T2"] = pauli_string("IZ").mat();
  } else if (n == 4) {
    fam.observables["A1"] = pauli_string("XXX").mat();
    fam.observables["A2"] = pauli_string("XZX").mat();
    fam.observables["S1"] = pauli_string("XII").mat();
    fam.observables["S2"] = pauli_string("IIX").mat();
    fam.observables["T1"] = pauli_string("IXI").mat();
    fam.observables["T2"] = pauli_string("IZI").mat();
  } else {
    const ObservableFamily prev = chain_family(n - 1);
    const Matrix& x = pauli_matrix(Pauli::X);
    const Matrix id2 = Matrix::identity(2);
    fam.observables["A1"] = kron(prev.obs("A1"), x);
    fam.observables["A2"] = kron(prev.obs("A2"), x);
    for (int k = 1; k <= n - 3; ++k)
      fam.observables["S" + std::to_string(k)] = kron(prev.obs("S" + std::to_string(k)), id2);
    fam.observables["S" + std::to_string(n - 2)] =
        kron(id2, prev.obs("S" + std::to_string(n - 3)));
    Matrix chain_product = fam.observables["S1"];
    for (int k = 2; k <= n - 2; ++k)
      chain_product = chain_product * fam.observables["S" + std::to_string(k)];
    fam.observables["T1"] = fam.observables["A1"] * chain_product;
    fam.observables["T2"] = fam.observables["A2"] * chain_product;
  }

  fam.sets.resize(2);
  fam.sets[0].generators.emplace_back("A1", 1);
  fam.sets[1].generators.emplace_back("A2", 1);
  std::vector<std::string> group1 = {"A1"}, group2 = {"A2"};
  for (int k = 1; k <= n - 2; ++k) {
    const std::string s = "S" + std::to_string(k);
    fam.sets[0].generators.emplace_back(s, k + 1);
    fam.sets[1].generators.emplace_back(s, k + 1);
    group1.push_back(s);
    group2.push_back(s);
  }
  group1.push_back("T1");
  group2.push_back("T2");
  fam.commuting_sets = {group1, group2};

  ProductConstraint c1, c2;
  c1.result = "T1";
  c2.result = "T2";
  c1.sign = c2.sign = 1;
  c1.factors.push_back("A1");
  c2.factors.push_back("A2");
  for (int k = 1; k <= n - 2; ++k) {
    c1.factors.push_back("S" + std::to_string(k));
    c2.factors.push_back("S" + std::to_string(k));
  }
  fam.product_constraints = {c1, c2};
  return fam;
}

ObservableFamily blocks43_family(Variant43 variant) {
  ObservableFamily fam;
  fam.n = 4;
  fam.g = 3;
  fam.dim = 4;
  fam.four_blocks = true;

  if (variant == Variant43::po_exact) {
    fam.observables["A1"] = pauli_string("XI").mat();
    fam.observables["Ap1"] = pauli_string("IZ").mat();
    fam.observables["A2"] = pauli_string("YI").mat();
    fam.observables["Ap2"] = pauli_string("IX").mat();
    fam.observables["A3"] = fam.observables["A1"];
    fam.observables["Ap3"] = fam.observables["Ap2"];
    fam.observables["A4"] = fam.observables["A2"];
    fam.observables["Ap4"] = fam.observables["Ap1"];
    fam.aliases = {{"A3", "A1"}, {"Ap3", "Ap2"}, {"A4", "A2"}, {"Ap4", "Ap1"}};
  } else {
    fam.observables["A1"] = pauli_string("XX").mat();
    fam.observables["Ap1"] = pauli_string("YY").mat();
    fam.observables["A2"] = pauli_string("XY").mat();
    fam.observables["Ap2"] = pauli_string("YX").mat();
    fam.observables["A3"] = pauli_string("ZY").mat();
    fam.observables["Ap3"] = fam.observables["A1"];
    fam.observables["A4"] = pauli_string("ZX").mat();
    fam.observables["Ap4"] = fam.observables["Ap1"];
    fam.aliases = {{"Ap3", "A1"}, {"Ap4", "Ap1"}};
  }

  for (int b = 1; b <= 4; ++b) {
    const std::string a = "A" + std::to_string(b);
    const std::string ap = "Ap" + std::to_string(b);
    const std::string t = "T" + std::to_string(b);
    fam.observables[t] = fam.obs(a) * fam.obs(ap);
    ObservableFamily::SetInfo set;
    set.generators.emplace_back(a, 1);
    set.generators.emplace_back(ap, 3);
    fam.sets.push_back(set);
    fam.commuting_sets.push_back({a, ap, t});
    ProductConstraint c;
    c.factors = {a, ap};
    c.result = t;
    c.sign = 1;
    fam.product_constraints.push_back(c);
  }
  return fam;
}

}  // namespace

ObservableFamily build_family(int n, int g, Variant43 variant) {
  ObservableFamily fam;
  if (g == n && n >= 3 && n <= 9) {
    fam = chain_family(n);
  } else if (n == 4 && g == 3) {
    fam = blocks43_family(variant);
  } else {
    throw std::invalid_argument(
        "build_family: no explicit observable family for n=" + std::to_string(n) +
        ", g=" + std::to_string(g) +
        "; only (3,3), (4,4), (4,3) and (n,n) up to n=9 have closed-form choices "
        "(general g requires the see-saw search)");
  }
  fam.validate();
  return fam;
}

std::vector<Matrix> alice_combinations(const ObservableFamily& fam) {
  std::vector<Matrix> combos;
  if (!fam.four_blocks) {
    combos.push_back(fam.obs("A1") + fam.obs("A2"));
    for (int k = 1; k <= fam.n - 2; ++k)
      combos.push_back(cdouble(2.0) * fam.obs("S" + std::to_string(k)));
    combos.push_back(fam.obs("T1") - fam.obs("T2"));
    return combos;
  }
  combos.push_back(fam.obs("A1") + fam.obs("A2") + fam.obs("A3") + fam.obs("A4"));
  combos.push_back(fam.obs("A1") - fam.obs("A2") + fam.obs("A3") - fam.obs("A4"));
  combos.push_back(fam.obs("Ap1") + fam.obs("Ap2") + fam.obs("Ap3") + fam.obs("Ap4"));
  combos.push_back(fam.obs("Ap1") - fam.obs("Ap2") - fam.obs("Ap3") + fam.obs("Ap4"));
  return combos;
}

OmegaBound omega_bound(const ObservableFamily& fam) {
  if (!fam.four_blocks)
    throw std::invalid_argument("omega_bound: requires the four-block (4,3) family shape");
  OmegaBound out;
  for (const Matrix& c : alice_combinations(fam))
    out.omegas.push_back(spectral_norm(Hermitian(c)));
  out.bound = 0.0;
  for (double w : out.omegas) out.bound += w;
  out.bound *= static_cast<double>(fam.dim);
  return out;
}

}  // namespace porac
