/*
 * Copyright 2026 The bosonex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOSONEX_VERIFICATION_HPP
#define BOSONEX_VERIFICATION_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bosonex/combinatorics.hpp"
#include "bosonex/complex_matrix.hpp"
#include "bosonex/random.hpp"

namespace bosonex {

/// Exact pmf over Phi_{m,n}, keyed by the sorted outcome array z.
struct PmfTable {
  unsigned m = 0;
  unsigned n = 0;
  std::map<std::vector<unsigned>, double> entries;

  double total() const;
};

/// Empirical counterpart: counts keyed by z.
struct EmpiricalTable {
  unsigned m = 0;
  unsigned n = 0;
  std::uint64_t total = 0;
  std::map<std::vector<unsigned>, std::uint64_t> counts;

  void add(const std::vector<unsigned>& z) {
    ++counts[z];
    ++total;
  }
};

/// q(z|A) = |Per A^{[n]}_z|^2 / mu(z) for every z in Phi_{m,n}, with
/// permanents evaluated by the repeated-row kernel.  Unitarity of A
/// forces the table to sum to 1.  Refuses state spaces above 10^6.
PmfTable exact_pmf(const ComplexMatrix& a, unsigned n);

/// Total variation distance 0.5 * sum_z |p(z) - counts(z)/total|.
double tv_distance(const PmfTable& p, const EmpiricalTable& emp);

struct GofResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

/// Pearson chi-square goodness of fit of the counts against p.
GofResult chi_square_gof(const PmfTable& p, const EmpiricalTable& emp);

struct MultisetMoment {
  std::vector<unsigned> z;
  double mean = 0.0;
  double std_error = 0.0;
};

/// Monte-Carlo mean and standard error of q(z|A) over Haar draws of A,
/// per multiset.  The means estimate the marginal pmf, which is
/// uniform: 1 / multichoose(m, n).
std::vector<MultisetMoment> marginal_uniformity_check(unsigned m, unsigned n,
                                                      unsigned num_matrices,
                                                      std::uint64_t seed);

/// Exact value of E prod(s_nu + 1) over uniform multiplicity arrays:
/// binomial(2m + n - 1, n) / binomial(m + n - 1, n).
BigRational expected_multiplicity_product(unsigned m, unsigned n);

/// The same expectation by exhaustive enumeration of Phi*_{m,n}.
BigRational expected_multiplicity_product_enumerated(unsigned m, unsigned n);

/// Growth base (2t+1)^{2t+1} / ((4t)^t (t+1)^{t+1}) for m = theta * n.
double asymptotic_growth_constant(double theta);

/// Leading prefactor sqrt(2 (theta + 1) / (2 theta + 1)).
double asymptotic_prefactor(double theta);

struct ComplexitySum {
  BigRational direct;       // sum_{k=1}^n k * E prod(s^{(k)} + 1)
  BigRational closed_form;  // equivalent closed-form expression
};

/// Average-case operation-count sum in both its direct and closed
/// forms; the two are an exact rational identity.
ComplexitySum average_complexity_sum(unsigned m, unsigned n);

/// One line per check: name, statistic, threshold, PASS/FAIL.
struct CheckResult {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyConfig {
  unsigned m = 2;
  unsigned n = 2;
  std::uint64_t seed = 0;
  unsigned num_matrices = 200;   // Haar draws for statistical checks
  std::uint64_t num_samples = 50000;  // sampler draws for the chi-square check
};

/// Deterministic identity checks (exact arithmetic, no RNG).
std::vector<CheckResult> run_identity_checks();

/// Statistical checks: pmf normalization, marginal uniformity, sampler
/// goodness of fit, and sampler cost-model consistency.
std::vector<CheckResult> run_statistical_checks(const VerifyConfig& cfg);

/// PmfTable serialization: "z_1 ... z_n<TAB>probability", lex order.
void write_pmf(std::ostream& os, const PmfTable& table);

void write_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace bosonex

#endif  // BOSONEX_VERIFICATION_HPP
