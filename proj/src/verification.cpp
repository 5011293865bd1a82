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

#include "bosonex/verification.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "bosonex/haar.hpp"
#include "bosonex/permanent.hpp"
#include "bosonex/sampler.hpp"

namespace bosonex {

double PmfTable::total() const {
  double sum = 0.0;
  for (const auto& [z, p] : entries) sum += p;
  return sum;
}

PmfTable exact_pmf(const ComplexMatrix& a, unsigned n) {
  const auto m = static_cast<unsigned>(a.rows());
  if (n < 1 || n > a.cols()) {
    throw std::invalid_argument("exact_pmf: need 1 <= n <= cols");
  }
  if (multichoose(m, n) > 1000000) {
    throw std::domain_error("exact_pmf: state space " +
                            multichoose(m, n).str() + " exceeds 10^6");
  }
  ComplexMatrix an = a.first_columns(n);
  PmfTable table;
  table.m = m;
  table.n = n;
  enumerate_multisets(m, n, [&](const OutcomeMultiset& ms) {
    Complex per = permanent_repeated(an, ms.s);
    table.entries[ms.z] = std::norm(per) / static_cast<double>(ms.mu);
  });
  return table;
}

double tv_distance(const PmfTable& p, const EmpiricalTable& emp) {
  if (p.m != emp.m || p.n != emp.n) {
    throw std::invalid_argument("tv_distance: support mismatch");
  }
  if (emp.total == 0) throw std::invalid_argument("tv_distance: empty sample");
  for (const auto& [z, c] : emp.counts) {
    if (!p.entries.contains(z)) {
      throw std::invalid_argument("tv_distance: sample outside support");
    }
  }
  double dist = 0.0;
  for (const auto& [z, prob] : p.entries) {
    auto it = emp.counts.find(z);
    double freq =
        it == emp.counts.end()
            ? 0.0
            : static_cast<double>(it->second) / static_cast<double>(emp.total);
    dist += std::abs(prob - freq);
  }
  return 0.5 * dist;
}

GofResult chi_square_gof(const PmfTable& p, const EmpiricalTable& emp) {
  if (p.m != emp.m || p.n != emp.n) {
    throw std::invalid_argument("chi_square_gof: support mismatch");
  }
  GofResult result;
  std::size_t cells = 0;
  const double total = static_cast<double>(emp.total);
  for (const auto& [z, prob] : p.entries) {
    auto it = emp.counts.find(z);
    double observed = it == emp.counts.end() ? 0.0 : static_cast<double>(it->second);
    if (prob <= 0.0) {
      if (observed > 0.0) {
        result.statistic = std::numeric_limits<double>::infinity();
      }
      continue;
    }
    double expected = total * prob;
    double diff = observed - expected;
    result.statistic += diff * diff / expected;
    ++cells;
  }
  result.dof = cells > 1 ? cells - 1 : 1;
  result.p_value = std::isinf(result.statistic)
                       ? 0.0
                       : boost::math::gamma_q(static_cast<double>(result.dof) / 2.0,
                                              result.statistic / 2.0);
  return result;
}

std::vector<MultisetMoment> marginal_uniformity_check(unsigned m, unsigned n,
                                                      unsigned num_matrices,
                                                      std::uint64_t seed) {
  if (num_matrices == 0) {
    throw std::domain_error("marginal_uniformity_check: empty average");
  }
  std::vector<std::vector<unsigned>> support;
  enumerate_multisets(m, n,
                      [&](const OutcomeMultiset& ms) { support.push_back(ms.z); });
  std::vector<double> mean(support.size(), 0.0);
  std::vector<double> m2(support.size(), 0.0);

  for (unsigned t = 0; t < num_matrices; ++t) {
    RandomStream rng = RandomStream::substream(seed, t);
    ComplexMatrix u = haar_unitary(m, rng);
    PmfTable table = exact_pmf(u, n);
    for (std::size_t i = 0; i < support.size(); ++i) {
      double x = table.entries.at(support[i]);
      double delta = x - mean[i];
      mean[i] += delta / static_cast<double>(t + 1);
      m2[i] += delta * (x - mean[i]);
    }
  }

  std::vector<MultisetMoment> out(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    out[i].z = support[i];
    out[i].mean = mean[i];
    double variance =
        num_matrices > 1 ? m2[i] / static_cast<double>(num_matrices - 1) : 0.0;
    out[i].std_error = std::sqrt(variance / static_cast<double>(num_matrices));
  }
  return out;
}

BigRational expected_multiplicity_product(unsigned m, unsigned n) {
  if (m < 1 || n < 1) {
    throw std::domain_error("expected_multiplicity_product: m, n >= 1");
  }
  return BigRational(binomial(2 * m + n - 1, n), binomial(m + n - 1, n));
}

BigRational expected_multiplicity_product_enumerated(unsigned m, unsigned n) {
  BigInt total = 0;
  BigInt count = 0;
  enumerate_multisets(m, n, [&](const OutcomeMultiset& ms) {
    BigInt prod = 1;
    for (unsigned s : ms.s) prod *= s + 1;
    total += prod;
    ++count;
  });
  return BigRational(total, count);
}

double asymptotic_growth_constant(double theta) {
  if (theta < 1.0) {
    throw std::domain_error("asymptotic_growth_constant: theta >= 1");
  }
  double t = theta;
  double log_value = (2 * t + 1) * std::log(2 * t + 1) - t * std::log(4 * t) -
                     (t + 1) * std::log(t + 1);
  // Direct powers are exact for small integer theta (27/16 at theta=1);
  // fall back to the log form before pow overflows.
  if ((2 * t + 1) * std::log2(2 * t + 1) < 900.0) {
    return std::pow(2 * t + 1, 2 * t + 1) /
           (std::pow(4 * t, t) * std::pow(t + 1, t + 1));
  }
  return std::exp(log_value);
}

double asymptotic_prefactor(double theta) {
  return std::sqrt(2.0 * (theta + 1.0) / (2.0 * theta + 1.0));
}

ComplexitySum average_complexity_sum(unsigned m, unsigned n) {
  if (m < 1 || n < 1) {
    throw std::domain_error("average_complexity_sum: m, n >= 1");
  }
  ComplexitySum out;
  out.direct = 0;
  for (unsigned k = 1; k <= n; ++k) {
    out.direct += BigRational(BigInt(k) * binomial(2 * m + k - 1, k),
                              binomial(m + k - 1, k));
  }
  const BigInt mm = m;
  const BigInt nn = n;
  BigRational lead(
      (nn * (mm + 1) - mm + 1) * (mm + nn) * binomial(2 * m + n, n + 1),
      (mm + 1) * (mm + 2) * binomial(m + n, n + 1));
  BigRational tail(2 * mm * (mm - 1), (mm + 1) * (mm + 2));
  out.closed_form = lead + tail;
  return out;
}

namespace {

CheckResult make_check(std::string name, double statistic, double threshold,
                       bool pass) {
  return CheckResult{std::move(name), statistic, threshold, pass};
}

}  // namespace

std::vector<CheckResult> run_identity_checks() {
  std::vector<CheckResult> results;

  double rho = asymptotic_growth_constant(1.0);
  results.push_back(make_check("growth_constant_theta1", std::abs(rho - 1.6875),
                               1e-12, std::abs(rho - 1.6875) <= 1e-12));

  double limit = asymptotic_growth_constant(1e4);
  results.push_back(make_check("growth_constant_theta_large", limit, 2.0,
                               limit > 1.99 && limit < 2.0));

  double pref = asymptotic_prefactor(1.0);
  double pref_err = std::abs(pref - std::sqrt(4.0 / 3.0));
  results.push_back(
      make_check("growth_prefactor_theta1", pref_err, 1e-12, pref_err <= 1e-12));

  unsigned lemma_mismatch = 0;
  for (unsigned m = 1; m <= 8; ++m) {
    for (unsigned n = 1; n <= 8; ++n) {
      if (expected_multiplicity_product(m, n) !=
          expected_multiplicity_product_enumerated(m, n)) {
        ++lemma_mismatch;
      }
    }
  }
  results.push_back(make_check("multiplicity_expectation_enumeration",
                               lemma_mismatch, 0, lemma_mismatch == 0));

  bool spot = expected_multiplicity_product(2, 2) == BigRational(10, 3);
  results.push_back(make_check("multiplicity_expectation_spot_2_2",
                               spot ? 0.0 : 1.0, 0, spot));

  unsigned sum_mismatch = 0;
  for (unsigned m = 1; m <= 30; ++m) {
    for (unsigned n = 1; n <= 30; ++n) {
      ComplexitySum cs = average_complexity_sum(m, n);
      if (cs.direct != cs.closed_form) ++sum_mismatch;
    }
  }
  results.push_back(make_check("complexity_sum_closed_form", sum_mismatch, 0,
                               sum_mismatch == 0));

  ComplexitySum c11 = average_complexity_sum(1, 1);
  ComplexitySum c22 = average_complexity_sum(2, 2);
  bool spots = c11.direct == BigRational(2) && c22.direct == BigRational(26, 3);
  results.push_back(
      make_check("complexity_sum_spot_values", spots ? 0.0 : 1.0, 0, spots));

  return results;
}

std::vector<CheckResult> run_statistical_checks(const VerifyConfig& cfg) {
  std::vector<CheckResult> results;

  // Eq. (1) normalization under unitarity.
  double worst_norm = 0.0;
  const unsigned norm_draws = 20;
  for (unsigned t = 0; t < norm_draws; ++t) {
    RandomStream rng = RandomStream::substream(cfg.seed, 1000 + t);
    ComplexMatrix u = haar_unitary(cfg.m, rng);
    worst_norm =
        std::max(worst_norm, std::abs(exact_pmf(u, cfg.n).total() - 1.0));
  }
  results.push_back(make_check("pmf_normalization", worst_norm, 1e-9,
                               worst_norm <= 1e-9));

  // Marginal uniformity of E q(z|A).
  auto moments =
      marginal_uniformity_check(cfg.m, cfg.n, cfg.num_matrices, cfg.seed);
  double target =
      1.0 / static_cast<double>(multichoose(cfg.m, cfg.n));
  double worst_z = 0.0;
  for (const auto& moment : moments) {
    if (moment.std_error > 0.0) {
      worst_z =
          std::max(worst_z, std::abs(moment.mean - target) / moment.std_error);
    }
  }
  results.push_back(
      make_check("marginal_uniformity_zscore", worst_z, 4.0, worst_z <= 4.0));

  // Sampler goodness of fit against the exact pmf.
  RandomStream rng = RandomStream::substream(cfg.seed, 2000);
  ComplexMatrix u = haar_unitary(cfg.m, rng);
  PmfTable table = exact_pmf(u, cfg.n);
  auto samples = sample_batch(u, cfg.n, cfg.num_samples, cfg.seed + 1);
  EmpiricalTable emp;
  emp.m = cfg.m;
  emp.n = cfg.n;
  for (const auto& sample : samples) emp.add(sample.z);
  GofResult gof = chi_square_gof(table, emp);
  results.push_back(make_check("sampler_chi_square_pvalue", gof.p_value, 0.001,
                               gof.p_value > 0.001));
  double tv = tv_distance(table, emp);
  results.push_back(make_check("sampler_tv_distance", tv, 0.05, tv < 0.05));

  // Cost model: mean final-stage walk length against the exact
  // multiplicity expectation.  The expectation is over the Haar
  // ensemble, so each sample draws its own matrix.
  std::size_t cost_samples = std::min<std::uint64_t>(cfg.num_samples, 2000);
  double mean_walk = 0.0;
  for (std::size_t i = 0; i < cost_samples; ++i) {
    RandomStream matrix_rng = RandomStream::substream(cfg.seed + 2, 2 * i);
    ComplexMatrix draw = haar_unitary(cfg.m, matrix_rng);
    RandomStream sample_rng = RandomStream::substream(cfg.seed + 2, 2 * i + 1);
    SamplerTrace trace;
    SampleOptions opts;
    opts.trace = &trace;
    sample_single(draw, cfg.n, sample_rng, opts);
    mean_walk += static_cast<double>(trace.stages.back().walk_tuples_full);
  }
  mean_walk /= static_cast<double>(cost_samples);
  double predicted = static_cast<double>(expected_multiplicity_product(cfg.m, cfg.n));
  double rel = std::abs(mean_walk - predicted) / predicted;
  results.push_back(make_check("cost_model_consistency", rel, 0.05, rel <= 0.05));

  return results;
}

void write_pmf(std::ostream& os, const PmfTable& table) {
  char buf[40];
  for (const auto& [z, p] : table.entries) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (i > 0) os << ' ';
      os << z[i];
    }
    int len = std::snprintf(buf, sizeof(buf), "%.17g", p);
    os << '\t';
    os.write(buf, len);
    os << '\n';
  }
}

void write_report(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    os << r.name << ' ' << r.statistic << ' ' << r.threshold << ' '
       << (r.pass ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace bosonex
