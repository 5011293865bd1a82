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

#include "bosonex/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bosonex/combinatorics.hpp"

namespace bosonex {

namespace {

// Complex accumulator with optional Kahan compensation.
class Accumulator {
 public:
  explicit Accumulator(bool compensated) : compensated_(compensated) {}

  void add(Complex v) {
    if (!compensated_) {
      sum_ += v;
      return;
    }
    add_kahan(v.real(), sum_re_, c_re_);
    add_kahan(v.imag(), sum_im_, c_im_);
  }

  Complex value() const {
    return compensated_ ? Complex(sum_re_, sum_im_) : sum_;
  }

 private:
  static void add_kahan(double v, double& sum, double& c) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }

  bool compensated_;
  Complex sum_{0.0, 0.0};
  double sum_re_ = 0.0, sum_im_ = 0.0, c_re_ = 0.0, c_im_ = 0.0;
};

void require_square(const ComplexMatrix& b, const char* who) {
  if (b.rows() != b.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
}

}  // namespace

Complex permanent_naive(const ComplexMatrix& b) {
  require_square(b, "permanent_naive");
  const std::size_t k = b.rows();
  if (k > 10) {
    throw std::invalid_argument("permanent_naive: k > 10 (oracle scale only)");
  }
  if (k == 0) return 1.0;
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total = 0.0;
  do {
    Complex prod = 1.0;
    for (std::size_t i = 0; i < k; ++i) prod *= b(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Complex permanent_ryser(const ComplexMatrix& b, const PermanentOptions& opts) {
  require_square(b, "permanent_ryser");
  const std::size_t k = b.rows();
  if (k > 30) throw std::invalid_argument("permanent_ryser: k > 30");
  if (k == 0) return 1.0;

  std::vector<Complex> col_sums(k, 0.0);
  std::vector<bool> in_subset(k, false);
  Accumulator acc(opts.compensated);
  int subset_parity = 0;  // |T| mod 2
  std::uint64_t steps = 0;

  BinaryGrayIterator gray(static_cast<unsigned>(k));
  // First toggle (row 0 in) is deterministic; the empty-subset term is 0.
  auto apply = [&](unsigned row) {
    int delta = in_subset[row] ? -1 : +1;
    in_subset[row] = !in_subset[row];
    for (std::size_t j = 0; j < k; ++j) {
      col_sums[j] += static_cast<double>(delta) * b(row, j);
    }
    subset_parity ^= 1;
  };

  apply(0);
  ++steps;
  for (;;) {
    Complex prod = 1.0;
    for (std::size_t j = 0; j < k; ++j) prod *= col_sums[j];
    acc.add(subset_parity ? -prod : prod);
    auto toggled = gray.next();
    if (!toggled) break;
    apply(*toggled);
    ++steps;
  }
  if (opts.steps) *opts.steps = steps;
  Complex result = acc.value();
  return (k % 2) ? -result : result;
}

Complex permanent_repeated(const ComplexMatrix& base,
                           const std::vector<unsigned>& s,
                           const PermanentOptions& opts) {
  if (s.size() != base.rows()) {
    throw std::invalid_argument("permanent_repeated: s length != row count");
  }
  const std::size_t k = base.cols();
  std::size_t total_mult = 0;
  for (unsigned v : s) total_mult += v;
  if (total_mult != k) {
    throw std::invalid_argument("permanent_repeated: sum(s) != column count");
  }
  if (k == 0) return 1.0;

  std::vector<unsigned> radices(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) radices[i] = s[i] + 1;
  MixedRadixGrayIterator walk(std::move(radices));

  std::vector<Complex> w(k, 0.0);  // w_j = sum_nu r_nu a_{nu,j}
  double binom_weight = 1.0;       // prod_nu C(s_nu, r_nu)
  int parity = 0;                  // sum(r) mod 2
  Accumulator acc(opts.compensated);
  std::uint64_t steps = 0;

  // The all-zeros tuple contributes a zero product for k >= 1.
  while (auto step = walk.next()) {
    ++steps;
    const std::size_t nu = step->index;
    const double delta = static_cast<double>(step->delta);
    for (std::size_t j = 0; j < k; ++j) w[j] += delta * base(nu, j);
    const unsigned r = walk.current()[nu];  // value after the step
    if (step->delta > 0) {
      binom_weight *= static_cast<double>(s[nu] - r + 1) / static_cast<double>(r);
    } else {
      binom_weight *= static_cast<double>(r + 1) / static_cast<double>(s[nu] - r);
    }
    parity ^= 1;
    Complex prod = 1.0;
    for (std::size_t j = 0; j < k; ++j) prod *= w[j];
    acc.add((parity ? -binom_weight : binom_weight) * prod);
  }
  if (opts.steps) *opts.steps = steps;
  Complex result = acc.value();
  return (k % 2) ? -result : result;
}

std::vector<Complex> minor_permanents(const ComplexMatrix& base,
                                      const std::vector<unsigned>& s_minor,
                                      std::size_t k,
                                      const PermanentOptions& opts) {
  if (s_minor.size() != base.rows()) {
    throw std::invalid_argument("minor_permanents: s length != row count");
  }
  if (k == 0 || k > base.cols()) {
    throw std::invalid_argument("minor_permanents: bad column count k");
  }
  std::size_t total_mult = 0;
  for (unsigned v : s_minor) total_mult += v;
  if (total_mult != k - 1) {
    throw std::invalid_argument("minor_permanents: sum(s) != k - 1");
  }
  if (k == 1) return {Complex(1.0, 0.0)};  // permanent of the 0x0 matrix

  std::vector<unsigned> radices(s_minor.size());
  for (std::size_t i = 0; i < s_minor.size(); ++i) radices[i] = s_minor[i] + 1;
  MixedRadixGrayIterator walk(std::move(radices));

  std::vector<Complex> w(k, 0.0);
  std::vector<Complex> fwd(k + 1), bwd(k + 1);
  std::vector<Accumulator> acc(k, Accumulator(opts.compensated));
  double binom_weight = 1.0;
  int parity = 0;
  std::uint64_t steps = 0;

  while (auto step = walk.next()) {
    ++steps;
    const std::size_t nu = step->index;
    const double delta = static_cast<double>(step->delta);
    for (std::size_t j = 0; j < k; ++j) w[j] += delta * base(nu, j);
    const unsigned r = walk.current()[nu];
    if (step->delta > 0) {
      binom_weight *=
          static_cast<double>(s_minor[nu] - r + 1) / static_cast<double>(r);
    } else {
      binom_weight *=
          static_cast<double>(r + 1) / static_cast<double>(s_minor[nu] - r);
    }
    parity ^= 1;
    const double signed_weight = parity ? -binom_weight : binom_weight;

    // prod_{j != l} w_j = fwd[l] * bwd[l + 1]
    fwd[0] = 1.0;
    for (std::size_t j = 0; j < k; ++j) fwd[j + 1] = fwd[j] * w[j];
    bwd[k] = 1.0;
    for (std::size_t j = k; j > 0; --j) bwd[j - 1] = bwd[j] * w[j - 1];
    for (std::size_t l = 0; l < k; ++l) {
      acc[l].add(signed_weight * (fwd[l] * bwd[l + 1]));
    }
  }
  if (opts.steps) *opts.steps = steps;

  std::vector<Complex> result(k);
  const bool negate = ((k - 1) % 2) != 0;  // Ryser prefactor for size k - 1
  for (std::size_t l = 0; l < k; ++l) {
    result[l] = negate ? -acc[l].value() : acc[l].value();
  }
  return result;
}

Complex laplace_permanent(const std::vector<Complex>& row,
                          const std::vector<Complex>& minors) {
  if (row.size() != minors.size()) {
    throw std::invalid_argument("laplace_permanent: length mismatch");
  }
  Complex total = 0.0;
  for (std::size_t l = 0; l < row.size(); ++l) total += row[l] * minors[l];
  return total;
}

}  // namespace bosonex
