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

#ifndef BOSONEX_SAMPLER_HPP
#define BOSONEX_SAMPLER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bosonex/combinatorics.hpp"
#include "bosonex/complex_matrix.hpp"
#include "bosonex/random.hpp"

namespace bosonex {

/// Per-stage cost instrumentation of one sampler run.
struct StageStats {
  /// prod(s_nu + 1) over the multiplicities of the rows selected so far
  /// INCLUDING this stage's row: the tuple count of the Guan walk that
  /// would evaluate the permanent of the stage's k x k submatrix.
  std::uint64_t walk_tuples_full = 0;
  /// Tuple count of the minor walk actually executed at this stage
  /// (over the k - 1 previously selected rows); 1 at stage 1.
  std::uint64_t walk_tuples_executed = 0;
  /// m * k multiply-adds for the Laplace weight array.
  std::uint64_t laplace_ops = 0;
};

/// Row choices and instrumentation accumulated while drawing one sample.
struct SamplerTrace {
  std::vector<std::size_t> rows;                // 0-based r_1..r_n
  std::vector<std::size_t> column_permutation;  // applied to A^{[n]}
  std::vector<StageStats> stages;               // one entry per stage
};

struct SampleOptions {
  /// Fix the column permutation instead of drawing it (testing hook).
  const std::vector<std::size_t>* column_permutation = nullptr;
  /// When non-null, filled with the run's trace.
  SamplerTrace* trace = nullptr;
  bool compensated = false;
};

/// Sample an index in [0, m) with probability w_i / sum(w).  Entries
/// below -1e-12 * max(w) are a domain error; tiny negatives clamp to 0.
/// Consumes exactly one uniform draw.
std::size_t sample_from_weights(const std::vector<double>& w, RandomStream& rng);

/**
 * @brief One exact sample from the Boson Sampling pmf q(z|A).
 *
 * Sequential conditional sampling: the first n columns of A are
 * uniformly permuted, then rows are drawn one at a time.  Stage 1 uses
 * weights |a_{i,1}|^2; stage k builds the joint minor permanents of the
 * (k-1)-row submatrix and sets w_i = |sum_l a_{i,l} Per_minor_l|^2.
 * The selected rows, sorted, form the returned multiset.
 *
 * Random stream consumption, in order: the column permutation
 * (Fisher-Yates, n - 1 bounded-integer draws), then one uniform draw
 * per stage.
 *
 * @param a m x c matrix with c >= n (typically an m x m unitary).
 * @param n number of photons, 1 <= n <= min(rows, cols).
 */
OutcomeMultiset sample_single(const ComplexMatrix& a, std::size_t n,
                              RandomStream& rng, const SampleOptions& opts = {});

/// `count` independent samples; sample i uses RandomStream::substream
/// (seed, i), so the output is reproducible and independent of
/// `threads`.  Throws with the failing sample index on error.
std::vector<OutcomeMultiset> sample_batch(const ComplexMatrix& a, std::size_t n,
                                          std::size_t count, std::uint64_t seed,
                                          unsigned threads = 1,
                                          std::vector<SamplerTrace>* traces = nullptr);

/// Sample file format: header "# m=<m> n=<n> seed=<seed>", then one
/// sample per line as space-separated sorted 1-based mode indices.
void write_samples(std::ostream& os, const std::vector<OutcomeMultiset>& samples,
                   std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace bosonex

#endif  // BOSONEX_SAMPLER_HPP
