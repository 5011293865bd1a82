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

#include "bosonex/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "bosonex/permanent.hpp"

namespace bosonex {

std::size_t sample_from_weights(const std::vector<double>& w,
                                RandomStream& rng) {
  if (w.empty()) throw std::domain_error("sample_from_weights: empty array");
  double max_w = 0.0;
  for (double v : w) max_w = std::max(max_w, v);
  const double floor = -1e-12 * max_w;
  double total = 0.0;
  for (double v : w) {
    if (std::isnan(v) || v < floor) {
      throw std::domain_error("sample_from_weights: negative weight");
    }
    total += std::max(v, 0.0);
  }
  if (total <= 0.0) {
    throw std::domain_error("sample_from_weights: all weights zero");
  }
  const double target = rng.uniform() * total;
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    double v = std::max(w[i], 0.0);
    if (v > 0.0) last_positive = i;
    running += v;
    if (target < running) return i;
  }
  return last_positive;  // rounding pushed target past the final edge
}

OutcomeMultiset sample_single(const ComplexMatrix& a, std::size_t n,
                              RandomStream& rng, const SampleOptions& opts) {
  const std::size_t m = a.rows();
  if (n < 1 || n > m || n > a.cols()) {
    throw std::invalid_argument("sample_single: need 1 <= n <= min(m, cols)");
  }

  // Uniform column permutation of A^{[n]} (Fisher-Yates).
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (opts.column_permutation) {
    if (opts.column_permutation->size() != n) {
      throw std::invalid_argument("sample_single: bad fixed permutation");
    }
    perm = *opts.column_permutation;
  } else {
    for (std::size_t i = n - 1; i > 0; --i) {
      std::size_t j = rng.uniform_index(i + 1);
      std::swap(perm[i], perm[j]);
    }
  }
  ComplexMatrix ap(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) ap(i, j) = a(i, perm[j]);
  }

  SamplerTrace local_trace;
  SamplerTrace& trace = opts.trace ? *opts.trace : local_trace;
  trace.rows.clear();
  trace.stages.clear();
  trace.column_permutation = perm;

  std::vector<unsigned> s(m, 0);  // multiplicities of selected rows
  std::vector<double> w(m);
  std::uint64_t walk_full = 1;  // prod(s_nu + 1), updated incrementally

  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t executed = 1;
    if (k == 1) {
      for (std::size_t i = 0; i < m; ++i) w[i] = std::norm(ap(i, 0));
    } else {
      PermanentOptions popts;
      popts.compensated = opts.compensated;
      popts.steps = nullptr;
      std::uint64_t minor_steps = 0;
      popts.steps = &minor_steps;
      std::vector<Complex> minors = minor_permanents(ap, s, k, popts);
      executed = minor_steps + 1;
      for (std::size_t i = 0; i < m; ++i) {
        Complex dot = 0.0;
        for (std::size_t l = 0; l < k; ++l) dot += ap(i, l) * minors[l];
        w[i] = std::norm(dot);
      }
    }

    std::size_t x;
    try {
      x = sample_from_weights(w, rng);
    } catch (const std::domain_error&) {
      throw std::runtime_error("sample_single: weight breakdown at stage " +
                               std::to_string(k));
    }
    trace.rows.push_back(x);
    walk_full = walk_full / (s[x] + 1) * (s[x] + 2);
    ++s[x];

    StageStats stats;
    stats.walk_tuples_full = walk_full;
    stats.walk_tuples_executed = executed;
    stats.laplace_ops = static_cast<std::uint64_t>(m) * k;
    trace.stages.push_back(stats);
  }

  std::vector<unsigned> r1(n);
  for (std::size_t i = 0; i < n; ++i) {
    r1[i] = static_cast<unsigned>(trace.rows[i] + 1);
  }
  return multiset_from_rows(r1, static_cast<unsigned>(m));
}

std::vector<OutcomeMultiset> sample_batch(const ComplexMatrix& a, std::size_t n,
                                          std::size_t count, std::uint64_t seed,
                                          unsigned threads,
                                          std::vector<SamplerTrace>* traces) {
  if (count < 1) throw std::invalid_argument("sample_batch: count must be >= 1");
  std::vector<OutcomeMultiset> out(count);
  if (traces) traces->assign(count, {});
  if (threads < 1) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        RandomStream stream = RandomStream::substream(seed, i);
        SampleOptions opts;
        if (traces) opts.trace = &(*traces)[i];
        out[i] = sample_single(a, n, stream, opts);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

void write_samples(std::ostream& os, const std::vector<OutcomeMultiset>& samples,
                   std::size_t m, std::size_t n, std::uint64_t seed) {
  os << "# m=" << m << " n=" << n << " seed=" << seed << '\n';
  for (const auto& sample : samples) {
    for (std::size_t i = 0; i < sample.z.size(); ++i) {
      if (i > 0) os << ' ';
      os << sample.z[i];
    }
    os << '\n';
  }
}

}  // namespace bosonex
