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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "bosonex/haar.hpp"
#include "bosonex/sampler.hpp"
#include "bosonex/verification.hpp"

using namespace bosonex;

TEST_CASE("sample_from_weights point mass and errors") {
  RandomStream rng(1);
  std::vector<double> w(6, 0.0);
  w[3] = 0.7;
  for (int t = 0; t < 100; ++t) CHECK(sample_from_weights(w, rng) == 3);

  CHECK_THROWS_AS(sample_from_weights({0.0, 0.0}, rng), std::domain_error);
  CHECK_THROWS_AS(sample_from_weights({1.0, -0.5}, rng), std::domain_error);
  // Tiny rounding negatives clamp instead of erroring.
  CHECK_NOTHROW(sample_from_weights({1.0, -1e-14}, rng));
}

TEST_CASE("sample_from_weights frequencies") {
  const int draws = 100000;

  RandomStream rng(2);
  int first = 0;
  for (int t = 0; t < draws; ++t) {
    if (sample_from_weights({1.0, 1.0}, rng) == 0) ++first;
  }
  CHECK(std::abs(first / static_cast<double>(draws) - 0.5) < 0.01);

  std::vector<int> counts(3, 0);
  for (int t = 0; t < draws; ++t) {
    ++counts[sample_from_weights({1.0, 2.0, 1.0}, rng)];
  }
  const double expected[3] = {0.25, 0.5, 0.25};
  for (int i = 0; i < 3; ++i) {
    double p = expected[i];
    double sigma = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(counts[i] / static_cast<double>(draws) - p) < 3.0 * sigma);
  }
}

TEST_CASE("single mode always yields mode 1") {
  RandomStream rng(3);
  ComplexMatrix u = haar_unitary(1, rng);
  for (int t = 0; t < 20; ++t) {
    CHECK(sample_single(u, 1, rng).z == std::vector<unsigned>{1});
  }
}

TEST_CASE("m=2 n=1 matches |a_11|^2") {
  RandomStream rng(4);
  ComplexMatrix u = haar_unitary(2, rng);
  const int draws = 100000;
  int hits = 0;
  for (int t = 0; t < draws; ++t) {
    if (sample_single(u, 1, rng).z[0] == 1) ++hits;
  }
  double p = std::norm(u(0, 0));
  double sigma = std::sqrt(p * (1 - p) / draws);
  CHECK(std::abs(hits / static_cast<double>(draws) - p) < 4.0 * sigma);
}

TEST_CASE("m=n=3 empirical pmf is close to the exact pmf") {
  RandomStream rng(5);
  ComplexMatrix u = haar_unitary(3, rng);
  PmfTable table = exact_pmf(u, 3);

  const std::size_t draws = 200000;
  auto samples = sample_batch(u, 3, draws, 77, 4);
  EmpiricalTable emp;
  emp.m = 3;
  emp.n = 3;
  for (const auto& sample : samples) emp.add(sample.z);

  CHECK(tv_distance(table, emp) < 0.01);
  CHECK(chi_square_gof(table, emp).p_value > 0.001);
}

TEST_CASE("batch determinism and stream splitting") {
  RandomStream rng(6);
  ComplexMatrix u = haar_unitary(4, rng);

  auto a = sample_batch(u, 3, 50, 123);
  auto b = sample_batch(u, 3, 50, 123);
  CHECK(a == b);

  // count=1 equals sample_single on the derived stream.
  RandomStream derived = RandomStream::substream(123, 0);
  CHECK(sample_batch(u, 3, 1, 123)[0] == sample_single(u, 3, derived));

  // Disjoint index ranges merged equal one full run: per-index streams
  // never depend on earlier samples, so a re-run of any suffix agrees.
  auto full = sample_batch(u, 3, 30, 9);
  for (std::size_t i = 0; i < 30; ++i) {
    RandomStream stream = RandomStream::substream(9, i);
    CHECK(sample_single(u, 3, stream) == full[i]);
  }

  // Thread count does not change the serialized output.
  std::stringstream one, four;
  write_samples(one, sample_batch(u, 3, 200, 55, 1), 4, 3, 55);
  write_samples(four, sample_batch(u, 3, 200, 55, 4), 4, 3, 55);
  CHECK(one.str() == four.str());
}

TEST_CASE("sample file format") {
  std::stringstream out;
  OutcomeMultiset ms = multiset_from_rows({2, 1, 2}, 3);
  write_samples(out, {ms}, 3, 3, 7);
  CHECK(out.str() == "# m=3 n=3 seed=7\n1 2 2\n");
}

TEST_CASE("prefix rows are distributed as the smaller problem") {
  // The stage-k prefix is an exact sample from the k-photon problem on
  // the leading k permuted columns, marginally over their order.  (For
  // a single fixed column order the claim is false: the stage-k
  // conditional carries a path-dependent normalizer that only averages
  // out over the order.)  Condition on the unordered set of leading
  // columns - the pmf is column-order invariant - and compare each
  // bucket against the matching two-column oracle.
  RandomStream rng(8);
  ComplexMatrix u = haar_unitary(3, rng);

  std::map<std::vector<std::size_t>, PmfTable> oracle;
  std::map<std::vector<std::size_t>, EmpiricalTable> buckets;
  for (std::size_t c1 = 0; c1 < 3; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < 3; ++c2) {
      ComplexMatrix pair(3, 2);
      for (std::size_t i = 0; i < 3; ++i) {
        pair(i, 0) = u(i, c1);
        pair(i, 1) = u(i, c2);
      }
      oracle[{c1, c2}] = exact_pmf(pair, 2);
      buckets[{c1, c2}] = EmpiricalTable{3, 2, 0, {}};
    }
  }

  const std::size_t draws = 60000;
  for (std::size_t i = 0; i < draws; ++i) {
    RandomStream stream = RandomStream::substream(31, i);
    SamplerTrace trace;
    SampleOptions opts;
    opts.trace = &trace;
    sample_single(u, 3, stream, opts);
    std::vector<std::size_t> cols = {trace.column_permutation[0],
                                     trace.column_permutation[1]};
    std::sort(cols.begin(), cols.end());
    std::vector<unsigned> prefix = {static_cast<unsigned>(trace.rows[0] + 1),
                                    static_cast<unsigned>(trace.rows[1] + 1)};
    buckets.at(cols).add(multiset_from_rows(prefix, 3).z);
  }
  for (const auto& [cols, emp] : buckets) {
    CHECK(chi_square_gof(oracle.at(cols), emp).p_value > 0.001);
  }
}

TEST_CASE("operation counter") {
  RandomStream rng(9);
  ComplexMatrix u = haar_unitary(4, rng);

  SUBCASE("n=1 has no minor walk") {
    SamplerTrace trace;
    SampleOptions opts;
    opts.trace = &trace;
    sample_single(u, 1, rng, opts);
    REQUIRE(trace.stages.size() == 1);
    CHECK(trace.stages[0].walk_tuples_executed == 1);
    CHECK(trace.stages[0].laplace_ops == 4);
  }

  SUBCASE("stage walks match the running multiplicities") {
    for (int t = 0; t < 50; ++t) {
      SamplerTrace trace;
      SampleOptions opts;
      opts.trace = &trace;
      sample_single(u, 4, rng, opts);
      std::vector<unsigned> s(4, 0);
      std::uint64_t prev_full = 1;
      for (std::size_t k = 0; k < 4; ++k) {
        // Executed walk covers the k previously selected rows.
        CHECK(trace.stages[k].walk_tuples_executed == prev_full);
        ++s[trace.rows[k]];
        std::uint64_t full = 1;
        for (unsigned v : s) full *= v + 1;
        CHECK(trace.stages[k].walk_tuples_full == full);
        prev_full = full;
        CHECK(trace.stages[k].laplace_ops == 4 * (k + 1));
        // All distinct rows so far means a 2^k minor walk.
        bool distinct = true;
        for (unsigned v : s) {
          if (v > 1) distinct = false;
        }
        if (distinct) {
          CHECK(trace.stages[k].walk_tuples_full == (1ull << (k + 1)));
        }
      }
    }
  }

  SUBCASE("m=n=2 stage-2 executed walk is always 2") {
    RandomStream rng2(10);
    ComplexMatrix u2 = haar_unitary(2, rng2);
    for (int t = 0; t < 30; ++t) {
      SamplerTrace trace;
      SampleOptions opts;
      opts.trace = &trace;
      sample_single(u2, 2, rng2, opts);
      CHECK(trace.stages[1].walk_tuples_executed == 2);
    }
  }
}

TEST_CASE("stage weights are finite and nonnegative") {
  RandomStream rng(12);
  ComplexMatrix u = haar_unitary(5, rng);
  for (int t = 0; t < 20; ++t) {
    CHECK_NOTHROW(sample_single(u, 4, rng));
  }
}
