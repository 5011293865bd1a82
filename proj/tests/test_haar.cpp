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

#include <cmath>
#include <sstream>

#include "bosonex/haar.hpp"

using namespace bosonex;

TEST_CASE("haar_unitary m=1 is a pure phase") {
  RandomStream rng(1);
  ComplexMatrix u = haar_unitary(1, rng);
  CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("haar_unitary residual and orthonormal columns") {
  for (std::size_t m : {2, 5, 16, 64}) {
    RandomStream rng(m);
    ComplexMatrix u = haar_unitary(m, rng);
    CHECK(unitarity_residual(u) < 1e-12);

    ComplexMatrix a = u.first_columns(std::min<std::size_t>(m, 3));
    for (std::size_t i = 0; i < a.cols(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Complex dot = 0.0;
        for (std::size_t l = 0; l < m; ++l) {
          dot += std::conj(a(l, i)) * a(l, j);
        }
        double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(dot - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("first_columns slicing") {
  RandomStream rng(4);
  ComplexMatrix u = haar_unitary(4, rng);
  CHECK(u.first_columns(4) == u);

  ComplexMatrix col = u.first_columns(1);
  double norm = 0.0;
  for (std::size_t i = 0; i < 4; ++i) norm += std::norm(col(i, 0));
  CHECK(std::abs(norm - 1.0) < 1e-12);

  ComplexMatrix two = u.first_columns(2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(two(i, j) == u(i, j));
  }

  CHECK_THROWS_AS(u.first_columns(5), std::invalid_argument);
}

TEST_CASE("entry moments match the Haar law") {
  // E |A_{1,1}|^{2n} = n! / (m (m+1) ... (m+n-1)).
  const int draws = 100000;

  SUBCASE("m=2 second moment") {
    RandomStream rng(100);
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < draws; ++t) {
      ComplexMatrix u = haar_unitary(2, rng);
      double x = std::norm(u(0, 0));
      sum += x;
      sumsq += x * x;
    }
    double mean = sum / draws;
    double se = std::sqrt((sumsq / draws - mean * mean) / draws);
    CHECK(std::abs(mean - 0.5) < 3.0 * se);
  }

  SUBCASE("m=3 first and second moments") {
    RandomStream rng(200);
    double sum1 = 0.0, sum2 = 0.0, sumsq1 = 0.0, sumsq2 = 0.0;
    for (int t = 0; t < draws; ++t) {
      ComplexMatrix u = haar_unitary(3, rng);
      double x = std::norm(u(0, 0));
      sum1 += x;
      sumsq1 += x * x;
      sum2 += x * x;
      sumsq2 += x * x * x * x;
    }
    double mean1 = sum1 / draws;
    double se1 = std::sqrt((sumsq1 / draws - mean1 * mean1) / draws);
    CHECK(std::abs(mean1 - 1.0 / 3.0) < 4.0 * se1);

    double mean2 = sum2 / draws;
    double se2 = std::sqrt((sumsq2 / draws - mean2 * mean2) / draws);
    CHECK(std::abs(mean2 - 2.0 / 12.0) < 4.0 * se2);
  }
}

TEST_CASE("matrix text round trip is exact") {
  RandomStream rng(7);
  ComplexMatrix u = haar_unitary(5, rng);
  std::stringstream buffer;
  write_matrix(buffer, u);
  ComplexMatrix readback = read_matrix(buffer);
  CHECK(readback == u);
}

TEST_CASE("matrix parse errors carry line numbers") {
  std::stringstream bad1("2 2\n1,0 0,0\n");
  CHECK_THROWS_AS(read_matrix(bad1), MatrixParseError);
  std::stringstream bad2("2 2\n1,0 0,0\n1,0 nonsense\n");
  try {
    read_matrix(bad2);
    FAIL("expected a parse error");
  } catch (const MatrixParseError& e) {
    CHECK(e.line() == 3);
  }
}
