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
#include <set>

#include "bosonex/combinatorics.hpp"
#include "bosonex/random.hpp"

using namespace bosonex;

namespace {

// Applies the steps from the all-zeros tuple and records every tuple
// visited; used to check the exactly-once property independently.
std::set<std::vector<unsigned>> walk_tuples(
    const std::vector<unsigned>& radices,
    const std::vector<MixedRadixGrayIterator::Step>& steps) {
  std::vector<unsigned> tuple(radices.size(), 0);
  std::set<std::vector<unsigned>> seen{tuple};
  for (const auto& step : steps) {
    REQUIRE(step.index < radices.size());
    REQUIRE((step.delta == 1 || step.delta == -1));
    if (step.delta == 1) {
      ++tuple[step.index];
    } else {
      REQUIRE(tuple[step.index] > 0);
      --tuple[step.index];
    }
    REQUIRE(tuple[step.index] < radices[step.index]);
    REQUIRE(!seen.contains(tuple));
    seen.insert(tuple);
  }
  return seen;
}

std::set<std::vector<unsigned>> full_product_space(
    const std::vector<unsigned>& radices) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> tuple(radices.size(), 0);
  for (;;) {
    out.insert(tuple);
    std::size_t i = 0;
    while (i < radices.size() && tuple[i] + 1 == radices[i]) tuple[i++] = 0;
    if (i == radices.size()) break;
    ++tuple[i];
  }
  return out;
}

}  // namespace

TEST_CASE("multiset_from_rows examples") {
  auto ms = multiset_from_rows({2, 1, 2}, 3);
  CHECK(ms.z == std::vector<unsigned>{1, 2, 2});
  CHECK(ms.s == std::vector<unsigned>{1, 2, 0});
  CHECK(ms.mu == 2);

  auto single = multiset_from_rows({1}, 1);
  CHECK(single.z == std::vector<unsigned>{1});
  CHECK(single.s == std::vector<unsigned>{1});
  CHECK(single.mu == 1);

  auto triple = multiset_from_rows({3, 3, 3}, 3);
  CHECK(triple.z == std::vector<unsigned>{3, 3, 3});
  CHECK(triple.s == std::vector<unsigned>{0, 0, 3});
  CHECK(triple.mu == 6);
}

TEST_CASE("multiset_from_rows rejects out-of-range entries") {
  CHECK_THROWS_AS(multiset_from_rows({0}, 3), std::domain_error);
  CHECK_THROWS_AS(multiset_from_rows({4}, 3), std::domain_error);
}

TEST_CASE("multiset_from_rows is permutation invariant") {
  RandomStream rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned m = 1 + static_cast<unsigned>(rng.uniform_index(6));
    std::vector<unsigned> r(1 + rng.uniform_index(8));
    for (auto& v : r) v = 1 + static_cast<unsigned>(rng.uniform_index(m));
    auto reference = multiset_from_rows(r, m);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      for (std::size_t i = r.size() - 1; i > 0; --i) {
        std::swap(r[i], r[rng.uniform_index(i + 1)]);
      }
      auto shuffled = multiset_from_rows(r, m);
      CHECK(shuffled == reference);
      CHECK(shuffled.mu == reference.mu);
    }
  }
}

TEST_CASE("enumerate_multisets small cases") {
  std::vector<std::vector<unsigned>> seen;
  enumerate_multisets(2, 2,
                      [&](const OutcomeMultiset& ms) { seen.push_back(ms.z); });
  CHECK(seen == std::vector<std::vector<unsigned>>{{1, 1}, {1, 2}, {2, 2}});

  seen.clear();
  enumerate_multisets(1, 5,
                      [&](const OutcomeMultiset& ms) { seen.push_back(ms.z); });
  CHECK(seen == std::vector<std::vector<unsigned>>{{1, 1, 1, 1, 1}});

  std::size_t count = 0;
  enumerate_multisets(3, 2, [&](const OutcomeMultiset&) { ++count; });
  CHECK(count == 6);
}

TEST_CASE("enumeration count matches multichoose and is lexicographic") {
  for (unsigned m = 1; m <= 10; ++m) {
    for (unsigned n = 0; n <= 10; ++n) {
      std::size_t count = 0;
      std::vector<unsigned> prev;
      enumerate_multisets(m, n, [&](const OutcomeMultiset& ms) {
        if (count > 0) CHECK(std::lexicographical_compare(
                            prev.begin(), prev.end(), ms.z.begin(), ms.z.end()));
        prev = ms.z;
        ++count;
      });
      CHECK(BigInt(count) == multichoose(m, n));
    }
  }
}

TEST_CASE("guan_steps trivial and small cases") {
  CHECK(guan_steps({0, 0, 0}).empty());

  auto steps12 = guan_steps({1, 2});
  CHECK(steps12.size() == 5);
  CHECK(walk_tuples({2, 3}, steps12) == full_product_space({2, 3}));

  auto steps111 = guan_steps({1, 1, 1});
  CHECK(steps111.size() == 7);
  CHECK(walk_tuples({2, 2, 2}, steps111) == full_product_space({2, 2, 2}));
}

TEST_CASE("guan walk visits every tuple exactly once") {
  RandomStream rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<unsigned> s(1 + rng.uniform_index(6));
    std::uint64_t product = 1;
    for (auto& v : s) {
      v = static_cast<unsigned>(rng.uniform_index(5));
      product *= v + 1;
    }
    if (product > (1u << 20)) continue;
    auto steps = guan_steps(s);
    CHECK(steps.size() == product - 1);
    std::vector<unsigned> radices(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) radices[i] = s[i] + 1;
    CHECK(walk_tuples(radices, steps) == full_product_space(radices));
  }
}

TEST_CASE("binary gray iterator covers all subsets") {
  BinaryGrayIterator gray(4);
  std::set<unsigned> visited;
  unsigned mask = 0;
  visited.insert(mask);
  while (auto bit = gray.next()) {
    mask ^= 1u << *bit;
    CHECK(!visited.contains(mask));
    visited.insert(mask);
  }
  CHECK(visited.size() == 16);
}

TEST_CASE("multichoose values") {
  CHECK(multichoose(2, 2) == 3);
  CHECK(multichoose(1, 7) == 1);
  CHECK(multichoose(1, 0) == 1);

  // Pascal-triangle oracle for binomial(39, 20).
  std::vector<std::vector<BigInt>> pascal(40);
  for (unsigned i = 0; i < 40; ++i) {
    pascal[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) {
      pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
    }
  }
  CHECK(multichoose(20, 20) == pascal[39][20]);

  CHECK_THROWS_AS(multichoose(0, 2), std::domain_error);
  CHECK_THROWS_AS(multichoose(100, 100), std::domain_error);
}
