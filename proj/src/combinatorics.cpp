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

#include "bosonex/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bosonex {

OutcomeMultiset multiset_from_rows(const std::vector<unsigned>& r, unsigned m) {
  OutcomeMultiset out;
  out.z = r;
  std::sort(out.z.begin(), out.z.end());
  out.s.assign(m, 0);
  for (unsigned v : out.z) {
    if (v < 1 || v > m) {
      throw std::domain_error("multiset_from_rows: entry out of range [1, m]");
    }
    ++out.s[v - 1];
  }
  out.mu = 1;
  for (unsigned sj : out.s) {
    for (unsigned f = 2; f <= sj; ++f) out.mu *= f;
  }
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt multichoose(unsigned m, unsigned n) {
  if (m < 1) throw std::domain_error("multichoose: m must be >= 1");
  if (m + n > 128) {
    throw std::domain_error("multichoose: m + n > 128 not supported");
  }
  return binomial(m + n - 1, n);
}

MixedRadixGrayIterator::MixedRadixGrayIterator(std::vector<unsigned> radices)
    : radices_(std::move(radices)), digits_(radices_.size(), 0) {
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (radices_[i] == 0) {
      throw std::domain_error("MixedRadixGrayIterator: radix must be >= 1");
    }
    if (radices_[i] >= 2) active_.push_back(i);
    tuple_count_ *= radices_[i];
  }
  directions_.assign(active_.size(), +1);
}

std::optional<MixedRadixGrayIterator::Step> MixedRadixGrayIterator::next() {
  if (emitted_ + 1 >= tuple_count_) return std::nullopt;
  // Reflected sequencing: advance the lowest active coordinate that can
  // move in its current direction, reversing the stuck ones on the way.
  for (std::size_t a = 0; a < active_.size(); ++a) {
    std::size_t idx = active_[a];
    int d = directions_[a];
    unsigned cur = digits_[idx];
    bool can_move = d > 0 ? cur + 1 < radices_[idx] : cur > 0;
    if (can_move) {
      digits_[idx] = cur + static_cast<unsigned>(d);
      ++emitted_;
      return Step{idx, d};
    }
    directions_[a] = -d;
  }
  return std::nullopt;  // unreachable when emitted_ is consistent
}

std::vector<MixedRadixGrayIterator::Step> guan_steps(
    const std::vector<unsigned>& s) {
  std::vector<unsigned> radices(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) radices[i] = s[i] + 1;
  MixedRadixGrayIterator it(std::move(radices));
  std::vector<MixedRadixGrayIterator::Step> steps;
  steps.reserve(it.tuple_count() > 0 ? it.tuple_count() - 1 : 0);
  while (auto step = it.next()) steps.push_back(*step);
  return steps;
}

std::optional<unsigned> BinaryGrayIterator::next() {
  ++step_;
  if (k_ >= 64 || step_ >= (std::uint64_t{1} << k_)) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(step_));
}

MultisetEnumerator::MultisetEnumerator(unsigned m, unsigned n)
    : m_(m), n_(n), z_(n, 1) {
  if (m < 1) throw std::domain_error("MultisetEnumerator: m must be >= 1");
}

std::optional<OutcomeMultiset> MultisetEnumerator::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return multiset_from_rows(z_, m_);
  }
  if (n_ == 0) {
    done_ = true;
    return std::nullopt;
  }
  // Lexicographic successor: bump the rightmost entry below m and reset
  // everything after it to the bumped value.
  std::size_t i = n_;
  while (i > 0 && z_[i - 1] == m_) --i;
  if (i == 0) {
    done_ = true;
    return std::nullopt;
  }
  ++z_[i - 1];
  for (std::size_t j = i; j < n_; ++j) z_[j] = z_[i - 1];
  return multiset_from_rows(z_, m_);
}

void enumerate_multisets(
    unsigned m, unsigned n,
    const std::function<void(const OutcomeMultiset&)>& fn) {
  MultisetEnumerator en(m, n);
  while (auto ms = en.next()) fn(*ms);
}

}  // namespace bosonex
