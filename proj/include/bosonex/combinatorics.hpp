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

#ifndef BOSONEX_COMBINATORICS_HPP
#define BOSONEX_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bosonex {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Size-n multiset over modes 1..m, stored both as the sorted outcome
/// array z and as the per-mode multiplicity array s.
struct OutcomeMultiset {
  std::vector<unsigned> z;  // n values in [1, m], non-decreasing
  std::vector<unsigned> s;  // m multiplicities, sum n
  std::uint64_t mu = 1;     // prod_j s_j!

  std::size_t num_modes() const { return s.size(); }
  std::size_t size() const { return z.size(); }

  bool operator==(const OutcomeMultiset& other) const {
    return z == other.z && s == other.s;
  }
};

/// Build an OutcomeMultiset from an unsorted array of 1-based mode
/// indices.  Throws std::domain_error on an entry outside [1, m].
OutcomeMultiset multiset_from_rows(const std::vector<unsigned>& r, unsigned m);

/// binomial(m + n - 1, n): the number of size-n multisets over [m].
/// Supported for m + n <= 128; larger arguments throw std::domain_error.
BigInt multichoose(unsigned m, unsigned n);

BigInt binomial(unsigned n, unsigned k);

/// Walks a mixed-radix tuple space so that successive tuples differ by
/// +/-1 in exactly one coordinate (reflected mixed-radix Gray sequence,
/// i.e. a Guan code).  Starts at the all-zeros tuple; coordinates with
/// radix 1 never move and are skipped internally.
class MixedRadixGrayIterator {
 public:
  struct Step {
    std::size_t index;  // coordinate that changed
    int delta;          // +1 or -1
  };

  explicit MixedRadixGrayIterator(std::vector<unsigned> radices);

  /// Next step of the walk, or nullopt once all tuples have been visited.
  std::optional<Step> next();

  const std::vector<unsigned>& current() const { return digits_; }

  /// Total number of tuples in the walk: prod of the radices.
  std::uint64_t tuple_count() const { return tuple_count_; }

 private:
  std::vector<unsigned> radices_;
  std::vector<unsigned> digits_;
  std::vector<int> directions_;       // per active coordinate
  std::vector<std::size_t> active_;   // coordinates with radix >= 2
  std::uint64_t tuple_count_ = 1;
  std::uint64_t emitted_ = 0;
};

/// Guan-code steps for the tuple space 0 <= r_nu <= s_nu.
/// The emitted stream has length prod(s_nu + 1) - 1.
std::vector<MixedRadixGrayIterator::Step> guan_steps(
    const std::vector<unsigned>& s);

/// Binary Gray walk over all 2^k subsets of [k]; each step toggles one
/// element (step t toggles the lowest set bit position of t).
class BinaryGrayIterator {
 public:
  explicit BinaryGrayIterator(unsigned k) : k_(k) {}

  /// Index of the element toggled next, or nullopt when done.
  std::optional<unsigned> next();

 private:
  unsigned k_;
  std::uint64_t step_ = 0;
};

/// Enumerates Phi_{m,n} in lexicographic order of z.
class MultisetEnumerator {
 public:
  MultisetEnumerator(unsigned m, unsigned n);
  std::optional<OutcomeMultiset> next();

 private:
  unsigned m_;
  unsigned n_;
  std::vector<unsigned> z_;
  bool done_ = false;
  bool first_ = true;
};

/// Calls fn once for every multiset in Phi_{m,n}, lexicographic order.
void enumerate_multisets(unsigned m, unsigned n,
                         const std::function<void(const OutcomeMultiset&)>& fn);

}  // namespace bosonex

#endif  // BOSONEX_COMBINATORICS_HPP
