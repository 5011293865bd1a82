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

#ifndef BOSONEX_RANDOM_HPP
#define BOSONEX_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace bosonex {

/// SplitMix64 finalizer; used to derive engine seeds and substreams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seedable random stream, splittable by index.
///
/// Seed-to-output mapping (stable across builds of this project):
///   RandomStream(seed)        -> std::mt19937_64 seeded with splitmix64(seed)
///   substream(seed, i)        -> std::mt19937_64 seeded with
///                                splitmix64(seed ^ splitmix64(i + 1))
///   uniform()                 -> (next_u64() >> 11) * 2^-53, in [0, 1)
///   normal()                  -> Box-Muller on two uniform() draws,
///                                the pair's second value cached
///   uniform_index(bound)      -> unbiased rejection sampling on next_u64()
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(seed ^ splitmix64(index + 1));
  }

  std::uint64_t next_u64() { return gen_(); }

  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double normal();

  /// Standard complex Gaussian: E|z|^2 = 1.
  std::complex<double> complex_normal() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    double re = normal();
    double im = normal();
    return {re * inv_sqrt2, im * inv_sqrt2};
  }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bosonex

#endif  // BOSONEX_RANDOM_HPP
