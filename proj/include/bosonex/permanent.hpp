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

#ifndef BOSONEX_PERMANENT_HPP
#define BOSONEX_PERMANENT_HPP

#include <cstdint>
#include <vector>

#include "bosonex/complex_matrix.hpp"

namespace bosonex {

struct PermanentOptions {
  /// Kahan-compensated accumulation of the inclusion-exclusion sum.
  /// Ryser-type sums cancel catastrophically as k grows; double
  /// precision is supported up to k ~ 30 either way.
  bool compensated = false;
  /// When non-null, receives the number of Gray/Guan steps performed.
  std::uint64_t* steps = nullptr;
};

/// Permanent by direct enumeration of all k! permutations.  Oracle
/// only: refuses k > 10.
Complex permanent_naive(const ComplexMatrix& b);

/// Permanent of a square matrix by inclusion-exclusion over row
/// subsets, iterated in binary Gray order with an O(k) column-sum
/// update per subset.  O(k 2^k) time, k <= 30.
Complex permanent_ryser(const ComplexMatrix& b,
                        const PermanentOptions& opts = {});

/**
 * @brief Permanent of a square matrix with repeated rows.
 *
 * The matrix is given implicitly: row nu of `base` appears with
 * multiplicity `s[nu]`, and sum(s) must equal the column count k.  The
 * inclusion-exclusion sum runs over the tuples 0 <= r_nu <= s_nu in
 * Guan-code order, so each of the prod(s_nu + 1) - 1 steps costs O(k):
 * one running column sum changes by a single row, the binomial weight
 * prod C(s_nu, r_nu) updates multiplicatively, and the signed product
 * of the k column sums is accumulated.
 *
 * @param base m x k matrix of distinct rows.
 * @param s    per-row multiplicities, sum(s) == k.
 */
Complex permanent_repeated(const ComplexMatrix& base,
                           const std::vector<unsigned>& s,
                           const PermanentOptions& opts = {});

/**
 * @brief All k minor permanents of a repeated-row matrix, jointly.
 *
 * Let B be the k x k matrix whose first k - 1 rows are given by `base`
 * (first k columns) with multiplicities `s_minor`, sum(s_minor) == k - 1.
 * Entry l of the result is the permanent of B with row k and column
 * l + 1 removed.  A single Guan walk over prod(s_minor_nu + 1) tuples
 * covers all k values: per tuple the column sums w_j update in O(k)
 * and forward/backward cumulative products give every
 * prod_{j != l} w_j in O(k) combined.
 *
 * @param base    m x c matrix, c >= k; only the first k columns are read.
 * @param s_minor multiplicities of the retained rows, sum == k - 1.
 * @param k       column count of the parent matrix (result length).
 */
std::vector<Complex> minor_permanents(const ComplexMatrix& base,
                                      const std::vector<unsigned>& s_minor,
                                      std::size_t k,
                                      const PermanentOptions& opts = {});

/// Permanent from its expansion along the last row: the dot product of
/// the row with the matching minor permanents.
Complex laplace_permanent(const std::vector<Complex>& row,
                          const std::vector<Complex>& minors);

}  // namespace bosonex

#endif  // BOSONEX_PERMANENT_HPP
