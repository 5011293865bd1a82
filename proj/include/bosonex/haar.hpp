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

#ifndef BOSONEX_HAAR_HPP
#define BOSONEX_HAAR_HPP

#include "bosonex/complex_matrix.hpp"
#include "bosonex/random.hpp"

namespace bosonex {

/// Haar random m x m unitary: QR of a complex Ginibre matrix, with each
/// column of Q multiplied by the phase of the matching diagonal entry
/// of R.  The phase correction makes the distribution exactly Haar.
/// Throws std::runtime_error if the unitarity residual
/// max |U U^dagger - I| exceeds 1e-12.
ComplexMatrix haar_unitary(std::size_t m, RandomStream& rng);

/// max_{i,j} |(U U^dagger - I)_{ij}|
double unitarity_residual(const ComplexMatrix& u);

}  // namespace bosonex

#endif  // BOSONEX_HAAR_HPP
