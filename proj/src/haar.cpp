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

#include "bosonex/haar.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace bosonex {

ComplexMatrix haar_unitary(std::size_t m, RandomStream& rng) {
  if (m < 1) throw std::domain_error("haar_unitary: m must be >= 1");
  const auto n = static_cast<Eigen::Index>(m);

  Eigen::MatrixXcd ginibre(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) ginibre(i, j) = rng.complex_normal();
  }

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    double mag = std::abs(d);
    std::complex<double> phase = mag > 0.0 ? d / mag : 1.0;
    q.col(j) *= phase;
  }

  ComplexMatrix u(m, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      u(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = q(i, j);
    }
  }
  if (unitarity_residual(u) > 1e-12) {
    throw std::runtime_error("haar_unitary: unitarity residual above 1e-12");
  }
  return u;
}

double unitarity_residual(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("unitarity_residual: matrix must be square");
  }
  const std::size_t m = u.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex dot = 0.0;
      for (std::size_t l = 0; l < m; ++l) dot += u(i, l) * std::conj(u(j, l));
      if (i == j) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

}  // namespace bosonex
