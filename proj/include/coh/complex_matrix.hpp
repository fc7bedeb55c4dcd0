// Copyright 2026 The cohlib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace coh {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The workhorse value type for
/// states, Kraus operators and eigenvector tables. Dimensions stay at desk
/// scale (d of a few dozen), so no blocking or sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// Frobenius norm of the strictly off-diagonal part.
  double offdiagonal_norm() const;
  /// max_ij |a_ij - conj(a_ji)|, zero for exactly Hermitian input.
  double hermiticity_defect() const;
  /// max_ij |a_ij - b_ij|.
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

}  // namespace coh
