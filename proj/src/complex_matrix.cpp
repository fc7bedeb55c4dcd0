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

#include "coh/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "coh/errors.hpp"

namespace coh {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw DimensionMismatchError("entry count does not match dim x dim");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::offdiagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst,
                       std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) {
    throw DimensionMismatchError("max_abs_diff: dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DimensionMismatchError("operator+=: dim");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DimensionMismatchError("operator-=: dim");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw DimensionMismatchError("operator*: dim");
  const std::size_t d = lhs.dim_;
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

}  // namespace coh
