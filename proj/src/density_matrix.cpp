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

#include "coh/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "coh/errors.hpp"

namespace coh {

DensityMatrix::DensityMatrix(ComplexMatrix m, Spectrum s)
    : mat_(std::move(m)), spectrum_(std::move(s)) {}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> diag(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    diag[i] = std::max(0.0, mat_(i, i).real());
  }
  return diag;
}

DensityMatrix validate_density(const ComplexMatrix& m, double tol) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermiticityTol) {
    std::ostringstream msg;
    msg << "not Hermitian: max |a_ij - conj(a_ji)| = " << defect;
    throw NotHermitianError(msg.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr.imag()) > kHermiticityTol ||
      std::abs(tr.real() - 1.0) > tol) {
    std::ostringstream msg;
    msg << "trace is " << tr.real() << " + " << tr.imag() << "i, expected 1";
    throw TraceNotOneError(msg.str());
  }

  Spectrum spec = hermitian_eigensystem(m);
  double sum = 0.0;
  for (double& lambda : spec.eigenvalues) {
    if (lambda < -tol) {
      std::ostringstream msg;
      msg << "negative eigenvalue " << lambda << " below -" << tol;
      throw NotPositiveError(msg.str());
    }
    if (lambda < 0.0) lambda = 0.0;
    sum += lambda;
  }
  if (sum <= 0.0) {
    throw NotPositiveError("all eigenvalues vanish after clamping");
  }
  for (double& lambda : spec.eigenvalues) lambda /= sum;

  ComplexMatrix rebuilt = spec.reconstruct();
  return DensityMatrix(std::move(rebuilt), std::move(spec));
}

ComplexMatrix matrix_power(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0)) {
    throw AlphaOutOfRangeError("matrix_power requires alpha > 0");
  }
  const Spectrum& spec = rho.spectrum();
  Spectrum powered = spec;
  for (double& lambda : powered.eigenvalues) {
    lambda = (lambda > 0.0) ? std::pow(lambda, alpha) : 0.0;
  }
  return powered.reconstruct();
}

double purity(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.spectrum().eigenvalues) s += lambda * lambda;
  return s;
}

double mixedness(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  if (d < 2) {
    throw DimensionTooSmallError("mixedness is undefined for d = 1");
  }
  return (static_cast<double>(d) / (d - 1)) * (1.0 - purity(rho));
}

DensityMatrix direct_sum(const DensityMatrix& rho1, const DensityMatrix& rho2,
                         double p1) {
  if (p1 < 0.0 || p1 > 1.0) {
    throw Error("direct_sum: p1 must lie in [0, 1]");
  }
  const std::size_t d1 = rho1.dim();
  const std::size_t d2 = rho2.dim();
  ComplexMatrix block(d1 + d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      block(i, j) = p1 * rho1.matrix()(i, j);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      block(d1 + i, d1 + j) = (1.0 - p1) * rho2.matrix()(i, j);
  return validate_density(block);
}

}  // namespace coh
