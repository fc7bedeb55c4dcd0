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

#include <vector>

#include "coh/complex_matrix.hpp"
#include "coh/eigensolver.hpp"

namespace coh {

inline constexpr double kDefaultValidationTol = 1e-8;
inline constexpr double kHermiticityTol = 1e-12;

/// A validated quantum state: Hermitian, positive semidefinite, unit trace.
/// Construction goes through validate_density, which clamps eigenvalue noise
/// in [-tol, 0) to zero, renormalizes to unit trace and rebuilds the entries
/// from the spectrum, so the cached eigensystem reconstructs the stored
/// matrix to working precision.
class DensityMatrix {
 public:
  std::size_t dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const Spectrum& spectrum() const { return spectrum_; }

  /// Real diagonal (populations in the fixed incoherent basis).
  std::vector<double> diagonal() const;

  friend DensityMatrix validate_density(const ComplexMatrix& m, double tol);

 private:
  DensityMatrix(ComplexMatrix m, Spectrum s);

  ComplexMatrix mat_;
  Spectrum spectrum_;
};

/// Validates m as a density matrix. Throws NotHermitianError,
/// NotPositiveError (eigenvalue < -tol), TraceNotOneError (|Tr - 1| > tol),
/// or ConvergenceError from the eigensolver.
DensityMatrix validate_density(const ComplexMatrix& m,
                               double tol = kDefaultValidationTol);

/// The cached eigendecomposition (computed at validation).
inline const Spectrum& eigh(const DensityMatrix& rho) {
  return rho.spectrum();
}

/// rho^alpha = V diag(lambda_i^alpha) V^dagger with 0^alpha := 0, alpha > 0.
ComplexMatrix matrix_power(const DensityMatrix& rho, double alpha);

/// Tr(rho^2), in [1/d, 1].
double purity(const DensityMatrix& rho);

/// Normalized linear entropy (d/(d-1)) (1 - Tr(rho^2)); requires d >= 2.
double mixedness(const DensityMatrix& rho);

/// Block-diagonal mixture p1 rho1 (+) (1-p1) rho2 on the direct-sum space.
DensityMatrix direct_sum(const DensityMatrix& rho1, const DensityMatrix& rho2,
                         double p1);

}  // namespace coh
