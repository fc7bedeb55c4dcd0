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

namespace coh {

/// Eigensystem of a Hermitian matrix: eigenvalues sorted descending,
/// eigenvectors as the matching orthonormal columns of `eigenvectors`.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// V diag(eigenvalues) V^dagger.
  ComplexMatrix reconstruct() const;
};

struct JacobiOptions {
  double offdiagonal_threshold = 1e-12;  // Frobenius norm of off-diagonal part
  int max_sweeps = 100;
};

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Only the lower/upper symmetrized content matters; the caller
/// is expected to pass a matrix with negligible hermiticity defect.
/// Throws ConvergenceError if the sweep budget is exhausted.
Spectrum hermitian_eigensystem(const ComplexMatrix& m,
                               const JacobiOptions& options = {});

}  // namespace coh
