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

#include <cmath>
#include <complex>
#include <vector>

#include "coh/complex_matrix.hpp"
#include "coh/density_matrix.hpp"

namespace coh::test {

inline ComplexMatrix from_rows(
    const std::vector<std::vector<Complex>>& rows) {
  ComplexMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

/// The 3-level matrix (1/4) [[1,0,1],[0,2,0],[1,0,1]] as raw entries.
inline ComplexMatrix counterexample_entries() {
  return from_rows({{0.25, 0.0, 0.25}, {0.0, 0.5, 0.0}, {0.25, 0.0, 0.25}});
}

/// |+><+| for a qubit.
inline DensityMatrix plus_state() {
  return validate_density(from_rows({{0.5, 0.5}, {0.5, 0.5}}));
}

/// |-><-| for a qubit.
inline DensityMatrix minus_state() {
  return validate_density(from_rows({{0.5, -0.5}, {-0.5, 0.5}}));
}

/// Independent quadratic-power oracle: plain entrywise matrix square.
inline ComplexMatrix naive_square(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += m(i, k) * m(k, j);
      out(i, j) = s;
    }
  return out;
}

}  // namespace coh::test
