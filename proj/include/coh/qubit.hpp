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
#include <utility>

#include "coh/density_matrix.hpp"

namespace coh {

/// Qubit state [[a, conj(b)], [b, 1-a]]. Physical iff |b|^2 <= a(1-a);
/// every closed form below depends on b only through |b|.
struct QubitParams {
  double a = 0.5;
  Complex b = 0.0;
};

inline constexpr double kQubitPositivityTol = 1e-12;

/// Throws PositivityViolationError when |b|^2 > a(1-a) + tol or a is
/// outside [0, 1].
DensityMatrix qubit_state(const QubitParams& params,
                          double tol = kQubitPositivityTol);

/// Eigenvalues 1/2 +- (1/2) sqrt(1 + 4|b|^2 + 4a^2 - 4a), larger first.
std::pair<double, double> qubit_eigenvalues(const QubitParams& params);

/// Order-2 Renyi coherence in closed form:
/// 2 log2( sqrt(a^2 + |b|^2) + sqrt(|b|^2 + (1-a)^2) ), in bits.
double qubit_c2(const QubitParams& params);

/// Maximum of qubit_c2 over admissible b at fixed a:
/// 2 log2( sqrt(a) + sqrt(1-a) ).
double qubit_c2_max(double a);

struct QubitTradeoff {
  double lhs = 0.0;  // ln2 * C_2 + M, natural-log scale
  double rhs = 0.0;  // 2 sqrt(a (1-a))
};

/// Coherence-mixedness trade-off point. The bound lhs < rhs holds strictly
/// in the interior of the parameter region; the degenerate boundary points
/// (a in {0,1}, b=0, and a=1/2, b=0) reach equality and are reported
/// verbatim rather than adjusted.
QubitTradeoff qubit_tradeoff(const QubitParams& params);

}  // namespace coh
