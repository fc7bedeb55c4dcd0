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

#include "coh/qubit.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "coh/errors.hpp"

namespace coh {

namespace {

void require_physical(const QubitParams& p, double tol) {
  const double b2 = std::norm(p.b);
  if (p.a < -tol || p.a > 1.0 + tol || b2 > p.a * (1.0 - p.a) + tol) {
    std::ostringstream msg;
    msg << "|b|^2 = " << b2 << " exceeds a(1-a) = " << p.a * (1.0 - p.a);
    throw PositivityViolationError(msg.str());
  }
}

}  // namespace

DensityMatrix qubit_state(const QubitParams& params, double tol) {
  require_physical(params, tol);
  ComplexMatrix m(2);
  m(0, 0) = params.a;
  m(0, 1) = std::conj(params.b);
  m(1, 0) = params.b;
  m(1, 1) = 1.0 - params.a;
  return validate_density(m);
}

std::pair<double, double> qubit_eigenvalues(const QubitParams& params) {
  const double b2 = std::norm(params.b);
  const double disc =
      std::max(0.0, 1.0 + 4.0 * b2 + 4.0 * params.a * params.a - 4.0 * params.a);
  const double half_gap = 0.5 * std::sqrt(disc);
  return {0.5 + half_gap, 0.5 - half_gap};
}

double qubit_c2(const QubitParams& params) {
  const double b2 = std::norm(params.b);
  const double a = params.a;
  return 2.0 * std::log2(std::sqrt(a * a + b2) +
                         std::sqrt(b2 + (1.0 - a) * (1.0 - a)));
}

double qubit_c2_max(double a) {
  return 2.0 * std::log2(std::sqrt(a) + std::sqrt(1.0 - a));
}

QubitTradeoff qubit_tradeoff(const QubitParams& params) {
  require_physical(params, kQubitPositivityTol);
  const double a = params.a;
  const double b2 = std::norm(params.b);
  const double purity = a * a + (1.0 - a) * (1.0 - a) + 2.0 * b2;
  const double mixedness = 2.0 * (1.0 - purity);
  QubitTradeoff point;
  point.lhs = std::numbers::ln2 * qubit_c2(params) + mixedness;
  point.rhs = 2.0 * std::sqrt(std::max(0.0, a * (1.0 - a)));
  return point;
}

}  // namespace coh
