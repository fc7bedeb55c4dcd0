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

#include "coh/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coh/errors.hpp"

namespace coh {

ComplexMatrix Spectrum::reconstruct() const {
  const std::size_t d = eigenvalues.size();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        s += eigenvectors(i, k) * eigenvalues[k] *
             std::conj(eigenvectors(j, k));
      }
      out(i, j) = s;
    }
  }
  return out;
}

namespace {

// One rotation annihilating a(p,q). Writes the plane rotation into a and
// accumulates it into v (v <- v * J, columns stay the eigenvector estimates).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // a(p,q) = r * phase

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0)
                       ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                       : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t d = a.dim();
  for (std::size_t k = 0; k < d; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(phase) * akq;
    a(k, q) = s * phase * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  a(p, p) = app * c * c - 2.0 * r * s * c + aqq * s * s;
  a(q, q) = app * s * s + 2.0 * r * s * c + aqq * c * c;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < d; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
    v(k, q) = s * phase * vkp + c * vkq;
  }
}

}  // namespace

Spectrum hermitian_eigensystem(const ComplexMatrix& m,
                               const JacobiOptions& options) {
  const std::size_t d = m.dim();

  // Work on the exactly Hermitian part; diagonal imaginary parts drop out.
  ComplexMatrix a(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(d);

  int sweep = 0;
  while (a.offdiagonal_norm() > options.offdiagonal_threshold) {
    if (sweep++ >= options.max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver: sweep budget exhausted");
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  Spectrum spec;
  spec.eigenvalues.resize(d);
  spec.eigenvectors = ComplexMatrix(d);
  for (std::size_t k = 0; k < d; ++k) {
    spec.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < d; ++i) {
      spec.eigenvectors(i, k) = v(i, order[k]);
    }
  }
  return spec;
}

}  // namespace coh
