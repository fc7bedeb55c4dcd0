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

#include "coh/channels.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "coh/errors.hpp"

namespace coh {

namespace {

bool at_most_one_nonzero_per_column(const ComplexMatrix& k) {
  for (std::size_t j = 0; j < k.dim(); ++j) {
    int nonzero = 0;
    for (std::size_t i = 0; i < k.dim(); ++i) {
      if (std::abs(k(i, j)) > kStructuralZeroTol && ++nonzero > 1) {
        return false;
      }
    }
  }
  return true;
}

ComplexMatrix conjugate_by(const ComplexMatrix& k, const ComplexMatrix& x) {
  return k * x * k.adjoint();
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, bool incoherent)
    : dim_(ops.front().dim()),
      operators_(std::move(ops)),
      incoherent_(incoherent) {}

KrausChannel validate_channel(std::vector<ComplexMatrix> ops, double tol) {
  if (ops.empty()) {
    throw DimensionMismatchError("channel needs at least one Kraus operator");
  }
  const std::size_t d = ops.front().dim();
  for (const ComplexMatrix& k : ops) {
    if (k.dim() != d) {
      throw DimensionMismatchError("Kraus operators have mixed dimensions");
    }
  }

  ComplexMatrix completeness(d);
  for (const ComplexMatrix& k : ops) completeness += k.adjoint() * k;
  const double residual = completeness.max_abs_diff(ComplexMatrix::identity(d));
  if (residual > tol) {
    std::ostringstream msg;
    msg << "sum K^dagger K differs from identity by " << residual;
    throw IncompleteChannelError(msg.str());
  }

  bool incoherent = true;
  for (const ComplexMatrix& k : ops) {
    if (!at_most_one_nonzero_per_column(k)) {
      incoherent = false;
      break;
    }
  }
  return KrausChannel(std::move(ops), incoherent);
}

DensityMatrix apply_channel(const KrausChannel& channel,
                            const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    throw DimensionMismatchError("channel and state dimensions differ");
  }
  ComplexMatrix out(channel.dim());
  for (const ComplexMatrix& k : channel.operators()) {
    out += conjugate_by(k, rho.matrix());
  }
  return validate_density(out);
}

std::vector<SelectiveOutcome> selective_outcomes(
    const KrausChannel& channel, const DensityMatrix& rho, double p_floor,
    std::vector<std::size_t>* omitted) {
  if (channel.dim() != rho.dim()) {
    throw DimensionMismatchError("channel and state dimensions differ");
  }
  std::vector<SelectiveOutcome> outcomes;
  for (std::size_t n = 0; n < channel.operators().size(); ++n) {
    ComplexMatrix branch = conjugate_by(channel.operators()[n], rho.matrix());
    const double p = branch.trace().real();
    if (p < p_floor) {
      if (omitted) omitted->push_back(n);
      continue;
    }
    branch *= 1.0 / p;
    outcomes.push_back({p, validate_density(branch), n});
  }
  return outcomes;
}

}  // namespace coh
