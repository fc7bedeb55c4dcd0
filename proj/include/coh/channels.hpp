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

#include <cstddef>
#include <vector>

#include "coh/complex_matrix.hpp"
#include "coh/density_matrix.hpp"

namespace coh {

inline constexpr double kDefaultChannelTol = 1e-8;
inline constexpr double kDefaultProbabilityFloor = 1e-12;
// Entries with magnitude above this count as structurally nonzero when
// classifying operators as incoherent.
inline constexpr double kStructuralZeroTol = 1e-12;

/// A completeness-validated Kraus channel. `incoherent` is set when every
/// operator has at most one nonzero entry per column, which guarantees that
/// diagonal states map to diagonal states under each K_n . K_n^dagger.
/// Channels incoherent in a subtler sense are conservatively flagged false.
class KrausChannel {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  bool incoherent() const { return incoherent_; }

  friend KrausChannel validate_channel(std::vector<ComplexMatrix> ops,
                                       double tol);

 private:
  KrausChannel(std::vector<ComplexMatrix> ops, bool incoherent);

  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> operators_;
  bool incoherent_ = false;
};

/// One branch of a selective measurement: p_n = Tr(K_n rho K_n^dagger) and
/// the normalized post-measurement state.
struct SelectiveOutcome {
  double probability = 0.0;
  DensityMatrix state;
  std::size_t index = 0;
};

/// Checks sum_n K_n^dagger K_n = I entrywise within tol. Throws
/// IncompleteChannelError or DimensionMismatchError.
KrausChannel validate_channel(std::vector<ComplexMatrix> ops,
                              double tol = kDefaultChannelTol);

/// The full channel action sum_n K_n rho K_n^dagger, revalidated as a state.
DensityMatrix apply_channel(const KrausChannel& channel,
                            const DensityMatrix& rho);

/// Per-outcome probabilities and normalized states. Outcomes with
/// probability below p_floor are omitted; their indices are appended to
/// *omitted when provided.
std::vector<SelectiveOutcome> selective_outcomes(
    const KrausChannel& channel, const DensityMatrix& rho,
    double p_floor = kDefaultProbabilityFloor,
    std::vector<std::size_t>* omitted = nullptr);

}  // namespace coh
