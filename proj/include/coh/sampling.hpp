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

#include <cstdint>
#include <utility>
#include <vector>

#include "coh/channels.hpp"
#include "coh/density_matrix.hpp"

namespace coh {

enum class StateEnsemble { ginibre_mixed, haar_pure, rank_limited };

/// Seeded recipe for drawing random states. rank is only read for
/// rank_limited draws.
struct SamplerConfig {
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  StateEnsemble ensemble = StateEnsemble::ginibre_mixed;
  std::size_t rank = 1;
};

/// Draws a random state. ginibre_mixed returns G G^dagger / Tr(G G^dagger)
/// with i.i.d. standard complex Gaussian entries; rank_limited uses a
/// d x rank factor; haar_pure a normalized Gaussian vector. Deterministic
/// in the config.
DensityMatrix random_density(const SamplerConfig& config);

/// Random incoherent channel built from weighted permutations: operator n
/// places weight w(n, j) at row pi_n(j) of column j, with the column weights
/// normalized so sum_n K_n^dagger K_n = I exactly by construction. Every
/// operator has at most one nonzero per row and per column.
KrausChannel random_incoherent_channel(std::size_t dim, std::size_t n_ops,
                                       std::uint64_t seed);

/// Random ensemble for mixing tests: Dirichlet(1) weights over
/// ginibre-mixed states. Deterministic in the seed.
std::vector<std::pair<double, DensityMatrix>> random_ensemble(
    std::size_t dim, std::size_t size, std::uint64_t seed);

}  // namespace coh
