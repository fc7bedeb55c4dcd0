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

#include "coh/sampling.hpp"

#include <cmath>
#include <numeric>

#include "coh/errors.hpp"
#include "coh/rng.hpp"

namespace coh {

namespace {

constexpr std::uint64_t kTagState = 0x10;
constexpr std::uint64_t kTagChannel = 0x20;
constexpr std::uint64_t kTagEnsemble = 0x30;

DensityMatrix wishart_state(std::size_t dim, std::size_t rank,
                            SplitMix64& rng) {
  // G G^dagger from a d x rank complex Gaussian factor.
  std::vector<Complex> factor(dim * rank);
  for (Complex& z : factor) {
    const double re = rng.next_gaussian();
    const double im = rng.next_gaussian();
    z = Complex(re, im);
  }
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < rank; ++k) {
        s += factor[i * rank + k] * std::conj(factor[j * rank + k]);
      }
      m(i, j) = s;
    }
  }
  const double trace = m.trace().real();
  m *= 1.0 / trace;
  return validate_density(m);
}

std::vector<std::size_t> random_permutation(std::size_t dim, SplitMix64& rng) {
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = dim; i > 1; --i) {
    const std::size_t j = rng.next_u64() % i;
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace

DensityMatrix random_density(const SamplerConfig& config) {
  SplitMix64 rng(derive_seed(config.seed, kTagState,
                             static_cast<std::uint64_t>(config.dim)));
  switch (config.ensemble) {
    case StateEnsemble::ginibre_mixed:
      return wishart_state(config.dim, config.dim, rng);
    case StateEnsemble::haar_pure:
      return wishart_state(config.dim, 1, rng);
    case StateEnsemble::rank_limited:
      return wishart_state(config.dim, std::min(config.rank, config.dim), rng);
  }
  throw Error("unknown state ensemble");
}

KrausChannel random_incoherent_channel(std::size_t dim, std::size_t n_ops,
                                       std::uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, kTagChannel, dim * 1024 + n_ops));

  std::vector<std::vector<std::size_t>> rows(n_ops);
  for (std::size_t n = 0; n < n_ops; ++n) {
    rows[n] = random_permutation(dim, rng);
  }

  // Column j splits its unit weight across the n_ops operators.
  std::vector<ComplexMatrix> ops(n_ops, ComplexMatrix(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<double> w(n_ops);
    double norm2 = 0.0;
    for (double& x : w) {
      x = std::abs(rng.next_gaussian()) + 1e-3;
      norm2 += x * x;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (std::size_t n = 0; n < n_ops; ++n) {
      ops[n](rows[n][j], j) = w[n] * scale;
    }
  }
  return validate_channel(std::move(ops), 1e-12);
}

std::vector<std::pair<double, DensityMatrix>> random_ensemble(
    std::size_t dim, std::size_t size, std::uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, kTagEnsemble, size));
  const std::vector<double> weights = rng.next_dirichlet(size);

  std::vector<std::pair<double, DensityMatrix>> ensemble;
  ensemble.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    SamplerConfig config;
    config.dim = dim;
    config.seed = derive_seed(seed, kTagEnsemble + 1, k);
    config.ensemble = StateEnsemble::ginibre_mixed;
    ensemble.emplace_back(weights[k], random_density(config));
  }
  return ensemble;
}

}  // namespace coh
