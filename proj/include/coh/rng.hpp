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
#include <string_view>
#include <vector>

namespace coh {

/// Identifier recorded in audit artifacts so runs replay across platforms.
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// Counter-based splitmix64 stream: output k is a pure function of
/// (seed, k), so parallel consumers can partition the index space without
/// sharing state. Used everywhere randomness is needed; no libstdc++
/// distributions, to keep draws bit-reproducible across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1), safe as a log/Box-Muller argument.
  double next_open_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (implemented here rather than through
  /// std::normal_distribution, whose output is toolchain-dependent).
  double next_gaussian();

  /// Dirichlet(1) point on the m-simplex (uniform over the simplex).
  std::vector<double> next_dirichlet(std::size_t m);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Deterministic stream splitting: a child seed for (seed, tag, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                          std::uint64_t index);

}  // namespace coh
