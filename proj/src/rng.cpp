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

#include "coh/rng.hpp"

#include <cmath>
#include <numbers>

namespace coh {

double SplitMix64::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u = next_open_double();
  const double v = next_open_double();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

std::vector<double> SplitMix64::next_dirichlet(std::size_t m) {
  std::vector<double> w(m);
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(next_open_double());
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                          std::uint64_t index) {
  SplitMix64 mixer(seed ^ (tag * 0xd1342543de82ef95ULL) ^
                   (index * 0x2545f4914f6cdd1dULL));
  return mixer.next_u64();
}

}  // namespace coh
