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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "coh/density_matrix.hpp"
#include "coh/errors.hpp"
#include "coh/measures.hpp"
#include "coh/sampling.hpp"
#include "test_support.hpp"

using namespace coh;
using test::counterexample_entries;
using test::from_rows;

namespace {

// High-precision references, frozen from exact evaluation of the closed
// forms; value comments give the generating expression.
constexpr double kC2Counterexample = 0.54310660632722395;   // 2 log2(1/2 + sqrt(1/2))
constexpr double kLog2FourThirds = 0.41503749927884382;     // log2(4/3)
constexpr double kTsallis2Counterexample = 0.45710678118654752;  // (1/2 + sqrt(1/2))^2 - 1
constexpr double kLog2Three = 1.5849625007211562;
constexpr double kUpperBoundCounterexample = 0.58496250072115618;  // log2 3 - 1

DensityMatrix ginibre(std::size_t dim, std::uint64_t seed) {
  SamplerConfig config;
  config.dim = dim;
  config.seed = seed;
  return random_density(config);
}

DensityMatrix counterexample() {
  return validate_density(counterexample_entries());
}

}  // namespace

TEST_CASE("alpha domain is enforced") {
  const DensityMatrix rho = test::plus_state();
  for (double alpha : {-1.0, 0.0, 1.0, 2.5}) {
    CHECK_THROWS_AS(renyi_coherence(rho, alpha), AlphaOutOfRangeError);
    CHECK_THROWS_AS(tsallis_coherence(rho, alpha), AlphaOutOfRangeError);
    CHECK_THROWS_AS(renyi_relative_entropy(rho, rho, alpha),
                    AlphaOutOfRangeError);
  }
}

TEST_CASE("relative entropy of a state with itself vanishes") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = ginibre(3, seed);
    CHECK(std::abs(renyi_relative_entropy(rho, rho, 0.5)) < 1e-10);
  }
}

TEST_CASE("relative entropy reference point and support rules") {
  const DensityMatrix plus = test::plus_state();
  const std::vector<double> half(2, 0.5);
  const DensityMatrix mixed = validate_density(ComplexMatrix::diagonal(half));
  CHECK(renyi_relative_entropy(plus, mixed, 2.0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> basis{1.0, 0.0};
  const DensityMatrix ground = validate_density(ComplexMatrix::diagonal(basis));
  CHECK(std::isinf(renyi_relative_entropy(plus, ground, 2.0)));

  const DensityMatrix qutrit = ginibre(3, 1);
  CHECK_THROWS_AS(renyi_relative_entropy(plus, qutrit, 0.5),
                  DimensionMismatchError);
}

TEST_CASE("relative entropy is nonnegative over random pairs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DensityMatrix rho = ginibre(3, seed);
    const DensityMatrix delta = ginibre(3, seed + 1000);
    for (double alpha : {0.3, 0.7, 1.5, 2.0}) {
      CHECK(renyi_relative_entropy(rho, delta, alpha) > -1e-9);
    }
  }
}

TEST_CASE("diagonal moments reference values") {
  const std::vector<double> m2 = diagonal_moments(counterexample(), 2.0);
  CHECK(m2[0] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(m2[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(m2[2] == doctest::Approx(0.125).epsilon(1e-12));

  const std::vector<double> q{0.6, 0.3, 0.1};
  const DensityMatrix diag = validate_density(ComplexMatrix::diagonal(q));
  for (double alpha : {0.4, 1.7}) {
    const std::vector<double> m = diagonal_moments(diag, alpha);
    for (std::size_t i = 0; i < q.size(); ++i) {
      CHECK(m[i] == doctest::Approx(std::pow(q[i], alpha)).epsilon(1e-12));
    }
  }

  const std::vector<double> mp = diagonal_moments(test::plus_state(), 0.5);
  CHECK(mp[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mp[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("renyi coherence closed-form reference values") {
  CHECK(renyi_coherence(counterexample(), 2.0).value ==
        doctest::Approx(kC2Counterexample).epsilon(1e-12));
  CHECK(renyi_coherence(counterexample(), 0.5).value ==
        doctest::Approx(kLog2FourThirds).epsilon(1e-12));

  const DensityMatrix plus = test::plus_state();
  for (double alpha : {0.3, 0.9, 1.2, 2.0}) {
    CHECK(renyi_coherence(plus, alpha).value ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  ComplexMatrix mc3(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) mc3(i, j) = 1.0 / 3.0;
  CHECK(renyi_coherence(validate_density(mc3), 1.5).value ==
        doctest::Approx(kLog2Three).epsilon(1e-12));

  const std::vector<double> q{0.2, 0.5, 0.3};
  const DensityMatrix diag = validate_density(ComplexMatrix::diagonal(q));
  CHECK(std::abs(renyi_coherence(diag, 0.5).value) < 1e-12);
}

TEST_CASE("optimal incoherent state matches the fixed-state reference at order 2") {
  const SimplexPoint point = optimal_incoherent_state(counterexample(), 2.0);
  CHECK(point.weights[0] == doctest::Approx(0.29289321881345248).epsilon(1e-12));
  CHECK(point.weights[1] == doctest::Approx(0.41421356237309505).epsilon(1e-12));
  CHECK(point.weights[2] == doctest::Approx(0.29289321881345248).epsilon(1e-12));

  // At other orders the minimizer is order-dependent: q proportional to
  // ((1/2)^(1/alpha), 1, (1/2)^(1/alpha)).
  const SimplexPoint half = optimal_incoherent_state(counterexample(), 0.5);
  CHECK(half.weights[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(half.weights[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  const std::vector<double> q{0.6, 0.3, 0.1};
  const DensityMatrix diag = validate_density(ComplexMatrix::diagonal(q));
  for (double alpha : {0.5, 2.0}) {
    const SimplexPoint self = optimal_incoherent_state(diag, alpha);
    for (std::size_t i = 0; i < q.size(); ++i) {
      CHECK(self.weights[i] == doctest::Approx(q[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("optimizer plugged into the divergence reproduces the coherence") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = ginibre(2 + seed % 3, seed + 50);
    for (double alpha : {0.3, 0.8, 1.5, 2.0}) {
      const CoherenceReport report = renyi_coherence(rho, alpha);
      const DensityMatrix sigma = validate_density(
          ComplexMatrix::diagonal(report.optimizer.weights));
      CHECK(renyi_relative_entropy(rho, sigma, alpha) ==
            doctest::Approx(report.value).epsilon(1e-10));
    }
  }
}

TEST_CASE("brute force agrees with the closed form") {
  BruteForceOptions options;
  options.restarts = 8;  // smaller budget at unit scale; acceptance runs 20

  const CoherenceReport fixed =
      renyi_coherence_bruteforce(counterexample(), 2.0, options);
  CHECK(fixed.value == doctest::Approx(kC2Counterexample).epsilon(1e-7));
  CHECK(fixed.method == CoherenceMethod::brute_force);

  const std::vector<double> q{0.2, 0.5, 0.3};
  const DensityMatrix diag = validate_density(ComplexMatrix::diagonal(q));
  CHECK(std::abs(renyi_coherence_bruteforce(diag, 0.5, options).value) < 1e-9);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = ginibre(2, seed + 300);
    for (double alpha : {0.5, 1.5}) {
      const double closed = renyi_coherence(rho, alpha).value;
      const double brute =
          renyi_coherence_bruteforce(rho, alpha, options).value;
      CHECK(std::abs(closed - brute) < 1e-6);
    }
  }
}

TEST_CASE("brute force minimizer matches the closed-form weights") {
  BruteForceOptions options;
  options.restarts = 8;
  const DensityMatrix rho = ginibre(3, 77);
  const SimplexPoint closed = optimal_incoherent_state(rho, 0.7);
  const CoherenceReport brute = renyi_coherence_bruteforce(rho, 0.7, options);
  for (std::size_t i = 0; i < closed.weights.size(); ++i) {
    CHECK(std::abs(closed.weights[i] - brute.optimizer.weights[i]) < 1e-4);
  }
}

TEST_CASE("relative entropy coherence reference values") {
  const std::vector<double> q{0.2, 0.5, 0.3};
  const DensityMatrix diag = validate_density(ComplexMatrix::diagonal(q));
  CHECK(std::abs(relative_entropy_coherence(diag).value) < 1e-12);

  CHECK(relative_entropy_coherence(test::plus_state()).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  // H(1/4,1/2,1/4) - H(1/2,1/2,0) = 1.5 - 1.
  const CoherenceReport report = relative_entropy_coherence(counterexample());
  CHECK(report.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.method == CoherenceMethod::limit_alpha_1);
}

TEST_CASE("tsallis coherence reference values and shared optimizer") {
  const std::vector<double> q{0.2, 0.5, 0.3};
  const DensityMatrix diag = validate_density(ComplexMatrix::diagonal(q));
  CHECK(std::abs(tsallis_coherence(diag, 0.5).value) < 1e-12);

  CHECK(tsallis_coherence(test::plus_state(), 2.0).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tsallis_coherence(counterexample(), 2.0).value ==
        doctest::Approx(kTsallis2Counterexample).epsilon(1e-12));

  BruteForceOptions options;
  options.restarts = 8;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const DensityMatrix rho = ginibre(3, seed + 900);
    for (double alpha : {0.5, 1.5}) {
      const CoherenceReport closed = tsallis_coherence(rho, alpha);
      const CoherenceReport brute =
          tsallis_coherence_bruteforce(rho, alpha, options);
      CHECK(std::abs(closed.value - brute.value) < 1e-6);

      const SimplexPoint renyi_opt = optimal_incoherent_state(rho, alpha);
      for (std::size_t i = 0; i < renyi_opt.weights.size(); ++i) {
        CHECK(std::abs(closed.optimizer.weights[i] - renyi_opt.weights[i]) <
              1e-12);
        CHECK(std::abs(brute.optimizer.weights[i] - renyi_opt.weights[i]) <
              1e-6);
      }
    }
  }
}

TEST_CASE("upper bound reference values and theorem check") {
  CHECK(coherence_upper_bound(test::plus_state()) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> quarter(4, 0.25);
  CHECK(std::abs(coherence_upper_bound(
            validate_density(ComplexMatrix::diagonal(quarter)))) < 1e-12);

  CHECK(coherence_upper_bound(counterexample()) ==
        doctest::Approx(kUpperBoundCounterexample).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = ginibre(2 + seed % 4, seed + 40);
    const double bound = coherence_upper_bound(rho);
    for (double alpha : {0.2, 0.6, 1.3, 2.0}) {
      CHECK(renyi_coherence(rho, alpha).value <= bound + 1e-9);
    }
  }
}

TEST_CASE("coherence vanishes exactly on incoherent states only") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const DensityMatrix rho = ginibre(3, seed + 600);
    const double offdiag = rho.matrix().offdiagonal_norm();
    const double value = renyi_coherence(rho, 0.7).value;
    REQUIRE(offdiag > 1e-3);  // ginibre states carry real coherence
    CHECK(value > 1e-6);
  }
  ComplexMatrix nearly(2);
  nearly(0, 0) = 0.6;
  nearly(1, 1) = 0.4;
  nearly(0, 1) = nearly(1, 0) = 1e-10;
  CHECK(std::abs(renyi_coherence(validate_density(nearly), 0.7).value) < 1e-9);
}

TEST_CASE("renyi coherence is continuous across alpha = 1") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = ginibre(3, seed + 77);
    const double limit = relative_entropy_coherence(rho).value;
    CHECK(std::abs(renyi_coherence(rho, 1.0 - 1e-4).value - limit) < 1e-2);
    CHECK(std::abs(renyi_coherence(rho, 1.0 + 1e-4).value - limit) < 1e-2);
  }
}

TEST_CASE("rank-deficient diagonals keep the quantifiers finite") {
  const std::vector<double> q{1.0, 0.0};
  const DensityMatrix ground = validate_density(ComplexMatrix::diagonal(q));
  for (double alpha : {0.5, 2.0}) {
    CHECK(std::abs(renyi_coherence(ground, alpha).value) < 1e-12);
    CHECK(std::abs(renyi_coherence_bruteforce(ground, alpha).value) < 1e-9);
  }
}
