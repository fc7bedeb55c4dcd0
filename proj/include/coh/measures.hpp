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
#include <map>
#include <string>
#include <vector>

#include "coh/density_matrix.hpp"

namespace coh {

/// Point on the probability simplex: the diagonal weights q_i of an
/// incoherent state sum_i q_i |i><i|.
struct SimplexPoint {
  std::vector<double> weights;
};

enum class CoherenceMethod { closed_form, brute_force, limit_alpha_1 };

std::string to_string(CoherenceMethod method);

/// Value of a coherence quantifier (in bits) together with the minimizing
/// incoherent state and solver metadata.
struct CoherenceReport {
  double value = 0.0;
  double alpha = 0.0;
  SimplexPoint optimizer;
  CoherenceMethod method = CoherenceMethod::closed_form;
  std::map<std::string, double> diagnostics;
};

/// Throws AlphaOutOfRangeError unless alpha is in (0,1) or (1,2].
void require_alpha_in_range(double alpha);

/// Shannon entropy in bits with the 0 log 0 := 0 convention. Negative
/// entries are treated as zero.
double shannon_entropy(std::span<const double> p);

/// Renyi order-alpha relative entropy (base-2 logs):
/// (1/(alpha-1)) log2 Tr(rho^alpha delta^(1-alpha)).
/// Returns +infinity when alpha > 1 and supp(rho) is not contained in
/// supp(delta), and when the supports are disjoint for alpha < 1.
double renyi_relative_entropy(const DensityMatrix& rho,
                              const DensityMatrix& delta, double alpha);

/// The diagonal of rho^alpha: m_i = <i|rho^alpha|i>, all nonnegative.
std::vector<double> diagonal_moments(const DensityMatrix& rho, double alpha);

/// Minimizing incoherent state in closed form: q_i proportional to
/// m_i^(1/alpha). Throws DegenerateStateError if every moment vanishes.
SimplexPoint optimal_incoherent_state(const DensityMatrix& rho, double alpha);

/// Renyi relative entropy of coherence, closed form:
/// (alpha/(alpha-1)) log2 sum_i m_i^(1/alpha), in bits.
CoherenceReport renyi_coherence(const DensityMatrix& rho, double alpha);

struct BruteForceOptions {
  std::size_t max_iterations = 100000;  // per restart
  int restarts = 20;                    // first restart starts uniform
  double gradient_tol = 1e-10;
  std::uint64_t seed = 0x636f68;
};

/// Independent check of the closed form: projected gradient descent of the
/// simplex objective (1/(alpha-1)) log2 sum_i q_i^(1-alpha) m_i with random
/// restarts. Intended for d <= 8. Throws BudgetExhaustedError when no
/// restart reaches the gradient tolerance.
CoherenceReport renyi_coherence_bruteforce(const DensityMatrix& rho,
                                           double alpha,
                                           const BruteForceOptions& options = {});

/// Standard relative entropy of coherence (the alpha -> 1 quantifier):
/// H(diag(rho)) - H(spectrum(rho)) in bits.
CoherenceReport relative_entropy_coherence(const DensityMatrix& rho);

/// Tsallis relative alpha-entropy of coherence:
/// ((sum_i m_i^(1/alpha))^alpha - 1) / (alpha - 1). Same minimizer as the
/// Renyi quantifier.
CoherenceReport tsallis_coherence(const DensityMatrix& rho, double alpha);

/// Simplex brute force for the Tsallis objective
/// (1/(alpha-1)) [sum_i q_i^(1-alpha) m_i - 1].
CoherenceReport tsallis_coherence_bruteforce(const DensityMatrix& rho,
                                             double alpha,
                                             const BruteForceOptions& options = {});

/// log2 d + log2 Tr(rho^2), an upper bound on the Renyi coherence for
/// alpha in (0,2], alpha != 1.
double coherence_upper_bound(const DensityMatrix& rho);

}  // namespace coh
