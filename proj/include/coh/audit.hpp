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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coh/channels.hpp"
#include "coh/density_matrix.hpp"

namespace coh {

inline constexpr double kDefaultVerdictTol = 1e-9;

enum class Condition { C1, C2a, C2b, C3, B3, ExtC2b };

std::string to_string(Condition condition);

/// Audit result for one condition at one parameter point. margin is
/// rhs - lhs oriented so that the condition demands margin >= 0; for the
/// equality condition B3 it is -|lhs - rhs|. violated <=> margin < -tol.
struct ConditionVerdict {
  Condition condition = Condition::C1;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool violated = false;
  std::map<std::string, double> witness;
};

/// Nonnegativity, and vanishing exactly on incoherent states.
ConditionVerdict check_c1(const DensityMatrix& rho, double alpha,
                          double tol = kDefaultVerdictTol);

/// Monotonicity under the full channel: C(Phi(rho)) <= C(rho).
/// Throws NotIncoherentError unless the channel is flagged incoherent.
ConditionVerdict check_c2a(const DensityMatrix& rho,
                           const KrausChannel& channel, double alpha,
                           double tol = kDefaultVerdictTol);

/// Subselection monotonicity: sum_n p_n C(rho_n) <= C(rho).
ConditionVerdict check_c2b(const DensityMatrix& rho,
                           const KrausChannel& channel, double alpha,
                           double tol = kDefaultVerdictTol);

/// Convexity under mixing: C(sum_i p_i rho_i) <= sum_i p_i C(rho_i).
/// Violations for alpha in (0,1) indicate a numerical bug; for
/// alpha in (1,2] they are legitimate findings.
ConditionVerdict check_c3(
    std::span<const std::pair<double, DensityMatrix>> ensemble, double alpha,
    double tol = kDefaultVerdictTol);

/// Block additivity (equality): C(p1 rho1 (+) p2 rho2) = p1 C(rho1) +
/// p2 C(rho2).
ConditionVerdict check_b3(const DensityMatrix& rho1, const DensityMatrix& rho2,
                          double p1, double alpha,
                          double tol = kDefaultVerdictTol);

/// Weighted subselection monotonicity:
/// sum_n p_n^alpha q_n^(1-alpha) C(rho_n) <= C(rho), with q_n the branch
/// probabilities of the minimizing incoherent state of rho at this alpha.
ConditionVerdict check_extended_c2b(const DensityMatrix& rho,
                                    const KrausChannel& channel, double alpha,
                                    double tol = kDefaultVerdictTol);

enum class ChannelFamily {
  /// Seeded weighted-permutation channels with ginibre states.
  random_partial_permutation,
  /// The fixed 3-level state with the two-operator merge channel swept
  /// over |b|^2 in [0,1]; rediscovers the known subselection violations.
  counterexample_pair,
};

struct AuditOptions {
  std::size_t dim = 3;
  std::size_t trials = 100;
  std::vector<double> alpha_grid;  // empty -> default_audit_alpha_grid()
  std::uint64_t seed = 0;
  ChannelFamily family = ChannelFamily::random_partial_permutation;
  std::size_t kraus_count = 2;
  std::size_t ensemble_size = 3;
  double tol = kDefaultVerdictTol;
};

/// 40 log-spaced points, 20 in [0.05, 0.95] and 20 in [1.05, 2].
std::vector<double> default_audit_alpha_grid();

/// Random audit over seeded states, channels, and ensembles. Checks C1,
/// C2a, C2b, ExtC2b, and C3 at every grid alpha. Deterministic in the
/// options; violations are ordered first (worst margin leading), then the
/// near misses.
std::vector<ConditionVerdict> audit_random(const AuditOptions& options);

}  // namespace coh
