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

#include "coh/audit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coh/errors.hpp"
#include "coh/measures.hpp"
#include "coh/rng.hpp"
#include "coh/sampling.hpp"
#include "coh/scenarios.hpp"

namespace coh {

namespace {

// Off-diagonal mass at or below this counts as incoherent for C1.
constexpr double kIncoherentMassTol = 1e-9;

void require_incoherent(const KrausChannel& channel) {
  if (!channel.incoherent()) {
    throw NotIncoherentError(
        "channel is not flagged incoherent; condition undefined");
  }
}

ConditionVerdict make_verdict(Condition condition, double lhs, double rhs,
                              double margin, double tol) {
  ConditionVerdict verdict;
  verdict.condition = condition;
  verdict.lhs = lhs;
  verdict.rhs = rhs;
  verdict.margin = margin;
  verdict.violated = margin < -tol;
  return verdict;
}

}  // namespace

std::string to_string(Condition condition) {
  switch (condition) {
    case Condition::C1:
      return "C1";
    case Condition::C2a:
      return "C2a";
    case Condition::C2b:
      return "C2b";
    case Condition::C3:
      return "C3";
    case Condition::B3:
      return "B3";
    case Condition::ExtC2b:
      return "ExtC2b";
  }
  return "unknown";
}

ConditionVerdict check_c1(const DensityMatrix& rho, double alpha, double tol) {
  const double offdiag = rho.matrix().offdiagonal_norm();
  const double value = renyi_coherence(rho, alpha).value;
  // Incoherent states must score exactly zero; coherent states must score
  // nonnegative (strict positivity is not falsifiable at fixed tolerance).
  const double margin = offdiag <= kIncoherentMassTol ? -std::abs(value) : value;
  ConditionVerdict verdict = make_verdict(Condition::C1, value, 0.0, margin, tol);
  verdict.witness["alpha"] = alpha;
  verdict.witness["offdiag_mass"] = offdiag;
  return verdict;
}

ConditionVerdict check_c2a(const DensityMatrix& rho,
                           const KrausChannel& channel, double alpha,
                           double tol) {
  require_incoherent(channel);
  const double lhs = renyi_coherence(apply_channel(channel, rho), alpha).value;
  const double rhs = renyi_coherence(rho, alpha).value;
  ConditionVerdict verdict =
      make_verdict(Condition::C2a, lhs, rhs, rhs - lhs, tol);
  verdict.witness["alpha"] = alpha;
  return verdict;
}

ConditionVerdict check_c2b(const DensityMatrix& rho,
                           const KrausChannel& channel, double alpha,
                           double tol) {
  require_incoherent(channel);
  const double rhs = renyi_coherence(rho, alpha).value;
  double lhs = 0.0;
  ConditionVerdict verdict;
  verdict.witness["alpha"] = alpha;
  for (const SelectiveOutcome& outcome : selective_outcomes(channel, rho)) {
    const double cn = renyi_coherence(outcome.state, alpha).value;
    lhs += outcome.probability * cn;
    const std::string suffix = std::to_string(outcome.index);
    verdict.witness["p_" + suffix] = outcome.probability;
    verdict.witness["c_" + suffix] = cn;
  }
  auto base = make_verdict(Condition::C2b, lhs, rhs, rhs - lhs, tol);
  base.witness.merge(verdict.witness);
  return base;
}

ConditionVerdict check_c3(
    std::span<const std::pair<double, DensityMatrix>> ensemble, double alpha,
    double tol) {
  if (ensemble.empty()) {
    throw Error("check_c3: empty ensemble");
  }
  double weight_sum = 0.0;
  for (const auto& [w, rho] : ensemble) weight_sum += w;
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw Error("check_c3: ensemble weights must sum to 1");
  }

  const std::size_t d = ensemble.front().second.dim();
  ComplexMatrix mixture(d);
  double rhs = 0.0;
  for (const auto& [w, rho] : ensemble) {
    if (rho.dim() != d) {
      throw DimensionMismatchError("check_c3: mixed dimensions in ensemble");
    }
    ComplexMatrix scaled = rho.matrix();
    scaled *= w;
    mixture += scaled;
    rhs += w * renyi_coherence(rho, alpha).value;
  }
  const double lhs = renyi_coherence(validate_density(mixture), alpha).value;
  ConditionVerdict verdict =
      make_verdict(Condition::C3, lhs, rhs, rhs - lhs, tol);
  verdict.witness["alpha"] = alpha;
  verdict.witness["ensemble_size"] = static_cast<double>(ensemble.size());
  return verdict;
}

ConditionVerdict check_b3(const DensityMatrix& rho1, const DensityMatrix& rho2,
                          double p1, double alpha, double tol) {
  const DensityMatrix block = direct_sum(rho1, rho2, p1);
  const double lhs = renyi_coherence(block, alpha).value;
  const double rhs = p1 * renyi_coherence(rho1, alpha).value +
                     (1.0 - p1) * renyi_coherence(rho2, alpha).value;
  // Equality condition: orient the margin so any mismatch is negative.
  ConditionVerdict verdict =
      make_verdict(Condition::B3, lhs, rhs, -std::abs(lhs - rhs), tol);
  verdict.witness["alpha"] = alpha;
  verdict.witness["p1"] = p1;
  verdict.witness["difference"] = lhs - rhs;
  return verdict;
}

ConditionVerdict check_extended_c2b(const DensityMatrix& rho,
                                    const KrausChannel& channel, double alpha,
                                    double tol) {
  require_incoherent(channel);
  const double rhs = renyi_coherence(rho, alpha).value;
  const DensityMatrix sigma = validate_density(
      ComplexMatrix::diagonal(optimal_incoherent_state(rho, alpha).weights));

  std::vector<std::size_t> omitted;
  const std::vector<SelectiveOutcome> branches =
      selective_outcomes(channel, rho, kDefaultProbabilityFloor, &omitted);

  ConditionVerdict verdict;
  verdict.witness["alpha"] = alpha;
  double lhs = 0.0;
  for (const SelectiveOutcome& outcome : branches) {
    ComplexMatrix mapped = channel.operators()[outcome.index] * sigma.matrix() *
                           channel.operators()[outcome.index].adjoint();
    const double qn = mapped.trace().real();
    const double cn = renyi_coherence(outcome.state, alpha).value;
    double term;
    if (qn <= 0.0) {
      // q^(1-alpha) diverges for alpha > 1 when the reference state gives
      // the branch zero weight; that counts as an unbounded violation.
      term = (alpha > 1.0 && cn > 0.0)
                 ? std::numeric_limits<double>::infinity()
                 : 0.0;
    } else {
      term = std::pow(outcome.probability, alpha) * std::pow(qn, 1.0 - alpha) *
             cn;
    }
    lhs += term;
    const std::string suffix = std::to_string(outcome.index);
    verdict.witness["p_" + suffix] = outcome.probability;
    verdict.witness["q_" + suffix] = qn;
    verdict.witness["c_" + suffix] = cn;
  }
  auto base = make_verdict(Condition::ExtC2b, lhs, rhs, rhs - lhs, tol);
  base.witness.merge(verdict.witness);
  return base;
}

std::vector<double> default_audit_alpha_grid() {
  auto log_spaced = [](double lo, double hi, std::size_t count,
                       std::vector<double>& out) {
    const double step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back(lo * std::exp(step * static_cast<double>(k)));
    }
  };
  std::vector<double> grid;
  grid.reserve(40);
  log_spaced(0.05, 0.95, 20, grid);
  log_spaced(1.05, 2.0, 20, grid);
  return grid;
}

std::vector<ConditionVerdict> audit_random(const AuditOptions& options) {
  const std::vector<double> alpha_grid =
      options.alpha_grid.empty() ? default_audit_alpha_grid()
                                 : options.alpha_grid;

  std::vector<ConditionVerdict> verdicts;
  verdicts.reserve(options.trials * alpha_grid.size() * 5);

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    DensityMatrix rho = counterexample_state();
    double b2 = 1.0;
    KrausChannel channel = counterexample_channel(0.0, 1.0);
    if (options.family == ChannelFamily::counterexample_pair) {
      b2 = options.trials > 1 ? static_cast<double>(trial) /
                                    static_cast<double>(options.trials - 1)
                              : 1.0;
      channel = counterexample_channel(std::sqrt(1.0 - b2), std::sqrt(b2));
    } else {
      SamplerConfig config;
      config.dim = options.dim;
      config.seed = derive_seed(options.seed, /*tag=*/0xa1, trial);
      config.ensemble = StateEnsemble::ginibre_mixed;
      rho = random_density(config);
      channel = random_incoherent_channel(
          options.dim, options.kraus_count,
          derive_seed(options.seed, /*tag=*/0xa2, trial));
    }
    const auto ensemble = random_ensemble(
        options.dim, options.ensemble_size,
        derive_seed(options.seed, /*tag=*/0xa3, trial));

    for (std::size_t j = 0; j < alpha_grid.size(); ++j) {
      const double alpha = alpha_grid[j];
      std::vector<ConditionVerdict> batch;
      batch.push_back(check_c1(rho, alpha, options.tol));
      batch.push_back(check_c2a(rho, channel, alpha, options.tol));
      batch.push_back(check_c2b(rho, channel, alpha, options.tol));
      batch.push_back(check_extended_c2b(rho, channel, alpha, options.tol));
      batch.push_back(check_c3(ensemble, alpha, options.tol));
      for (ConditionVerdict& verdict : batch) {
        verdict.witness["trial"] = static_cast<double>(trial);
        if (options.family == ChannelFamily::counterexample_pair) {
          verdict.witness["b2"] = b2;
        }
        verdicts.push_back(std::move(verdict));
      }
    }
  }

  // Violations first with the worst margins leading; then near misses in
  // increasing distance from the boundary. Stable, so the deterministic
  // (trial, alpha) generation order breaks ties.
  std::stable_sort(verdicts.begin(), verdicts.end(),
                   [](const ConditionVerdict& a, const ConditionVerdict& b) {
                     if (a.violated != b.violated) return a.violated;
                     if (a.violated) {
                       return std::abs(a.margin) > std::abs(b.margin);
                     }
                     return std::abs(a.margin) < std::abs(b.margin);
                   });
  return verdicts;
}

}  // namespace coh
