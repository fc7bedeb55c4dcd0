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

#include "coh/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "coh/errors.hpp"
#include "coh/measures.hpp"
#include "coh/qubit.hpp"

namespace coh {

namespace {

// Both computation routes of a sweep must agree to this tolerance.
constexpr double kCrossCheckTol = 1e-9;

void require_cross_check(double pipeline, double analytic, double at,
                         const char* label) {
  if (std::abs(pipeline - analytic) > kCrossCheckTol) {
    std::ostringstream msg;
    msg << label << " cross-check failed at grid point " << at << ": pipeline "
        << pipeline << " vs analytic " << analytic;
    throw Error(msg.str());
  }
}

std::vector<double> step_grid(int first, int last, double step) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(last - first + 1));
  for (int k = first; k <= last; ++k) grid.push_back(k * step);
  return grid;
}

double selective_average_coherence(const KrausChannel& channel,
                                   const DensityMatrix& rho, double alpha) {
  double avg = 0.0;
  for (const SelectiveOutcome& outcome : selective_outcomes(channel, rho)) {
    avg += outcome.probability * renyi_coherence(outcome.state, alpha).value;
  }
  return avg;
}

}  // namespace

DensityMatrix maximally_coherent(std::size_t dim) {
  ComplexMatrix m(dim);
  const double x = 1.0 / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = x;
  return validate_density(m);
}

DensityMatrix counterexample_state() {
  ComplexMatrix m(3);
  m(0, 0) = 0.25;
  m(0, 2) = 0.25;
  m(1, 1) = 0.5;
  m(2, 0) = 0.25;
  m(2, 2) = 0.25;
  return validate_density(m);
}

KrausChannel counterexample_channel(Complex a, Complex b) {
  ComplexMatrix k1(3);
  k1(0, 1) = 1.0;
  k1(2, 2) = a;
  ComplexMatrix k2(3);
  k2(0, 0) = 1.0;
  k2(1, 2) = b;
  return validate_channel({k1, k2}, 1e-10);
}

namespace analytic {

double counterexample_coherence(double alpha) {
  return (alpha / (alpha - 1.0)) *
         std::log2(0.5 + std::pow(0.5, 1.0 / alpha));
}

double branch2_probability(double b2) { return (1.0 + b2) / 4.0; }

double branch2_coherence(double alpha, double b2) {
  const double inv = 1.0 / (1.0 + b2);
  return (alpha / (alpha - 1.0)) *
         std::log2(std::pow(inv, 1.0 / alpha) +
                   std::pow(b2 * inv, 1.0 / alpha));
}

double block_coherence(double alpha) {
  return (alpha / (alpha - 1.0)) *
         std::log2(std::pow(0.5, 1.0 / alpha) +
                   1.5 * std::pow(1.0 / 3.0, 1.0 / alpha));
}

std::pair<double, double> reference_branch_weights(double b2) {
  const double denom = 2.0 + std::numbers::sqrt2;
  return {(std::numbers::sqrt2 + 1.0 - b2) / denom, (1.0 + b2) / denom};
}

double weighted_branch2_factor(double alpha, double b2) {
  const auto [q1, q2] = reference_branch_weights(b2);
  (void)q1;
  return std::pow(branch2_probability(b2), alpha) * std::pow(q2, 1.0 - alpha);
}

}  // namespace analytic

std::vector<double> default_alpha_sweep_grid() {
  std::vector<double> grid = step_grid(1, 199, 0.005);
  const std::vector<double> upper = step_grid(201, 400, 0.005);
  grid.insert(grid.end(), upper.begin(), upper.end());
  return grid;
}

std::vector<double> default_interior_alpha_grid() {
  return step_grid(1, 199, 0.005);
}

std::vector<double> default_population_grid() {
  return step_grid(0, 200, 0.005);
}

SweepTable sweep_subselection(std::span<const double> alpha_grid, Complex b) {
  const double b2 = std::norm(b);
  const Complex a = std::sqrt(std::max(0.0, 1.0 - b2));
  const DensityMatrix rho = counterexample_state();
  const KrausChannel channel = counterexample_channel(a, b);

  SweepTable table;
  table.scenario = "fig1";
  table.params = {{"b2", b2}};
  table.columns = {{"alpha", ""},
                   {"c_alpha", "bits"},
                   {"avg_outcome_coherence", "bits"}};
  for (double alpha : alpha_grid) {
    const double c = renyi_coherence(rho, alpha).value;
    const double avg = selective_average_coherence(channel, rho, alpha);
    require_cross_check(c, analytic::counterexample_coherence(alpha), alpha,
                        "fig1 c_alpha");
    require_cross_check(avg,
                        analytic::branch2_probability(b2) *
                            analytic::branch2_coherence(alpha, b2),
                        alpha, "fig1 selective average");
    table.rows.push_back({alpha, c, avg});
  }
  return table;
}

SweepTable sweep_block_additivity(std::span<const double> alpha_grid) {
  const DensityMatrix qubit = maximally_coherent(2);
  const DensityMatrix qutrit = maximally_coherent(3);
  const DensityMatrix block = direct_sum(qubit, qutrit, 0.5);
  const double additive_limit = 0.5 * (1.0 + std::log2(3.0));

  SweepTable table;
  table.scenario = "fig2";
  table.columns = {{"alpha", ""},
                   {"c_alpha", "bits"},
                   {"additive_coherence", "bits"}};
  for (double alpha : alpha_grid) {
    const double c = renyi_coherence(block, alpha).value;
    const double additive = 0.5 * renyi_coherence(qubit, alpha).value +
                            0.5 * renyi_coherence(qutrit, alpha).value;
    require_cross_check(c, analytic::block_coherence(alpha), alpha,
                        "fig2 c_alpha");
    require_cross_check(additive, additive_limit, alpha, "fig2 additive");
    table.rows.push_back({alpha, c, additive});
  }
  return table;
}

SweepTable sweep_qubit_tradeoff(std::span<const double> a_grid) {
  SweepTable table;
  table.scenario = "fig3";
  table.columns = {{"a", ""},
                   {"tradeoff_lhs", ""},
                   {"tradeoff_rhs", ""}};
  for (double a : a_grid) {
    QubitParams params;
    params.a = a;
    params.b = std::sqrt(std::max(0.0, a * (1.0 - a)));
    const QubitTradeoff point = qubit_tradeoff(params);

    // Second route through the general machinery.
    const DensityMatrix rho = qubit_state(params);
    const double general = std::numbers::ln2 * renyi_coherence(rho, 2.0).value +
                           mixedness(rho);
    require_cross_check(point.lhs, general, a, "fig3 tradeoff lhs");
    table.rows.push_back({a, point.lhs, point.rhs});
  }
  return table;
}

SweepTable sweep_weighted_subselection(std::span<const double> alpha_grid,
                                       Complex b) {
  const double b2 = std::norm(b);
  const Complex a = std::sqrt(std::max(0.0, 1.0 - b2));
  const DensityMatrix rho = counterexample_state();
  const KrausChannel channel = counterexample_channel(a, b);

  // Branch weights against the fixed reference incoherent state
  // diag(1, sqrt(2), 1)/(2 + sqrt(2)), the order-2 optimizer of rho.
  const SimplexPoint reference = optimal_incoherent_state(rho, 2.0);
  const DensityMatrix sigma =
      validate_density(ComplexMatrix::diagonal(reference.weights));

  SweepTable table;
  table.scenario = "extc2b";
  table.params = {{"b2", b2}};
  table.columns = {{"alpha", ""},
                   {"c_alpha", "bits"},
                   {"avg_outcome_coherence", "bits"},
                   {"weighted_outcome_coherence", "bits"}};
  for (double alpha : alpha_grid) {
    if (!(alpha > 0.0) || alpha >= 1.0) {
      throw AlphaOutOfRangeError(
          "weighted subselection sweep needs alpha in (0,1)");
    }
    const double c = renyi_coherence(rho, alpha).value;

    const std::vector<SelectiveOutcome> branches =
        selective_outcomes(channel, rho);
    const std::vector<SelectiveOutcome> reference_branches =
        selective_outcomes(channel, sigma);
    double avg = 0.0;
    double weighted = 0.0;
    for (std::size_t n = 0; n < branches.size(); ++n) {
      const double cn = renyi_coherence(branches[n].state, alpha).value;
      const double pn = branches[n].probability;
      const double qn = reference_branches[n].probability;
      avg += pn * cn;
      weighted += std::pow(pn, alpha) * std::pow(qn, 1.0 - alpha) * cn;
    }

    require_cross_check(c, analytic::counterexample_coherence(alpha), alpha,
                        "extc2b c_alpha");
    require_cross_check(avg,
                        analytic::branch2_probability(b2) *
                            analytic::branch2_coherence(alpha, b2),
                        alpha, "extc2b selective average");
    require_cross_check(weighted,
                        analytic::weighted_branch2_factor(alpha, b2) *
                            analytic::branch2_coherence(alpha, b2),
                        alpha, "extc2b weighted average");
    table.rows.push_back({alpha, c, avg, weighted});
  }
  return table;
}

}  // namespace coh
