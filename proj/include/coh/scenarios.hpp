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

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coh/channels.hpp"
#include "coh/density_matrix.hpp"

namespace coh {

struct SweepColumn {
  std::string name;
  std::string unit;
};

/// Columnar result of a parameter sweep; the first column is the grid and
/// is strictly increasing. Serialized as CSV with "# key=value" metadata.
struct SweepTable {
  std::vector<SweepColumn> columns;
  std::vector<std::vector<double>> rows;
  std::string scenario;
  std::vector<std::pair<std::string, double>> params;
};

/// The maximally coherent state (1/d) sum_ij |i><j|.
DensityMatrix maximally_coherent(std::size_t dim);

/// The fixed 3-level state (1/4) [[1,0,1],[0,2,0],[1,0,1]] whose selective
/// measurements exhibit the subselection-monotonicity violations.
DensityMatrix counterexample_state();

/// Two-operator incoherent channel on 3 levels:
///   K1 = [[0,1,0],[0,0,0],[0,0,a]],  K2 = [[1,0,0],[0,0,b],[0,0,0]],
/// complete iff |a|^2 + |b|^2 = 1 (checked to 1e-10).
KrausChannel counterexample_channel(Complex a, Complex b);

/// Closed forms specific to the fixed scenarios, used as the second route
/// of every sweep's dual computation. b2 stands for |b|^2.
namespace analytic {

/// C_alpha of counterexample_state():
/// (alpha/(alpha-1)) log2(1/2 + (1/2)^(1/alpha)).
double counterexample_coherence(double alpha);

/// Probability of the second selective branch: (1 + b2)/4.
double branch2_probability(double b2);

/// C_alpha of the normalized second branch:
/// (alpha/(alpha-1)) log2((1/(1+b2))^(1/alpha) + (b2/(1+b2))^(1/alpha)).
double branch2_coherence(double alpha, double b2);

/// C_alpha of the equal mixture of maximally coherent 2- and 3-level
/// blocks: (alpha/(alpha-1)) log2((1/2)^(1/alpha) + (3/2)(1/3)^(1/alpha)).
double block_coherence(double alpha);

/// Reference-state branch weights q1, q2 for the incoherent state
/// diag(1, sqrt(2), 1)/(2 + sqrt(2)):
///   q1 = (sqrt(2) + 1 - b2)/(2 + sqrt(2)),  q2 = (1 + b2)/(2 + sqrt(2)).
std::pair<double, double> reference_branch_weights(double b2);

/// The subselection weight p2^alpha q2^(1-alpha) built from the above.
double weighted_branch2_factor(double alpha, double b2);

}  // namespace analytic

/// Default sweep grids (step 0.005): both Renyi windows (0,1) and (1,2],
/// the interior window (0,1) alone, and the population grid [0,1].
std::vector<double> default_alpha_sweep_grid();
std::vector<double> default_interior_alpha_grid();
std::vector<double> default_population_grid();

/// Scenario "fig1": C_alpha of the fixed state vs the selective average
/// sum_n p_n C_alpha(rho_n) for the channel with |b|^2 = 0.5.
/// Columns: alpha, c_alpha, avg_outcome_coherence.
SweepTable sweep_subselection(std::span<const double> alpha_grid,
                              Complex b = std::sqrt(0.5));

/// Scenario "fig2": block-diagonal coherence vs the additive combination
/// (C(rho1) + C(rho2))/2. Columns: alpha, c_alpha, additive_coherence.
SweepTable sweep_block_additivity(std::span<const double> alpha_grid);

/// Scenario "fig3": qubit trade-off at the pure boundary |b|^2 = a(1-a).
/// Columns: a, tradeoff_lhs, tradeoff_rhs.
SweepTable sweep_qubit_tradeoff(std::span<const double> a_grid);

/// Scenario "extc2b": the weighted subselection chain for the fixed state,
/// with branch weights q_n taken against the reference incoherent state
/// diag(1, sqrt(2), 1)/(2+sqrt(2)) (the order-2 optimizer). Grid must lie
/// in (0,1). Columns: alpha, c_alpha, avg_outcome_coherence,
/// weighted_outcome_coherence.
SweepTable sweep_weighted_subselection(std::span<const double> alpha_grid,
                                       Complex b = 1.0);

}  // namespace coh
