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

#include "coh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "coh/errors.hpp"
#include "coh/rng.hpp"

namespace coh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Eigenvalues of delta at or below this are treated as its kernel.
constexpr double kSupportTol = 1e-12;
// Moments below kMomentFloor * max(m) are dropped from the brute-force
// active set (their optimal weight is zero to working precision).
constexpr double kMomentFloor = 1e-16;

double sum_of_moment_roots(std::span<const double> moments, double alpha) {
  double s = 0.0;
  for (double m : moments) {
    if (m > 0.0) s += std::pow(m, 1.0 / alpha);
  }
  return s;
}

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::vector<double> u) {
  std::vector<double> sorted = u;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  std::size_t support = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) {
      theta = candidate;
      support = j + 1;
    }
  }
  (void)support;
  for (double& x : u) x = std::max(x - theta, 0.0);
  return u;
}

struct SimplexSearchResult {
  std::vector<double> weights;
  double value = kInf;
  double residual = kInf;
  std::size_t iterations = 0;
  int converged_restarts = 0;
};

// Projected gradient descent with step halving. `objective` and `gradient`
// act on the active-set moments only; both objectives here share the same
// minimizer structure (interior optimum when all moments are positive).
SimplexSearchResult minimize_over_simplex(std::span<const double> moments,
                                          double alpha, bool logarithmic,
                                          const BruteForceOptions& options) {
  const std::size_t n = moments.size();
  const double ln2 = std::numbers::ln2;

  auto objective = [&](const std::vector<double>& q) -> double {
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (q[i] <= 0.0) {
        if (alpha > 1.0) return kInf;  // q^(1-alpha) diverges
        continue;                      // q^(1-alpha) m -> 0
      }
      t += std::pow(q[i], 1.0 - alpha) * moments[i];
    }
    if (t <= 0.0) return kInf;
    return logarithmic ? std::log2(t) / (alpha - 1.0)
                       : (t - 1.0) / (alpha - 1.0);
  };

  auto gradient = [&](const std::vector<double>& q, std::vector<double>& g) {
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double qi = std::max(q[i], 1e-12);
      t += std::pow(qi, 1.0 - alpha) * moments[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double qi = std::max(q[i], 1e-12);
      const double slope = -std::pow(qi, -alpha) * moments[i];
      g[i] = logarithmic ? slope / (t * ln2) : slope;
    }
  };

  SimplexSearchResult best;
  std::vector<double> g(n);

  for (int restart = 0; restart < options.restarts; ++restart) {
    std::vector<double> q;
    if (restart == 0) {
      q.assign(n, 1.0 / static_cast<double>(n));
    } else {
      SplitMix64 rng(derive_seed(options.seed, /*tag=*/1,
                                 static_cast<std::uint64_t>(restart)));
      q = rng.next_dirichlet(n);
    }

    double fval = objective(q);
    double step = 0.1;
    double residual = kInf;
    bool converged = false;

    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
      ++best.iterations;
      gradient(q, g);

      // KKT residual restricted to the support; zero coordinates only count
      // when their multiplier has the wrong sign.
      double mu = 0.0;
      std::size_t support = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (q[i] > 1e-15) {
          mu += g[i];
          ++support;
        }
      }
      mu /= static_cast<double>(std::max<std::size_t>(support, 1));
      double res2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (q[i] > 1e-15) {
          res2 += (g[i] - mu) * (g[i] - mu);
        } else {
          const double slack = std::min(0.0, g[i] - mu);
          res2 += slack * slack;
        }
      }
      residual = std::sqrt(res2);
      if (residual < options.gradient_tol) {
        converged = true;
        break;
      }

      // Step halving, accepting any non-increasing move. Near the optimum
      // the decrease falls below one ulp of f while the iterate still
      // contracts, so insisting on strict decrease would stall the
      // gradient residual around 1e-8.
      bool accepted = false;
      for (int halving = 0; halving < 80; ++halving) {
        std::vector<double> trial(n);
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) trial[i] = q[i] - step * g[i];
        trial = project_simplex(std::move(trial));
        for (std::size_t i = 0; i < n; ++i) moved = moved || trial[i] != q[i];
        const double ftrial = objective(trial);
        if (ftrial <= fval && moved) {
          q = std::move(trial);
          fval = ftrial;
          step = std::min(step * 1.5, 1e3);
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;  // step underflow; residual decides convergence
    }

    if (converged) ++best.converged_restarts;
    if (converged && fval < best.value) {
      best.value = fval;
      best.weights = q;
      best.residual = residual;
    }
  }

  if (best.converged_restarts == 0) {
    std::ostringstream msg;
    msg << "simplex search: no restart reached gradient tolerance "
        << options.gradient_tol;
    throw BudgetExhaustedError(msg.str());
  }
  return best;
}

CoherenceReport bruteforce_impl(const DensityMatrix& rho, double alpha,
                                bool logarithmic,
                                const BruteForceOptions& options) {
  require_alpha_in_range(alpha);
  const std::vector<double> moments = diagonal_moments(rho, alpha);
  const double max_m = *std::max_element(moments.begin(), moments.end());
  if (max_m <= 0.0) {
    throw DegenerateStateError("all diagonal moments vanish");
  }

  std::vector<double> active;
  std::vector<std::size_t> active_index;
  for (std::size_t i = 0; i < moments.size(); ++i) {
    if (moments[i] > kMomentFloor * max_m) {
      active.push_back(moments[i]);
      active_index.push_back(i);
    }
  }

  const SimplexSearchResult result =
      minimize_over_simplex(active, alpha, logarithmic, options);

  CoherenceReport report;
  report.value = result.value;
  report.alpha = alpha;
  report.method = CoherenceMethod::brute_force;
  report.optimizer.weights.assign(moments.size(), 0.0);
  for (std::size_t k = 0; k < active_index.size(); ++k) {
    report.optimizer.weights[active_index[k]] = result.weights[k];
  }
  report.diagnostics["gradient_residual"] = result.residual;
  report.diagnostics["iterations"] = static_cast<double>(result.iterations);
  report.diagnostics["converged_restarts"] =
      static_cast<double>(result.converged_restarts);
  return report;
}

}  // namespace

std::string to_string(CoherenceMethod method) {
  switch (method) {
    case CoherenceMethod::closed_form:
      return "closed_form";
    case CoherenceMethod::brute_force:
      return "brute_force";
    case CoherenceMethod::limit_alpha_1:
      return "limit_alpha_1";
  }
  return "unknown";
}

void require_alpha_in_range(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || alpha > 2.0) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " outside (0,1) u (1,2]";
    if (alpha == 1.0) msg << "; use the relative-entropy quantifier instead";
    throw AlphaOutOfRangeError(msg.str());
  }
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double renyi_relative_entropy(const DensityMatrix& rho,
                              const DensityMatrix& delta, double alpha) {
  require_alpha_in_range(alpha);
  const std::size_t d = rho.dim();
  if (delta.dim() != d) {
    throw DimensionMismatchError("states have different dimensions");
  }

  const Spectrum& sr = rho.spectrum();
  const Spectrum& sd = delta.spectrum();

  // Overlap weights w_jk = |<v_j(rho)|v_k(delta)>|^2.
  std::vector<double> rho_pow(d);
  for (std::size_t j = 0; j < d; ++j) {
    rho_pow[j] =
        sr.eigenvalues[j] > 0.0 ? std::pow(sr.eigenvalues[j], alpha) : 0.0;
  }

  double trace = 0.0;
  double kernel_mass = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double mu = sd.eigenvalues[k];
    const bool in_kernel = mu <= kSupportTol;
    double mu_pow = 0.0;
    if (!in_kernel) mu_pow = std::pow(mu, 1.0 - alpha);
    for (std::size_t j = 0; j < d; ++j) {
      if (rho_pow[j] == 0.0) continue;
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        overlap += std::conj(sr.eigenvectors(i, j)) * sd.eigenvectors(i, k);
      }
      const double w = std::norm(overlap);
      if (in_kernel) {
        kernel_mass += rho_pow[j] * w;
      } else {
        trace += rho_pow[j] * mu_pow * w;
      }
    }
  }

  if (alpha > 1.0 && kernel_mass > kSupportTol) return kInf;
  if (trace <= 0.0) return kInf;
  return std::log2(trace) / (alpha - 1.0);
}

std::vector<double> diagonal_moments(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0)) {
    throw AlphaOutOfRangeError("diagonal_moments requires alpha > 0");
  }
  const Spectrum& spec = rho.spectrum();
  const std::size_t d = rho.dim();
  std::vector<double> powered(d);
  for (std::size_t j = 0; j < d; ++j) {
    powered[j] =
        spec.eigenvalues[j] > 0.0 ? std::pow(spec.eigenvalues[j], alpha) : 0.0;
  }
  std::vector<double> moments(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      m += powered[j] * std::norm(spec.eigenvectors(i, j));
    }
    moments[i] = m;
  }
  return moments;
}

SimplexPoint optimal_incoherent_state(const DensityMatrix& rho, double alpha) {
  require_alpha_in_range(alpha);
  const std::vector<double> moments = diagonal_moments(rho, alpha);
  const double total = sum_of_moment_roots(moments, alpha);
  if (total <= 0.0) {
    throw DegenerateStateError("all diagonal moments vanish");
  }
  SimplexPoint point;
  point.weights.resize(moments.size());
  for (std::size_t i = 0; i < moments.size(); ++i) {
    point.weights[i] =
        moments[i] > 0.0 ? std::pow(moments[i], 1.0 / alpha) / total : 0.0;
  }
  return point;
}

CoherenceReport renyi_coherence(const DensityMatrix& rho, double alpha) {
  require_alpha_in_range(alpha);
  const std::vector<double> moments = diagonal_moments(rho, alpha);
  const double total = sum_of_moment_roots(moments, alpha);
  if (total <= 0.0) {
    throw DegenerateStateError("all diagonal moments vanish");
  }
  CoherenceReport report;
  report.value = (alpha / (alpha - 1.0)) * std::log2(total);
  report.alpha = alpha;
  report.method = CoherenceMethod::closed_form;
  report.optimizer = optimal_incoherent_state(rho, alpha);
  report.diagnostics["moment_root_sum"] = total;
  return report;
}

CoherenceReport renyi_coherence_bruteforce(const DensityMatrix& rho,
                                           double alpha,
                                           const BruteForceOptions& options) {
  return bruteforce_impl(rho, alpha, /*logarithmic=*/true, options);
}

CoherenceReport relative_entropy_coherence(const DensityMatrix& rho) {
  const std::vector<double> populations = rho.diagonal();
  CoherenceReport report;
  report.value =
      shannon_entropy(populations) - shannon_entropy(rho.spectrum().eigenvalues);
  report.alpha = 1.0;
  report.method = CoherenceMethod::limit_alpha_1;
  report.optimizer.weights = populations;
  return report;
}

CoherenceReport tsallis_coherence(const DensityMatrix& rho, double alpha) {
  require_alpha_in_range(alpha);
  const std::vector<double> moments = diagonal_moments(rho, alpha);
  const double total = sum_of_moment_roots(moments, alpha);
  if (total <= 0.0) {
    throw DegenerateStateError("all diagonal moments vanish");
  }
  CoherenceReport report;
  report.value = (std::pow(total, alpha) - 1.0) / (alpha - 1.0);
  report.alpha = alpha;
  report.method = CoherenceMethod::closed_form;
  report.optimizer = optimal_incoherent_state(rho, alpha);
  report.diagnostics["moment_root_sum"] = total;
  return report;
}

CoherenceReport tsallis_coherence_bruteforce(const DensityMatrix& rho,
                                             double alpha,
                                             const BruteForceOptions& options) {
  return bruteforce_impl(rho, alpha, /*logarithmic=*/false, options);
}

double coherence_upper_bound(const DensityMatrix& rho) {
  return std::log2(static_cast<double>(rho.dim())) + std::log2(purity(rho));
}

}  // namespace coh
