// Copyright 2026 The ipea-bench Authors
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
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ipea/noise.hpp"
#include "ipea/pea.hpp"
#include "ipea/table.hpp"
#include "ipea/trials.hpp"

namespace ipea::bench {

inline constexpr const char* kVersion = "ipea-bench 1.0.0";

/// Experiment ids feed the RNG key; changing them changes every stream.
enum class ExperimentId : std::uint64_t {
    run = 1,
    success_curve = 2,
    noise_sweep = 3,
    cost_sweep = 4,
    crosscheck = 5,
    kitaev = 6,
    naive = 7,
    repetition = 8,
};

/// Stream key for one grid point of one experiment.
std::uint64_t stream_key(ExperimentId id, std::uint64_t grid_index) noexcept;

/// sqrt(p(1-p)/n) with p = hits/n.
double binomial_stderr(std::uint64_t hits, std::uint64_t n);

struct SuccessCurveConfig {
    std::vector<int> m_list{3, 5, 7};
    std::vector<double> deltas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    trials::ExecPolicy exec{};
};

/// m-bit test fraction 0.1010... used as phi~ by the success-curve driver.
double alternating_fraction(int m);

/// Columns: m, delta, analytic_p, analytic_p_acc, trials, successes_exact, successes_acc, rate_exact, rate_acc, stderr.
Table exp_success_curve(const SuccessCurveConfig& config);

enum class NoiseCase { xerr, dephasing, both };

std::string to_string(NoiseCase c);
NoiseCase parse_noise_case(const std::string& name);
/// Level nu -> (delta_x, gamma_ratio) per case.
noise::NoiseParams noise_for_level(NoiseCase c, double level);

struct NoiseSweepConfig {
    std::vector<int> m_list{5, 7};
    std::vector<NoiseCase> cases{NoiseCase::xerr, NoiseCase::dephasing, NoiseCase::both};
    std::vector<double> levels{0.0, 0.01, 0.02, 0.05, 0.1, 0.2, 0.3};
    std::uint64_t trials = 2000;
    std::uint64_t seed = 1;
    trials::ExecPolicy exec{};
};

/// Columns: m, noise_case, noise_level, trials, successes, rate, stderr, master_seed.
Table exp_noise_sweep(const NoiseSweepConfig& config);

enum class AlphaPolicy { fixed, mean_abs, worst };

AlphaPolicy parse_alpha_policy(const std::string& name);
/// mean_abs -> pi/2 (mean |alpha| for alpha uniform on [-pi, pi)), worst -> pi, fixed -> `fixed_alpha`.
double resolve_alpha(AlphaPolicy policy, double fixed_alpha);

struct CostSweepConfig {
    std::vector<int> m_list{2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    std::vector<double> gammas{0.01, 0.1};
    double eps = 0.05;
    double alpha = std::numbers::pi / 2;
    double delta_x = 0.0;
};

inline constexpr std::int64_t kSaturatedCount = std::numeric_limits<std::int64_t>::max();

/// Columns: m, gamma_ratio, alpha, epsilon, n_total, within_1e4, unresolvable.
Table exp_cost_sweep(const CostSweepConfig& config);

/// Planned N_tot (compact 1/8 rule, delta = 0), or nullopt if a bit is unresolvable.
std::optional<std::uint64_t> planned_total(double alpha, int m, double eps, const noise::NoiseParams& noise);

/// Largest m in [1, m_cap] with planned N_tot <= budget; 0 if none.
int max_bits_within(double alpha, double eps, const noise::NoiseParams& noise, std::uint64_t budget, int m_cap = 20);

struct CrosscheckConfig {
    std::vector<int> m_list{2, 4, 6, 8, 10};
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    noise::NoiseParams noise{0.05, 0.1};
    trials::ExecPolicy exec{};
};

/// Largest |p0_abstract - p0_circuit| over k = 1..m, every feedback pattern and a fixed alpha grid.
double mode_discrepancy(int m, const trials::ExecPolicy& exec = {});

/// Fraction of the 2^m exact phases extracted correctly in both modes.
double exact_extraction_rate(int m, std::uint64_t seed, const trials::ExecPolicy& exec = {});

/// Circuit-mode trials of step k (correct feedback, trajectory noise) that return the correct bit.
std::uint64_t trajectory_correct_bits(double alpha, int k, int m, const noise::NoiseParams& noise,
                                      std::uint64_t trials, std::uint64_t seed, std::uint64_t key,
                                      const trials::ExecPolicy& exec = {});

/// Columns: m, mode_pair, max_abs_discrepancy, z_score, trials.
Table exp_crosscheck(const CrosscheckConfig& config);

struct KitaevConfig {
    std::vector<int> m_list{2, 4, 6, 8};
    std::vector<double> phases;  ///< empty: 16-point grid (j + 0.37)/16
    double eps = 0.05;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    trials::ExecPolicy exec{};
};

std::vector<double> default_phase_grid();

/// Columns: m, phi, epsilon, trials, successes, rate, stderr, samples_per_quadrature, rounds, u_applications.
Table exp_kitaev(const KitaevConfig& config);

struct NaiveConfig {
    std::vector<int> m_list{2, 3, 4, 5};
    std::vector<double> phases{0.0, 0.1, 0.25, 0.4, 0.5};
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    trials::ExecPolicy exec{};
};

/// Error of the naive estimator against the branch it can resolve: |est - min(phi, 1-phi)|.
double naive_error(double estimate, double phi);

/// Columns: m, phi, n_rounds, trials, within_bound, rate, bound (bound = 5/sqrt(N)).
Table exp_naive(const NaiveConfig& config);

/// JSON transcript of a single IPEA run.
std::string transcript_json(const pea::IpeaConfig& config, const pea::RunTranscript& t, std::uint64_t seed);

}  // namespace ipea::bench
