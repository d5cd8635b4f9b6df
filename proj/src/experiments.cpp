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

#include "ipea/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "ipea/phase.hpp"
#include "ipea/rng.hpp"
#include "ipea/stats.hpp"

namespace ipea::bench {

using std::numbers::pi;

namespace {

std::int64_t as_int(std::uint64_t v) {
    return v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())
               ? std::numeric_limits<std::int64_t>::max()
               : static_cast<std::int64_t>(v);
}

std::string provenance(const char* experiment, std::uint64_t seed) {
    return std::string(kVersion) + " experiment=" + experiment + " master_seed=" + std::to_string(seed);
}

void require_nonempty(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(what) + " must not be empty");
}

}  // namespace

std::uint64_t stream_key(ExperimentId id, std::uint64_t grid_index) noexcept {
    return (static_cast<std::uint64_t>(id) << 40) ^ grid_index;
}

double binomial_stderr(std::uint64_t hits, std::uint64_t n) {
    if (n == 0) return 0.0;
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double alternating_fraction(int m) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = j % 2 == 0 ? 1 : 0;
    return phase::PhaseFraction(std::move(bits)).value();
}

Table exp_success_curve(const SuccessCurveConfig& config) {
    require_nonempty(!config.m_list.empty() && !config.deltas.empty(), "success-curve grid");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    Table t;
    t.comment = provenance("success-curve", config.seed) + " phi=0.1010..(m bits)+delta*2^-m mode=abstract";
    t.columns = {"m", "delta", "analytic_p", "analytic_p_acc", "trials", "successes_exact",
                 "successes_acc", "rate_exact", "rate_acc", "stderr"};
    std::uint64_t grid = 0;
    for (int m : config.m_list) {
        const double base = alternating_fraction(m);
        for (double delta : config.deltas) {
            if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
            const double phi = base + std::ldexp(delta, -m);
            const auto exact = phase::decompose(phi, m).first;
            const auto key = stream_key(ExperimentId::success_curve, grid++);
            const auto hits = trials::tally<2>(
                config.trials,
                [&](std::uint64_t trial) {
                    RngStream rng(config.seed, key, trial);
                    const auto run = pea::run_ipea(pea::IpeaConfig::abstract(phi, m), rng);
                    return std::array<bool, 2>{run.result == exact, phase::accepted(run.result, phi)};
                },
                config.exec);
            const double n = static_cast<double>(config.trials);
            t.add_row({std::int64_t{m}, delta, pea::success_probability(delta, m), pea::success_with_accuracy(delta, m),
                       as_int(config.trials), as_int(hits[0]), as_int(hits[1]), static_cast<double>(hits[0]) / n,
                       static_cast<double>(hits[1]) / n, binomial_stderr(hits[0], config.trials)});
        }
    }
    return t;
}

std::string to_string(NoiseCase c) {
    switch (c) {
    case NoiseCase::xerr: return "xerr";
    case NoiseCase::dephasing: return "dephasing";
    case NoiseCase::both: return "both";
    }
    return "?";
}

NoiseCase parse_noise_case(const std::string& name) {
    if (name == "xerr") return NoiseCase::xerr;
    if (name == "dephasing") return NoiseCase::dephasing;
    if (name == "both") return NoiseCase::both;
    throw std::invalid_argument("unknown noise case: " + name);
}

noise::NoiseParams noise_for_level(NoiseCase c, double level) {
    if (!std::isfinite(level) || level < 0.0) throw std::invalid_argument("noise level must be finite and >= 0");
    switch (c) {
    case NoiseCase::xerr: return {0.0, level};
    case NoiseCase::dephasing: return {level, 0.0};
    case NoiseCase::both: return {level, level};
    }
    return {};
}

Table exp_noise_sweep(const NoiseSweepConfig& config) {
    require_nonempty(!config.m_list.empty() && !config.cases.empty() && !config.levels.empty(), "noise-sweep grid");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    Table t;
    t.comment = provenance("noise-sweep", config.seed) +
                " alpha~U[-pi,pi) per trial; noise_level nu maps xerr:(delta_x=nu,gamma_ratio=0)"
                " dephasing:(delta_x=0,gamma_ratio=nu) both:(delta_x=nu,gamma_ratio=nu)";
    t.columns = {"m", "noise_case", "noise_level", "trials", "successes", "rate", "stderr", "master_seed"};
    std::uint64_t grid = 0;
    for (int m : config.m_list) {
        for (NoiseCase c : config.cases) {
            for (double level : config.levels) {
                const auto params = noise_for_level(c, level);
                const auto key = stream_key(ExperimentId::noise_sweep, grid++);
                const auto hits = trials::count(
                    config.trials,
                    [&](std::uint64_t trial) {
                        RngStream rng(config.seed, key, trial);
                        const double alpha = -pi + 2 * pi * rng.uniform();
                        const auto run = pea::run_ipea(pea::IpeaConfig::circuit(alpha, m, params), rng);
                        return phase::accepted(run.result, pea::circuit_phase(alpha));
                    },
                    config.exec);
                t.add_row({std::int64_t{m}, to_string(c), level, as_int(config.trials), as_int(hits),
                           static_cast<double>(hits) / static_cast<double>(config.trials),
                           binomial_stderr(hits, config.trials), as_int(config.seed)});
            }
        }
    }
    return t;
}

AlphaPolicy parse_alpha_policy(const std::string& name) {
    if (name == "fixed") return AlphaPolicy::fixed;
    if (name == "mean-abs") return AlphaPolicy::mean_abs;
    if (name == "worst") return AlphaPolicy::worst;
    throw std::invalid_argument("unknown alpha policy: " + name);
}

double resolve_alpha(AlphaPolicy policy, double fixed_alpha) {
    switch (policy) {
    case AlphaPolicy::fixed: return fixed_alpha;
    case AlphaPolicy::mean_abs: return pi / 2;
    case AlphaPolicy::worst: return pi;
    }
    return fixed_alpha;
}

std::optional<std::uint64_t> planned_total(double alpha, int m, double eps, const noise::NoiseParams& noise) {
    try {
        return stats::plan(alpha, m, eps, noise, {}, stats::RepetitionRule::compact).n_total;
    } catch (const stats::UnresolvableBitError&) {
        return std::nullopt;
    }
}

int max_bits_within(double alpha, double eps, const noise::NoiseParams& noise, std::uint64_t budget, int m_cap) {
    int best = 0;
    for (int m = 1; m <= m_cap; ++m) {
        const auto total = planned_total(alpha, m, eps, noise);
        if (total && *total <= budget) best = m;
    }
    return best;
}

Table exp_cost_sweep(const CostSweepConfig& config) {
    require_nonempty(!config.m_list.empty() && !config.gammas.empty(), "cost-sweep grid");
    Table t;
    t.comment = std::string(kVersion) + " experiment=cost-sweep delta=0 delta_x=" + format_real(config.delta_x) +
                " rule=N_k=(1/8)(erfinv(1-2eps/m)/(P_k-1/2))^2 (N_k=1 if 1-P_k<=eps/m)";
    t.columns = {"m", "gamma_ratio", "alpha", "epsilon", "n_total", "within_1e4", "unresolvable"};
    for (double gamma : config.gammas) {
        for (int m : config.m_list) {
            const auto total = planned_total(config.alpha, m, config.eps, {gamma, config.delta_x});
            const std::int64_t n = total ? as_int(*total) : kSaturatedCount;
            t.add_row({std::int64_t{m}, gamma, config.alpha, config.eps, n,
                       std::int64_t{total && *total <= 10000 ? 1 : 0}, std::int64_t{total ? 0 : 1}});
        }
    }
    return t;
}

double mode_discrepancy(int m, const trials::ExecPolicy& exec) {
    constexpr int kAlphas = 16;
    return trials::max(
        kAlphas,
        [&](std::uint64_t j) {
            const double alpha = -pi + 2 * pi * (static_cast<double>(j) + 0.3) / kAlphas;
            const double phi = pea::circuit_phase(alpha);
            double worst = 0.0;
            for (int k = 1; k <= m; ++k) {
                const int lower = m - k;
                std::vector<std::uint8_t> bits(static_cast<std::size_t>(lower));
                for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << lower); ++pattern) {
                    for (int i = 0; i < lower; ++i) bits[static_cast<std::size_t>(i)] = (pattern >> i) & 1U;
                    const double omega = phase::feedback_angle(bits);
                    worst = std::max(worst, std::abs(pea::step_prob_abstract(phi, k, omega) -
                                                     pea::step_prob_circuit(alpha, k, omega)));
                }
            }
            return worst;
        },
        exec);
}

double exact_extraction_rate(int m, std::uint64_t seed, const trials::ExecPolicy& exec) {
    const std::uint64_t phases = std::uint64_t{1} << m;
    const auto key = stream_key(ExperimentId::crosscheck, static_cast<std::uint64_t>(m));
    const auto hits = trials::tally<2>(
        phases,
        [&](std::uint64_t j) {
            const double phi = std::ldexp(static_cast<double>(j), -m);
            const auto exact = phase::decompose(phi, m).first;
            RngStream rng_a(seed, key, 2 * j), rng_c(seed, key, 2 * j + 1);
            const auto a = pea::run_ipea(pea::IpeaConfig::abstract(phi, m), rng_a);
            const auto c = pea::run_ipea(pea::IpeaConfig::circuit(pea::equivalent_alpha(phi), m), rng_c);
            return std::array<bool, 2>{a.result == exact, c.result == exact};
        },
        exec);
    return static_cast<double>(hits[0] + hits[1]) / static_cast<double>(2 * phases);
}

Table exp_crosscheck(const CrosscheckConfig& config) {
    require_nonempty(!config.m_list.empty(), "crosscheck m-list");
    Table t;
    t.comment = provenance("crosscheck", config.seed) + " trajectory rows: alpha=pi/2 k=m gamma_ratio=" +
                format_real(config.noise.gamma_ratio) + " delta_x=" + format_real(config.noise.delta_x);
    t.columns = {"m", "mode_pair", "max_abs_discrepancy", "z_score", "trials"};
    for (int m : config.m_list) {
        if (m < 1 || m > 16) throw std::invalid_argument("crosscheck supports 1 <= m <= 16");
        std::uint64_t comparisons = 0;
        for (int k = 1; k <= m; ++k) comparisons += 16 * (std::uint64_t{1} << (m - k));
        t.add_row({std::int64_t{m}, std::string("abstract-circuit"), mode_discrepancy(m, config.exec), 0.0,
                   as_int(comparisons)});

        const double rate = exact_extraction_rate(m, config.seed, config.exec);
        t.add_row({std::int64_t{m}, std::string("exact-extraction"), 1.0 - rate, 0.0,
                   as_int(2 * (std::uint64_t{1} << m))});

        const double alpha = pi / 2;
        const double expected = noise::noisy_bit_prob(alpha, m, m, {}, config.noise);
        const auto hits = trajectory_correct_bits(alpha, m, m, config.noise, config.trials, config.seed,
                                                  stream_key(ExperimentId::crosscheck, 1000 + m), config.exec);
        const double p_hat = static_cast<double>(hits) / static_cast<double>(config.trials);
        const double sd = std::sqrt(expected * (1 - expected) / static_cast<double>(config.trials));
        t.add_row({std::int64_t{m}, std::string("trajectory-formula"), std::abs(p_hat - expected),
                   sd > 0 ? (p_hat - expected) / sd : 0.0, as_int(config.trials)});
    }
    return t;
}

std::uint64_t trajectory_correct_bits(double alpha, int k, int m, const noise::NoiseParams& noise,
                                      std::uint64_t trials, std::uint64_t seed, std::uint64_t key,
                                      const trials::ExecPolicy& exec) {
    if (k < 1 || k > m) throw std::invalid_argument("iteration index must be in [1, m]");
    const auto config = pea::IpeaConfig::circuit(alpha, m, noise);
    const auto exact = phase::decompose(pea::circuit_phase(alpha), m).first;
    const double omega = phase::feedback_angle(pea::lower_bits(exact.bits(), k));
    const int correct = exact.bit(k);
    return trials::count(
        trials,
        [&](std::uint64_t trial) {
            RngStream rng(seed, key, trial);
            return qcore::sample_bit(pea::step_p0(config, k, omega, rng), rng) == correct;
        },
        exec);
}

std::vector<double> default_phase_grid() {
    std::vector<double> grid;
    for (int j = 0; j < 16; ++j) grid.push_back((j + 0.37) / 16.0);
    return grid;
}

Table exp_kitaev(const KitaevConfig& config) {
    const auto phases = config.phases.empty() ? default_phase_grid() : config.phases;
    require_nonempty(!config.m_list.empty(), "kitaev m-list");
    Table t;
    t.comment = provenance("kitaev", config.seed) + " success: |phi_hat-phi| mod 1 <= 2^-(m+2)";
    t.columns = {"m", "phi", "epsilon", "trials", "successes", "rate", "stderr", "samples_per_quadrature",
                 "rounds", "u_applications"};
    std::uint64_t grid = 0;
    for (int m : config.m_list) {
        const std::uint64_t ns = pea::kitaev_samples(m, config.eps);
        const double tol = std::ldexp(1.0, -(m + 2));
        for (double phi : phases) {
            const auto key = stream_key(ExperimentId::kitaev, grid++);
            const auto hits = trials::count(
                config.trials,
                [&](std::uint64_t trial) {
                    RngStream rng(config.seed, key, trial);
                    const auto r = pea::run_kitaev_pea(phi, m, config.eps, rng);
                    return phase::circular_distance(r.estimate.value(), phi) <= tol;
                },
                config.exec);
            RngStream probe(config.seed, key, 0);
            const auto ledger = pea::run_kitaev_pea(phi, m, config.eps, probe).ledger;
            t.add_row({std::int64_t{m}, phi, config.eps, as_int(config.trials), as_int(hits),
                       static_cast<double>(hits) / static_cast<double>(config.trials),
                       binomial_stderr(hits, config.trials), as_int(ns), as_int(ledger.rounds),
                       as_int(ledger.u_applications)});
        }
    }
    return t;
}

double naive_error(double estimate, double phi) { return std::abs(estimate - std::min(phi, 1.0 - phi)); }

Table exp_naive(const NaiveConfig& config) {
    require_nonempty(!config.m_list.empty() && !config.phases.empty(), "naive grid");
    Table t;
    t.comment = provenance("naive", config.seed) + " estimate=arccos(sqrt(p0_hat))/pi in [0,1/2] (phi and 1-phi are indistinguishable)";
    t.columns = {"m", "phi", "n_rounds", "trials", "within_bound", "rate", "bound"};
    std::uint64_t grid = 0;
    for (int m : config.m_list) {
        const std::uint64_t n = std::uint64_t{1} << (2 * m);
        const double bound = 5.0 / std::sqrt(static_cast<double>(n));
        for (double phi : config.phases) {
            const auto key = stream_key(ExperimentId::naive, grid++);
            const auto hits = trials::count(
                config.trials,
                [&](std::uint64_t trial) {
                    RngStream rng(config.seed, key, trial);
                    return naive_error(pea::run_naive_pea(phi, m, rng).estimate, phi) <= bound;
                },
                config.exec);
            t.add_row({std::int64_t{m}, phi, as_int(n), as_int(config.trials), as_int(hits),
                       static_cast<double>(hits) / static_cast<double>(config.trials), bound});
        }
    }
    return t;
}

std::string transcript_json(const pea::IpeaConfig& config, const pea::RunTranscript& t, std::uint64_t seed) {
    nlohmann::ordered_json doc;
    const bool abstract = config.mode == pea::Mode::abstract;
    doc["phi_or_alpha"] = abstract ? *config.phi : *config.alpha;
    doc["m"] = config.m;
    doc["mode"] = abstract ? "abstract" : "circuit";
    doc["bits"] = t.result.bits();
    auto iterations = nlohmann::ordered_json::array();
    for (const auto& it : t.iterations)
        iterations.push_back({{"k", it.k}, {"omega", it.omega}, {"p0", it.p0}, {"bit", it.bit}});
    doc["iterations"] = std::move(iterations);
    doc["ledger"] = {{"rounds", t.ledger.rounds},
                     {"u_applications", t.ledger.u_applications},
                     {"total_evolution_time", t.ledger.total_evolution_time}};
    doc["seed"] = seed;
    doc["phase"] = config.target_phase();
    doc["estimate"] = t.result.value();
    doc["convention"] = {{"rz_sign", t.convention.rz_sign}, {"phase_sign", t.convention.phase_sign}};
    if (config.noise) doc["noise"] = {{"gamma_ratio", config.noise->gamma_ratio}, {"delta_x", config.noise->delta_x}};
    return doc.dump(2) + "\n";
}

}  // namespace ipea::bench
