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

#include "ipea/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ipea/qcore.hpp"

namespace ipea::stats {

UnresolvableBitError::UnresolvableBitError(int k, double p_bit)
    : std::runtime_error("bit " + std::to_string(k) + " is unresolvable (P = " + std::to_string(p_bit) + ")"),
      k_(k), p_bit_(p_bit) {}

double erf_inv(double x) {
    if (!(x > -1.0 && x < 1.0)) throw std::invalid_argument("erf_inv requires |x| < 1");
    if (x == 0.0) return 0.0;
    // Giles' single-precision rational approximation as a starting point.
    double w = -std::log((1.0 - x) * (1.0 + x));
    double p;
    if (w < 5.0) {
        w -= 2.5;
        p = 2.81022636e-08;
        p = 3.43273939e-07 + p * w;
        p = -3.5233877e-06 + p * w;
        p = -4.39150654e-06 + p * w;
        p = 0.00021858087 + p * w;
        p = -0.00125372503 + p * w;
        p = -0.00417768164 + p * w;
        p = 0.246640727 + p * w;
        p = 1.50140941 + p * w;
    } else {
        w = std::sqrt(w) - 3.0;
        p = -0.000200214257;
        p = 0.000100950558 + p * w;
        p = 0.00134934322 + p * w;
        p = -0.00367342844 + p * w;
        p = 0.00573950773 + p * w;
        p = -0.0076224613 + p * w;
        p = 0.00943887047 + p * w;
        p = 1.00167406 + p * w;
        p = 2.83297682 + p * w;
    }
    double y = p * x;
    // Newton on erf(y) - x.
    const double scale = 2.0 / std::sqrt(std::numbers::pi);
    for (int i = 0; i < 4; ++i) {
        const double step = (std::erf(y) - x) / (scale * std::exp(-y * y));
        y -= step;
        if (std::abs(step) <= 1e-16 * std::abs(y)) break;
    }
    return y;
}

double rule_coefficient(RepetitionRule rule) noexcept { return rule == RepetitionRule::compact ? 0.125 : 0.5; }

std::uint64_t repetitions_for_bit(double p_bit, double eps, int m, RepetitionRule rule, int k) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (!(p_bit > 0.5 + kResolvableMargin)) throw UnresolvableBitError(k, p_bit);
    // A single round already meets the per-bit budget.
    if (1.0 - p_bit <= eps / m) return 1;
    const double z = erf_inv(1.0 - 2.0 * eps / m);
    const double ratio = z / (p_bit - 0.5);
    const double n = std::max(1.0, rule_coefficient(rule) * ratio * ratio);
    auto count = static_cast<std::uint64_t>(std::ceil(n));
    if (count % 2 == 0) ++count;
    return count;
}

RepetitionPlan plan(double alpha, int m, double eps, const noise::NoiseParams& noise, phase::Remainder delta,
                    RepetitionRule rule) {
    if (m < 1 || m > phase::kMaxBits) throw std::invalid_argument("m must be in [1, 52]");
    RepetitionPlan p;
    p.epsilon = eps;
    p.per_bit_budget = eps / m;
    p.counts.resize(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        const double pk = noise::noisy_bit_prob(alpha, k, m, delta, noise);
        p.counts[static_cast<std::size_t>(k - 1)] = repetitions_for_bit(pk, eps, m, rule, k);
        p.n_total += p.counts[static_cast<std::size_t>(k - 1)];
    }
    return p;
}

int majority(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 == 0) throw std::invalid_argument("majority vote needs an odd number of bits");
    std::size_t ones = 0;
    for (auto b : bits) ones += b ? 1 : 0;
    return 2 * ones > bits.size() ? 1 : 0;
}

RepetitionResult run_with_repetitions(const pea::IpeaConfig& config, double eps, RngStream& rng,
                                      const RepetitionOptions& options) {
    config.validate();
    const int m = config.m;
    const double alpha = config.zz_angle();

    RepetitionResult out;
    if (config.noisy()) {
        out.plan = plan(alpha, m, eps, *config.noise, {}, options.rule);
    } else {
        if (options.uniform_repetitions % 2 == 0) throw std::invalid_argument("uniform repetitions must be odd");
        out.plan.epsilon = eps;
        out.plan.per_bit_budget = eps / m;
        out.plan.counts.assign(static_cast<std::size_t>(m), options.uniform_repetitions);
        out.plan.n_total = options.uniform_repetitions * static_cast<std::uint64_t>(m);
    }
    if (options.repeated_bits >= 0) {
        out.plan.n_total = 0;
        for (int k = 1; k <= m; ++k) {
            auto& n = out.plan.counts[static_cast<std::size_t>(k - 1)];
            if (k <= m - options.repeated_bits) n = 1;
            out.plan.n_total += n;
        }
    }

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m), 0);
    std::vector<std::uint8_t> votes;
    for (int k = m; k >= 1; --k) {
        const double omega = phase::feedback_angle(pea::lower_bits(bits, k));
        const std::uint64_t n = out.plan.count(k);
        votes.assign(n, 0);
        for (std::uint64_t r = 0; r < n; ++r)
            votes[r] = static_cast<std::uint8_t>(qcore::sample_bit(pea::step_p0(config, k, omega, rng), rng));
        bits[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(majority(votes));
        out.ledger.record_round(k, alpha, n);
    }
    out.result = phase::PhaseFraction(std::move(bits));
    return out;
}

int guard_bits(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
    return static_cast<int>(std::ceil(std::log2(2.0 + 1.0 / (2.0 * eps))));
}

GuardBitResult run_with_guard_bits(const pea::IpeaConfig& config, double eps, RngStream& rng) {
    auto extended = config;
    extended.m = config.m + guard_bits(eps);
    auto t = pea::run_ipea(extended, rng);
    return {t.result, t.result.truncated(config.m), t.ledger};
}

}  // namespace ipea::stats
