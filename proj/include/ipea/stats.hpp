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
#include <span>
#include <stdexcept>
#include <vector>

#include "ipea/noise.hpp"
#include "ipea/pea.hpp"
#include "ipea/phase.hpp"
#include "ipea/rng.hpp"

namespace ipea::stats {

/// A bit whose correct-outcome probability is at or below 1/2 + 1e-9.
class UnresolvableBitError : public std::runtime_error {
public:
    UnresolvableBitError(int k, double p_bit);
    int k() const noexcept { return k_; }
    double p_bit() const noexcept { return p_bit_; }

private:
    int k_;
    double p_bit_;
};

inline constexpr double kResolvableMargin = 1e-9;

/// Inverse error function on (-1, 1), accurate to ~1e-15 after Newton refinement.
double erf_inv(double x);

/**
 * Repetition count rule N = c * (erf_inv(1 - 2 eps/m) / (p - 1/2))^2.
 *
 * `compact` uses c = 1/8, the compact rule used for cost planning. `normal_tail`
 * uses c = 1/2, which solves P(majority wrong) = eps/m exactly under the
 * normal approximation with variance 1/(4N).
 */
enum class RepetitionRule { compact, normal_tail };

double rule_coefficient(RepetitionRule rule) noexcept;

/// Smallest odd integer >= max(1, N), or 1 when 1 - p_bit <= eps/m. Throws UnresolvableBitError (with `k`) when p_bit <= 1/2 + 1e-9.
std::uint64_t repetitions_for_bit(double p_bit, double eps, int m, RepetitionRule rule = RepetitionRule::compact, int k = 0);

struct RepetitionPlan {
    std::vector<std::uint64_t> counts;  ///< counts[k-1] = N_k
    double epsilon = 0.0;
    double per_bit_budget = 0.0;
    std::uint64_t n_total = 0;

    int m() const noexcept { return static_cast<int>(counts.size()); }
    std::uint64_t count(int k) const { return counts.at(static_cast<std::size_t>(k - 1)); }
};

/// Per-bit noisy probabilities from the closed form, then repetition counts per `rule`.
RepetitionPlan plan(double alpha, int m, double eps, const noise::NoiseParams& noise, phase::Remainder delta = {},
                    RepetitionRule rule = RepetitionRule::compact);

/// Majority value of an odd-length bit list.
int majority(std::span<const std::uint8_t> bits);

struct RepetitionOptions {
    RepetitionRule rule = RepetitionRule::normal_tail;
    /// Used for every bit when the config has no noise model.
    std::uint64_t uniform_repetitions = 1;
    /// Repeat only the first `repeated_bits` measured bits (k = m, m-1, ...); -1 repeats all.
    int repeated_bits = -1;
};

struct RepetitionResult {
    phase::PhaseFraction result;
    pea::MeasurementLedger ledger;
    RepetitionPlan plan;
};

/// IPEA where bit k is measured N_k times and majority-voted before the next feedback angle.
RepetitionResult run_with_repetitions(const pea::IpeaConfig& config, double eps, RngStream& rng,
                                      const RepetitionOptions& options = {});

/// ceil(log2(2 + 1/(2 eps))).
int guard_bits(double eps);

struct GuardBitResult {
    phase::PhaseFraction full;       ///< m + guard_bits(eps) bits
    phase::PhaseFraction truncated;  ///< m most significant bits
    pea::MeasurementLedger ledger;
};

/// Single-shot IPEA with guard bits; `config.m` is the number of bits kept.
GuardBitResult run_with_guard_bits(const pea::IpeaConfig& config, double eps, RngStream& rng);

}  // namespace ipea::stats
