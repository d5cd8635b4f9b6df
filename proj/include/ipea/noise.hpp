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

#include "ipea/phase.hpp"
#include "ipea/rng.hpp"

namespace ipea::noise {

/// Gate-noise strength. Both fields are dimensionless and non-negative.
struct NoiseParams {
    double gamma_ratio = 0.0;  ///< dephasing rate over coupling strength
    double delta_x = 0.0;      ///< std. deviation of RX over-rotations, radians

    bool is_zero() const noexcept { return gamma_ratio == 0.0 && delta_x == 0.0; }
    /// Throws std::invalid_argument on negative or non-finite fields.
    void validate() const;
};

/// Coherence factor exp(-dx^2 - |alpha| 2^k gamma).
double damping(double alpha, int k, const NoiseParams& noise);

/// Probability of reading bit k correctly with m-bit feedback:
///     1/2 [1 + damping * cos(pi 2^{k-m} delta)]
double noisy_bit_prob(double alpha, int k, int m, phase::Remainder delta, const NoiseParams& noise);

/// Over-rotation angle for one RX(+-pi/2) gate, ~ Normal(0, delta_x^2).
double sample_rx_error(const NoiseParams& noise, RngStream& rng);

/// Variance of the per-ZZ ancilla phase kick: 2 |alpha| 2^k gamma.
double dephasing_variance(double alpha, int k, const NoiseParams& noise);

/// Ancilla phase kick ~ Normal(0, dephasing_variance). E[cos] matches the dephasing part of damping().
double sample_dephasing_kick(double alpha, int k, const NoiseParams& noise, RngStream& rng);

/// Product of noisy_bit_prob over k = 1..m.
double analytic_success_with_noise(double alpha, int m, phase::Remainder delta, const NoiseParams& noise);

/// Exact average of p0 over two independent Gaussian RX errors: 1/2 + 1/2 e^{-dx^2} cos(beta).
double rx_error_mean_p0(double beta, double delta_x);

}  // namespace ipea::noise
