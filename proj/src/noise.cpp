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

#include "ipea/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ipea::noise {

void NoiseParams::validate() const {
    if (!std::isfinite(gamma_ratio) || gamma_ratio < 0.0) throw std::invalid_argument("gamma_ratio must be finite and >= 0");
    if (!std::isfinite(delta_x) || delta_x < 0.0) throw std::invalid_argument("delta_x must be finite and >= 0");
}

double damping(double alpha, int k, const NoiseParams& noise) {
    return std::exp(-noise.delta_x * noise.delta_x - std::abs(alpha) * std::ldexp(noise.gamma_ratio, k));
}

double noisy_bit_prob(double alpha, int k, int m, phase::Remainder delta, const NoiseParams& noise) {
    noise.validate();
    if (k < 1 || k > m) throw std::invalid_argument("iteration index must be in [1, m]");
    if (noise.is_zero()) {
        // Same expression as the noiseless product form, so the reduction is bit-exact.
        const double h = std::cos(std::numbers::pi * std::ldexp(delta.delta, k - m - 1));
        return h * h;
    }
    const double c = std::cos(std::numbers::pi * std::ldexp(delta.delta, k - m));
    return 0.5 * (1.0 + damping(alpha, k, noise) * c);
}

double sample_rx_error(const NoiseParams& noise, RngStream& rng) {
    if (noise.delta_x == 0.0) return 0.0;
    return noise.delta_x * rng.normal();
}

double dephasing_variance(double alpha, int k, const NoiseParams& noise) {
    return 2.0 * std::abs(alpha) * std::ldexp(noise.gamma_ratio, k);
}

double sample_dephasing_kick(double alpha, int k, const NoiseParams& noise, RngStream& rng) {
    const double var = dephasing_variance(alpha, k, noise);
    if (var == 0.0) return 0.0;
    return std::sqrt(var) * rng.normal();
}

double analytic_success_with_noise(double alpha, int m, phase::Remainder delta, const NoiseParams& noise) {
    double p = 1.0;
    for (int k = 1; k <= m; ++k) p *= noisy_bit_prob(alpha, k, m, delta, noise);
    return p;
}

double rx_error_mean_p0(double beta, double delta_x) {
    return 0.5 + 0.5 * std::exp(-delta_x * delta_x) * std::cos(beta);
}

}  // namespace ipea::noise
