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

#include "ipea/pea.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ipea::pea {

using std::numbers::pi;

double circuit_phase(double alpha) { return phase::wrap_unit(kCircuitConvention.phase_sign * alpha / pi); }

double equivalent_alpha(double phi) {
    if (!(phi >= 0.0 && phi < 1.0)) throw std::invalid_argument("phase must lie in [0, 1)");
    const double a = kCircuitConvention.phase_sign * pi * phi;
    return a - pi * std::floor((a + pi / 2) / pi);
}

IpeaConfig IpeaConfig::abstract(double phi, int m, std::optional<noise::NoiseParams> noise) {
    IpeaConfig c;
    c.m = m;
    c.mode = Mode::abstract;
    c.phi = phi;
    c.noise = noise;
    c.validate();
    return c;
}

IpeaConfig IpeaConfig::circuit(double alpha, int m, std::optional<noise::NoiseParams> noise) {
    IpeaConfig c;
    c.m = m;
    c.mode = Mode::circuit;
    c.alpha = alpha;
    c.noise = noise;
    c.validate();
    return c;
}

void IpeaConfig::validate() const {
    if (m < 1 || m > phase::kMaxBits) throw std::invalid_argument("m must be in [1, 52]");
    if (mode == Mode::abstract) {
        if (!phi || alpha) throw std::invalid_argument("abstract mode takes phi only");
        if (!(*phi >= 0.0 && *phi < 1.0)) throw std::invalid_argument("phi must lie in [0, 1)");
    } else {
        if (!alpha || phi) throw std::invalid_argument("circuit mode takes alpha only");
        if (!std::isfinite(*alpha)) throw std::invalid_argument("alpha must be finite");
    }
    if (noise) noise->validate();
}

double IpeaConfig::target_phase() const { return mode == Mode::abstract ? *phi : circuit_phase(*alpha); }

double IpeaConfig::zz_angle() const { return mode == Mode::circuit ? *alpha : equivalent_alpha(*phi); }

void MeasurementLedger::record_round(int k, double alpha, std::uint64_t times) {
    const std::uint64_t power = std::uint64_t{1} << (k - 1);
    rounds += times;
    u_applications += power * times;
    total_evolution_time += std::abs(alpha) * static_cast<double>(power) * static_cast<double>(times);
}

MeasurementLedger& MeasurementLedger::operator+=(const MeasurementLedger& other) {
    rounds += other.rounds;
    u_applications += other.u_applications;
    total_evolution_time += other.total_evolution_time;
    return *this;
}

double step_prob_abstract(double phi, int k, double omega) {
    if (k < 1 || k > 62) throw std::invalid_argument("iteration index k must be in [1, 62]");
    const double c = std::cos(pi * phase::wrap_unit(std::ldexp(phi, k - 1)) + omega / 2);
    return c * c;
}

double step_prob_abstract_noisy(double phi, int k, double omega, double alpha, const noise::NoiseParams& noise) {
    if (k < 1 || k > 62) throw std::invalid_argument("iteration index k must be in [1, 62]");
    if (noise.is_zero()) return step_prob_abstract(phi, k, omega);
    const double theta = 2 * pi * phase::wrap_unit(std::ldexp(phi, k - 1)) + omega;
    return 0.5 + 0.5 * noise::damping(alpha, k, noise) * std::cos(theta);
}

qcore::QubitState step_state_circuit(double alpha, int k, double omega, const StepNoise& noise,
                                     SignConvention conv) {
    using qcore::GateKind;
    using qcore::Qubit;
    if (k < 1 || k > 62) throw std::invalid_argument("iteration index k must be in [1, 62]");
    auto s = qcore::QubitState::zero(2);
    s = qcore::apply(qcore::make_single_gate(GateKind::RX, pi / 2 + noise.rx_pre), Qubit::ancilla, s);
    s = qcore::apply(qcore::make_zz(std::ldexp(alpha, k - 1)), s);
    if (noise.kick != 0.0) s = qcore::apply(qcore::make_single_gate(GateKind::RZ, noise.kick), Qubit::ancilla, s);
    s = qcore::apply(qcore::make_single_gate(GateKind::RZ, conv.rz_sign * omega), Qubit::ancilla, s);
    s = qcore::apply(qcore::make_single_gate(GateKind::RX, -pi / 2 + noise.rx_post), Qubit::ancilla, s);
    return s;
}

double step_prob_circuit(double alpha, int k, double omega, const StepNoise& noise, SignConvention conv) {
    return qcore::prob_zero(step_state_circuit(alpha, k, omega, noise, conv), qcore::Qubit::ancilla);
}

double step_p0(const IpeaConfig& config, int k, double omega, RngStream& rng) {
    if (config.mode == Mode::abstract) {
        if (config.noisy()) return step_prob_abstract_noisy(*config.phi, k, omega, config.zz_angle(), *config.noise);
        return step_prob_abstract(*config.phi, k, omega);
    }
    StepNoise draw;
    if (config.noisy()) {
        draw.rx_pre = noise::sample_rx_error(*config.noise, rng);
        draw.kick = noise::sample_dephasing_kick(*config.alpha, k, *config.noise, rng);
        draw.rx_post = noise::sample_rx_error(*config.noise, rng);
    }
    return step_prob_circuit(*config.alpha, k, omega, draw);
}

std::span<const std::uint8_t> lower_bits(const std::vector<std::uint8_t>& bits, int k) {
    return std::span<const std::uint8_t>(bits).subspan(static_cast<std::size_t>(k));
}

RunTranscript run_ipea(const IpeaConfig& config, RngStream& rng) {
    config.validate();
    const double alpha = config.zz_angle();
    RunTranscript t;
    t.iterations.reserve(static_cast<std::size_t>(config.m));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(config.m), 0);
    for (int k = config.m; k >= 1; --k) {
        const double omega = phase::feedback_angle(lower_bits(bits, k));
        const double p0 = step_p0(config, k, omega, rng);
        const int bit = qcore::sample_bit(p0, rng);
        bits[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(bit);
        t.iterations.push_back({k, omega, p0, bit});
        t.ledger.record_round(k, alpha);
    }
    t.result = phase::PhaseFraction(std::move(bits));
    return t;
}

double success_probability(double delta, int m) {
    if (m < 1 || m > phase::kMaxBits) throw std::invalid_argument("m must be in [1, 52]");
    if (delta == 0.0) return 1.0;
    const double num = std::sin(pi * delta);
    const double den = std::sin(pi * std::ldexp(delta, -m));
    return (num * num) / (std::ldexp(1.0, 2 * m) * den * den);
}

double success_probability_product(double delta, int m) {
    double p = 1.0;
    for (int k = 1; k <= m; ++k) {
        const double c = std::cos(pi * std::ldexp(delta, k - m - 1));
        p *= c * c;
    }
    return p;
}

double success_with_accuracy(double delta, int m) { return success_probability(delta, m) + success_probability(1.0 - delta, m); }

NaiveResult run_naive_pea(double phi, int m, RngStream& rng) {
    if (!(phi >= 0.0 && phi < 1.0)) throw std::invalid_argument("phase must lie in [0, 1)");
    if (m < 1 || m > kMaxNaiveBits) throw std::invalid_argument("naive PEA supports 1 <= m <= 13");
    using qcore::GateKind;
    using qcore::Qubit;
    // Target |0> is an eigenstate of diag(e^{-ia}, e^{ia}) with eigenvalue e^{-ia} = e^{i 2 pi phi}.
    const auto h = qcore::make_single_gate(GateKind::H, 0.0);
    auto s = qcore::apply(h, Qubit::ancilla, qcore::QubitState::zero(2));
    s = qcore::apply(qcore::make_controlled_phase(-2 * pi * phi, 1), s);
    s = qcore::apply(h, Qubit::ancilla, s);
    const double p0 = qcore::prob_zero(s, Qubit::ancilla);

    const std::uint64_t n = std::uint64_t{1} << (2 * m);
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < n; ++i) zeros += qcore::sample_bit(p0, rng) == 0 ? 1 : 0;

    NaiveResult r;
    r.p0_hat = static_cast<double>(zeros) / static_cast<double>(n);
    r.estimate = std::acos(std::sqrt(r.p0_hat)) / pi;
    r.ledger.record_round(1, equivalent_alpha(phi), n);
    return r;
}

std::uint64_t kitaev_samples(int m, double eps) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
    constexpr double t = 0.15;
    return static_cast<std::uint64_t>(std::ceil(std::log(4.0 * m / eps) / (2 * t * t)));
}

double kitaev_assemble(std::span<const double> beta) {
    if (beta.empty()) throw std::invalid_argument("no fractional parts to assemble");
    double a = phase::wrap_unit(beta.back());
    for (std::size_t i = beta.size() - 1; i-- > 0;) {
        const double c0 = a / 2, c1 = a / 2 + 0.5;
        a = phase::circular_distance(c0, beta[i]) <= phase::circular_distance(c1, beta[i]) ? c0 : c1;
    }
    return a;
}

KitaevResult run_kitaev_pea(double phi, int m, double eps, RngStream& rng) {
    if (!(phi >= 0.0 && phi < 1.0)) throw std::invalid_argument("phase must lie in [0, 1)");
    if (m < 1 || m + 2 > phase::kMaxBits) throw std::invalid_argument("m must be in [1, 50]");
    using qcore::GateKind;
    using qcore::Qubit;
    const std::uint64_t ns = kitaev_samples(m, eps);
    const auto h = qcore::make_single_gate(GateKind::H, 0.0);
    const double alpha_u = -2 * pi * phi;

    auto quadrature_p0 = [&](int k, double extra) {
        auto s = qcore::apply(h, Qubit::ancilla, qcore::QubitState::zero(2));
        s = qcore::apply(qcore::make_controlled_phase(alpha_u, k), s);
        s = qcore::apply(qcore::make_single_gate(GateKind::RZ, extra), Qubit::ancilla, s);
        s = qcore::apply(h, Qubit::ancilla, s);
        return qcore::prob_zero(s, Qubit::ancilla);
    };
    auto estimate = [&](double p0) {
        std::uint64_t zeros = 0;
        for (std::uint64_t i = 0; i < ns; ++i) zeros += qcore::sample_bit(p0, rng) == 0 ? 1 : 0;
        return static_cast<double>(zeros) / static_cast<double>(ns);
    };

    KitaevResult r;
    r.samples_per_quadrature = ns;
    r.beta.resize(static_cast<std::size_t>(m));
    const double alpha_eq = equivalent_alpha(phi);
    for (int k = 1; k <= m; ++k) {
        // p_c -> (1 + cos 2 pi beta)/2, p_s -> (1 + sin 2 pi beta)/2.
        const double pc = estimate(quadrature_p0(k, 0.0));
        const double ps = estimate(quadrature_p0(k, -pi / 2));
        r.beta[static_cast<std::size_t>(k - 1)] = phase::wrap_unit(std::atan2(2 * ps - 1, 2 * pc - 1) / (2 * pi));
        r.ledger.record_round(k, alpha_eq, 2 * ns);
    }
    const double a1 = kitaev_assemble(r.beta);
    const double scaled = std::nearbyint(std::ldexp(a1, m + 2));
    r.estimate = phase::PhaseFraction::from_value(phase::wrap_unit(std::ldexp(scaled, -(m + 2))), m + 2);
    return r;
}

}  // namespace ipea::pea
