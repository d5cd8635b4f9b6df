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
#include <optional>
#include <span>
#include <vector>

#include "ipea/noise.hpp"
#include "ipea/phase.hpp"
#include "ipea/qcore.hpp"
#include "ipea/rng.hpp"

namespace ipea::pea {

enum class Mode { abstract, circuit };

/**
 * Sign conventions of the two-qubit step RX(pi/2), ZZ(alpha 2^{k-1}),
 * RZ(rz_sign * omega), RX(-pi/2) under the qcore gate definitions.
 *
 * Multiplying the four matrices gives p0 = cos^2(alpha 2^{k-1} + rz_sign*omega/2),
 * so the circuit measures phi = frac(phase_sign * alpha / pi) when
 * rz_sign == phase_sign. The defaults follow the RZ(-omega) wiring.
 */
struct SignConvention {
    int rz_sign = -1;
    int phase_sign = -1;
};

inline constexpr SignConvention kCircuitConvention{};

/// Eigenphase in [0,1) measured by the circuit for ZZ angle alpha.
double circuit_phase(double alpha);
/// ZZ angle in [-pi/2, pi/2) whose circuit phase is phi.
double equivalent_alpha(double phi);

struct IpeaConfig {
    int m = 1;
    Mode mode = Mode::abstract;
    std::optional<double> phi;    ///< abstract mode
    std::optional<double> alpha;  ///< circuit mode
    std::optional<noise::NoiseParams> noise;

    static IpeaConfig abstract(double phi, int m, std::optional<noise::NoiseParams> noise = std::nullopt);
    static IpeaConfig circuit(double alpha, int m, std::optional<noise::NoiseParams> noise = std::nullopt);

    /// Throws std::invalid_argument when the mode/parameter pairing or m is wrong.
    void validate() const;
    /// Phase the run is estimating, in [0,1).
    double target_phase() const;
    /// ZZ angle (circuit) or its abstract-mode equivalent; used for noise scaling and ledger times.
    double zz_angle() const;
    bool noisy() const noexcept { return noise && !noise->is_zero(); }
};

/// Rounds, U applications and total ZZ evolution time (units of 1/lambda).
struct MeasurementLedger {
    std::uint64_t rounds = 0;
    std::uint64_t u_applications = 0;
    double total_evolution_time = 0.0;

    /// One measurement round at iteration k.
    void record_round(int k, double alpha, std::uint64_t times = 1);
    MeasurementLedger& operator+=(const MeasurementLedger& other);
};

struct IterationRecord {
    int k;
    double omega;
    double p0;
    int bit;
};

struct RunTranscript {
    std::vector<IterationRecord> iterations;  ///< k = m down to 1
    phase::PhaseFraction result;
    MeasurementLedger ledger;
    SignConvention convention = kCircuitConvention;
};

/// cos^2(pi 2^{k-1} phi + omega/2).
double step_prob_abstract(double phi, int k, double omega);

/// Abstract step with the analytic noise damping applied to the interference term.
double step_prob_abstract_noisy(double phi, int k, double omega, double alpha, const noise::NoiseParams& noise);

/// Noise realization for one circuit step.
struct StepNoise {
    double rx_pre = 0.0;   ///< over-rotation of RX(pi/2)
    double rx_post = 0.0;  ///< over-rotation of RX(-pi/2)
    double kick = 0.0;     ///< ancilla phase picked up during ZZ
};

/// Final two-qubit state of one circuit step.
qcore::QubitState step_state_circuit(double alpha, int k, double omega, const StepNoise& noise = {},
                                     SignConvention conv = kCircuitConvention);

/// Ancilla p0 after one circuit step.
double step_prob_circuit(double alpha, int k, double omega, const StepNoise& noise = {},
                         SignConvention conv = kCircuitConvention);

/// Draws a fresh noise realization (if any) and returns the step's p0.
double step_p0(const IpeaConfig& config, int k, double omega, RngStream& rng);

/// Bits x_{k+1}..x_m from a bit array indexed by j-1, as a contiguous view.
std::span<const std::uint8_t> lower_bits(const std::vector<std::uint8_t>& bits, int k);

RunTranscript run_ipea(const IpeaConfig& config, RngStream& rng);

/// sin^2(pi delta) / (2^{2m} sin^2(pi 2^{-m} delta)); 1 at delta = 0.
double success_probability(double delta, int m);
/// prod_{k=1}^{m} cos^2(pi 2^{k-m-1} delta).
double success_probability_product(double delta, int m);
/// P(delta) + P(1 - delta).
double success_with_accuracy(double delta, int m);

struct NaiveResult {
    double estimate = 0.0;  ///< arccos(sqrt(p0_hat))/pi, in [0, 1/2]
    double p0_hat = 0.0;
    MeasurementLedger ledger;
    /// The estimator cannot distinguish phi from 1 - phi.
    bool branch_ambiguous = true;
};

inline constexpr int kMaxNaiveBits = 13;

/// 4^m rounds of H, controlled-U, H on the eigenstate; m <= kMaxNaiveBits.
NaiveResult run_naive_pea(double phi, int m, RngStream& rng);

/// Per-quadrature sample count ceil(ln(4m/eps) / (2 t^2)) with t = 0.15.
std::uint64_t kitaev_samples(int m, double eps);

struct KitaevResult {
    phase::PhaseFraction estimate;  ///< m+2 bits
    std::vector<double> beta;       ///< beta[k-1] estimates frac(2^{k-1} phi)
    std::uint64_t samples_per_quadrature = 0;
    MeasurementLedger ledger;
};

/// Consistency reconstruction: a_m = beta_m, then a_k in {a_{k+1}/2, a_{k+1}/2 + 1/2} nearest beta_k.
double kitaev_assemble(std::span<const double> beta);

KitaevResult run_kitaev_pea(double phi, int m, double eps, RngStream& rng);

}  // namespace ipea::pea
