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

#include "ipea/verify.hpp"

#include <cmath>
#include <numbers>

#include "ipea/experiments.hpp"
#include "ipea/pea.hpp"
#include "ipea/qcore.hpp"
#include "ipea/stats.hpp"

namespace ipea::bench {

namespace {

using std::numbers::pi;

CheckResult check(std::string name, double value, double limit) {
    return {std::move(name), value <= limit, "max deviation " + format_real(value) + " (limit " + format_real(limit) + ")"};
}

double gate_unitarity() {
    using qcore::GateKind;
    double worst = 0.0;
    for (int i = -40; i <= 40; ++i) {
        const double a = 0.173 * i;
        worst = std::max(worst, qcore::unitarity_defect(qcore::make_single_gate(GateKind::RX, a)));
        worst = std::max(worst, qcore::unitarity_defect(qcore::make_single_gate(GateKind::RZ, a)));
        worst = std::max(worst, qcore::unitarity_defect(qcore::make_zz(a)));
        for (int k = 1; k <= 20; ++k) worst = std::max(worst, qcore::unitarity_defect(qcore::make_controlled_phase(a, k)));
    }
    worst = std::max(worst, qcore::unitarity_defect(qcore::make_single_gate(GateKind::H, 0.0)));
    return worst;
}

double transcript_mismatch() {
    const auto config = pea::IpeaConfig::circuit(1.234, 8, noise::NoiseParams{0.02, 0.1});
    double mismatches = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        RngStream a(99, 1, trial), b(99, 1, trial);
        const auto ta = pea::run_ipea(config, a), tb = pea::run_ipea(config, b);
        if (ta.result != tb.result) ++mismatches;
        for (std::size_t i = 0; i < ta.iterations.size(); ++i)
            if (ta.iterations[i].p0 != tb.iterations[i].p0) ++mismatches;
    }
    NoiseSweepConfig sweep;
    sweep.levels = {0.0, 0.05};
    sweep.trials = 200;
    sweep.exec = {trials::Exec::serial, 1};
    const auto serial = to_csv(exp_noise_sweep(sweep));
    sweep.exec = {trials::Exec::openmp, 8};
    if (to_csv(exp_noise_sweep(sweep)) != serial) ++mismatches;
    return mismatches;
}

double erf_inv_roundtrip() {
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double x = -0.999 + 1.998 * i / 1999.0;
        worst = std::max(worst, std::abs(std::erf(stats::erf_inv(x)) - x));
    }
    return worst;
}

double product_identity() {
    double worst = 0.0;
    for (int d = 1; d <= 19; ++d)
        for (int m = 1; m <= 16; ++m) {
            const double delta = 0.05 * d;
            worst = std::max(worst, std::abs(pea::success_probability(delta, m) -
                                             pea::success_probability_product(delta, m)));
        }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_verify() {
    std::vector<CheckResult> out;
    auto guarded = [&](const std::string& name, double limit, auto&& fn) {
        try {
            out.push_back(check(name, fn(), limit));
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("threw: ") + e.what()});
        }
    };
    guarded("gate unitarity", qcore::kUnitaryTolerance, gate_unitarity);
    guarded("seeded determinism", 0.0, transcript_mismatch);
    guarded("erf_inv round trip", 1e-10, erf_inv_roundtrip);
    guarded("success probability product identity", 1e-12, product_identity);
    guarded("abstract/circuit step equivalence", 1e-12, [] { return mode_discrepancy(8); });
    guarded("exact-phase extraction", 0.0, [] {
        double worst = 0.0;
        for (int m = 1; m <= 8; ++m) worst = std::max(worst, 1.0 - exact_extraction_rate(m, 7));
        return worst;
    });
    return out;
}

}  // namespace ipea::bench
