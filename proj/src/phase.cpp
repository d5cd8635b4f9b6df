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

#include "ipea/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ipea::phase {

namespace {

void require_bit_count(int m) {
    if (m < 1 || m > kMaxBits) throw std::invalid_argument("bit count must be in [1, 52]");
}

}  // namespace

PhaseFraction::PhaseFraction(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    require_bit_count(static_cast<int>(bits_.size()));
    for (auto b : bits_)
        if (b > 1) throw std::invalid_argument("bits must be 0 or 1");
}

PhaseFraction PhaseFraction::from_value(double value, int m) { return decompose(value, m).first; }

double PhaseFraction::value() const noexcept {
    double v = 0.0;
    for (std::size_t j = 0; j < bits_.size(); ++j)
        if (bits_[j]) v += std::ldexp(1.0, -static_cast<int>(j + 1));
    return v;
}

PhaseFraction PhaseFraction::truncated(int m) const {
    if (m < 1 || m > this->m()) throw std::invalid_argument("cannot truncate to more bits than present");
    return PhaseFraction({bits_.begin(), bits_.begin() + m});
}

std::pair<PhaseFraction, Remainder> decompose(double phi, int m) {
    require_bit_count(m);
    if (!(phi >= 0.0 && phi < 1.0)) throw std::invalid_argument("phase must lie in [0, 1)");
    // Scaling by 2^m and splitting is exact in binary floating point.
    const double scaled = std::ldexp(phi, m);
    const double whole = std::floor(scaled);
    auto n = static_cast<std::uint64_t>(whole);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
    for (int j = m - 1; j >= 0; --j) {
        bits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(n & 1U);
        n >>= 1;
    }
    return {PhaseFraction(std::move(bits)), Remainder{scaled - whole}};
}

double feedback_angle(std::span<const std::uint8_t> measured_bits) {
    double frac = 0.0;
    for (std::size_t i = 0; i < measured_bits.size(); ++i)
        if (measured_bits[i]) frac += std::ldexp(1.0, -static_cast<int>(i + 2));
    return frac == 0.0 ? 0.0 : -2.0 * std::numbers::pi * frac;
}

std::pair<PhaseFraction, PhaseFraction> acceptance_set(double phi, int m) {
    const auto low = decompose(phi, m).first;
    const double up = wrap_unit(low.value() + std::ldexp(1.0, -m));
    return {low, PhaseFraction::from_value(up, m)};
}

bool accepted(const PhaseFraction& estimate, double phi) {
    const auto [low, high] = acceptance_set(phi, estimate.m());
    return estimate == low || estimate == high;
}

double wrap_unit(double x) noexcept {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

double circular_distance(double a, double b) noexcept {
    const double d = wrap_unit(a - b);
    return std::min(d, 1.0 - d);
}

}  // namespace ipea::phase
