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
#include <utility>
#include <vector>

namespace ipea::phase {

inline constexpr int kMaxBits = 52;

/// m-bit binary fraction 0.x1 x2 ... xm. bits[0] is x1, the most significant.
class PhaseFraction {
public:
    PhaseFraction() = default;
    /// Bits must be 0/1 and 1 <= size <= kMaxBits.
    explicit PhaseFraction(std::vector<std::uint8_t> bits);
    /// Truncating conversion of a dyadic value in [0,1).
    static PhaseFraction from_value(double value, int m);

    int m() const noexcept { return static_cast<int>(bits_.size()); }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    /// x_j for 1-based j.
    int bit(int j) const { return bits_.at(static_cast<std::size_t>(j - 1)); }
    double value() const noexcept;
    /// Keep the `m` most significant bits.
    PhaseFraction truncated(int m) const;

    friend bool operator==(const PhaseFraction&, const PhaseFraction&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// phi = fraction + delta * 2^{-m}, delta in [0,1).
struct Remainder {
    double delta = 0.0;
};

/// Truncating m-bit decomposition of phi in [0,1).
std::pair<PhaseFraction, Remainder> decompose(double phi, int m);

/**
 * Feedback rotation for iteration k given the bits already measured,
 * x_{k+1}, ..., x_m (in that order):
 *
 *     omega = -2 pi (0.0 x_{k+1} x_{k+2} ... x_m)
 *
 * Empty input gives 0. Result lies in (-pi, 0].
 */
double feedback_angle(std::span<const std::uint8_t> measured_bits);

/// {phi~, (phi~ + 2^{-m}) mod 1}: the answers accepted at accuracy 2^{-m}.
std::pair<PhaseFraction, PhaseFraction> acceptance_set(double phi, int m);

/// True when `estimate` is one of acceptance_set(phi, estimate.m()).
bool accepted(const PhaseFraction& estimate, double phi);

/// Distance on the unit circle, in [0, 1/2].
double circular_distance(double a, double b) noexcept;

/// x mod 1 in [0, 1).
double wrap_unit(double x) noexcept;

}  // namespace ipea::phase
