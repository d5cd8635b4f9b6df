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

#include <array>
#include <cstdint>

namespace ipea {

/**
 * Counter-based random stream (Philox4x32-10).
 *
 * A stream is addressed by (master_seed, experiment, trial). Every draw is a
 * pure function of that address and the draw counter, so trials can run in
 * any order or on any thread and still produce the same sequence.
 */
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t experiment, std::uint64_t trial) noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Standard normal variate (Box-Muller on a single block).
    double normal() noexcept;

    /// Independent child stream, e.g. one per repetition of a bit measurement.
    [[nodiscard]] RngStream split(std::uint64_t index) const noexcept;

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t experiment() const noexcept { return experiment_; }
    std::uint64_t trial() const noexcept { return trial_; }
    std::uint64_t draws() const noexcept { return draw_; }

    /// Raw Philox4x32-10 block function.
    static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> counter,
                                               std::array<std::uint32_t, 2> key) noexcept;

private:
    std::array<std::uint32_t, 4> next_block() noexcept;

    std::uint64_t master_seed_;
    std::uint64_t experiment_;
    std::uint64_t trial_;
    std::array<std::uint32_t, 2> key_;
    std::uint64_t draw_ = 0;
};

/// SplitMix64 finalizer, used for key derivation.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace ipea
