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

#include "ipea/rng.hpp"

#include <cmath>
#include <numbers>

namespace ipea {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

std::array<std::uint32_t, 2> derive_key(std::uint64_t seed, std::uint64_t experiment) {
    const std::uint64_t k = mix64(seed ^ mix64(experiment + 0x632be59bd9b4e019ULL));
    return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t experiment, std::uint64_t trial) noexcept
    : master_seed_(master_seed), experiment_(experiment), trial_(trial),
      key_(derive_key(master_seed, experiment)) {}

std::array<std::uint32_t, 4> RngStream::philox(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) noexcept {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(kPhiloxM4x32A, ctr[0], lo0, hi0);
        mulhilo(kPhiloxM4x32B, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kPhiloxW32A;
        key[1] += kPhiloxW32B;
    }
    return ctr;
}

std::array<std::uint32_t, 4> RngStream::next_block() noexcept {
    const std::uint64_t d = draw_++;
    return philox({static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(d >> 32),
                   static_cast<std::uint32_t>(trial_), static_cast<std::uint32_t>(trial_ >> 32)},
                  key_);
}

double RngStream::uniform() noexcept {
    const auto b = next_block();
    const std::uint64_t bits = (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double RngStream::normal() noexcept {
    const auto b = next_block();
    const std::uint64_t w0 = (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
    const std::uint64_t w1 = (static_cast<std::uint64_t>(b[2]) << 32) | b[3];
    // u1 in (0, 1] keeps the log finite.
    const double u1 = (static_cast<double>(w0 >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(w1 >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::split(std::uint64_t index) const noexcept {
    RngStream child(master_seed_, mix64(experiment_ ^ mix64(draw_ + 1)) ^ mix64(index ^ 0x5851f42d4c957f2dULL),
                    trial_);
    return child;
}

}  // namespace ipea
