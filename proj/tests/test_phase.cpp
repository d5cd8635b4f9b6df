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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ipea/phase.hpp"
#include "ipea/rng.hpp"
#include "oracles.hpp"

using namespace ipea::phase;
using std::numbers::pi;

namespace {

PhaseFraction bits_of(std::initializer_list<int> b) {
    std::vector<std::uint8_t> v;
    for (int x : b) v.push_back(static_cast<std::uint8_t>(x));
    return PhaseFraction(v);
}

}  // namespace

TEST_SUITE("phase") {

TEST_CASE("decompose examples") {
    {
        const auto [f, r] = decompose(0.5, 3);
        CHECK(f == bits_of({1, 0, 0}));
        CHECK(r.delta == 0.0);
    }
    {
        const auto [f, r] = decompose(0.3, 2);
        CHECK(f == bits_of({0, 1}));
        CHECK(r.delta == doctest::Approx(0.2).epsilon(1e-12));
    }
    {
        const auto [f, r] = decompose(0.9990234375, 3);
        CHECK(f == bits_of({1, 1, 1}));
        CHECK(r.delta == 0.9921875);
    }
    const auto [z, rz] = decompose(0.0, 5);
    CHECK(z.value() == 0.0);
    CHECK(rz.delta == 0.0);
}

TEST_CASE("decompose round-trips every dyadic phase") {
    for (int m = 1; m <= 20; ++m) {
        const std::uint64_t n = std::uint64_t{1} << m;
        const std::uint64_t step = m <= 12 ? 1 : 97;
        for (std::uint64_t j = 0; j < n; j += step) {
            const double phi = std::ldexp(static_cast<double>(j), -m);
            const auto [f, r] = decompose(phi, m);
            REQUIRE(f.m() == m);
            REQUIRE(f.value() == phi);
            REQUIRE(r.delta == 0.0);
            REQUIRE(oracle::dyadic_numerator(f.value(), m) == j);
        }
    }
}

TEST_CASE("remainder reconstructs phi") {
    for (double phi : {0.0, 0.01, 0.123456789, 0.5, 0.70710678, 0.99999}) {
        for (int m : {1, 4, 9, 20}) {
            const auto [f, r] = decompose(phi, m);
            CHECK(r.delta >= 0.0);
            CHECK(r.delta < 1.0);
            CHECK(std::abs(f.value() + std::ldexp(r.delta, -m) - phi) < 1e-15);
        }
    }
}

TEST_CASE("PhaseFraction basics") {
    const auto f = bits_of({1, 0, 1});
    CHECK(f.m() == 3);
    CHECK(f.value() == 0.625);
    CHECK(f.bit(1) == 1);
    CHECK(f.bit(2) == 0);
    CHECK(f.truncated(2) == bits_of({1, 0}));
    CHECK(PhaseFraction::from_value(0.625, 3) == f);
    CHECK_THROWS(f.bit(4));
    CHECK_THROWS_AS(PhaseFraction(std::vector<std::uint8_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(PhaseFraction(std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PhaseFraction(std::vector<std::uint8_t>(53, 0)), std::invalid_argument);
    CHECK_THROWS_AS(f.truncated(4), std::invalid_argument);
    CHECK_THROWS_AS(f.truncated(0), std::invalid_argument);
}

TEST_CASE("decompose rejects bad input") {
    CHECK_THROWS_AS(decompose(1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(decompose(-0.1, 3), std::invalid_argument);
    CHECK_THROWS_AS(decompose(std::nan(""), 3), std::invalid_argument);
    CHECK_THROWS_AS(decompose(0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(decompose(0.5, 53), std::invalid_argument);
}

TEST_CASE("feedback angle examples") {
    CHECK(feedback_angle({}) == 0.0);
    const std::vector<std::uint8_t> one{1}, one_zero_one{1, 0, 1}, zeros{0, 0, 0};
    CHECK(feedback_angle(one) == doctest::Approx(-pi / 2));
    CHECK(feedback_angle(one_zero_one) == doctest::Approx(-0.625 * pi));
    CHECK(feedback_angle(zeros) == 0.0);
    CHECK_FALSE(std::signbit(feedback_angle(zeros)));
}

TEST_CASE("feedback angle telescopes") {
    // omega(x_{k+1}..x_m) = (omega(x_{k+2}..x_m) - pi x_{k+1}) / 2
    ipea::RngStream rng(5, 0, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const int len = 1 + static_cast<int>(rng.uniform() * 30);
        std::vector<std::uint8_t> b(static_cast<std::size_t>(len));
        for (auto& x : b) x = rng.uniform() < 0.5 ? 0 : 1;
        const double lhs = feedback_angle(b);
        const double rhs = (feedback_angle(std::span(b).subspan(1)) - pi * b[0]) / 2;
        CHECK(std::abs(lhs - rhs) < 1e-14);
        CHECK(lhs <= 0.0);
        CHECK(lhs > -pi);
    }
}

TEST_CASE("feedback angle is injective on bit strings") {
    for (int len = 1; len <= 10; ++len) {
        std::vector<double> seen;
        for (std::uint32_t v = 0; v < (1u << len); ++v) {
            std::vector<std::uint8_t> b(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) b[static_cast<std::size_t>(i)] = (v >> (len - 1 - i)) & 1u;
            seen.push_back(feedback_angle(b));
        }
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("acceptance set") {
    {
        const auto [lo, hi] = acceptance_set(0.3, 2);
        CHECK(lo == bits_of({0, 1}));
        CHECK(hi == bits_of({1, 0}));
    }
    {
        const auto [lo, hi] = acceptance_set(0.96875, 4);
        CHECK(lo.value() == 0.9375);
        CHECK(hi.value() == 0.0);
        CHECK(hi.m() == 4);
    }
    CHECK(accepted(bits_of({0, 1}), 0.3));
    CHECK(accepted(bits_of({1, 0}), 0.3));
    CHECK_FALSE(accepted(bits_of({0, 0}), 0.3));
    CHECK(accepted(bits_of({0, 0, 0, 0}), 0.96875));
    CHECK_THROWS_AS(acceptance_set(1.2, 3), std::invalid_argument);
}

TEST_CASE("circular helpers") {
    CHECK(wrap_unit(1.25) == 0.25);
    CHECK(wrap_unit(-0.25) == 0.75);
    CHECK(wrap_unit(-1e-300) < 1.0);
    CHECK(circular_distance(0.95, 0.05) == doctest::Approx(0.1));
    CHECK(circular_distance(0.2, 0.7) == doctest::Approx(0.5));
    CHECK(circular_distance(0.3, 0.3) == 0.0);
}

}
