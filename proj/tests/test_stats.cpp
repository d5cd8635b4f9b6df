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

#include <cmath>
#include <numbers>

#include "ipea/stats.hpp"

using namespace ipea;
using namespace ipea::stats;
using std::numbers::pi;

TEST_SUITE("stats") {

TEST_CASE("erf_inv examples") {
    CHECK(erf_inv(0.0) == 0.0);
    CHECK(std::abs(erf_inv(0.98) - 1.644976357133186815) < 1e-13);
    CHECK(erf_inv(-0.98) == -erf_inv(0.98));
    CHECK(std::abs(std::erf(erf_inv(1 - 1e-12)) - (1 - 1e-12)) < 1e-13);
    for (double x : {-1.0, 1.0, 1.5, std::nan("")}) CHECK_THROWS_AS(erf_inv(x), std::invalid_argument);
}

TEST_CASE("erf_inv round trip") {
    for (int i = 0; i < 2000; ++i) {
        const double x = -0.999 + 1.998 * i / 1999.0;
        REQUIRE(std::abs(std::erf(erf_inv(x)) - x) <= 1e-10);
    }
}

TEST_CASE("repetition count examples") {
    CHECK(repetitions_for_bit(1.0, 0.05, 5) == 1);
    CHECK(repetitions_for_bit(0.764, 0.05, 5) == 5);
    // single-shot error already inside the per-bit budget
    CHECK(repetitions_for_bit(0.99, 0.05, 2) == 1);
    CHECK(repetitions_for_bit(0.97, 0.05, 2) == 3);
    const auto huge = repetitions_for_bit(0.500001, 0.05, 5);
    CHECK(huge > 1000000000ull);
    CHECK(huge % 2 == 1);
    // the normal-tail coefficient is four times larger
    CHECK(repetitions_for_bit(0.764, 0.05, 5, RepetitionRule::normal_tail) == 21);
    CHECK(rule_coefficient(RepetitionRule::compact) == 0.125);
    CHECK(rule_coefficient(RepetitionRule::normal_tail) == 0.5);
}

TEST_CASE("repetition counts are odd and floored at one") {
    for (int i = 1; i <= 500; ++i) {
        const double p = 0.5 + 0.5 * i / 500.0;
        for (auto rule : {RepetitionRule::compact, RepetitionRule::normal_tail}) {
            const auto n = repetitions_for_bit(p, 0.05, 6, rule);
            REQUIRE(n >= 1);
            REQUIRE(n % 2 == 1);
        }
    }
}

TEST_CASE("doubling the distance from 1/2 quarters the count") {
    for (double d : {1e-3, 3e-3, 1e-2}) {
        const double a = static_cast<double>(repetitions_for_bit(0.5 + d, 0.05, 5));
        const double b = static_cast<double>(repetitions_for_bit(0.5 + 2 * d, 0.05, 5));
        // each count is within 2 of the raw formula value
        CHECK(std::abs(a / 4 - b) <= 2.5);
    }
}

TEST_CASE("unresolvable bits carry their index") {
    CHECK_THROWS_AS(repetitions_for_bit(0.5, 0.05, 5), UnresolvableBitError);
    try {
        plan(pi / 2, 7, 0.05, noise::NoiseParams{0.1, 0.0});
        FAIL("expected an unresolvable bit");
    } catch (const UnresolvableBitError& e) {
        CHECK(e.k() == 7);
        CHECK(e.p_bit() <= 0.5 + kResolvableMargin);
    }
    CHECK_THROWS_AS(repetitions_for_bit(0.9, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(repetitions_for_bit(0.9, 0.05, 0), std::invalid_argument);
}

TEST_CASE("plan examples") {
    const auto zero = plan(1.0, 6, 0.05, noise::NoiseParams{});
    CHECK(zero.n_total == 6);
    for (auto n : zero.counts) CHECK(n == 1);

    const auto p = plan(pi / 2, 4, 0.05, noise::NoiseParams{0.1, 0.0});
    CHECK(p.counts == std::vector<std::uint64_t>{3, 5, 17, 193});
    CHECK(p.n_total == 218);
    CHECK(p.count(4) == 193);
    CHECK(p.per_bit_budget == doctest::Approx(0.0125));
    CHECK(p.m() == 4);

    const auto again = plan(pi / 2, 4, 0.05, noise::NoiseParams{0.1, 0.0});
    CHECK(again.counts == p.counts);

    const auto c6 = plan(pi / 2, 5, 0.05, noise::NoiseParams{0.05, 0.1});
    CHECK(c6.counts == std::vector<std::uint64_t>{3, 3, 5, 19, 211});
    const auto c6n = plan(pi / 2, 5, 0.05, noise::NoiseParams{0.05, 0.1}, {}, RepetitionRule::normal_tail);
    CHECK(c6n.counts == std::vector<std::uint64_t>{9, 11, 21, 69, 843});
}

TEST_CASE("top-bit count grows as exp(2 |alpha| 2^m gamma)") {
    const noise::NoiseParams n{0.01, 0.0};
    const double alpha = pi / 2;
    for (int m = 8; m <= 9; ++m) {
        const double a = static_cast<double>(plan(alpha, m, 0.05, n).count(m));
        const double b = static_cast<double>(plan(alpha, m + 1, 0.05, n).count(m + 1));
        const double z = erf_inv(1 - 0.1 / m), z1 = erf_inv(1 - 0.1 / (m + 1));
        const double predicted = std::exp(2 * alpha * std::ldexp(1.0, m) * n.gamma_ratio) * (z1 * z1) / (z * z);
        CHECK(std::abs(b / a / predicted - 1) < 0.02);
    }
}

TEST_CASE("majority vote") {
    const std::vector<std::uint8_t> zero{0}, one_zero_one{1, 0, 1}, mostly_zero{0, 0, 1, 1, 0};
    CHECK(majority(zero) == 0);
    CHECK(majority(one_zero_one) == 1);
    CHECK(majority(mostly_zero) == 0);
    const std::vector<std::uint8_t> even{1, 0};
    CHECK_THROWS_AS(majority(even), std::invalid_argument);
    CHECK_THROWS_AS(majority(std::span<const std::uint8_t>{}), std::invalid_argument);
}

TEST_CASE("majority error stays within the per-bit budget") {
    // Normal-tail counts; the compact coefficient is only a cost estimate.
    const double eps = 0.05;
    const int m = 5;
    for (double p : {0.6, 0.764, 0.9}) {
        const auto n = repetitions_for_bit(p, eps, m, RepetitionRule::normal_tail);
        RngStream rng(8, 0, static_cast<std::uint64_t>(p * 1000));
        int wrong = 0;
        std::vector<std::uint8_t> votes(n);
        for (int v = 0; v < 10000; ++v) {
            for (auto& b : votes) b = rng.uniform() < p ? 1 : 0;
            wrong += majority(votes) == 1 ? 0 : 1;
        }
        CHECK(wrong / 10000.0 <= 1.5 * eps / m);
    }
}

TEST_CASE("repetitions without noise match single-shot runs") {
    for (int j = 0; j < 32; ++j) {
        const double phi = j / 32.0;
        const auto config = pea::IpeaConfig::abstract(phi, 5);
        RngStream a(1, 2, static_cast<std::uint64_t>(j)), b(1, 2, static_cast<std::uint64_t>(j));
        const auto r = run_with_repetitions(config, 0.05, a);
        CHECK(r.result == pea::run_ipea(config, b).result);
        CHECK(r.plan.n_total == 5);
        CHECK(r.ledger.rounds == 5);
    }
    RepetitionOptions three;
    three.uniform_repetitions = 3;
    RngStream rng(1, 0, 0);
    const auto r = run_with_repetitions(pea::IpeaConfig::abstract(0.25, 4), 0.05, rng, three);
    CHECK(r.ledger.rounds == 12);
    CHECK(r.ledger.u_applications == 3 * 15);
    three.uniform_repetitions = 2;
    CHECK_THROWS_AS(run_with_repetitions(pea::IpeaConfig::abstract(0.25, 4), 0.05, rng, three), std::invalid_argument);
}

TEST_CASE("repeating only the leading bits") {
    RepetitionOptions opt;
    opt.rule = RepetitionRule::compact;
    opt.repeated_bits = 2;
    RngStream rng(1, 0, 0);
    const auto r = run_with_repetitions(pea::IpeaConfig::circuit(pi / 2, 4, noise::NoiseParams{0.1, 0.0}), 0.05, rng, opt);
    CHECK(r.plan.counts == std::vector<std::uint64_t>{1, 1, 17, 193});
    CHECK(r.plan.n_total == 212);
    CHECK(r.ledger.rounds == 212);
}

TEST_CASE("noisy repetitions reach the budget") {
    const auto config = pea::IpeaConfig::circuit(pi / 2, 5, noise::NoiseParams{0.05, 0.1});
    const double phi = config.target_phase();
    const auto exact = phase::decompose(phi, 5).first;
    int ok = 0;
    const int runs = 400;
    for (int t = 0; t < runs; ++t) {
        RngStream rng(6, 8, static_cast<std::uint64_t>(t));
        ok += run_with_repetitions(config, 0.05, rng).result == exact ? 1 : 0;
    }
    CHECK(ok >= 0.9 * runs);
}

TEST_CASE("guard bits") {
    CHECK(guard_bits(0.05) == 4);
    CHECK(guard_bits(0.5) == 2);
    CHECK(guard_bits(0.01) == 6);
    CHECK_THROWS_AS(guard_bits(0.0), std::invalid_argument);

    const int m = 4, runs = 2000;
    int ok = 0;
    RngStream grid(12, 0, 0);
    for (int t = 0; t < runs; ++t) {
        const double phi = grid.uniform();
        RngStream rng(12, 1, static_cast<std::uint64_t>(t));
        const auto r = run_with_guard_bits(pea::IpeaConfig::abstract(phi, m), 0.05, rng);
        REQUIRE(r.full.m() == m + 4);
        REQUIRE(r.truncated.m() == m);
        REQUIRE(r.truncated == r.full.truncated(m));
        ok += phase::circular_distance(r.truncated.value(), phi) <= std::ldexp(1.0, -m) ? 1 : 0;
    }
    CHECK(ok >= 0.95 * runs);
}

}
