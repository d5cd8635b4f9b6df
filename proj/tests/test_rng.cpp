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
#include <set>
#include <vector>

#include "ipea/rng.hpp"

using ipea::RngStream;

TEST_SUITE("rng") {

TEST_CASE("philox4x32-10 known-answer vectors") {
    using A4 = std::array<std::uint32_t, 4>;
    CHECK(RngStream::philox({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(RngStream::philox({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(RngStream::philox({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("identical keys give identical sequences regardless of interleaving") {
    RngStream a(42, 3, 17), b(42, 3, 17);
    std::vector<double> seq_a;
    for (int i = 0; i < 100; ++i) seq_a.push_back(a.uniform());
    // Interleave unrelated streams before drawing from b.
    RngStream other(42, 3, 18);
    for (int i = 0; i < 100; ++i) {
        other.uniform();
        CHECK(b.uniform() == seq_a[static_cast<std::size_t>(i)]);
    }
    CHECK(a.draws() == 100);
}

TEST_CASE("distinct stream keys decorrelate") {
    std::set<double> firsts;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) firsts.insert(RngStream(1, 1, trial).uniform());
    for (std::uint64_t exp = 0; exp < 1000; ++exp) firsts.insert(RngStream(1, exp + 2, 0).uniform());
    CHECK(firsts.size() == 2000);
    CHECK(RngStream(1, 1, 0).uniform() != RngStream(2, 1, 0).uniform());
}

TEST_CASE("uniform moments") {
    RngStream rng(7, 0, 0);
    const int n = 100000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    CHECK(std::abs(sum / n - 0.5) < 4 * std::sqrt(1.0 / 12 / n));
    CHECK(std::abs(sum2 / n - 1.0 / 3) < 0.005);
}

TEST_CASE("normal moments") {
    RngStream rng(7, 1, 0);
    const int n = 100000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        REQUIRE(std::isfinite(z));
        sum += z;
        sum2 += z * z;
    }
    CHECK(std::abs(sum / n) < 4 / std::sqrt(n));
    CHECK(std::abs(sum2 / n - 1.0) < 4 * std::sqrt(2.0 / n));
}

TEST_CASE("split streams are deterministic and distinct") {
    RngStream parent(5, 9, 2);
    auto c1 = parent.split(0), c1b = parent.split(0), c2 = parent.split(1);
    const double x = c1.uniform();
    CHECK(x == c1b.uniform());
    CHECK(x != c2.uniform());
    CHECK(x != RngStream(5, 9, 2).uniform());
}

}
