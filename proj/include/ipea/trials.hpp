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

// Monte-Carlo trial loops. Every trial owns its RNG stream, so the serial and
// OpenMP paths must agree exactly; the serial path is the reference.

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ipea::trials {

enum class Exec { serial, openmp };

struct ExecPolicy {
    Exec exec = Exec::openmp;
    int threads = 0;  ///< 0: OpenMP runtime default
};

inline int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

/// Number of trials in [0, n) for which pred(trial) holds.
template <class Pred>
std::uint64_t count(std::uint64_t n, Pred&& pred) {
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < n; ++t) hits += pred(t) ? 1 : 0;
    return hits;
}

/// Largest value of f(trial) over [0, n); 0 for n == 0.
template <class F>
double max(std::uint64_t n, F&& f) {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < n; ++t) worst = std::max(worst, static_cast<double>(f(t)));
    return worst;
}

/// Per-slot hit counts of a predicate vector: slot i counts trials where hits(trial)[i] holds.
template <std::size_t N, class F>
std::array<std::uint64_t, N> tally(std::uint64_t n, F&& hits) {
    std::array<std::uint64_t, N> totals{};
    for (std::uint64_t t = 0; t < n; ++t) {
        const std::array<bool, N> h = hits(t);
        for (std::size_t i = 0; i < N; ++i) totals[i] += h[i] ? 1 : 0;
    }
    return totals;
}

}  // namespace serial

namespace openmp {

template <class Pred>
std::uint64_t count(std::uint64_t n, Pred&& pred, int threads = 0) {
    std::uint64_t hits = 0;
    std::exception_ptr failure;
    const auto total = static_cast<std::int64_t>(n);
    const int nt = threads > 0 ? threads : max_threads();
#pragma omp parallel for schedule(static) reduction(+ : hits) num_threads(nt)
    for (std::int64_t t = 0; t < total; ++t) {
        try {
            hits += pred(static_cast<std::uint64_t>(t)) ? 1 : 0;
        } catch (...) {
#pragma omp critical(ipea_trials_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return hits;
}

template <class F>
double max(std::uint64_t n, F&& f, int threads = 0) {
    double worst = 0.0;
    std::exception_ptr failure;
    const auto total = static_cast<std::int64_t>(n);
    const int nt = threads > 0 ? threads : max_threads();
#pragma omp parallel for schedule(static) reduction(max : worst) num_threads(nt)
    for (std::int64_t t = 0; t < total; ++t) {
        try {
            worst = std::max(worst, static_cast<double>(f(static_cast<std::uint64_t>(t))));
        } catch (...) {
#pragma omp critical(ipea_trials_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return worst;
}

template <std::size_t N, class F>
std::array<std::uint64_t, N> tally(std::uint64_t n, F&& hits, int threads = 0) {
    std::array<std::uint64_t, N> totals{};
    std::exception_ptr failure;
    const auto total = static_cast<std::int64_t>(n);
    const int nt = threads > 0 ? threads : max_threads();
#pragma omp parallel num_threads(nt)
    {
        std::array<std::uint64_t, N> local{};
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < total; ++t) {
            try {
                const std::array<bool, N> h = hits(static_cast<std::uint64_t>(t));
                for (std::size_t i = 0; i < N; ++i) local[i] += h[i] ? 1 : 0;
            } catch (...) {
#pragma omp critical(ipea_trials_failure)
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical(ipea_trials_merge)
        for (std::size_t i = 0; i < N; ++i) totals[i] += local[i];
    }
    if (failure) std::rethrow_exception(failure);
    return totals;
}

}  // namespace openmp

template <class Pred>
std::uint64_t count(std::uint64_t n, Pred&& pred, const ExecPolicy& policy) {
    if (policy.exec == Exec::serial) return serial::count(n, pred);
    return openmp::count(n, pred, policy.threads);
}

template <std::size_t N, class F>
std::array<std::uint64_t, N> tally(std::uint64_t n, F&& hits, const ExecPolicy& policy) {
    if (policy.exec == Exec::serial) return serial::tally<N>(n, hits);
    return openmp::tally<N>(n, hits, policy.threads);
}

template <class F>
double max(std::uint64_t n, F&& f, const ExecPolicy& policy) {
    if (policy.exec == Exec::serial) return serial::max(n, f);
    return openmp::max(n, f, policy.threads);
}

}  // namespace ipea::trials
