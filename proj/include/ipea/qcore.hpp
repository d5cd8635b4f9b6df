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

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ipea/rng.hpp"

namespace ipea::qcore {

using Complex = std::complex<double>;

inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kProbabilityClamp = 1e-10;

/// Fixed-size square complex matrix, row-major.
template <std::size_t N>
struct Matrix {
    std::array<Complex, N * N> a{};

    static Matrix identity() noexcept {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix diagonal(const std::array<Complex, N>& d) noexcept {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return a[r * N + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return a[r * N + c]; }

    static constexpr std::size_t dim() noexcept { return N; }
};

using Unitary2 = Matrix<2>;
using Unitary4 = Matrix<4>;

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& lhs, const Matrix<N>& rhs) noexcept {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t j = 0; j < N; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    return out;
}

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N>& m) noexcept {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

/// Largest elementwise modulus of the difference.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& lhs, const Matrix<N>& rhs) noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
    return worst;
}

/// max |U^dagger U - I| over elements.
template <std::size_t N>
double unitarity_defect(const Matrix<N>& u) noexcept {
    return max_abs_diff(adjoint(u) * u, Matrix<N>::identity());
}

/// Throws std::invalid_argument on non-finite entries or a defect above kUnitaryTolerance.
void validate_unitary(const Unitary2& u);
void validate_unitary(const Unitary4& u);

/// Kronecker product: `high` acts on the ancilla (high bit), `low` on the target.
Unitary4 kron(const Unitary2& high, const Unitary2& low) noexcept;

enum class GateKind { H, RX, RZ };

/// RX(t) = exp(-i t X / 2), RZ(t) = diag(e^{-it/2}, e^{it/2}), H standard.
Unitary2 make_single_gate(GateKind kind, double angle);

/// diag(e^{-ia}, e^{ia}, e^{ia}, e^{-ia}) = exp(-i a Z (x) Z).
Unitary4 make_zz(double alpha);

/// Controlled power U^{2^{k-1}} of U = diag(e^{-ia}, e^{ia}); ancilla controls.
Unitary4 make_controlled_phase(double alpha, int k);

enum class Qubit { ancilla, target };

/**
 * Pure state of one (2 amplitudes) or two (4 amplitudes) qubits.
 *
 * Two-qubit index is 2*ancilla + target. A one-qubit state only has the
 * ancilla.
 */
class QubitState {
public:
    /// |0> or |00>.
    static QubitState zero(int qubits);
    /// Normalization is checked to kNormTolerance.
    static QubitState from_amplitudes(std::span<const Complex> amps);

    int qubits() const noexcept { return dim_ == 2 ? 1 : 2; }
    std::size_t dim() const noexcept { return dim_; }
    std::span<const Complex> amplitudes() const noexcept { return {amps_.data(), dim_}; }
    Complex operator[](std::size_t i) const noexcept { return amps_[i]; }
    double norm_squared() const noexcept;

private:
    friend QubitState apply(const Unitary2&, Qubit, const QubitState&);
    friend QubitState apply(const Unitary4&, const QubitState&);

    std::array<Complex, 4> amps_{};
    std::size_t dim_ = 2;
};

QubitState apply(const Unitary2& gate, Qubit qubit, const QubitState& state);
QubitState apply(const Unitary4& gate, const QubitState& state);

/// Probability of reading 0 on `qubit`.
double prob_zero(const QubitState& state, Qubit qubit);

/// Bernoulli draw: 0 with probability p0. Advances `rng` by one draw.
int sample_bit(double p0, RngStream& rng);

}  // namespace ipea::qcore
