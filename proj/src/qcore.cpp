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

#include "ipea/qcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ipea::qcore {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

template <std::size_t N>
void validate_impl(const Matrix<N>& u) {
    for (const auto& z : u.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("gate has non-finite entry");
    const double defect = unitarity_defect(u);
    if (defect > kUnitaryTolerance)
        throw std::invalid_argument("gate is not unitary (defect " + std::to_string(defect) + ")");
}

}  // namespace

void validate_unitary(const Unitary2& u) { validate_impl(u); }
void validate_unitary(const Unitary4& u) { validate_impl(u); }

Unitary4 kron(const Unitary2& high, const Unitary2& low) noexcept {
    Unitary4 out;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) out(2 * a + c, 2 * b + d) = high(a, b) * low(c, d);
    return out;
}

Unitary2 make_single_gate(GateKind kind, double angle) {
    Unitary2 g;
    switch (kind) {
    case GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        g(0, 0) = s;
        g(0, 1) = s;
        g(1, 0) = s;
        g(1, 1) = -s;
        return g;
    }
    case GateKind::RX: {
        require_finite(angle, "RX angle");
        const double c = std::cos(angle / 2), s = std::sin(angle / 2);
        g(0, 0) = c;
        g(0, 1) = Complex(0, -s);
        g(1, 0) = Complex(0, -s);
        g(1, 1) = c;
        return g;
    }
    case GateKind::RZ:
        require_finite(angle, "RZ angle");
        g(0, 0) = std::polar(1.0, -angle / 2);
        g(1, 1) = std::polar(1.0, angle / 2);
        return g;
    }
    throw std::invalid_argument("unknown gate kind");
}

Unitary4 make_zz(double alpha) {
    require_finite(alpha, "ZZ angle");
    const Complex minus = std::polar(1.0, -alpha), plus = std::polar(1.0, alpha);
    return Unitary4::diagonal({minus, plus, plus, minus});
}

Unitary4 make_controlled_phase(double alpha, int k) {
    require_finite(alpha, "phase angle");
    if (k < 1 || k > 62) throw std::invalid_argument("iteration index k must be in [1, 62]");
    const double theta = std::ldexp(alpha, k - 1);
    require_finite(theta, "scaled phase angle");
    return Unitary4::diagonal({1.0, 1.0, std::polar(1.0, -theta), std::polar(1.0, theta)});
}

QubitState QubitState::zero(int qubits) {
    if (qubits != 1 && qubits != 2) throw std::invalid_argument("only 1- or 2-qubit states are supported");
    QubitState s;
    s.dim_ = qubits == 1 ? 2 : 4;
    s.amps_[0] = 1.0;
    return s;
}

QubitState QubitState::from_amplitudes(std::span<const Complex> amps) {
    if (amps.size() != 2 && amps.size() != 4) throw std::invalid_argument("state must have 2 or 4 amplitudes");
    QubitState s;
    s.dim_ = amps.size();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (!std::isfinite(amps[i].real()) || !std::isfinite(amps[i].imag()))
            throw std::invalid_argument("non-finite amplitude");
        s.amps_[i] = amps[i];
    }
    if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) throw std::invalid_argument("state is not normalized");
    return s;
}

double QubitState::norm_squared() const noexcept {
    double n = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) n += std::norm(amps_[i]);
    return n;
}

QubitState apply(const Unitary2& gate, Qubit qubit, const QubitState& state) {
    QubitState out = state;
    if (state.dim_ == 2) {
        if (qubit != Qubit::ancilla) throw std::invalid_argument("one-qubit state has no target qubit");
        out.amps_[0] = gate(0, 0) * state.amps_[0] + gate(0, 1) * state.amps_[1];
        out.amps_[1] = gate(1, 0) * state.amps_[0] + gate(1, 1) * state.amps_[1];
        return out;
    }
    // Pairs of indices differing only in the selected bit.
    const std::size_t stride = qubit == Qubit::ancilla ? 2 : 1;
    for (std::size_t base : {std::size_t{0}, qubit == Qubit::ancilla ? std::size_t{1} : std::size_t{2}}) {
        const Complex lo = state.amps_[base], hi = state.amps_[base + stride];
        out.amps_[base] = gate(0, 0) * lo + gate(0, 1) * hi;
        out.amps_[base + stride] = gate(1, 0) * lo + gate(1, 1) * hi;
    }
    return out;
}

QubitState apply(const Unitary4& gate, const QubitState& state) {
    if (state.dim_ != 4) throw std::invalid_argument("two-qubit gate applied to a one-qubit state");
    QubitState out = state;
    for (std::size_t i = 0; i < 4; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < 4; ++j) acc += gate(i, j) * state.amps_[j];
        out.amps_[i] = acc;
    }
    return out;
}

double prob_zero(const QubitState& state, Qubit qubit) {
    const auto amps = state.amplitudes();
    if (state.dim() == 2) {
        if (qubit != Qubit::ancilla) throw std::invalid_argument("one-qubit state has no target qubit");
        return std::norm(amps[0]);
    }
    if (qubit == Qubit::ancilla) return std::norm(amps[0]) + std::norm(amps[1]);
    return std::norm(amps[0]) + std::norm(amps[2]);
}

int sample_bit(double p0, RngStream& rng) {
    if (!(p0 >= -kProbabilityClamp && p0 <= 1.0 + kProbabilityClamp))
        throw std::invalid_argument("probability outside [0, 1]: " + std::to_string(p0));
    return rng.uniform() < p0 ? 0 : 1;
}

}  // namespace ipea::qcore
