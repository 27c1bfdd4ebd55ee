// Copyright 2026 The fockopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockopt/elements.h"

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "fockopt/circuit.h"
#include "fockopt/errors.h"

namespace fockopt {

namespace {

double factorial(int n) {
    return std::tgamma(n + 1.0);
}

Amplitude ipow(Amplitude z, int k) {
    Amplitude r{1.0, 0.0};
    for (int t = 0; t < k; t++) {
        r *= z;
    }
    return r;
}

// Coefficients of (x a + y b)^n in the monomial a^r b^(n-r), indexed by r.
std::vector<Amplitude> binomial_row(Amplitude x, Amplitude y, int n) {
    std::vector<Amplitude> row(n + 1);
    for (int r = 0; r <= n; r++) {
        double c = factorial(n) / (factorial(r) * factorial(n - r));
        row[r] = c * ipow(x, r) * ipow(y, n - r);
    }
    return row;
}

void check_pair(const PureState &state, std::size_t i, std::size_t j) {
    if (i == j) {
        throw ElementError("beam splitter needs two distinct modes, got " + std::to_string(i) + " twice");
    }
    if (i >= state.mode_count() || j >= state.mode_count()) {
        throw ElementError("beam splitter mode out of range for " + std::to_string(state.mode_count()) +
                           "-mode state");
    }
}

}  // namespace

PairMatrix beam_splitter_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    const Amplitude i{0.0, 1.0};
    return {{{-s, i * s}, {i * s, -s}}};
}

PairMatrix adjoint(const PairMatrix &u) {
    return {{{std::conj(u[0][0]), std::conj(u[1][0])}, {std::conj(u[0][1]), std::conj(u[1][1])}}};
}

PureState apply_pair_transform(const PureState &state, std::size_t i, std::size_t j, const PairMatrix &u) {
    check_pair(state, i, j);
    PureState out(state.mode_count());
    for (const auto &[ket, amp] : state.amplitudes()) {
        const int n = ket[i];
        const int m = ket[j];
        // a_i^dag -> u00 a_i^dag + u10 a_j^dag,  a_j^dag -> u01 a_i^dag + u11 a_j^dag.
        auto from_i = binomial_row(u[0][0], u[1][0], n);
        auto from_j = binomial_row(u[0][1], u[1][1], m);
        const double inv_norm = 1.0 / std::sqrt(factorial(n) * factorial(m));
        std::vector<Amplitude> by_p(n + m + 1);
        for (int r = 0; r <= n; r++) {
            for (int s = 0; s <= m; s++) {
                by_p[r + s] += from_i[r] * from_j[s];
            }
        }
        for (int p = 0; p <= n + m; p++) {
            if (by_p[p] == Amplitude{}) {
                continue;
            }
            const int q = n + m - p;
            double weight = std::sqrt(factorial(p) * factorial(q)) * inv_norm;
            out.accumulate(ket.with_occupation(i, p).with_occupation(j, q), amp * by_p[p] * weight);
        }
    }
    out.prune();
    return out;
}

PureState apply_beam_splitter(const PureState &state, std::size_t i, std::size_t j) {
    return apply_pair_transform(state, i, j, beam_splitter_matrix());
}

PureState apply_phase_shifter(const PureState &state, std::size_t mode, double phi) {
    if (mode >= state.mode_count()) {
        throw ElementError("phase shifter mode " + std::to_string(mode) + " out of range for " +
                           std::to_string(state.mode_count()) + "-mode state");
    }
    PureState out(state.mode_count());
    for (const auto &[ket, amp] : state.amplitudes()) {
        out.accumulate(ket, amp * std::polar(1.0, ket[mode] * phi));
    }
    out.prune();
    return out;
}

Eigen::MatrixXcd mode_transfer_matrix(const Circuit &circuit) {
    const auto m = static_cast<Eigen::Index>(circuit.mode_count());
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(m, m);
    for (const auto &element : circuit.elements()) {
        Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(m, m);
        if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
            const auto u = beam_splitter_matrix();
            const auto a = static_cast<Eigen::Index>(bs->mode_i);
            const auto b = static_cast<Eigen::Index>(bs->mode_j);
            step(a, a) = u[0][0];
            step(a, b) = u[0][1];
            step(b, a) = u[1][0];
            step(b, b) = u[1][1];
        } else if (const auto *ps = std::get_if<PhaseShifter>(&element)) {
            const auto a = static_cast<Eigen::Index>(ps->mode);
            step(a, a) = std::polar(1.0, ps->phi);
        } else {
            continue;
        }
        total = step * total;
    }
    return total;
}

}  // namespace fockopt
