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

// Helpers shared by the test binaries. The permanent formula below is a
// third route to linear-optics amplitudes, written without touching the
// library's element code or its oracle module.

#ifndef FOCKOPT_TESTS_TEST_SUPPORT_H
#define FOCKOPT_TESTS_TEST_SUPPORT_H

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "fockopt/circuit.h"
#include "fockopt/fock_state.h"

namespace fockopt::testing {

inline std::filesystem::path circuit_path(const std::string &name) {
    return std::filesystem::path(FOCKOPT_CIRCUIT_DIR) / name;
}

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; k++) {
        f *= k;
    }
    return f;
}

// Transfer matrix rebuilt from the element list: a splitter on (i, j)
// contributes [[-1, i], [i, -1]]/sqrt2, a phase contributes exp(i phi).
inline Eigen::MatrixXcd independent_transfer(const Circuit &c) {
    const auto m = static_cast<Eigen::Index>(c.mode_count());
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(m, m);
    const std::complex<double> i1(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    for (const auto &e : c.elements()) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(m, m);
        if (const auto *bs = std::get_if<BeamSplitter>(&e)) {
            const auto a = static_cast<Eigen::Index>(bs->mode_i);
            const auto b = static_cast<Eigen::Index>(bs->mode_j);
            g(a, a) = -r;
            g(a, b) = i1 * r;
            g(b, a) = i1 * r;
            g(b, b) = -r;
        } else if (const auto *ps = std::get_if<PhaseShifter>(&e)) {
            const auto a = static_cast<Eigen::Index>(ps->mode);
            g(a, a) = std::exp(i1 * ps->phi);
        } else {
            continue;
        }
        t = g * t;
    }
    return t;
}

// Permanent by brute force over permutations; fine for n <= 8.
inline std::complex<double> permanent(const Eigen::MatrixXcd &a) {
    const auto n = static_cast<int>(a.rows());
    if (n == 0) {
        return 1.0;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::complex<double> total = 0.0;
    do {
        std::complex<double> term = 1.0;
        for (int r = 0; r < n; r++) {
            term *= a(r, perm[r]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// <out| U |in> for the multiphoton extension of transfer matrix `t`.
inline std::complex<double> permanent_amplitude(const Eigen::MatrixXcd &t, const FockKet &in, const FockKet &out) {
    if (in.total_photons() != out.total_photons()) {
        return 0.0;
    }
    std::vector<Eigen::Index> cols, rows;
    double norm = 1.0;
    for (std::size_t j = 0; j < in.mode_count(); j++) {
        for (int k = 0; k < in[j]; k++) {
            cols.push_back(static_cast<Eigen::Index>(j));
        }
        norm *= factorial(in[j]);
    }
    for (std::size_t j = 0; j < out.mode_count(); j++) {
        for (int k = 0; k < out[j]; k++) {
            rows.push_back(static_cast<Eigen::Index>(j));
        }
        norm *= factorial(out[j]);
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd sub(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            sub(r, c) = t(rows[r], cols[c]);
        }
    }
    return permanent(sub) / std::sqrt(norm);
}

// Every occupation pattern of `photons` over `modes`, lexicographic.
inline std::vector<FockKet> all_kets(std::size_t modes, int photons) {
    std::vector<FockKet> out;
    std::vector<int> occ(modes, 0);
    auto rec = [&](auto &&self, std::size_t mode, int left) -> void {
        if (mode + 1 == modes) {
            occ[mode] = left;
            out.emplace_back(occ);
            return;
        }
        for (int n = 0; n <= left; n++) {
            occ[mode] = n;
            self(self, mode + 1, left - n);
        }
    };
    if (modes == 0) {
        out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(rec, 0, photons);
    std::sort(out.begin(), out.end());
    return out;
}

// Linear propagation of a whole input state by permanents.
inline PureState permanent_propagate(const Circuit &c) {
    const Eigen::MatrixXcd t = independent_transfer(c);
    PureState out(c.mode_count());
    for (const auto &[in_ket, in_amp] : c.input().amplitudes()) {
        for (const auto &ket : all_kets(c.mode_count(), in_ket.total_photons())) {
            out.accumulate(ket, in_amp * permanent_amplitude(t, in_ket, ket));
        }
    }
    out.prune();
    return out;
}

// Random linear circuit: M modes, N photons spread randomly, `depth`
// splitters and phases.
inline Circuit random_linear_circuit(std::mt19937_64 &rng, std::size_t modes, int photons, int depth) {
    std::uniform_int_distribution<std::size_t> pick(0, modes - 1);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::bernoulli_distribution coin(0.5);

    // two random kets with the same photon number, random coefficients
    PureState input(modes);
    for (int term = 0; term < 2; term++) {
        std::vector<int> occ(modes, 0);
        for (int p = 0; p < photons; p++) {
            occ[pick(rng)]++;
        }
        input.accumulate(FockKet(occ), {unit(rng), unit(rng)});
    }
    if (input.norm_squared() < 1e-6) {
        input = PureState::basis(FockKet::vacuum(modes).with_occupation(0, photons));
    }
    std::vector<Element> elements;
    for (int k = 0; k < depth; k++) {
        if (modes > 1 && coin(rng)) {
            std::size_t i = pick(rng), j = pick(rng);
            while (j == i) {
                j = pick(rng);
            }
            elements.push_back(BeamSplitter{i, j});
        } else {
            elements.push_back(PhaseShifter{pick(rng), angle(rng)});
        }
    }
    return Circuit(modes, std::move(elements), input, std::nullopt);
}

inline double max_deviation(const PureState &a, const PureState &b) {
    double worst = 0.0;
    for (const auto &[ket, amp] : a.amplitudes()) {
        worst = std::max(worst, std::abs(amp - b.amplitude(ket)));
    }
    for (const auto &[ket, amp] : b.amplitudes()) {
        worst = std::max(worst, std::abs(amp - a.amplitude(ket)));
    }
    return worst;
}

}  // namespace fockopt::testing

#endif  // FOCKOPT_TESTS_TEST_SUPPORT_H
