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

#ifndef FOCKOPT_ELEMENTS_H
#define FOCKOPT_ELEMENTS_H

#include <Eigen/Dense>
#include <array>
#include <cstddef>

#include "fockopt/fock_state.h"

namespace fockopt {

class Circuit;

/// 50:50 beam splitter between two modes.
///
/// Fixed convention: the output annihilation operators are
///     a1 = (-a + i b) / sqrt(2),   b1 = (i a - b) / sqrt(2),
/// so reflection contributes a phase of pi and transmission pi/2.
struct BeamSplitter {
    std::size_t mode_i = 0;
    std::size_t mode_j = 1;
};

/// Multiplies every n-photon component of `mode` by exp(i n phi).
struct PhaseShifter {
    std::size_t mode = 0;
    double phi = 0.0;
};

/// Single-photon transfer matrix of a two-mode element, row = output mode.
using PairMatrix = std::array<std::array<Amplitude, 2>, 2>;

/// The beam splitter convention above as a PairMatrix.
PairMatrix beam_splitter_matrix();

/// Conjugate transpose.
PairMatrix adjoint(const PairMatrix &u);

/// Applies an arbitrary 2x2 single-photon transfer matrix to modes (i, j)
/// by substituting each input creation operator with the column of `u` and
/// re-expanding binomially, ket by ket.
PureState apply_pair_transform(const PureState &state, std::size_t i, std::size_t j, const PairMatrix &u);

PureState apply_beam_splitter(const PureState &state, std::size_t i, std::size_t j);
PureState apply_phase_shifter(const PureState &state, std::size_t mode, double phi);

inline PureState apply(const PureState &state, const BeamSplitter &bs) {
    return apply_beam_splitter(state, bs.mode_i, bs.mode_j);
}
inline PureState apply(const PureState &state, const PhaseShifter &ps) {
    return apply_phase_shifter(state, ps.mode, ps.phi);
}

/// Composed single-photon transformation of the linear elements of a
/// circuit (detectors are skipped). Entry (k, j) is the amplitude for a
/// photon entering mode j to leave in mode k.
Eigen::MatrixXcd mode_transfer_matrix(const Circuit &circuit);

}  // namespace fockopt

#endif  // FOCKOPT_ELEMENTS_H
