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

#ifndef FOCKOPT_ANALYSIS_H
#define FOCKOPT_ANALYSIS_H

#include <span>
#include <vector>

#include "fockopt/circuit.h"

namespace fockopt {

struct LossyRow {
    std::vector<int> arrivals;  // true photon numbers at the two detectors
    PureState state;            // normalized conditional state
    double weight;
};

struct LossyReport {
    std::vector<LossyRow> rows;  // sorted by arrivals
    double fidelity = 0.0;
    double eta2 = 1.0;
    /// Probability of the single-click coincidence at this efficiency.
    double click_probability = 0.0;
};

/// Conditional-state table of a two-detector heralded scheme when both
/// detectors report one click with efficiency `eta2`.
///
/// Requires exactly two detectors with clicks == 1 and 0 < eta2 <= 1;
/// throws std::invalid_argument otherwise and ZeroProbabilityError if the
/// coincidence cannot happen.
LossyReport lossy_table(const Circuit &circuit, double eta2, const PureState &target);

struct SweepPoint {
    double eta2;
    double fidelity;
    double click_probability;
};

std::vector<SweepPoint> eta_sweep(const Circuit &circuit, std::span<const double> eta2_values,
                                  const PureState &target);

struct PatternPoint {
    double phi;
    double intensity;
};

/// N-photon absorption rate <(e^dag)^N e^N> with e = (a + exp(i phi) b)/sqrt2
/// for a two-mode state of definite photon number N. A NOON state gives
/// N!/2^N (1 + cos N phi).
///
/// Throws DimensionError unless the state has two modes and
/// std::invalid_argument unless every ket carries the same photon number.
std::vector<PatternPoint> deposition_pattern(const PureState &state, std::span<const double> phi_grid);

/// `points` evenly spaced angles on [0, 2 pi).
std::vector<double> uniform_phase_grid(int points);

/// Least-squares fit intensity ~ offset + cos_amplitude cos(k phi) +
/// sin_amplitude sin(k phi).
struct CosineFit {
    double offset;
    double cos_amplitude;
    double sin_amplitude;
    /// ||residual|| / ||intensity||.
    double relative_residual;
};

CosineFit fit_cosine(std::span<const PatternPoint> pattern, int harmonic);

}  // namespace fockopt

#endif  // FOCKOPT_ANALYSIS_H
