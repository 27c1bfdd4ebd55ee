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

#include "fockopt/analysis.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockopt/errors.h"

namespace fockopt {

LossyReport lossy_table(const Circuit &circuit, double eta2, const PureState &target) {
    const auto detectors = circuit.detectors();
    if (detectors.size() != 2 ||
        std::any_of(detectors.begin(), detectors.end(), [](const DetectorSpec &d) { return d.clicks != 1; })) {
        throw std::invalid_argument("lossy table needs exactly two single-click detectors");
    }
    if (!(eta2 > 0.0 && eta2 <= 1.0)) {
        throw std::invalid_argument("eta2 must lie in (0, 1]");
    }
    const RunResult run = run_circuit(circuit.with_detector_efficiency(eta2));

    LossyReport report;
    report.eta2 = eta2;
    report.click_probability = run.probability;
    report.fidelity = fidelity(run.output, normalize(target).state);
    for (const auto &b : run.output.branches()) {
        report.rows.push_back({b.label, b.state, b.weight});
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const LossyRow &x, const LossyRow &y) { return x.arrivals < y.arrivals; });
    return report;
}

std::vector<SweepPoint> eta_sweep(const Circuit &circuit, std::span<const double> eta2_values,
                                  const PureState &target) {
    std::vector<SweepPoint> out;
    out.reserve(eta2_values.size());
    for (double eta2 : eta2_values) {
        auto report = lossy_table(circuit, eta2, target);
        out.push_back({eta2, report.fidelity, report.click_probability});
    }
    return out;
}

std::vector<PatternPoint> deposition_pattern(const PureState &state, std::span<const double> phi_grid) {
    if (state.mode_count() != 2) {
        throw DimensionError("deposition pattern needs a two-mode state");
    }
    if (state.empty()) {
        throw ZeroProbabilityError("deposition pattern of the zero state");
    }
    const int n = state.amplitudes().begin()->first.total_photons();
    for (const auto &[ket, amp] : state.amplitudes()) {
        if (ket.total_photons() != n) {
            throw std::invalid_argument("deposition pattern needs a definite photon number");
        }
    }
    // The combiner's output mode 0 is -(a + exp(i phi) b)/sqrt2 once mode 1
    // carries an extra pi/2; the sign drops out of the N-photon rate.
    std::vector<PatternPoint> out;
    out.reserve(phi_grid.size());
    for (double phi : phi_grid) {
        PureState combined = apply_beam_splitter(apply_phase_shifter(state, 1, phi + std::numbers::pi / 2), 0, 1);
        double rate = 0.0;
        for (const auto &[ket, amp] : combined.amplitudes()) {
            const int na = ket[0];
            if (na < n) {
                continue;
            }
            double falling = 1.0;
            for (int t = 0; t < n; t++) {
                falling *= na - t;
            }
            rate += std::norm(amp) * falling;
        }
        out.push_back({phi, rate});
    }
    return out;
}

std::vector<double> uniform_phase_grid(int points) {
    if (points < 1) {
        throw std::invalid_argument("phase grid needs at least one point");
    }
    std::vector<double> grid(points);
    for (int k = 0; k < points; k++) {
        grid[k] = 2.0 * std::numbers::pi * k / points;
    }
    return grid;
}

CosineFit fit_cosine(std::span<const PatternPoint> pattern, int harmonic) {
    const auto rows = static_cast<Eigen::Index>(pattern.size());
    if (rows < 3) {
        throw std::invalid_argument("cosine fit needs at least three points");
    }
    Eigen::MatrixXd design(rows, 3);
    Eigen::VectorXd y(rows);
    for (Eigen::Index r = 0; r < rows; r++) {
        const double phi = pattern[static_cast<std::size_t>(r)].phi;
        design(r, 0) = 1.0;
        design(r, 1) = std::cos(harmonic * phi);
        design(r, 2) = std::sin(harmonic * phi);
        y(r) = pattern[static_cast<std::size_t>(r)].intensity;
    }
    // On grids that sample k*phi only at multiples of pi a regressor
    // vanishes; drop it rather than fit noise.
    Eigen::Vector3d coef = Eigen::Vector3d::Zero();
    std::vector<Eigen::Index> kept;
    for (Eigen::Index c = 0; c < 3; c++) {
        if (design.col(c).norm() > 1e-9 * std::sqrt(static_cast<double>(rows))) {
            kept.push_back(c);
        }
    }
    Eigen::MatrixXd reduced(rows, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); c++) {
        reduced.col(static_cast<Eigen::Index>(c)) = design.col(kept[c]);
    }
    Eigen::VectorXd solved = reduced.colPivHouseholderQr().solve(y);
    for (std::size_t c = 0; c < kept.size(); c++) {
        coef(kept[c]) = solved(static_cast<Eigen::Index>(c));
    }
    const double scale = y.norm();
    const double residual = (design * coef - y).norm();
    return {coef(0), coef(1), coef(2), scale == 0.0 ? residual : residual / scale};
}

}  // namespace fockopt
