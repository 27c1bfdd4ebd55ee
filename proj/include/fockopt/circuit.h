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

#ifndef FOCKOPT_CIRCUIT_H
#define FOCKOPT_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "fockopt/elements.h"
#include "fockopt/fock_state.h"
#include "fockopt/measurement.h"

namespace fockopt {

using Element = std::variant<BeamSplitter, PhaseShifter, DetectorSpec>;

/// An ordered list of optical elements over a fixed set of modes, plus the
/// input state and an optional target for the surviving modes.
///
/// Mode indices in elements are stable labels 0..M-1. A detector consumes
/// its mode: later elements may not touch it, and the output state lives on
/// the remaining labels in increasing order.
class Circuit {
   public:
    /// Throws SemanticError if any element or the target is inconsistent.
    Circuit(std::size_t mode_count, std::vector<Element> elements, PureState input,
            std::optional<PureState> target = std::nullopt);

    std::size_t mode_count() const { return mode_count_; }
    const std::vector<Element> &elements() const { return elements_; }
    const PureState &input() const { return input_; }
    const std::optional<PureState> &target() const { return target_; }

    /// Labels that survive all detectors, in increasing order.
    std::vector<std::size_t> remaining_modes() const;
    std::vector<DetectorSpec> detectors() const;

    Circuit with_element(Element element) const;
    Circuit with_input(PureState input) const;
    Circuit with_target(std::optional<PureState> target) const;

    /// Same circuit with every detector efficiency replaced by `eta2`.
    Circuit with_detector_efficiency(double eta2) const;

   private:
    void validate() const;

    std::size_t mode_count_;
    std::vector<Element> elements_;
    PureState input_;
    std::optional<PureState> target_;
};

struct RunResult {
    /// Joint probability of every detector outcome.
    double probability = 1.0;
    /// Normalized conditional state of the remaining modes; branch labels
    /// hold the per-detector arrival numbers.
    Ensemble output;
    std::optional<double> fidelity;
};

/// Executes the elements in order on a sparse state. Ideal detectors
/// post-select; inefficient ones split the state into arrival branches.
///
/// Throws ZeroProbabilityError when a detector outcome is impossible.
RunResult run_circuit(const Circuit &circuit);

/// The pure pre-measurement state: all linear elements applied, detectors
/// skipped. Used to cross-check the symbolic oracle.
PureState propagate_linear(const Circuit &circuit);

}  // namespace fockopt

#endif  // FOCKOPT_CIRCUIT_H
