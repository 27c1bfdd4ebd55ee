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

#include "fockopt/circuit.h"

#include <algorithm>
#include <string>

#include "fockopt/errors.h"

namespace fockopt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Tracks which label sits at which position of the live state.
class ModeMap {
   public:
    explicit ModeMap(std::size_t mode_count) {
        for (std::size_t k = 0; k < mode_count; k++) {
            live_.push_back(k);
        }
    }

    std::size_t position(std::size_t label) const {
        auto it = std::find(live_.begin(), live_.end(), label);
        if (it == live_.end()) {
            throw SemanticError("mode " + std::to_string(label) + " was already consumed by a detector");
        }
        return static_cast<std::size_t>(it - live_.begin());
    }

    void consume(std::size_t label) { live_.erase(live_.begin() + position(label)); }

   private:
    std::vector<std::size_t> live_;
};

}  // namespace

Circuit::Circuit(std::size_t mode_count, std::vector<Element> elements, PureState input,
                 std::optional<PureState> target)
    : mode_count_(mode_count),
      elements_(std::move(elements)),
      input_(std::move(input)),
      target_(std::move(target)) {
    validate();
}

void Circuit::validate() const {
    if (mode_count_ == 0) {
        throw SemanticError("circuit needs at least one mode");
    }
    if (input_.mode_count() != mode_count_) {
        throw SemanticError("input state has " + std::to_string(input_.mode_count()) +
                            " modes, circuit declares " + std::to_string(mode_count_));
    }
    std::vector<bool> consumed(mode_count_, false);
    auto check = [&](std::size_t mode, const char *what) {
        if (mode >= mode_count_) {
            throw SemanticError(std::string(what) + " mode " + std::to_string(mode) + " out of range (modes " +
                                std::to_string(mode_count_) + ")");
        }
        if (consumed[mode]) {
            throw SemanticError(std::string(what) + " uses mode " + std::to_string(mode) +
                                " after it was consumed by a detector");
        }
    };
    std::size_t detectors = 0;
    for (const auto &element : elements_) {
        std::visit(overloaded{
                       [&](const BeamSplitter &bs) {
                           check(bs.mode_i, "beam splitter");
                           check(bs.mode_j, "beam splitter");
                           if (bs.mode_i == bs.mode_j) {
                               throw SemanticError("beam splitter needs two distinct modes");
                           }
                       },
                       [&](const PhaseShifter &ps) { check(ps.mode, "phase shifter"); },
                       [&](const DetectorSpec &det) {
                           check(det.mode, "detector");
                           if (det.clicks < 0) {
                               throw SemanticError("detector click count must be nonnegative");
                           }
                           if (!(det.eta2 >= 0.0 && det.eta2 <= 1.0)) {
                               throw SemanticError("detector efficiency eta2 must lie in [0, 1]");
                           }
                           consumed[det.mode] = true;
                           detectors++;
                       },
                   },
                   element);
    }
    if (target_ && target_->mode_count() != mode_count_ - detectors) {
        throw SemanticError("target has " + std::to_string(target_->mode_count()) + " modes, but " +
                            std::to_string(mode_count_ - detectors) + " remain after detection");
    }
}

std::vector<std::size_t> Circuit::remaining_modes() const {
    std::vector<bool> consumed(mode_count_, false);
    for (const auto &det : detectors()) {
        consumed[det.mode] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < mode_count_; k++) {
        if (!consumed[k]) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<DetectorSpec> Circuit::detectors() const {
    std::vector<DetectorSpec> out;
    for (const auto &element : elements_) {
        if (const auto *det = std::get_if<DetectorSpec>(&element)) {
            out.push_back(*det);
        }
    }
    return out;
}

Circuit Circuit::with_element(Element element) const {
    auto elements = elements_;
    elements.push_back(element);
    return Circuit(mode_count_, std::move(elements), input_, target_);
}

Circuit Circuit::with_input(PureState input) const {
    return Circuit(mode_count_, elements_, std::move(input), target_);
}

Circuit Circuit::with_target(std::optional<PureState> target) const {
    return Circuit(mode_count_, elements_, input_, std::move(target));
}

Circuit Circuit::with_detector_efficiency(double eta2) const {
    auto elements = elements_;
    for (auto &element : elements) {
        if (auto *det = std::get_if<DetectorSpec>(&element)) {
            det->eta2 = eta2;
        }
    }
    return Circuit(mode_count_, std::move(elements), input_, target_);
}

RunResult run_circuit(const Circuit &circuit) {
    ModeMap modes(circuit.mode_count());
    Ensemble rho = Ensemble::pure(normalize(circuit.input()).state);
    double probability = 1.0;
    for (const auto &element : circuit.elements()) {
        std::visit(overloaded{
                       [&](const BeamSplitter &bs) {
                           auto i = modes.position(bs.mode_i);
                           auto j = modes.position(bs.mode_j);
                           rho = rho.transformed([&](const PureState &s) { return apply_beam_splitter(s, i, j); });
                       },
                       [&](const PhaseShifter &ps) {
                           auto i = modes.position(ps.mode);
                           rho = rho.transformed([&](const PureState &s) { return apply_phase_shifter(s, i, ps.phi); });
                       },
                       [&](const DetectorSpec &det) {
                           auto result = detect_lossy(rho, modes.position(det.mode), det.clicks, det.eta2);
                           probability *= result.probability;
                           rho = std::move(result.output);
                           modes.consume(det.mode);
                       },
                   },
                   element);
    }
    RunResult result;
    result.probability = probability;
    result.output = rho.normalized();
    if (circuit.target()) {
        result.fidelity = fidelity(result.output, normalize(*circuit.target()).state);
    }
    return result;
}

PureState propagate_linear(const Circuit &circuit) {
    PureState state = circuit.input();
    for (const auto &element : circuit.elements()) {
        if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
            state = apply(state, *bs);
        } else if (const auto *ps = std::get_if<PhaseShifter>(&element)) {
            state = apply(state, *ps);
        }
    }
    return state;
}

}  // namespace fockopt
