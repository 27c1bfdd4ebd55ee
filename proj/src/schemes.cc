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

#include "fockopt/schemes.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fockopt {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::size_t kA = 0;
constexpr std::size_t kB = 1;
constexpr std::size_t kC = 2;
constexpr std::size_t kD = 3;

struct Fig2Stages {
    std::vector<Element> before_arms;  // first splitter and its fixed phases
    std::vector<Element> arms;         // heralding splitters and detectors
    std::vector<Element> after_arms;   // final splitter and its fixed phases
};

Fig2Stages fig2_stages(int clicks, double eta2) {
    Fig2Stages s;
    s.before_arms = {
        PhaseShifter{kC, -kPi / 2},
        PhaseShifter{kD, -kPi / 2},
        BeamSplitter{kA, kB},
        PhaseShifter{kA, kPi / 2},
        PhaseShifter{kB, kPi / 2},
    };
    s.arms = {
        BeamSplitter{kA, kC},
        BeamSplitter{kB, kD},
        DetectorSpec{kC, clicks, eta2},
        DetectorSpec{kD, clicks, eta2},
    };
    s.after_arms = {
        BeamSplitter{kA, kB},
        PhaseShifter{kA, kPi},
        PhaseShifter{kB, kPi},
    };
    return s;
}

std::vector<Element> assemble(const Fig2Stages &s, std::optional<PhaseShifter> arm_phase) {
    std::vector<Element> out = s.before_arms;
    if (arm_phase) {
        out.push_back(*arm_phase);
    }
    out.insert(out.end(), s.arms.begin(), s.arms.end());
    out.insert(out.end(), s.after_arms.begin(), s.after_arms.end());
    return out;
}

PureState two_mode(int a, int b) {
    return PureState::basis(FockKet{a, b});
}

}  // namespace

PureState noon_state(int n, double sign) {
    const double s = 1.0 / std::sqrt(2.0);
    if (n == 0) {
        return PureState::vacuum(2);
    }
    return PureState(2, {{FockKet{n, 0}, s}, {FockKet{0, n}, sign * s}});
}

std::vector<std::string> scheme_names() {
    return {"hom", "fig2", "fig2_33", "fig2_ancilla"};
}

Circuit build_named(std::string_view name, const SchemeParams &params) {
    std::size_t modes = 0;
    std::vector<Element> elements;
    PureState default_input;
    PureState default_target;

    if (name == "hom") {
        modes = 2;
        elements = {BeamSplitter{kA, kB}};
        default_input = two_mode(1, 1);
        default_target = noon_state(2);
    } else if (name == "fig2" || name == "fig2_33" || name == "fig2_ancilla") {
        modes = 4;
        auto stages = fig2_stages(params.clicks, params.eta2);
        if (name == "fig2") {
            elements = assemble(stages, std::nullopt);
            default_input = PureState::basis(FockKet{2, 2, 0, 0});
            default_target = noon_state(2);
        } else if (name == "fig2_33") {
            elements = assemble(stages, PhaseShifter{kB, kPi / 2});
            default_input = PureState::basis(FockKet{3, 3, 0, 0});
            default_target = noon_state(4, -1.0);
        } else {
            elements = assemble(stages, PhaseShifter{kA, kPi / 4});
            default_input = tensor_product(two_mode(2, 2), noon_state(2));
            default_target = noon_state(4, -1.0);
        }
    } else {
        throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
    }

    if (params.extra_phase) {
        elements.push_back(PhaseShifter{kA, *params.extra_phase});
        default_target = apply_phase_shifter(default_target, kA, *params.extra_phase);
    }

    std::optional<PureState> target = params.target;
    if (!target && !params.input) {
        target = default_target;
    }
    return Circuit(modes, std::move(elements), params.input.value_or(default_input), std::move(target));
}

}  // namespace fockopt
