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

#ifndef FOCKOPT_MEASUREMENT_H
#define FOCKOPT_MEASUREMENT_H

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "fockopt/fock_state.h"

namespace fockopt {

/// Photon-number detector. An efficiency eta2 < 1 is modelled as an ideal
/// counter behind a beam splitter of transmissivity eta; the photons it
/// deflects are lost to the environment.
struct DetectorSpec {
    std::size_t mode = 0;
    int clicks = 1;
    double eta2 = 1.0;

    bool ideal() const { return eta2 == 1.0; }
};

struct PostSelection {
    PureState state;  // normalized, measured mode removed
    double probability;
};

struct LossyDetection {
    Ensemble output;  // normalized, measured mode removed
    double probability;
};

/// Unnormalized component of `state` with exactly `n` photons in `mode`,
/// with that mode removed.
PureState project_mode(const PureState &state, std::size_t mode, int n);

/// Conditions on `k` photons in `mode` and consumes the mode.
///
/// Throws ZeroProbabilityError when no ket has `k` photons there.
PostSelection post_select_ideal(const PureState &state, std::size_t mode, int k);

/// Probability that an inefficient detector reports `k` clicks when `n`
/// photons arrive: C(n,k) eta2^k (1 - eta2)^(n-k). Zero for k > n.
double click_probability(int n, int k, double eta2);

/// Conditions every branch on a report of `k` clicks, splitting it into one
/// branch per arrival number n >= k. Each new branch records n in its label.
///
/// All n arriving photons are removed with the mode, including the n - k
/// that were lost. With eta2 == 1 this is exactly post_select_ideal.
LossyDetection detect_lossy(const Ensemble &rho, std::size_t mode, int k, double eta2);

/// Joint photon-count statistics of `modes` (positional), keyed by the count
/// pattern in the order given.
std::map<std::vector<int>, double> outcome_distribution(const PureState &state,
                                                       std::span<const std::size_t> modes);

}  // namespace fockopt

#endif  // FOCKOPT_MEASUREMENT_H
