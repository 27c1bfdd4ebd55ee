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

#include "fockopt/measurement.h"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "fockopt/errors.h"

namespace fockopt {

namespace {

void check_mode(std::size_t mode_count, std::size_t mode) {
    if (mode >= mode_count) {
        throw DimensionError("detector mode " + std::to_string(mode) + " out of range for " +
                             std::to_string(mode_count) + "-mode state");
    }
}

}  // namespace

PureState project_mode(const PureState &state, std::size_t mode, int n) {
    check_mode(state.mode_count(), mode);
    PureState out(state.mode_count() - 1);
    for (const auto &[ket, amp] : state.amplitudes()) {
        if (ket[mode] == n) {
            out.accumulate(ket.without_mode(mode), amp);
        }
    }
    return out;
}

PostSelection post_select_ideal(const PureState &state, std::size_t mode, int k) {
    PureState kept = project_mode(state, mode, k);
    double p = kept.norm_squared();
    if (p == 0.0) {
        throw ZeroProbabilityError("no amplitude with " + std::to_string(k) + " photons in mode " +
                                   std::to_string(mode));
    }
    return {normalize(kept).state, p};
}

double click_probability(int n, int k, double eta2) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double binom = std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
    return binom * std::pow(eta2, k) * std::pow(1.0 - eta2, n - k);
}

LossyDetection detect_lossy(const Ensemble &rho, std::size_t mode, int k, double eta2) {
    if (!(eta2 >= 0.0 && eta2 <= 1.0)) {
        throw std::invalid_argument("detector efficiency must lie in [0, 1]");
    }
    if (k < 0) {
        throw std::invalid_argument("negative click count");
    }
    std::vector<Branch> out;
    double total = 0.0;
    for (const auto &branch : rho.branches()) {
        check_mode(branch.state.mode_count(), mode);
        const int max_n = branch.state.max_occupation(mode);
        for (int n = k; n <= max_n; n++) {
            const double click = click_probability(n, k, eta2);
            if (click == 0.0) {
                continue;
            }
            PureState kept = project_mode(branch.state, mode, n);
            const double arrive = kept.norm_squared();
            if (arrive == 0.0) {
                continue;
            }
            const double w = branch.weight * arrive * click;
            total += w;
            std::vector<int> label = branch.label;
            label.push_back(n);
            out.push_back({w, normalize(kept).state, std::move(label)});
        }
    }
    if (total == 0.0) {
        throw ZeroProbabilityError("detector on mode " + std::to_string(mode) + " cannot report " +
                                   std::to_string(k) + " clicks");
    }
    for (auto &b : out) {
        b.weight /= total;
    }
    return {Ensemble(std::move(out)), total};
}

std::map<std::vector<int>, double> outcome_distribution(const PureState &state,
                                                       std::span<const std::size_t> modes) {
    std::set<std::size_t> seen;
    for (auto m : modes) {
        check_mode(state.mode_count(), m);
        if (!seen.insert(m).second) {
            throw std::invalid_argument("outcome_distribution modes must be distinct");
        }
    }
    std::map<std::vector<int>, double> dist;
    if (modes.empty()) {
        dist[{}] = state.norm_squared();
        return dist;
    }
    for (const auto &[ket, amp] : state.amplitudes()) {
        std::vector<int> pattern;
        pattern.reserve(modes.size());
        for (auto m : modes) {
            pattern.push_back(ket[m]);
        }
        dist[pattern] += std::norm(amp);
    }
    return dist;
}

}  // namespace fockopt
