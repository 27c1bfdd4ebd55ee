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

#include "fockopt/fock_state.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "fockopt/errors.h"

namespace fockopt {

namespace {

void check_occupations(const std::vector<int> &occupations) {
    for (int n : occupations) {
        if (n < 0) {
            throw std::invalid_argument("negative photon number in Fock ket");
        }
    }
}

std::string format_complex(Amplitude z, int precision) {
    std::ostringstream out;
    out << std::setprecision(precision);
    if (z.imag() == 0) {
        out << z.real();
    } else if (z.real() == 0) {
        out << z.imag() << "i";
    } else {
        out << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
    }
    return out.str();
}

}  // namespace

FockKet::FockKet(std::vector<int> occupations) : occupations_(std::move(occupations)) {
    check_occupations(occupations_);
}

FockKet::FockKet(std::initializer_list<int> occupations) : occupations_(occupations) {
    check_occupations(occupations_);
}

FockKet FockKet::vacuum(std::size_t mode_count) {
    return FockKet(std::vector<int>(mode_count, 0));
}

int FockKet::total_photons() const {
    return std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

FockKet FockKet::with_occupation(std::size_t mode, int n) const {
    std::vector<int> occ = occupations_;
    occ.at(mode) = n;
    return FockKet(std::move(occ));
}

FockKet FockKet::without_mode(std::size_t mode) const {
    std::vector<int> occ = occupations_;
    occ.erase(occ.begin() + static_cast<std::ptrdiff_t>(mode));
    return FockKet(std::move(occ));
}

FockKet FockKet::concat(const FockKet &other) const {
    std::vector<int> occ = occupations_;
    occ.insert(occ.end(), other.occupations_.begin(), other.occupations_.end());
    return FockKet(std::move(occ));
}

double FockKet::factorial_weight() const {
    double w = 1.0;
    for (int n : occupations_) {
        w *= std::tgamma(n + 1.0);
    }
    return std::sqrt(w);
}

std::string FockKet::str() const {
    std::string s = "|";
    for (std::size_t k = 0; k < occupations_.size(); k++) {
        if (k) {
            s += ",";
        }
        s += std::to_string(occupations_[k]);
    }
    return s + ">";
}

PureState::PureState(std::size_t mode_count) : mode_count_(mode_count) {
}

PureState::PureState(std::size_t mode_count, std::initializer_list<std::pair<FockKet, Amplitude>> terms)
    : mode_count_(mode_count) {
    for (const auto &[ket, amp] : terms) {
        accumulate(ket, amp);
    }
    prune(0.0);
}

PureState PureState::vacuum(std::size_t mode_count) {
    return basis(FockKet::vacuum(mode_count));
}

PureState PureState::basis(const FockKet &ket) {
    PureState s(ket.mode_count());
    s.accumulate(ket, 1.0);
    return s;
}

Amplitude PureState::amplitude(const FockKet &ket) const {
    auto it = amplitudes_.find(ket);
    return it == amplitudes_.end() ? Amplitude{} : it->second;
}

void PureState::accumulate(const FockKet &ket, Amplitude value) {
    if (ket.mode_count() != mode_count_) {
        throw DimensionError(
            "ket " + ket.str() + " does not match state mode count " + std::to_string(mode_count_));
    }
    amplitudes_[ket] += value;
}

void PureState::prune(double tolerance) {
    std::erase_if(amplitudes_, [tolerance](const auto &entry) {
        double mag = std::abs(entry.second);
        return mag == 0.0 || mag < tolerance;
    });
}

double PureState::norm_squared() const {
    double total = 0.0;
    for (const auto &[ket, amp] : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

PureState PureState::scaled(Amplitude factor) const {
    PureState out(mode_count_);
    for (const auto &[ket, amp] : amplitudes_) {
        out.amplitudes_.emplace_hint(out.amplitudes_.end(), ket, amp * factor);
    }
    out.prune(0.0);
    return out;
}

int PureState::max_occupation(std::size_t mode) const {
    int best = 0;
    for (const auto &[ket, amp] : amplitudes_) {
        best = std::max(best, ket[mode]);
    }
    return best;
}

std::string PureState::str(int precision) const {
    if (amplitudes_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[ket, amp] : amplitudes_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += format_complex(amp, precision) + ket.str();
    }
    return out;
}

PureState canonical_phase(const PureState &state) {
    for (const auto &[ket, amp] : state.amplitudes()) {
        double mag = std::abs(amp);
        if (mag > kPhaseReferenceTolerance) {
            return state.scaled(std::conj(amp) / mag);
        }
    }
    return state;
}

NormalizedState normalize(const PureState &state) {
    double norm = std::sqrt(state.norm_squared());
    if (norm == 0.0) {
        throw ZeroProbabilityError("cannot normalize the zero state");
    }
    return {canonical_phase(state.scaled(1.0 / norm)), norm};
}

Amplitude inner_product(const PureState &a, const PureState &b) {
    if (a.mode_count() != b.mode_count()) {
        throw DimensionError("inner product of states with " + std::to_string(a.mode_count()) + " and " +
                             std::to_string(b.mode_count()) + " modes");
    }
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    Amplitude total{};
    for (const auto &[ket, amp] : small.amplitudes()) {
        Amplitude other = large.amplitude(ket);
        if (other != Amplitude{}) {
            total += (&small == &a) ? std::conj(amp) * other : std::conj(other) * amp;
        }
    }
    return total;
}

PureState tensor_product(const PureState &a, const PureState &b) {
    PureState out(a.mode_count() + b.mode_count());
    for (const auto &[ka, va] : a.amplitudes()) {
        for (const auto &[kb, vb] : b.amplitudes()) {
            out.accumulate(ka.concat(kb), va * vb);
        }
    }
    out.prune(0.0);
    return out;
}

double overlap_fidelity(const PureState &a, const PureState &b) {
    double na = a.norm_squared();
    double nb = b.norm_squared();
    if (na == 0.0 || nb == 0.0) {
        throw ZeroProbabilityError("fidelity with the zero state");
    }
    // Rounding can push a perfect overlap a few ulps past one.
    return std::min(1.0, std::norm(inner_product(a, b)) / (na * nb));
}

Ensemble::Ensemble(std::vector<Branch> branches) : branches_(std::move(branches)) {
    for (const auto &b : branches_) {
        if (b.state.mode_count() != branches_.front().state.mode_count()) {
            throw DimensionError("ensemble branches have different mode counts");
        }
        if (b.weight < 0.0) {
            throw std::invalid_argument("negative ensemble weight");
        }
    }
}

Ensemble Ensemble::pure(PureState state) {
    return Ensemble({Branch{1.0, std::move(state), {}}});
}

std::size_t Ensemble::mode_count() const {
    return branches_.empty() ? 0 : branches_.front().state.mode_count();
}

double Ensemble::total_weight() const {
    double total = 0.0;
    for (const auto &b : branches_) {
        total += b.weight;
    }
    return total;
}

Ensemble Ensemble::normalized() const {
    double total = total_weight();
    if (total == 0.0) {
        throw ZeroProbabilityError("ensemble has zero total weight");
    }
    std::vector<Branch> out;
    out.reserve(branches_.size());
    for (const auto &b : branches_) {
        out.push_back({b.weight / total, normalize(b.state).state, b.label});
    }
    return Ensemble(std::move(out));
}

double fidelity(const Ensemble &rho, const PureState &target) {
    double total = 0.0;
    for (const auto &b : rho.branches()) {
        if (b.state.mode_count() != target.mode_count()) {
            throw DimensionError("fidelity target has " + std::to_string(target.mode_count()) +
                                 " modes, ensemble has " + std::to_string(b.state.mode_count()));
        }
        total += b.weight * std::norm(inner_product(target, b.state));
    }
    return std::min(1.0, total);
}

bool approx_equal(const PureState &a, const PureState &b, double tolerance) {
    if (a.mode_count() != b.mode_count()) {
        return false;
    }
    for (const auto &[ket, amp] : a.amplitudes()) {
        if (std::abs(amp - b.amplitude(ket)) > tolerance) {
            return false;
        }
    }
    for (const auto &[ket, amp] : b.amplitudes()) {
        if (std::abs(amp - a.amplitude(ket)) > tolerance) {
            return false;
        }
    }
    return true;
}

bool equal_up_to_phase(const PureState &a, const PureState &b, double tolerance) {
    if (a.mode_count() != b.mode_count()) {
        return false;
    }
    return approx_equal(normalize(a).state, normalize(b).state, tolerance);
}

}  // namespace fockopt
