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

#ifndef FOCKOPT_FOCK_STATE_H
#define FOCKOPT_FOCK_STATE_H

#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fockopt {

using Amplitude = std::complex<double>;

/// Amplitudes with magnitude below this are dropped after every element.
inline constexpr double kPruneTolerance = 1e-12;

/// The canonical phase reference is the first ket (lexicographically) whose
/// amplitude magnitude exceeds this.
inline constexpr double kPhaseReferenceTolerance = 1e-9;

/// Occupation-number label |n_0, ..., n_{M-1}>.
///
/// The mode count is explicit: |1,0> and |1,0,0> are different kets and
/// never compare equal.
class FockKet {
   public:
    FockKet() = default;
    explicit FockKet(std::vector<int> occupations);
    FockKet(std::initializer_list<int> occupations);

    /// Vacuum over `mode_count` modes.
    static FockKet vacuum(std::size_t mode_count);

    std::size_t mode_count() const { return occupations_.size(); }
    int operator[](std::size_t mode) const { return occupations_[mode]; }
    int total_photons() const;
    std::span<const int> occupations() const { return occupations_; }

    FockKet with_occupation(std::size_t mode, int n) const;
    FockKet without_mode(std::size_t mode) const;
    FockKet concat(const FockKet &other) const;

    /// sqrt(prod n_i!), the normalization linking kets to creation monomials.
    double factorial_weight() const;

    std::string str() const;

    auto operator<=>(const FockKet &) const = default;
    bool operator==(const FockKet &) const = default;

   private:
    std::vector<int> occupations_;
};

/// Sparse state vector: a finite map from kets to amplitudes.
///
/// Kets are kept in lexicographic order so iteration and printing are
/// deterministic. Zero amplitudes are never stored.
class PureState {
   public:
    using Map = std::map<FockKet, Amplitude>;

    explicit PureState(std::size_t mode_count = 0);
    PureState(std::size_t mode_count, std::initializer_list<std::pair<FockKet, Amplitude>> terms);

    static PureState vacuum(std::size_t mode_count);
    static PureState basis(const FockKet &ket);

    std::size_t mode_count() const { return mode_count_; }
    const Map &amplitudes() const { return amplitudes_; }
    std::size_t size() const { return amplitudes_.size(); }
    bool empty() const { return amplitudes_.empty(); }

    /// Amplitude of `ket` (zero when absent).
    Amplitude amplitude(const FockKet &ket) const;

    /// Adds `value` to the amplitude of `ket`. Throws DimensionError if the
    /// ket has the wrong mode count.
    void accumulate(const FockKet &ket, Amplitude value);

    /// Removes amplitudes with magnitude below `tolerance`.
    void prune(double tolerance = kPruneTolerance);

    double norm_squared() const;
    PureState scaled(Amplitude factor) const;

    /// Largest occupation of `mode` over all stored kets.
    int max_occupation(std::size_t mode) const;

    std::string str(int precision = 6) const;

   private:
    std::size_t mode_count_ = 0;
    Map amplitudes_;
};

struct NormalizedState {
    PureState state;
    double norm;
};

/// Rescales to unit norm and rotates to canonical global phase.
///
/// Throws ZeroProbabilityError for the zero vector.
NormalizedState normalize(const PureState &state);

/// Applies only the canonical global phase rotation.
PureState canonical_phase(const PureState &state);

/// <a|b>, conjugate-linear in `a`.
Amplitude inner_product(const PureState &a, const PureState &b);

/// a (x) b with the modes of `b` appended after those of `a`.
PureState tensor_product(const PureState &a, const PureState &b);

/// |<a|b>|^2 / (||a||^2 ||b||^2).
double overlap_fidelity(const PureState &a, const PureState &b);

/// One term of a mixture. `label` records the arrival count of each
/// detector stage that produced the branch, in stage order.
struct Branch {
    double weight = 0.0;
    PureState state;
    std::vector<int> label;
};

/// Weighted list of pure states.
class Ensemble {
   public:
    Ensemble() = default;
    explicit Ensemble(std::vector<Branch> branches);

    static Ensemble pure(PureState state);

    const std::vector<Branch> &branches() const { return branches_; }
    std::size_t size() const { return branches_.size(); }
    bool empty() const { return branches_.empty(); }
    std::size_t mode_count() const;
    double total_weight() const;

    /// Rescales the weights to sum to one and normalizes each branch.
    Ensemble normalized() const;

    /// Maps each branch state through `fn` keeping weights and labels.
    template <typename Fn>
    Ensemble transformed(Fn &&fn) const {
        std::vector<Branch> out;
        out.reserve(branches_.size());
        for (const auto &b : branches_) {
            out.push_back({b.weight, fn(b.state), b.label});
        }
        return Ensemble(std::move(out));
    }

   private:
    std::vector<Branch> branches_;
};

/// sum_b w_b |<target|b>|^2 for a normalized ensemble and target.
double fidelity(const Ensemble &rho, const PureState &target);

/// Entrywise comparison of two states.
bool approx_equal(const PureState &a, const PureState &b, double tolerance);

/// Compares normalized, canonical-phase forms of two nonzero states.
bool equal_up_to_phase(const PureState &a, const PureState &b, double tolerance);

}  // namespace fockopt

#endif  // FOCKOPT_FOCK_STATE_H
