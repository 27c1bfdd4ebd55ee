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

#ifndef FOCKOPT_ORACLE_H
#define FOCKOPT_ORACLE_H

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fockopt/circuit.h"
#include "fockopt/fock_state.h"

// Reference implementations used to cross-check the sparse engine. Nothing
// here calls into elements.cc or measurement.cc.
namespace fockopt::oracle {

/// Polynomial in commuting creation operators a_0^dag .. a_{M-1}^dag.
/// Terms are keyed by exponent vector in lexicographic order.
class OpPolynomial {
   public:
    using Exponents = std::vector<int>;

    explicit OpPolynomial(std::size_t mode_count = 0);

    static OpPolynomial constant(std::size_t mode_count, Amplitude c);
    static OpPolynomial monomial(Exponents exponents, Amplitude c = 1.0);
    /// (a_mode^dag) as a degree-one polynomial.
    static OpPolynomial generator(std::size_t mode_count, std::size_t mode, Amplitude c = 1.0);

    std::size_t mode_count() const { return mode_count_; }
    const std::map<Exponents, Amplitude> &terms() const { return terms_; }
    Amplitude coefficient(const Exponents &e) const;

    OpPolynomial operator+(const OpPolynomial &other) const;
    OpPolynomial operator-(const OpPolynomial &other) const;
    OpPolynomial operator*(const OpPolynomial &other) const;
    OpPolynomial operator*(Amplitude c) const;
    OpPolynomial pow(int k) const;

    std::string str() const;

   private:
    void add(const Exponents &e, Amplitude c);
    void drop_small();

    std::size_t mode_count_;
    std::map<Exponents, Amplitude> terms_;
};

/// Replaces every a_j^dag with sum_k mode_map(k, j) a_k^dag, where
/// mode_map is the single-photon transfer matrix (row = output mode), and
/// re-expands. Throws DimensionError for a non-square or wrongly sized map
/// and std::invalid_argument if it is not unitary within 1e-9.
OpPolynomial substitute(const OpPolynomial &poly, const Eigen::MatrixXcd &mode_map);

/// Each monomial prod (a_i^dag)^{n_i} acting on vacuum: amplitude
/// coefficient * sqrt(prod n_i!). Not normalized.
PureState polynomial_to_state(const OpPolynomial &poly);

/// Inverse of polynomial_to_state.
OpPolynomial state_to_polynomial(const PureState &state);

/// Size limits of the dense simulator.
inline constexpr int kDenseMaxPhotons = 10;
inline constexpr std::size_t kDenseMaxModes = 6;

/// Same contract as run_circuit, computed on the dense product basis with
/// per-mode cutoff N (the largest input photon number). Two-mode beam
/// splitter blocks are materialized from dense ladder-operator matrices.
///
/// Throws OracleSizeError above kDenseMaxPhotons or kDenseMaxModes.
RunResult dense_reference_run(const Circuit &circuit);

/// Pure pre-measurement state through the symbolic route: input as a
/// polynomial, substituted with the circuit's transfer matrix.
PureState symbolic_linear_state(const Circuit &circuit);

struct RunComparison {
    double probability_delta = 0.0;
    /// Largest entrywise deviation between canonical-phase branch states.
    double state_delta = 0.0;
    double weight_delta = 0.0;
    bool labels_match = true;

    bool agrees(double probability_tolerance = 1e-12, double state_tolerance = 1e-10) const {
        return labels_match && probability_delta <= probability_tolerance && state_delta <= state_tolerance &&
               weight_delta <= probability_tolerance;
    }
};

/// Matches branches by label and reports the worst deviations.
RunComparison compare_runs(const RunResult &a, const RunResult &b);

}  // namespace fockopt::oracle

#endif  // FOCKOPT_ORACLE_H
