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

#include "fockopt/oracle.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "fockopt/errors.h"

namespace fockopt::oracle {

// ---------------------------------------------------------------------------
// Symbolic polynomials.

OpPolynomial::OpPolynomial(std::size_t mode_count) : mode_count_(mode_count) {
}

OpPolynomial OpPolynomial::constant(std::size_t mode_count, Amplitude c) {
    OpPolynomial p(mode_count);
    p.add(Exponents(mode_count, 0), c);
    p.drop_small();
    return p;
}

OpPolynomial OpPolynomial::monomial(Exponents exponents, Amplitude c) {
    for (int e : exponents) {
        if (e < 0) {
            throw std::invalid_argument("negative exponent in creation monomial");
        }
    }
    OpPolynomial p(exponents.size());
    p.add(exponents, c);
    p.drop_small();
    return p;
}

OpPolynomial OpPolynomial::generator(std::size_t mode_count, std::size_t mode, Amplitude c) {
    Exponents e(mode_count, 0);
    e.at(mode) = 1;
    return monomial(std::move(e), c);
}

Amplitude OpPolynomial::coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Amplitude{} : it->second;
}

void OpPolynomial::add(const Exponents &e, Amplitude c) {
    if (e.size() != mode_count_) {
        throw DimensionError("monomial length does not match polynomial mode count");
    }
    terms_[e] += c;
}

void OpPolynomial::drop_small() {
    std::erase_if(terms_, [](const auto &t) { return std::abs(t.second) < 1e-14; });
}

OpPolynomial OpPolynomial::operator+(const OpPolynomial &other) const {
    if (other.mode_count_ != mode_count_) {
        throw DimensionError("adding polynomials over different mode counts");
    }
    OpPolynomial out = *this;
    for (const auto &[e, c] : other.terms_) {
        out.add(e, c);
    }
    out.drop_small();
    return out;
}

OpPolynomial OpPolynomial::operator-(const OpPolynomial &other) const {
    return *this + other * Amplitude{-1.0};
}

OpPolynomial OpPolynomial::operator*(const OpPolynomial &other) const {
    if (other.mode_count_ != mode_count_) {
        throw DimensionError("multiplying polynomials over different mode counts");
    }
    OpPolynomial out(mode_count_);
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : other.terms_) {
            Exponents e = e1;
            for (std::size_t k = 0; k < e.size(); k++) {
                e[k] += e2[k];
            }
            out.add(e, c1 * c2);
        }
    }
    out.drop_small();
    return out;
}

OpPolynomial OpPolynomial::operator*(Amplitude c) const {
    OpPolynomial out(mode_count_);
    for (const auto &[e, v] : terms_) {
        out.add(e, v * c);
    }
    out.drop_small();
    return out;
}

OpPolynomial OpPolynomial::pow(int k) const {
    OpPolynomial out = constant(mode_count_, 1.0);
    for (int t = 0; t < k; t++) {
        out = out * *this;
    }
    return out;
}

std::string OpPolynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    out << std::setprecision(6);
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        for (std::size_t k = 0; k < e.size(); k++) {
            if (e[k] > 0) {
                out << " a" << k << "^" << e[k];
            }
        }
    }
    return out.str();
}

OpPolynomial substitute(const OpPolynomial &poly, const Eigen::MatrixXcd &mode_map) {
    const auto m = static_cast<Eigen::Index>(poly.mode_count());
    if (mode_map.rows() != mode_map.cols()) {
        throw DimensionError("mode map must be square");
    }
    if (mode_map.rows() != m) {
        throw DimensionError("mode map size does not match polynomial mode count");
    }
    Eigen::MatrixXcd gram = mode_map.adjoint() * mode_map;
    if (!gram.isApprox(Eigen::MatrixXcd::Identity(m, m), 1e-9) &&
        (gram - Eigen::MatrixXcd::Identity(m, m)).norm() > 1e-9) {
        throw std::invalid_argument("mode map is not unitary");
    }
    std::vector<OpPolynomial> images;
    for (Eigen::Index j = 0; j < m; j++) {
        OpPolynomial image(poly.mode_count());
        for (Eigen::Index k = 0; k < m; k++) {
            if (mode_map(k, j) != Amplitude{}) {
                image = image + OpPolynomial::generator(poly.mode_count(), static_cast<std::size_t>(k), mode_map(k, j));
            }
        }
        images.push_back(std::move(image));
    }
    OpPolynomial out(poly.mode_count());
    for (const auto &[e, c] : poly.terms()) {
        OpPolynomial term = OpPolynomial::constant(poly.mode_count(), c);
        for (std::size_t j = 0; j < e.size(); j++) {
            term = term * images[j].pow(e[j]);
        }
        out = out + term;
    }
    return out;
}

namespace {

double factorial_product(const std::vector<int> &e) {
    double f = 1.0;
    for (int n : e) {
        for (int t = 2; t <= n; t++) {
            f *= t;
        }
    }
    return f;
}

}  // namespace

PureState polynomial_to_state(const OpPolynomial &poly) {
    PureState out(poly.mode_count());
    for (const auto &[e, c] : poly.terms()) {
        out.accumulate(FockKet(e), c * std::sqrt(factorial_product(e)));
    }
    out.prune();
    return out;
}

OpPolynomial state_to_polynomial(const PureState &state) {
    OpPolynomial out(state.mode_count());
    for (const auto &[ket, amp] : state.amplitudes()) {
        std::vector<int> e(ket.occupations().begin(), ket.occupations().end());
        out = out + OpPolynomial::monomial(e, amp / std::sqrt(factorial_product(e)));
    }
    return out;
}

PureState symbolic_linear_state(const Circuit &circuit) {
    return polynomial_to_state(substitute(state_to_polynomial(circuit.input()), mode_transfer_matrix(circuit)));
}

// ---------------------------------------------------------------------------
// Dense product-basis simulator.

namespace {

class DenseSpace {
   public:
    DenseSpace(std::size_t modes, int cutoff) : modes_(modes), dim_(cutoff + 1) {
        strides_.assign(modes, 1);
        for (std::size_t k = modes - 1; k-- > 0;) {
            strides_[k] = strides_[k + 1] * dim_;
        }
        size_ = strides_[0] * dim_;
    }

    std::size_t size() const { return size_; }
    int dim() const { return dim_; }
    std::size_t stride(std::size_t mode) const { return strides_[mode]; }
    int occupation(std::size_t index, std::size_t mode) const {
        return static_cast<int>((index / strides_[mode]) % static_cast<std::size_t>(dim_));
    }

    std::size_t index_of(const FockKet &ket) const {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < modes_; k++) {
            idx += static_cast<std::size_t>(ket[k]) * strides_[k];
        }
        return idx;
    }

   private:
    std::size_t modes_;
    int dim_;
    std::vector<std::size_t> strides_;
    std::size_t size_;
};

Eigen::MatrixXcd creation_matrix(int dim) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; n++) {
        c(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
    }
    return c;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &x, const Eigen::MatrixXcd &y) {
    Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index r = 0; r < x.rows(); r++) {
        for (Eigen::Index c = 0; c < x.cols(); c++) {
            out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
        }
    }
    return out;
}

// Fock-space block of a two-mode element with single-photon matrix u, on
// the basis index p * dim + q. Column |n,m> is built by applying the images
// of the two creation operators to the vacuum as dense matrices. Columns
// with more than dim - 1 photons are left zero; they are never populated.
Eigen::MatrixXcd two_mode_block(const Eigen::Matrix2cd &u, int dim) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::MatrixXcd c = creation_matrix(dim);
    const Eigen::MatrixXcd first = kron(c, id);
    const Eigen::MatrixXcd second = kron(id, c);
    const Eigen::MatrixXcd image_first = u(0, 0) * first + u(1, 0) * second;
    const Eigen::MatrixXcd image_second = u(0, 1) * first + u(1, 1) * second;

    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
    for (int n = 0; n < dim; n++) {
        for (int m = 0; n + m < dim; m++) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim * dim);
            v(0) = 1.0;
            for (int t = 0; t < m; t++) {
                v = image_second * v;
            }
            for (int t = 0; t < n; t++) {
                v = image_first * v;
            }
            v /= std::sqrt(std::tgamma(n + 1.0) * std::tgamma(m + 1.0));
            block.col(n * dim + m) = v;
        }
    }
    return block;
}

Eigen::Matrix2cd splitter_matrix() {
    const double s = std::numbers::sqrt2 / 2;
    Eigen::Matrix2cd u;
    u << Amplitude(-s, 0), Amplitude(0, s), Amplitude(0, s), Amplitude(-s, 0);
    return u;
}

double binomial_click_weight(int n, int k, double eta2) {
    if (k > n) {
        return 0.0;
    }
    double c = 1.0;
    for (int t = 1; t <= k; t++) {
        c = c * (n - k + t) / t;
    }
    double w = c;
    for (int t = 0; t < k; t++) {
        w *= eta2;
    }
    for (int t = 0; t < n - k; t++) {
        w *= 1.0 - eta2;
    }
    return w;
}

struct DenseBranch {
    double weight;
    Eigen::VectorXcd psi;
    std::vector<int> label;
};

void apply_block(const DenseSpace &space, Eigen::VectorXcd &psi, std::size_t i, std::size_t j,
                 const Eigen::MatrixXcd &block) {
    const int d = space.dim();
    const std::size_t si = space.stride(i);
    const std::size_t sj = space.stride(j);
    Eigen::VectorXcd sub(d * d);
    for (std::size_t base = 0; base < space.size(); base++) {
        if (space.occupation(base, i) != 0 || space.occupation(base, j) != 0) {
            continue;
        }
        bool any = false;
        for (int p = 0; p < d; p++) {
            for (int q = 0; q < d; q++) {
                sub(p * d + q) = psi(static_cast<Eigen::Index>(base + p * si + q * sj));
                any = any || sub(p * d + q) != Amplitude{};
            }
        }
        if (!any) {
            continue;
        }
        Eigen::VectorXcd out = block * sub;
        for (int p = 0; p < d; p++) {
            for (int q = 0; q < d; q++) {
                psi(static_cast<Eigen::Index>(base + p * si + q * sj)) = out(p * d + q);
            }
        }
    }
}

}  // namespace

RunResult dense_reference_run(const Circuit &circuit) {
    const std::size_t modes = circuit.mode_count();
    int photons = 0;
    for (const auto &[ket, amp] : circuit.input().amplitudes()) {
        photons = std::max(photons, ket.total_photons());
    }
    if (modes > kDenseMaxModes || photons > kDenseMaxPhotons) {
        throw OracleSizeError("dense oracle limited to " + std::to_string(kDenseMaxModes) + " modes and " +
                              std::to_string(kDenseMaxPhotons) + " photons; got " + std::to_string(modes) +
                              " modes and " + std::to_string(photons) + " photons");
    }
    const DenseSpace space(modes, photons);
    const int d = space.dim();

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.size()));
    for (const auto &[ket, amp] : circuit.input().amplitudes()) {
        psi(static_cast<Eigen::Index>(space.index_of(ket))) += amp;
    }
    const double input_norm = psi.norm();
    if (input_norm == 0.0) {
        throw ZeroProbabilityError("input state is zero");
    }
    psi /= input_norm;

    std::vector<DenseBranch> branches{{1.0, std::move(psi), {}}};
    std::vector<bool> consumed(modes, false);
    double probability = 1.0;
    const Eigen::MatrixXcd bs_block = two_mode_block(splitter_matrix(), d);

    for (const auto &element : circuit.elements()) {
        if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
            for (auto &b : branches) {
                apply_block(space, b.psi, bs->mode_i, bs->mode_j, bs_block);
            }
        } else if (const auto *ps = std::get_if<PhaseShifter>(&element)) {
            std::vector<Amplitude> phase(d);
            for (int n = 0; n < d; n++) {
                phase[n] = std::exp(Amplitude(0.0, n * ps->phi));
            }
            for (auto &b : branches) {
                for (std::size_t idx = 0; idx < space.size(); idx++) {
                    b.psi(static_cast<Eigen::Index>(idx)) *= phase[space.occupation(idx, ps->mode)];
                }
            }
        } else {
            const auto &det = std::get<DetectorSpec>(element);
            std::vector<DenseBranch> next;
            double total = 0.0;
            for (const auto &b : branches) {
                for (int n = det.clicks; n < d; n++) {
                    const double click = binomial_click_weight(n, det.clicks, det.eta2);
                    if (click == 0.0) {
                        continue;
                    }
                    Eigen::VectorXcd kept = b.psi;
                    for (std::size_t idx = 0; idx < space.size(); idx++) {
                        if (space.occupation(idx, det.mode) != n) {
                            kept(static_cast<Eigen::Index>(idx)) = 0.0;
                        }
                    }
                    const double arrive = kept.squaredNorm();
                    if (arrive < kPruneTolerance * kPruneTolerance) {
                        continue;
                    }
                    const double w = b.weight * arrive * click;
                    total += w;
                    auto label = b.label;
                    label.push_back(n);
                    next.push_back({w, kept / std::sqrt(arrive), std::move(label)});
                }
            }
            if (total == 0.0) {
                throw ZeroProbabilityError("detector on mode " + std::to_string(det.mode) + " cannot report " +
                                           std::to_string(det.clicks) + " clicks");
            }
            for (auto &b : next) {
                b.weight /= total;
            }
            probability *= total;
            branches = std::move(next);
            consumed[det.mode] = true;
        }
    }

    std::vector<std::size_t> remaining;
    for (std::size_t k = 0; k < modes; k++) {
        if (!consumed[k]) {
            remaining.push_back(k);
        }
    }
    std::vector<Branch> packed;
    for (const auto &b : branches) {
        PureState state(remaining.size());
        for (std::size_t idx = 0; idx < space.size(); idx++) {
            const Amplitude amp = b.psi(static_cast<Eigen::Index>(idx));
            if (std::abs(amp) < kPruneTolerance) {
                continue;
            }
            std::vector<int> occ;
            for (auto mode : remaining) {
                occ.push_back(space.occupation(idx, mode));
            }
            state.accumulate(FockKet(std::move(occ)), amp);
        }
        packed.push_back({b.weight, normalize(state).state, b.label});
    }

    RunResult result;
    result.probability = probability;
    result.output = Ensemble(std::move(packed));
    if (circuit.target()) {
        result.fidelity = fidelity(result.output, normalize(*circuit.target()).state);
    }
    return result;
}

RunComparison compare_runs(const RunResult &a, const RunResult &b) {
    RunComparison cmp;
    cmp.probability_delta = std::abs(a.probability - b.probability);
    std::map<std::vector<int>, const Branch *> by_label;
    for (const auto &branch : b.output.branches()) {
        by_label[branch.label] = &branch;
    }
    if (a.output.size() != b.output.size()) {
        cmp.labels_match = false;
    }
    for (const auto &branch : a.output.branches()) {
        auto it = by_label.find(branch.label);
        if (it == by_label.end()) {
            cmp.labels_match = false;
            continue;
        }
        cmp.weight_delta = std::max(cmp.weight_delta, std::abs(branch.weight - it->second->weight));
        const PureState x = normalize(branch.state).state;
        const PureState y = normalize(it->second->state).state;
        if (x.mode_count() != y.mode_count()) {
            cmp.labels_match = false;
            continue;
        }
        for (const auto &[ket, amp] : x.amplitudes()) {
            cmp.state_delta = std::max(cmp.state_delta, std::abs(amp - y.amplitude(ket)));
        }
        for (const auto &[ket, amp] : y.amplitudes()) {
            cmp.state_delta = std::max(cmp.state_delta, std::abs(amp - x.amplitude(ket)));
        }
    }
    return cmp;
}

}  // namespace fockopt::oracle
