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

// Randomized invariants: 100 circuits with up to 6 photons on up to 5
// modes, checked against permanents and the dense reference.

#include <gtest/gtest.h>

#include <random>

#include "fockopt/errors.h"
#include "fockopt/measurement.h"
#include "fockopt/oracle.h"
#include "test_support.h"

namespace fockopt {
namespace {

class RandomCircuits : public ::testing::TestWithParam<int> {
   protected:
    void SetUp() override {
        rng_.seed(0x5eed0000u + static_cast<unsigned>(GetParam()));
        std::uniform_int_distribution<int> modes(1, 5), photons(1, 6), depth(1, 14);
        modes_ = static_cast<std::size_t>(modes(rng_));
        photons_ = photons(rng_);
        circuit_ = std::make_unique<Circuit>(testing::random_linear_circuit(rng_, modes_, photons_, depth(rng_)));
        circuit_ = std::make_unique<Circuit>(circuit_->with_input(normalize(circuit_->input()).state));
    }

    std::mt19937_64 rng_;
    std::size_t modes_ = 0;
    int photons_ = 0;
    std::unique_ptr<Circuit> circuit_;
};

TEST_P(RandomCircuits, NormAndPhotonNumberPreserved) {
    PureState out = propagate_linear(*circuit_);
    EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
    for (const auto &[ket, amp] : out.amplitudes()) {
        EXPECT_EQ(ket.total_photons(), photons_);
    }
}

TEST_P(RandomCircuits, AgreesWithPermanents) {
    EXPECT_LT(testing::max_deviation(propagate_linear(*circuit_), testing::permanent_propagate(*circuit_)), 1e-10);
}

TEST_P(RandomCircuits, AgreesWithSymbolicSubstitution) {
    EXPECT_TRUE(approx_equal(propagate_linear(*circuit_), oracle::symbolic_linear_state(*circuit_), 1e-10));
}

TEST_P(RandomCircuits, MeasurementCompleteness) {
    PureState out = propagate_linear(*circuit_);
    std::vector<std::size_t> all(modes_);
    for (std::size_t k = 0; k < modes_; k++) {
        all[k] = k;
    }
    double total = 0.0;
    for (const auto &[pattern, p] : outcome_distribution(out, all)) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    // Summing detect_lossy probabilities over all click counts also gives 1.
    const double eta2 = 0.73;
    double lossy_total = 0.0;
    for (int k = 0; k <= photons_; k++) {
        try {
            lossy_total += detect_lossy(Ensemble::pure(out), 0, k, eta2).probability;
        } catch (const ZeroProbabilityError &) {
        }
    }
    EXPECT_NEAR(lossy_total, 1.0, 1e-12);
}

TEST_P(RandomCircuits, DenseReferenceWithDetectors) {
    if (modes_ < 2) {
        // Heralding the only mode would leave nothing; compare the bare run.
        oracle::RunComparison cmp = oracle::compare_runs(run_circuit(*circuit_), oracle::dense_reference_run(*circuit_));
        EXPECT_TRUE(cmp.agrees()) << "dp=" << cmp.probability_delta << " ds=" << cmp.state_delta;
        return;
    }
    PureState out = propagate_linear(*circuit_);
    // Herald on whatever mode 0 most likely shows, ideal and lossy.
    const std::size_t mode0[] = {0};
    auto dist = outcome_distribution(out, mode0);
    int k = 0;
    double best = -1.0;
    for (const auto &[pattern, p] : dist) {
        if (p > best) {
            best = p;
            k = pattern[0];
        }
    }
    for (double eta2 : {1.0, 0.6}) {
        Circuit c = circuit_->with_element(DetectorSpec{0, k, eta2});
        RunResult sparse = run_circuit(c);
        RunResult dense = oracle::dense_reference_run(c);
        oracle::RunComparison cmp = oracle::compare_runs(sparse, dense);
        EXPECT_TRUE(cmp.agrees()) << "eta2=" << eta2 << " dp=" << cmp.probability_delta << " ds=" << cmp.state_delta;
        if (eta2 == 1.0) {
            EXPECT_NEAR(sparse.probability, best, 1e-12);
            RunResult lossy_one = run_circuit(c.with_detector_efficiency(1.0));
            EXPECT_TRUE(oracle::compare_runs(sparse, lossy_one).agrees());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Hundred, RandomCircuits, ::testing::Range(0, 100));

}  // namespace
}  // namespace fockopt
