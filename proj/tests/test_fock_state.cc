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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "fockopt/errors.h"
#include "fockopt/fock_state.h"

namespace fockopt {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

TEST(FockKet, RejectsNegativeOccupation) {
    EXPECT_THROW(FockKet({1, -1}), std::invalid_argument);
}

TEST(FockKet, BasicAccessors) {
    FockKet k{2, 0, 3};
    EXPECT_EQ(k.mode_count(), 3u);
    EXPECT_EQ(k.total_photons(), 5);
    EXPECT_EQ(k.str(), "|2,0,3>");
    EXPECT_EQ(k.without_mode(1), (FockKet{2, 3}));
    EXPECT_EQ(k.with_occupation(1, 4), (FockKet{2, 4, 3}));
    EXPECT_EQ(FockKet{1}.concat(FockKet{2, 3}), (FockKet{1, 2, 3}));
    EXPECT_DOUBLE_EQ(k.factorial_weight(), std::sqrt(2.0 * 6.0));
    EXPECT_EQ(FockKet::vacuum(2), (FockKet{0, 0}));
}

TEST(FockKet, LexicographicOrder) {
    EXPECT_LT((FockKet{0, 4}), (FockKet{1, 3}));
    EXPECT_LT((FockKet{1, 3}), (FockKet{4, 0}));
}

TEST(PureState, AccumulateRejectsWrongModeCount) {
    PureState s(2);
    EXPECT_THROW(s.accumulate(FockKet{1, 0, 0}, 1.0), DimensionError);
}

TEST(PureState, AccumulateMergesAndPruneDrops) {
    PureState s(2);
    s.accumulate({1, 0}, 0.5);
    s.accumulate({1, 0}, 0.5);
    s.accumulate({0, 1}, 1e-14);
    EXPECT_EQ(s.size(), 2u);
    s.prune();
    EXPECT_EQ(s.size(), 1u);
    EXPECT_DOUBLE_EQ(s.amplitude({1, 0}).real(), 1.0);
    EXPECT_EQ(s.amplitude({0, 1}), Amplitude(0.0));
}

TEST(PureState, NormalizeSetsCanonicalPhase) {
    PureState s(2, {{{2, 0}, Amplitude(0, 3)}, {{0, 2}, Amplitude(0, -3)}});
    auto n = normalize(s);
    EXPECT_NEAR(n.norm, std::sqrt(18.0), 1e-12);
    // |0,2> is the smallest ket, so it carries the real positive amplitude.
    EXPECT_NEAR(n.state.amplitude({0, 2}).real(), kS, 1e-15);
    EXPECT_NEAR(n.state.amplitude({0, 2}).imag(), 0.0, 1e-15);
    EXPECT_NEAR(n.state.amplitude({2, 0}).real(), -kS, 1e-15);
}

TEST(PureState, NormalizeZeroThrows) {
    EXPECT_THROW(normalize(PureState(3)), ZeroProbabilityError);
}

TEST(PureState, InnerProductAndFidelity) {
    PureState plus(2, {{{2, 0}, kS}, {{0, 2}, kS}});
    PureState minus(2, {{{2, 0}, kS}, {{0, 2}, -kS}});
    EXPECT_NEAR(std::abs(inner_product(plus, minus)), 0.0, 1e-15);
    EXPECT_NEAR(overlap_fidelity(plus, plus.scaled(Amplitude(0, 5))), 1.0, 1e-15);
    EXPECT_TRUE(equal_up_to_phase(plus, plus.scaled(Amplitude(0, 1)), 1e-12));
    EXPECT_FALSE(equal_up_to_phase(plus, minus, 1e-12));
}

TEST(PureState, TensorProductConcatenatesModes) {
    PureState a = PureState::basis({1});
    PureState b(2, {{{2, 0}, kS}, {{0, 2}, kS}});
    PureState t = tensor_product(a, b);
    EXPECT_EQ(t.mode_count(), 3u);
    EXPECT_NEAR(t.amplitude({1, 2, 0}).real(), kS, 1e-15);
    EXPECT_NEAR(t.amplitude({1, 0, 2}).real(), kS, 1e-15);
}

TEST(Ensemble, ValidatesBranches) {
    EXPECT_THROW(Ensemble({{1.0, PureState::basis({1}), {}}, {1.0, PureState::basis({1, 0}), {}}}),
                 DimensionError);
    EXPECT_THROW(Ensemble({{-0.1, PureState::basis({1}), {}}}), std::invalid_argument);
}

TEST(Ensemble, FidelityIsWeightedOverlap) {
    PureState plus(2, {{{1, 0}, kS}, {{0, 1}, kS}});
    Ensemble rho({{0.25, PureState::basis({1, 0}), {0}}, {0.75, plus, {1}}});
    EXPECT_NEAR(fidelity(rho, plus), 0.25 * 0.5 + 0.75, 1e-15);
    EXPECT_NEAR(rho.normalized().total_weight(), 1.0, 1e-15);
}

}  // namespace
}  // namespace fockopt
