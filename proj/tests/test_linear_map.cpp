// Copyright 2026 The cohsv Authors
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

#include <random>

#include <gtest/gtest.h>

#include "cohsv/circuits.hpp"
#include "cohsv/errors.hpp"
#include "cohsv/linear_map.hpp"
#include "test_helpers.hpp"

namespace cohsv {
namespace {

TEST(LinearMap, RejectsNonSymplecticMatrix) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 0) = 2.0;
    EXPECT_THROW(LinearMap(m, Vector::Zero(2)), DomainError);
    EXPECT_THROW(LinearMap(Matrix::Identity(2, 2), Vector::Zero(4)), UsageError);
}

TEST(LinearMap, AmplitudeMatrixBlocks) {
    Eigen::MatrixXcd u(1, 1);
    u(0, 0) = std::polar(1.0, 0.3);
    const LinearMap m = LinearMap::from_amplitude_matrix(u);
    EXPECT_NEAR(m.matrix()(0, 0), std::cos(0.3), 1e-15);
    EXPECT_NEAR(m.matrix()(0, 1), -std::sin(0.3), 1e-15);
    EXPECT_NEAR(m.matrix()(1, 0), std::sin(0.3), 1e-15);
    EXPECT_TRUE(m.is_passive());
}

TEST(LinearMap, NonUnitaryAmplitudeMatrixIsRejected) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2) * 1.1;
    EXPECT_THROW(LinearMap::from_amplitude_matrix(u), DomainError);
}

TEST(LinearMap, DisplacementShiftsMean) {
    Eigen::VectorXcd shift(1);
    shift(0) = {1.5, -2.0};
    const GaussianState s = apply(LinearMap::displacement(shift), GaussianState::vacuum(1));
    EXPECT_DOUBLE_EQ(s.mean()(0), 1.5);
    EXPECT_DOUBLE_EQ(s.mean()(1), -2.0);
    EXPECT_FALSE(LinearMap::displacement(shift).is_passive());
}

TEST(LinearMap, ThenAppliesInOrder) {
    const LinearMap a = phase_shifter(0, 0.4, 1);
    Eigen::VectorXcd shift(1);
    shift(0) = {1.0, 0.0};
    const LinearMap b = LinearMap::displacement(shift);
    const GaussianState s = coherent_state(1.0, 0.0);
    const GaussianState direct = apply(b, apply(a, s));
    const GaussianState composed = apply(a.then(b), s);
    EXPECT_TRUE(direct.mean().isApprox(composed.mean(), 1e-14));
    EXPECT_THROW(a.then(LinearMap::identity(2)), UsageError);
}

TEST(LinearMap, ExtendedLeavesNewModesAlone) {
    const LinearMap m = mzi(0.9).extended(1);
    EXPECT_EQ(m.n_modes(), 3);
    const GaussianState s =
        apply(m, tensor(tensor(coherent_state(1.0, 0.0), GaussianState::vacuum(1)), coherent_state(2.0, 0.5)));
    EXPECT_NEAR(s.mean_photon(2), 2.0, 1e-14);
    EXPECT_NEAR(s.mean_photon(0) + s.mean_photon(1), 1.0, 1e-14);
}

TEST(LinearMap, SymplecticClosureOverRandomCompositions) {
    std::mt19937 rng(1);
    LinearMap m = LinearMap::identity(3);
    for (int k = 0; k < 100; ++k) {
        const LinearMap step = (k % 2 == 0) ? LinearMap::from_amplitude_matrix(testing::random_unitary(3, rng))
                                            : testing::random_squeezer(3, rng);
        m = m.then(step);
    }
    const double scale = m.matrix().squaredNorm() / 6.0;
    EXPECT_LT(m.symplectic_defect(), 1e-10 * std::max(1.0, scale));
}

TEST(LinearMap, RandomPassiveMapsAreOrthogonal) {
    std::mt19937 rng(2);
    LinearMap m = LinearMap::identity(4);
    for (int k = 0; k < 50; ++k) m = m.then(LinearMap::from_amplitude_matrix(testing::random_unitary(4, rng)));
    EXPECT_TRUE(m.is_passive());
    EXPECT_LT(m.symplectic_defect(), 1e-10);
}

}  // namespace
}  // namespace cohsv
