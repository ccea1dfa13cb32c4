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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cohsv/circuits.hpp"
#include "cohsv/errors.hpp"
#include "cohsv/fock_oracle.hpp"
#include "cohsv/gaussian_state.hpp"
#include "test_helpers.hpp"

namespace cohsv {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(CoherentState, VacuumAtZeroPhotons) {
    const GaussianState s = coherent_state(0.0, 1.3);
    EXPECT_DOUBLE_EQ(s.mean()(0), 0.0);
    EXPECT_DOUBLE_EQ(s.mean()(1), 0.0);
    EXPECT_TRUE(s.cov().isApprox(Matrix::Identity(2, 2) / 4.0));
}

TEST(CoherentState, RealAmplitude) {
    const GaussianState s = coherent_state(10.0, 0.0);
    EXPECT_NEAR(s.mean()(0), std::sqrt(10.0), 1e-15);
    EXPECT_NEAR(s.mean()(1), 0.0, 1e-15);
    EXPECT_TRUE(s.cov().isApprox(Matrix::Identity(2, 2) / 4.0));
    EXPECT_NEAR(s.mean_photon(0), 10.0, 1e-12);
}

TEST(CoherentState, PhaseRotatesAmplitudeClockwise) {
    const GaussianState s = coherent_state(5.0, kPi / 2.0);
    EXPECT_NEAR(s.mean()(0), 0.0, 1e-15);
    EXPECT_NEAR(s.mean()(1), -std::sqrt(5.0), 1e-15);
}

TEST(CoherentState, RejectsNegativeOrNonFinite) {
    EXPECT_THROW(coherent_state(-1.0, 0.0), DomainError);
    EXPECT_THROW(coherent_state(NAN, 0.0), DomainError);
    EXPECT_THROW(coherent_state(INFINITY, 0.0), DomainError);
}

TEST(SqueezedVacuum, ZeroPhotonsIsVacuum) {
    const GaussianState s = squeezed_vacuum(0.0);
    EXPECT_TRUE(s.cov().isApprox(Matrix::Identity(2, 2) / 4.0));
}

TEST(SqueezedVacuum, TenPhotons) {
    const double r = squeezing_parameter(10.0);
    EXPECT_NEAR(r, std::log(std::sqrt(10.0) + std::sqrt(11.0)), 1e-12);
    const GaussianState s = squeezed_vacuum(10.0);
    EXPECT_NEAR(s.cov()(0, 0), std::exp(-2 * r) / 4.0, 1e-15);
    EXPECT_NEAR(s.cov()(1, 1), std::exp(2 * r) / 4.0, 1e-12);
    EXPECT_NEAR(s.mean_photon(0), 10.0, 1e-12);
}

TEST(SqueezedVacuum, IsPure) {
    const GaussianState s = squeezed_vacuum(5.0);
    EXPECT_NEAR(s.cov()(0, 0) * s.cov()(1, 1), 1.0 / 16.0, 1e-15);
    EXPECT_THROW(squeezed_vacuum(-0.1), DomainError);
}

TEST(GaussianStateInvariants, RejectsUnphysicalCovariance) {
    EXPECT_THROW(GaussianState(Vector::Zero(2), Matrix::Identity(2, 2) / 8.0), DomainError);
    Matrix asym = Matrix::Identity(2, 2) / 4.0;
    asym(0, 1) = 0.01;
    EXPECT_THROW(GaussianState(Vector::Zero(2), asym), DomainError);
    EXPECT_THROW(GaussianState(Vector::Zero(3), Matrix::Identity(3, 3)), UsageError);
    EXPECT_THROW(GaussianState(Vector::Zero(2), -Matrix::Identity(2, 2)), DomainError);
}

TEST(Tensor, VacuumPair) {
    const GaussianState s = tensor(GaussianState::vacuum(1), GaussianState::vacuum(1));
    EXPECT_EQ(s.n_modes(), 2);
    EXPECT_TRUE(s.cov().isApprox(Matrix::Identity(4, 4) / 4.0));
}

TEST(Tensor, CoherentTimesSqueezedInput) {
    const GaussianState a = coherent_state(5.0, 0.0);
    const GaussianState b = squeezed_vacuum(5.0);
    const GaussianState s = tensor(a, b);
    EXPECT_NEAR(s.total_mean_photon(), 10.0, 1e-12);
    EXPECT_TRUE(s.cov().block(0, 0, 2, 2).isApprox(a.cov()));
    EXPECT_TRUE(s.cov().block(2, 2, 2, 2).isApprox(b.cov()));
    EXPECT_EQ(s.cov().block(0, 2, 2, 2).norm(), 0.0);
}

TEST(Apply, IdentityLeavesStateUnchanged) {
    const GaussianState s = tensor(coherent_state(2.0, 0.4), squeezed_vacuum(1.5));
    const GaussianState t = apply(LinearMap::identity(2), s);
    EXPECT_EQ(t.mean(), s.mean());
    EXPECT_EQ(t.cov(), s.cov());
}

TEST(Apply, BeamSplitterSplitsEnergy) {
    const GaussianState s = apply(beam_splitter_5050(0, 1), tensor(coherent_state(2.0, 0.0), GaussianState::vacuum(1)));
    EXPECT_NEAR(s.mean_photon(0), 1.0, 1e-14);
    EXPECT_NEAR(s.mean_photon(1), 1.0, 1e-14);
}

TEST(Apply, DimensionMismatchIsUsageError) {
    EXPECT_THROW(apply(mzi(0.3), coherent_state(1.0, 0.0)), UsageError);
}

// Wigner function of the MZI output, written directly in terms of the
// output amplitudes.
double output_wigner_direct(double n_c, double n_s, double phi_c, double phi, std::complex<double> a,
                            std::complex<double> b) {
    using C = std::complex<double>;
    const double r = std::asinh(std::sqrt(n_s));
    const C alpha0 = std::polar(std::sqrt(n_c), -phi_c);
    const double s = std::sin(phi / 2), c = std::cos(phi / 2);
    const C i(0.0, 1.0);
    const C first = i * std::exp(i * (phi / 2)) * (a * s + b * c) + alpha0;
    const C second = a * c - b * s;
    return 4.0 / (kPi * kPi) * std::exp(-2.0 * std::norm(first)) *
           std::exp(-2.0 * std::norm(second) * std::cosh(2 * r)) *
           std::exp(2.0 * std::real(std::exp(i * phi) * second * second) * std::sinh(2 * r));
}

TEST(Apply, MziOutputMatchesDirectWigner) {
    const double n_c = 3.0, n_s = 2.0, phi_c = 0.3;
    const std::complex<double> probes[5][2] = {
        {{0, 0}, {0, 0}}, {{0.5, -0.2}, {0.1, 0.3}}, {{-1.2, 0.4}, {0.7, -0.5}}, {{0.2, 1.1}, {-0.3, 0.0}}, {{1.0, 1.0}, {1.0, -1.0}}};
    for (double phi : {0.0, 0.4, 1.7, 3.0}) {
        const GaussianState out = apply(mzi(phi), tensor(coherent_state(n_c, phi_c), squeezed_vacuum(n_s)));
        for (const auto& probe : probes) {
            Vector q(4);
            q << probe[0].real(), probe[0].imag(), probe[1].real(), probe[1].imag();
            const double expected = output_wigner_direct(n_c, n_s, phi_c, phi, probe[0], probe[1]);
            EXPECT_NEAR(wigner_at(out, q), expected, 1e-12 * std::max(1.0, expected)) << "phi=" << phi;
        }
    }
}

TEST(WignerAt, VacuumAndCoherentValues) {
    EXPECT_NEAR(wigner_at(GaussianState::vacuum(1), Vector::Zero(2)), 2.0 / kPi, 1e-15);
    EXPECT_NEAR(wigner_at(GaussianState::vacuum(2), Vector::Zero(4)), 4.0 / (kPi * kPi), 1e-15);
    const GaussianState c = coherent_state(1.0, 0.0);
    EXPECT_NEAR(wigner_at(c, c.mean()), 2.0 / kPi, 1e-15);
    EXPECT_NEAR(wigner_at(c, Vector::Zero(2)), 2.0 / kPi * std::exp(-2.0), 1e-15);
}

TEST(WignerAt, RejectsBadPoints) {
    EXPECT_THROW(wigner_at(GaussianState::vacuum(1), Vector::Zero(4)), UsageError);
    Vector p(2);
    p << NAN, 0.0;
    EXPECT_THROW(wigner_at(GaussianState::vacuum(1), p), DomainError);
}

TEST(WignerAt, IllConditionedCovarianceIsNumericalError) {
    // n_s = 1e7 gives a condition number of about 1.6e15.
    EXPECT_THROW(wigner_at(squeezed_vacuum(1e7), Vector::Zero(2)), NumericalError);
}

TEST(Marginal, KeepsBlocks) {
    const GaussianState v = marginal(GaussianState::vacuum(2), {0});
    EXPECT_EQ(v.n_modes(), 1);
    EXPECT_TRUE(v.cov().isApprox(Matrix::Identity(2, 2) / 4.0));
    const GaussianState a = coherent_state(2.0, 0.7);
    const GaussianState m = marginal(tensor(a, squeezed_vacuum(3.0)), {0});
    EXPECT_EQ(m.mean(), a.mean());
    EXPECT_EQ(m.cov(), a.cov());
}

TEST(Marginal, BadIndicesAreUsageErrors) {
    const GaussianState s = GaussianState::vacuum(2);
    EXPECT_THROW(marginal(s, {2}), UsageError);
    EXPECT_THROW(marginal(s, {0, 0}), UsageError);
    EXPECT_THROW(marginal(s, std::span<const int>{}), UsageError);
}

TEST(Marginal, MziOutputPhotonNumberMatchesFock) {
    const GaussianState out = apply(mzi(kPi / 2.0), tensor(coherent_state(1.0, 0.0), squeezed_vacuum(1.0)));
    const GaussianState af = marginal(out, {0});
    const auto f = fock::apply_mzi_fock(
        fock::product(fock::coherent_fock(1.0, 0.0, 60), fock::squeezed_vacuum_fock(1.0, 100), 100), kPi / 2.0);
    EXPECT_NEAR(symmetric_number_mean(af, 0) - 0.5, fock::number_moments_fock(f).mean_a, 1e-8);
}

// Integrates the joint Wigner function over the second mode with a 2D
// trapezoid rule and compares with the marginal.
TEST(Marginal, AgreesWithNumericalIntegration) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        const LinearMap u = LinearMap::from_amplitude_matrix(testing::random_unitary(2, rng));
        const GaussianState s = apply(u, tensor(coherent_state(0.8, 0.3 * trial), squeezed_vacuum(0.6)));
        const GaussianState m = marginal(s, {0});
        Vector q(4);
        q(0) = 0.2 - 0.1 * trial;
        q(1) = -0.3 + 0.2 * trial;
        const int n = 241;
        const double lo = -5.0, hi = 5.0, h = (hi - lo) / (n - 1);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                q(2) = lo + h * i;
                q(3) = lo + h * j;
                const double w = (i == 0 || i == n - 1 ? 0.5 : 1.0) * (j == 0 || j == n - 1 ? 0.5 : 1.0);
                sum += w * wigner_at(s, q);
            }
        }
        EXPECT_NEAR(sum * h * h, wigner_at(m, q.head(2)), 1e-6);
    }
}

TEST(SymmetricNumberMean, SpecValues) {
    EXPECT_NEAR(symmetric_number_mean(GaussianState::vacuum(1), 0), 0.5, 1e-15);
    EXPECT_NEAR(symmetric_number_mean(coherent_state(5.0, 0.0), 0), 5.5, 1e-14);
    EXPECT_NEAR(symmetric_number_mean(squeezed_vacuum(5.0), 0), 5.5, 1e-12);
}

TEST(SymmetricNumberMean, MatchesFockNumber) {
    std::mt19937 rng(11);
    for (double n_c : {0.0, 1.0, 2.0}) {
        for (double n_s : {0.0, 0.5, 2.0}) {
            const Eigen::MatrixXcd u = testing::random_unitary(2, rng);
            const GaussianState g =
                apply(LinearMap::from_amplitude_matrix(u), tensor(coherent_state(n_c, 0.2), squeezed_vacuum(n_s)));
            const auto a = fock::coherent_fock(n_c, 0.2, 60);
            const auto b = fock::squeezed_vacuum_fock(n_s, fock::squeezed_cutoff(n_s, 1e-16) + 2);
            const auto input = fock::product(a, b, std::max(a.cutoff(), b.cutoff()));
            const auto out = fock::SectorUnitary(u, input.cutoff()).apply(input);
            const auto m = fock::number_moments_fock(out);
            EXPECT_NEAR(symmetric_number_mean(g, 0) - 0.5, m.mean_a, 1e-8);
            EXPECT_NEAR(symmetric_number_mean(g, 1) - 0.5, m.mean_b, 1e-8);
        }
    }
}

TEST(IntensityDifference, VacuumHasNoFluctuation) {
    const IntensityMoments m = intensity_difference_moments(GaussianState::vacuum(2), 0, 1);
    EXPECT_NEAR(m.mean, 0.0, 1e-15);
    EXPECT_NEAR(m.variance, 0.0, 1e-12);
}

TEST(IntensityDifference, IndependentCoherentModesArePoissonian) {
    const GaussianState s = tensor(coherent_state(5.0, 0.0), coherent_state(5.0, 0.0));
    const IntensityMoments m = intensity_difference_moments(s, 0, 1);
    EXPECT_NEAR(m.mean, 0.0, 1e-13);
    EXPECT_NEAR(m.variance, 10.0, 1e-12);
    const auto f = fock::number_moments_fock(
        fock::product(fock::coherent_fock(5.0, 0.0, 60), fock::coherent_fock(5.0, 0.0, 60)));
    EXPECT_NEAR(f.var_difference, 10.0, 1e-9);
}

TEST(IntensityDifference, SameModeIsUsageError) {
    EXPECT_THROW(intensity_difference_moments(GaussianState::vacuum(2), 1, 1), UsageError);
    EXPECT_THROW(intensity_difference_moments(GaussianState::vacuum(2), 0, 2), UsageError);
}

TEST(IntensityDifference, MatchesFockThroughRandomPassiveMaps) {
    std::mt19937 rng(3);
    for (double n_c : {0.5, 2.0}) {
        for (double n_s : {0.5, 1.0, 2.0}) {
            const Eigen::MatrixXcd u = testing::random_unitary(2, rng);
            const GaussianState g =
                apply(LinearMap::from_amplitude_matrix(u), tensor(coherent_state(n_c, 0.0), squeezed_vacuum(n_s)));
            const auto a = fock::coherent_fock(n_c, 0.0, fock::cutoff_heuristic(n_c));
            const auto b = fock::squeezed_vacuum_fock(n_s, fock::squeezed_cutoff(n_s, 1e-16));
            const auto input = fock::product(a, b, std::max(a.cutoff(), b.cutoff()));
            const auto f = fock::number_moments_fock(fock::SectorUnitary(u, input.cutoff()).apply(input));
            const IntensityMoments m = intensity_difference_moments(g, 0, 1);
            EXPECT_NEAR(m.mean, f.mean_a - f.mean_b, 1e-8);
            EXPECT_NEAR(m.variance, f.var_difference, 1e-6);
        }
    }
}

TEST(FourthMoment, MatchesIsserlisForCentredVariables) {
    Matrix cov(2, 2);
    cov << 2.0, 0.5, 0.5, 1.0;
    const Vector mean = Vector::Zero(2);
    EXPECT_NEAR(gaussian_fourth_moment(mean, cov, 0, 0, 0, 0), 3 * 4.0, 1e-14);
    EXPECT_NEAR(gaussian_fourth_moment(mean, cov, 0, 0, 1, 1), 2.0 * 1.0 + 2 * 0.25, 1e-14);
    Vector shifted(2);
    shifted << 1.0, 0.0;
    // E[(1 + z)^4] = 1 + 6 var + 3 var^2.
    EXPECT_NEAR(gaussian_fourth_moment(shifted, cov, 0, 0, 0, 0), 1 + 6 * 2.0 + 3 * 4.0, 1e-13);
}

TEST(Properties, PassiveMapsConserveEnergyAndPurity) {
    std::mt19937 rng(5);
    const GaussianState s = tensor(coherent_state(3.0, 0.9), squeezed_vacuum(4.0));
    for (int trial = 0; trial < 20; ++trial) {
        const GaussianState t = apply(LinearMap::from_amplitude_matrix(testing::random_unitary(2, rng)), s);
        EXPECT_NEAR(t.total_mean_photon(), s.total_mean_photon(), 1e-10 * s.total_mean_photon());
        EXPECT_NEAR(t.cov().determinant(), s.cov().determinant(), 1e-10 * s.cov().determinant());
    }
}

TEST(Properties, SymplecticApplyPreservesDeterminant) {
    std::mt19937 rng(9);
    GaussianState s = tensor(coherent_state(1.0, 0.0), squeezed_vacuum(2.0));
    const double det0 = s.cov().determinant();
    for (int trial = 0; trial < 30; ++trial) {
        s = apply(testing::random_squeezer(2, rng), s);
        s = apply(LinearMap::from_amplitude_matrix(testing::random_unitary(2, rng)), s);
    }
    EXPECT_NEAR(s.cov().determinant(), det0, 1e-10 * det0);
}

}  // namespace
}  // namespace cohsv
