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

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "cohsv/circuits.hpp"
#include "cohsv/detection.hpp"
#include "cohsv/errors.hpp"
#include "cohsv/fock_oracle.hpp"

namespace cohsv::fock {
namespace {

using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;

TEST(CoherentFock, VacuumAndMoments) {
    const FockVector v = coherent_fock(0.0, 0.0, 8);
    EXPECT_EQ(v.amplitudes()[0], Complex(1.0));
    EXPECT_EQ(v.leak(), 0.0);
    const FockVector c = coherent_fock(1.0, 0.0, 40);
    EXPECT_NEAR(c.parity(), std::exp(-2.0), 1e-12);
    EXPECT_NEAR(c.mean_number(), 1.0, 1e-12);
    EXPECT_LT(c.leak(), 1e-10);
}

TEST(CoherentFock, PhaseConvention) {
    const FockVector c = coherent_fock(2.0, 0.3, 30);
    const Complex ratio = c.amplitudes()[1] / c.amplitudes()[0];
    EXPECT_NEAR(std::abs(ratio - std::polar(std::sqrt(2.0), -0.3)), 0.0, 1e-14);
}

TEST(CoherentFock, TruncationIsReported) {
    EXPECT_THROW(coherent_fock(10.0, 0.0, 5), TruncationError);
    try {
        coherent_fock(10.0, 0.0, 5);
    } catch (const TruncationError& e) {
        EXPECT_GT(e.leak(), 0.9);
    }
}

TEST(CoherentFock, HeuristicCutoffLeakIsTiny) {
    for (double n : {0.0, 1.0, 4.0, 10.0, 50.0}) {
        EXPECT_LT(coherent_fock(n, 0.0, cutoff_heuristic(n)).leak(), 1e-10) << n;
    }
}

TEST(SqueezedFock, EvenSupport) {
    const FockVector v = squeezed_vacuum_fock(0.0, 8);
    EXPECT_EQ(v.amplitudes()[0], Complex(1.0));
    const FockVector s = squeezed_vacuum_fock(5.0, 120, 1e-3);
    for (int k = 1; k < s.cutoff(); k += 2) EXPECT_EQ(s.amplitudes()[k], Complex(0.0));
    EXPECT_NEAR(s.parity(), 1.0, 1e-15);
    for (int cutoff : {7, 12, 33}) {
        const FockVector t = squeezed_vacuum_fock(0.5, cutoff, 1.0);
        for (int k = 1; k < cutoff; k += 2) EXPECT_EQ(t.amplitudes()[k], Complex(0.0));
    }
}

TEST(SqueezedFock, MeanNumber) {
    EXPECT_NEAR(squeezed_vacuum_fock(1.0, 60, 1e-6).mean_number(), 1.0, 1e-8);
    EXPECT_NEAR(squeezed_vacuum_fock(1.0, squeezed_cutoff(1.0, 1e-16)).mean_number(), 1.0, 1e-12);
}

TEST(SqueezedFock, AmplitudeFormula) {
    const double n_s = 2.0;
    const double r = std::asinh(std::sqrt(n_s));
    const FockVector s = squeezed_vacuum_fock(n_s, 40, 1.0);
    for (int m = 0; 2 * m < 40 && m < 10; ++m) {
        const double expected = std::pow(-std::tanh(r), m) * std::sqrt(std::tgamma(2 * m + 1.0)) /
                                (std::pow(2.0, m) * std::tgamma(m + 1.0) * std::sqrt(std::cosh(r)));
        EXPECT_NEAR(s.amplitudes()[2 * m].real(), expected, 1e-14);
    }
}

TEST(Cutoff, Heuristic) {
    EXPECT_EQ(cutoff_heuristic(0.0), 30);
    EXPECT_EQ(cutoff_heuristic(1.0), 36);
    EXPECT_NEAR(cutoff_heuristic(1.0), 35, 1);
}

// The heuristic is adequate for coherent light but not for strongly squeezed
// light; squeezed_cutoff is computed from the exact tail instead.
TEST(Cutoff, SqueezedTailAtHeuristic) {
    EXPECT_LT(squeezed_tail(1.0, cutoff_heuristic(1.0)), 1e-6);
    EXPECT_GT(squeezed_tail(10.0, cutoff_heuristic(10.0)), 1e-8);
    for (double n : {0.5, 2.0, 10.0}) {
        const int c = squeezed_cutoff(n, 1e-8);
        EXPECT_LT(squeezed_tail(n, c), 1e-8);
        EXPECT_LT(squeezed_vacuum_fock(n, c).leak(), 1e-8);
        EXPECT_GE(squeezed_tail(n, c - 2), 1e-8);
    }
}

TEST(BeamSplitterFock, SinglePhoton) {
    const TwoModeFock out = apply_bs_fock(TwoModeFock::basis(1, 0, 4));
    EXPECT_NEAR(std::abs(out.amplitude(1, 0) - 1 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude(0, 1) - 1.0i / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(BeamSplitterFock, HongOuMandel) {
    const TwoModeFock out = apply_bs_fock(TwoModeFock::basis(1, 1, 5));
    EXPECT_NEAR(std::abs(out.amplitude(1, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude(2, 0) - 1.0i / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude(0, 2) - 1.0i / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(PhaseFock, ActsOnChosenMode) {
    const TwoModeFock out = apply_phase_fock(TwoModeFock::basis(0, 1, 3), 1, 0.7);
    EXPECT_NEAR(std::abs(out.amplitude(0, 1) - std::exp(-0.7i)), 0.0, 1e-15);
    const TwoModeFock same = apply_phase_fock(TwoModeFock::basis(0, 1, 3), 0, 0.7);
    EXPECT_EQ(same.amplitude(0, 1), Complex(1.0));
}

TEST(SectorUnitary, BlocksAreUnitaryAtHighPhotonNumber) {
    const SectorUnitary u(beam_splitter_amplitude(), 201);
    for (int n : {1, 50, 120, 200}) {
        const Eigen::MatrixXcd& b = u.sector(n);
        EXPECT_LT((b.adjoint() * b - Eigen::MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff(), 1e-12) << n;
    }
}

TEST(SectorUnitary, SinglePhotonSectorIsTheAmplitudeMatrix) {
    const Eigen::Matrix2cd m = mzi_amplitude(1.3);
    const SectorUnitary u(m, 3);
    // Sector 1 basis: |0,1> (q = 0) and |1,0> (q = 1).
    EXPECT_NEAR(std::abs(u.sector(1)(1, 1) - m(0, 0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(u.sector(1)(0, 1) - m(1, 0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(u.sector(1)(1, 0) - m(0, 1)), 0.0, 1e-14);
    EXPECT_THROW(SectorUnitary(Eigen::Matrix2cd::Identity() * 2.0, 3), DomainError);
}

TEST(Propagation, NormPreservedThroughSixElements) {
    TwoModeFock s = product(coherent_fock(2.0, 0.3, 40), squeezed_vacuum_fock(1.0, 80));
    const double n0 = s.norm2();
    s = apply_bs_fock(s);
    s = apply_phase_fock(s, 1, 0.4);
    s = apply_bs_fock(s);
    s = apply_phase_fock(s, 0, 1.1);
    s = apply_bs_fock(s);
    s = apply_phase_fock(s, 1, -2.0);
    EXPECT_NEAR(s.norm2(), n0, 1e-10);
}

TEST(Observables, VacuumAndPoisson) {
    const TwoModeFock vac = TwoModeFock::basis(0, 0, 4);
    EXPECT_DOUBLE_EQ(parity_fock(vac, 0).value, 1.0);
    const NumberMoments m = number_moments_fock(vac);
    EXPECT_EQ(m.mean_a, 0.0);
    EXPECT_EQ(m.mean_b, 0.0);
    EXPECT_EQ(m.var_difference, 0.0);
    const NumberMoments p = number_moments_fock(product(coherent_fock(2.0, 0.0, 40), coherent_fock(2.0, 0.0, 40)));
    EXPECT_NEAR(p.var_difference, 4.0, 1e-10);
    EXPECT_FALSE(p.flagged());
}

TEST(Observables, MziParityMatchesClosedForm) {
    const TwoModeFock in = product(coherent_fock(1.0, 0.0, 40), squeezed_vacuum_fock(1.0, squeezed_cutoff(1.0, 1e-14)));
    EXPECT_NEAR(parity_fock(apply_mzi_fock(in, 0.3), 0).value, parity_closed(1, 1, 0, 0.3), 1e-6);
}

TEST(Observables, LeakIsFlagged) {
    const TwoModeFock in = product(coherent_fock(4.0, 0.0, 12, 1.0), coherent_fock(0.0, 0.0, 2));
    EXPECT_TRUE(parity_fock(in, 0).flagged());
    EXPECT_TRUE(number_moments_fock(in).flagged());
}

TEST(Product, TruncatedCutoffTracksDroppedMass) {
    const FockVector a = coherent_fock(1.0, 0.0, 30);
    const FockVector b = coherent_fock(1.0, 0.0, 30);
    const TwoModeFock t = product(a, b, 5);
    EXPECT_NEAR(t.leak() + t.norm2(), 1.0, 1e-12);
    EXPECT_THROW(TwoModeFock(Eigen::MatrixXcd::Ones(3, 3), 0.0), UsageError);
}

TEST(Convergence, WiderCutoffChangesNothing) {
    for (double n : {0.5, 2.0}) {
        const int cc = cutoff_heuristic(n);
        const int cs = std::max(cutoff_heuristic(n), squeezed_cutoff(n, 1e-16));
        const auto base = apply_mzi_fock(product(coherent_fock(n, 0.0, cc), squeezed_vacuum_fock(n, cs), cs), 1.6);
        const auto wide =
            apply_mzi_fock(product(coherent_fock(n, 0.0, cc + 20), squeezed_vacuum_fock(n, cs + 20), cs + 20), 1.6);
        EXPECT_NEAR(parity_fock(base, 0).value, parity_fock(wide, 0).value, 1e-10);
        EXPECT_NEAR(number_moments_fock(base).var_difference, number_moments_fock(wide).var_difference, 1e-9);
    }
}

}  // namespace
}  // namespace cohsv::fock
