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

#ifndef COHSV_GAUSSIAN_STATE_HPP
#define COHSV_GAUSSIAN_STATE_HPP

#include <Eigen/Dense>
#include <span>

namespace cohsv {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Phase-space conventions used throughout the library:
//  * quadratures are interleaved (x1, p1, x2, p2, ...), with the complex
//    amplitude of mode k equal to x_k + i p_k;
//  * the vacuum covariance is I/4, so a single-mode vacuum Wigner function
//    is (2/pi) exp(-2|alpha|^2).

/// Standard block-diagonal symplectic form with 2x2 blocks [[0, 1], [-1, 0]].
Matrix symplectic_form(int n_modes);

/// A multimode Gaussian state, described by the mean and covariance of its
/// Wigner function. Instances are immutable and always physical: the
/// constructor rejects covariances that are asymmetric, not positive
/// definite, or that violate the uncertainty bound.
class GaussianState {
   public:
    GaussianState(Vector mean, Matrix cov);

    static GaussianState vacuum(int n_modes);

    int n_modes() const { return static_cast<int>(mean_.size() / 2); }
    const Vector& mean() const { return mean_; }
    const Matrix& cov() const { return cov_; }

    /// Physical mean photon number <a_k^dag a_k> of one mode.
    double mean_photon(int mode) const;
    double total_mean_photon() const;

   private:
    Vector mean_;
    Matrix cov_;
};

/// Coherent state with amplitude sqrt(n_c) exp(-i phi_c).
GaussianState coherent_state(double n_c, double phi_c);

/// Squeezed vacuum with r = asinh(sqrt(n_s)) and squeezing phase fixed to 0
/// (the x quadrature is squeezed).
GaussianState squeezed_vacuum(double n_s);

/// Squeezing parameter r for a squeezed vacuum carrying n_s photons.
double squeezing_parameter(double n_s);

/// Direct sum of two states: modes of `a` come first.
GaussianState tensor(const GaussianState& a, const GaussianState& b);

/// Wigner function value at a phase-space point of length 2 * n_modes.
/// Throws NumericalError when the covariance condition number exceeds 1e12.
double wigner_at(const GaussianState& s, std::span<const double> point);
double wigner_at(const GaussianState& s, const Vector& point);

/// Restriction of the state to an ordered subset of its modes.
GaussianState marginal(const GaussianState& s, std::span<const int> modes);
GaussianState marginal(const GaussianState& s, std::initializer_list<int> modes);

/// Symmetrically ordered number expectation <{a^dag a}_s>; the physical
/// photon number is this value minus 1/2.
double symmetric_number_mean(const GaussianState& s, int mode);

struct IntensityMoments {
    double mean;
    double variance;
};

/// Mean and variance of the photon-number difference n_i - n_j, computed
/// exactly from the Gaussian fourth moments.
IntensityMoments intensity_difference_moments(const GaussianState& s, int i, int j);

/// E[z_a z_b z_c z_d] for a Gaussian vector z with the given mean and
/// covariance, by explicit enumeration of Isserlis pairings.
double gaussian_fourth_moment(const Vector& mean, const Matrix& cov, int a, int b, int c, int d);

}  // namespace cohsv

#endif  // COHSV_GAUSSIAN_STATE_HPP
