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

#include "cohsv/gaussian_state.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cohsv/errors.hpp"

namespace cohsv {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kUncertaintyTol = 1e-10;
constexpr double kMaxCondition = 1e12;

void check_mode(const GaussianState& s, int mode) {
    if (mode < 0 || mode >= s.n_modes()) {
        throw UsageError("mode index " + std::to_string(mode) + " out of range for a " +
                         std::to_string(s.n_modes()) + "-mode state");
    }
}

void check_photon_number(double n, const char* name) {
    if (!std::isfinite(n) || n < 0.0) {
        throw DomainError(std::string(name) + " must be finite and >= 0, got " + std::to_string(n));
    }
}

}  // namespace

Matrix symplectic_form(int n_modes) {
    Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

GaussianState::GaussianState(Vector mean, Matrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
    const auto dim = mean_.size();
    if (dim == 0 || dim % 2 != 0) {
        throw UsageError("mean vector must have even, non-zero length");
    }
    if (cov_.rows() != dim || cov_.cols() != dim) {
        throw UsageError("covariance must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!mean_.allFinite() || !cov_.allFinite()) {
        throw DomainError("state parameters must be finite");
    }
    const double asym = (cov_ - cov_.transpose()).norm();
    if (asym > kSymmetryTol * std::max(1.0, cov_.norm())) {
        throw DomainError("covariance is not symmetric (defect " + std::to_string(asym) + ")");
    }
    cov_ = 0.5 * (cov_ + cov_.transpose());

    if (Eigen::LLT<Matrix>(cov_).info() != Eigen::Success) {
        throw DomainError("covariance is not positive definite");
    }
    const int n = static_cast<int>(dim / 2);
    Eigen::MatrixXcd bound = cov_.cast<std::complex<double>>();
    bound += std::complex<double>(0.0, 0.25) * symplectic_form(n).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(bound, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kUncertaintyTol) {
        throw DomainError("covariance violates the uncertainty bound (min eigenvalue " +
                          std::to_string(eig.eigenvalues().minCoeff()) + ")");
    }
}

GaussianState GaussianState::vacuum(int n_modes) {
    if (n_modes <= 0) {
        throw UsageError("a state needs at least one mode");
    }
    return GaussianState(Vector::Zero(2 * n_modes), 0.25 * Matrix::Identity(2 * n_modes, 2 * n_modes));
}

double GaussianState::mean_photon(int mode) const {
    check_mode(*this, mode);
    return symmetric_number_mean(*this, mode) - 0.5;
}

double GaussianState::total_mean_photon() const {
    double total = 0.0;
    for (int k = 0; k < n_modes(); ++k) {
        total += mean_photon(k);
    }
    return total;
}

double squeezing_parameter(double n_s) {
    check_photon_number(n_s, "n_s");
    return std::asinh(std::sqrt(n_s));
}

GaussianState coherent_state(double n_c, double phi_c) {
    check_photon_number(n_c, "n_c");
    if (!std::isfinite(phi_c)) {
        throw DomainError("phi_c must be finite");
    }
    const double amp = std::sqrt(n_c);
    Vector mean(2);
    mean << amp * std::cos(phi_c), -amp * std::sin(phi_c);
    return GaussianState(mean, 0.25 * Matrix::Identity(2, 2));
}

GaussianState squeezed_vacuum(double n_s) {
    const double r = squeezing_parameter(n_s);
    Matrix cov = Matrix::Zero(2, 2);
    cov(0, 0) = 0.25 * std::exp(-2.0 * r);
    cov(1, 1) = 0.25 * std::exp(2.0 * r);
    return GaussianState(Vector::Zero(2), cov);
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
    const auto na = a.mean().size();
    const auto nb = b.mean().size();
    Vector mean(na + nb);
    mean << a.mean(), b.mean();
    Matrix cov = Matrix::Zero(na + nb, na + nb);
    cov.topLeftCorner(na, na) = a.cov();
    cov.bottomRightCorner(nb, nb) = b.cov();
    return GaussianState(mean, cov);
}

double wigner_at(const GaussianState& s, const Vector& point) {
    const auto dim = s.mean().size();
    if (point.size() != dim) {
        throw UsageError("phase-space point must have length " + std::to_string(dim));
    }
    if (!point.allFinite()) {
        throw DomainError("phase-space point must be finite");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(s.cov(), Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > kMaxCondition) {
        throw NumericalError("covariance condition number " + std::to_string(hi / lo) +
                             " exceeds 1e12; Wigner value would be unreliable");
    }
    Eigen::LLT<Matrix> llt(s.cov());
    if (llt.info() != Eigen::Success) {
        throw NumericalError("Cholesky factorization of the covariance failed");
    }
    const Vector u = llt.matrixL().solve(point - s.mean());
    const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const int n = s.n_modes();
    const double log_norm = -n * std::log(2.0 * std::numbers::pi) - 0.5 * log_det;
    return std::exp(log_norm - 0.5 * u.squaredNorm());
}

double wigner_at(const GaussianState& s, std::span<const double> point) {
    return wigner_at(s, Vector(Eigen::Map<const Vector>(point.data(), static_cast<Eigen::Index>(point.size()))));
}

GaussianState marginal(const GaussianState& s, std::span<const int> modes) {
    if (modes.empty()) {
        throw UsageError("marginal needs at least one mode");
    }
    std::vector<bool> seen(s.n_modes(), false);
    for (int m : modes) {
        check_mode(s, m);
        if (seen[m]) {
            throw UsageError("duplicate mode index " + std::to_string(m) + " in marginal");
        }
        seen[m] = true;
    }
    const auto k = static_cast<Eigen::Index>(modes.size());
    Vector mean(2 * k);
    Matrix cov(2 * k, 2 * k);
    for (Eigen::Index a = 0; a < k; ++a) {
        mean.segment<2>(2 * a) = s.mean().segment<2>(2 * modes[a]);
        for (Eigen::Index b = 0; b < k; ++b) {
            cov.block<2, 2>(2 * a, 2 * b) = s.cov().block<2, 2>(2 * modes[a], 2 * modes[b]);
        }
    }
    return GaussianState(mean, cov);
}

GaussianState marginal(const GaussianState& s, std::initializer_list<int> modes) {
    return marginal(s, std::span<const int>(modes.begin(), modes.size()));
}

double symmetric_number_mean(const GaussianState& s, int mode) {
    check_mode(s, mode);
    const int x = 2 * mode;
    const int p = x + 1;
    return s.mean()(x) * s.mean()(x) + s.mean()(p) * s.mean()(p) + s.cov()(x, x) + s.cov()(p, p);
}

double gaussian_fourth_moment(const Vector& mean, const Matrix& cov, int a, int b, int c, int d) {
    const std::array<int, 4> idx{a, b, c, d};
    // Write z = m + y with y centred. Odd moments of y vanish, so only the
    // terms with zero, two or four centred factors survive.
    double total = mean(a) * mean(b) * mean(c) * mean(d);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            double rest = 1.0;
            for (int k = 0; k < 4; ++k) {
                if (k != i && k != j) {
                    rest *= mean(idx[k]);
                }
            }
            total += cov(idx[i], idx[j]) * rest;
        }
    }
    total += cov(a, b) * cov(c, d) + cov(a, c) * cov(b, d) + cov(a, d) * cov(b, c);
    return total;
}

IntensityMoments intensity_difference_moments(const GaussianState& s, int i, int j) {
    check_mode(s, i);
    check_mode(s, j);
    if (i == j) {
        throw UsageError("intensity difference needs two distinct modes");
    }
    const std::array<int, 4> q{2 * i, 2 * i + 1, 2 * j, 2 * j + 1};
    const std::array<double, 4> w{1.0, 1.0, -1.0, -1.0};
    const Vector& m = s.mean();
    const Matrix& c = s.cov();

    double first = 0.0;
    for (int k = 0; k < 4; ++k) {
        first += w[k] * (c(q[k], q[k]) + m(q[k]) * m(q[k]));
    }
    double second = 0.0;
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            second += w[k] * w[l] * gaussian_fourth_moment(m, c, q[k], q[k], q[l], q[l]);
        }
    }
    // The ordering corrections of <n_i> and <n_j> cancel in the mean; in
    // the second moment they leave a constant -1/2.
    return {first, second - first * first - 0.5};
}

}  // namespace cohsv
