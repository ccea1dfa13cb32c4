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

#include "cohsv/linear_map.hpp"

#include <string>

#include "cohsv/errors.hpp"

namespace cohsv {

namespace {
constexpr double kSymplecticTol = 1e-10;
}

LinearMap::LinearMap(Matrix matrix, Vector displacement)
    : matrix_(std::move(matrix)), displacement_(std::move(displacement)) {
    const auto dim = displacement_.size();
    if (dim == 0 || dim % 2 != 0) {
        throw UsageError("displacement must have even, non-zero length");
    }
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw UsageError("map matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!matrix_.allFinite() || !displacement_.allFinite()) {
        throw DomainError("map entries must be finite");
    }
    // Scale the tolerance with the matrix size so strongly active maps are
    // judged relative to their magnitude.
    const double scale = std::max(1.0, matrix_.squaredNorm() / static_cast<double>(dim));
    if (symplectic_defect() > kSymplecticTol * scale) {
        throw DomainError("map matrix is not symplectic (defect " + std::to_string(symplectic_defect()) + ")");
    }
}

LinearMap LinearMap::identity(int n_modes) {
    if (n_modes <= 0) {
        throw UsageError("a map needs at least one mode");
    }
    return LinearMap(Matrix::Identity(2 * n_modes, 2 * n_modes), Vector::Zero(2 * n_modes));
}

LinearMap LinearMap::from_amplitude_matrix(const Eigen::MatrixXcd& u) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw UsageError("scattering matrix must be square and non-empty");
    }
    const auto n = u.rows();
    Matrix s(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double re = u(j, k).real();
            const double im = u(j, k).imag();
            s.block<2, 2>(2 * j, 2 * k) << re, -im, im, re;
        }
    }
    return LinearMap(s, Vector::Zero(2 * n));
}

LinearMap LinearMap::displacement(const Eigen::VectorXcd& shift) {
    const auto n = shift.size();
    Vector d(2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        d(2 * k) = shift(k).real();
        d(2 * k + 1) = shift(k).imag();
    }
    return LinearMap(Matrix::Identity(2 * n, 2 * n), d);
}

LinearMap LinearMap::then(const LinearMap& next) const {
    if (next.n_modes() != n_modes()) {
        throw UsageError("cannot compose a " + std::to_string(n_modes()) + "-mode map with a " +
                         std::to_string(next.n_modes()) + "-mode map");
    }
    return LinearMap(next.matrix_ * matrix_, next.matrix_ * displacement_ + next.displacement_);
}

LinearMap LinearMap::extended(int extra) const {
    if (extra < 0) {
        throw UsageError("cannot remove modes from a map");
    }
    const auto dim = displacement_.size();
    const auto total = dim + 2 * extra;
    Matrix s = Matrix::Identity(total, total);
    s.topLeftCorner(dim, dim) = matrix_;
    Vector d = Vector::Zero(total);
    d.head(dim) = displacement_;
    return LinearMap(s, d);
}

double LinearMap::symplectic_defect() const {
    const Matrix omega = symplectic_form(n_modes());
    return (matrix_.transpose() * omega * matrix_ - omega).norm();
}

bool LinearMap::is_passive(double tol) const {
    const auto dim = matrix_.rows();
    return (matrix_.transpose() * matrix_ - Matrix::Identity(dim, dim)).norm() <= tol &&
           displacement_.norm() <= tol;
}

GaussianState apply(const LinearMap& m, const GaussianState& s) {
    if (m.n_modes() != s.n_modes()) {
        throw UsageError("map acts on " + std::to_string(m.n_modes()) + " modes but the state has " +
                         std::to_string(s.n_modes()));
    }
    Vector mean = m.matrix() * s.mean() + m.displacement();
    Matrix cov = m.matrix() * s.cov() * m.matrix().transpose();
    cov = 0.5 * (cov + cov.transpose());
    return GaussianState(std::move(mean), std::move(cov));
}

}  // namespace cohsv
