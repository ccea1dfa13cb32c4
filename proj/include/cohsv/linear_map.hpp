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

#ifndef COHSV_LINEAR_MAP_HPP
#define COHSV_LINEAR_MAP_HPP

#include <Eigen/Dense>

#include "cohsv/gaussian_state.hpp"

namespace cohsv {

/// Affine symplectic action z -> S z + d on the interleaved quadrature
/// vector. Beam splitters and phase shifters are passive (S orthogonal,
/// d = 0); local-oscillator injection in the T -> 0 limit adds a
/// displacement.
class LinearMap {
   public:
    LinearMap(Matrix matrix, Vector displacement);

    static LinearMap identity(int n_modes);

    /// Quadrature representation of a mode-amplitude scattering matrix U,
    /// i.e. of alpha_out = U alpha_in.
    static LinearMap from_amplitude_matrix(const Eigen::MatrixXcd& u);

    /// Pure displacement of the complex amplitudes by `shift`.
    static LinearMap displacement(const Eigen::VectorXcd& shift);

    int n_modes() const { return static_cast<int>(displacement_.size() / 2); }
    const Matrix& matrix() const { return matrix_; }
    const Vector& displacement() const { return displacement_; }

    /// The map that applies `*this` first and `next` second.
    LinearMap then(const LinearMap& next) const;

    /// Same map acting on `extra` additional trailing modes, which it leaves untouched.
    LinearMap extended(int extra) const;

    /// ||S^T Omega S - Omega||_F.
    double symplectic_defect() const;
    bool is_passive(double tol = 1e-10) const;

   private:
    Matrix matrix_;
    Vector displacement_;
};

/// Propagates a state: mean -> S mean + d, cov -> S cov S^T.
GaussianState apply(const LinearMap& m, const GaussianState& s);

}  // namespace cohsv

#endif  // COHSV_LINEAR_MAP_HPP
