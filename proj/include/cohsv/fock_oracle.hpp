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

#ifndef COHSV_FOCK_ORACLE_HPP
#define COHSV_FOCK_ORACLE_HPP

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace cohsv::fock {

// Brute-force photon-number-basis simulation of the interferometer, kept
// independent of the Gaussian machinery so it can serve as a reference.

using Complex = std::complex<double>;

/// Single-mode state truncated to |0> ... |cutoff - 1>.
class FockVector {
   public:
    FockVector(std::vector<Complex> amplitudes, double leak);

    int cutoff() const { return static_cast<int>(amplitudes_.size()); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    /// Probability mass lost to truncation, 1 - norm^2 of the exact state.
    double leak() const { return leak_; }
    double norm2() const;

    double mean_number() const;
    double parity() const;

   private:
    std::vector<Complex> amplitudes_;
    double leak_;
};

/// Two-mode state keeping every |n_a, n_b> with n_a + n_b < cutoff.
/// Beam splitters and phase shifters preserve total photon number, so they
/// act unitarily on this space and the leak is fixed at preparation.
class TwoModeFock {
   public:
    TwoModeFock(Eigen::MatrixXcd amplitudes, double leak);

    int cutoff() const { return static_cast<int>(amplitudes_.rows()); }
    const Eigen::MatrixXcd& amplitudes() const { return amplitudes_; }
    Complex amplitude(int n_a, int n_b) const { return amplitudes_(n_a, n_b); }
    double leak() const { return leak_; }
    double norm2() const;
    /// Highest total photon number with non-negligible weight.
    int max_total_photons(double threshold = 1e-30) const;

    static TwoModeFock basis(int n_a, int n_b, int cutoff);

   private:
    Eigen::MatrixXcd amplitudes_;
    double leak_;
};

/// Default cutoff: ceil(mean + 10 sqrt(mean + 1) + 20). Adequate for
/// coherent states; squeezed vacuum needs squeezed_cutoff.
int cutoff_heuristic(double mean_photon);

/// Smallest even cutoff whose discarded squeezed-vacuum tail is below max_leak.
int squeezed_cutoff(double n_s, double max_leak = 1e-12);

/// Exact probability mass of squeezed vacuum on photon numbers >= cutoff.
double squeezed_tail(double n_s, int cutoff);

/// Coherent state with amplitude sqrt(n_c) exp(-i phi_c). Throws
/// TruncationError when the discarded mass exceeds max_leak.
FockVector coherent_fock(double n_c, double phi_c, int cutoff, double max_leak = 1e-8);

/// Squeezed vacuum with r = asinh(sqrt(n_s)), phase 0.
FockVector squeezed_vacuum_fock(double n_s, int cutoff, double max_leak = 1e-8);

/// Product state a (mode a) x b (mode b) restricted to n_a + n_b < cutoff.
/// cutoff defaults to a.cutoff() + b.cutoff() - 1, which keeps every product term.
TwoModeFock product(const FockVector& a, const FockVector& b, int cutoff = 0);

/// Action of a passive two-mode element alpha_out = u alpha_in, prepared
/// sector by sector. Construction is O(cutoff^3); instances are immutable.
class SectorUnitary {
   public:
    SectorUnitary(const Eigen::Matrix2cd& u, int cutoff);

    int cutoff() const { return static_cast<int>(sectors_.size()); }
    /// Block acting on sector N; entry (p, q) maps |q, N-q> to |p, N-p>.
    const Eigen::MatrixXcd& sector(int total) const { return sectors_.at(total); }
    TwoModeFock apply(const TwoModeFock& s) const;

   private:
    std::vector<Eigen::MatrixXcd> sectors_;
};

/// 50-50 beam splitter (1/sqrt 2) [[1, i], [i, 1]]. Sector blocks are cached
/// per cutoff for the lifetime of the process.
TwoModeFock apply_bs_fock(const TwoModeFock& s);
/// Multiplies |n_a, n_b> by exp(-i phi n_mode).
TwoModeFock apply_phase_fock(const TwoModeFock& s, int mode, double phi);
/// BS, phase on mode b, BS.
TwoModeFock apply_mzi_fock(const TwoModeFock& s, double phi);

/// Observable value with the truncation loss it was computed under.
struct OracleValue {
    double value;
    double leak;
    bool flagged() const { return leak >= 1e-8; }
};

struct NumberMoments {
    double mean_a;
    double mean_b;
    double var_difference;
    double leak;
    bool flagged() const { return leak >= 1e-8; }
};

/// <(-1)^n> on one mode, normalised by the retained norm.
OracleValue parity_fock(const TwoModeFock& s, int mode);
NumberMoments number_moments_fock(const TwoModeFock& s);

}  // namespace cohsv::fock

#endif  // COHSV_FOCK_ORACLE_HPP
