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

#include "cohsv/fock_oracle.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <string>

#include "cohsv/errors.hpp"

namespace cohsv::fock {

namespace {

void check_cutoff(int cutoff) {
    if (cutoff <= 0) {
        throw UsageError("Fock cutoff must be positive, got " + std::to_string(cutoff));
    }
}

void check_photons(double n, const char* name) {
    if (!std::isfinite(n) || n < 0.0) {
        throw DomainError(std::string(name) + " must be finite and >= 0");
    }
}

// log of the squeezed-vacuum probability of 2m photons, tanh^2 r = n_s / (n_s + 1).
double squeezed_log_prob(double n_s, int m) {
    const double log_t2 = std::log(n_s) - std::log1p(n_s);
    return m * log_t2 + std::lgamma(2.0 * m + 1.0) - 2.0 * m * std::log(2.0) - 2.0 * std::lgamma(m + 1.0) -
           0.5 * std::log1p(n_s);  // 1 / cosh r = 1 / sqrt(1 + n_s)
}

// Sum of Poisson(n) probabilities for k >= cutoff.
double poisson_tail(double n, int cutoff) {
    if (n == 0.0) {
        return 0.0;
    }
    double tail = 0.0;
    for (int k = cutoff;; ++k) {
        const double term = std::exp(-n + k * std::log(n) - std::lgamma(k + 1.0));
        tail += term;
        if (k > n && term < 1e-300 + 1e-18 * tail) {
            break;
        }
    }
    return tail;
}

void check_leak(double leak, double max_leak, const char* what, int cutoff) {
    if (leak > max_leak) {
        throw TruncationError(std::string(what) + " truncated at cutoff " + std::to_string(cutoff) +
                                  " loses probability " + std::to_string(leak),
                              leak);
    }
}

}  // namespace

FockVector::FockVector(std::vector<Complex> amplitudes, double leak)
    : amplitudes_(std::move(amplitudes)), leak_(leak) {
    check_cutoff(static_cast<int>(amplitudes_.size()));
}

double FockVector::norm2() const {
    double total = 0.0;
    for (const Complex& c : amplitudes_) {
        total += std::norm(c);
    }
    return total;
}

double FockVector::mean_number() const {
    double total = 0.0;
    for (int k = 0; k < cutoff(); ++k) {
        total += k * std::norm(amplitudes_[k]);
    }
    return total / norm2();
}

double FockVector::parity() const {
    double total = 0.0;
    for (int k = 0; k < cutoff(); ++k) {
        total += (k % 2 == 0 ? 1.0 : -1.0) * std::norm(amplitudes_[k]);
    }
    return total / norm2();
}

TwoModeFock::TwoModeFock(Eigen::MatrixXcd amplitudes, double leak)
    : amplitudes_(std::move(amplitudes)), leak_(leak) {
    if (amplitudes_.rows() != amplitudes_.cols()) {
        throw UsageError("two-mode amplitudes must be a square cutoff x cutoff array");
    }
    check_cutoff(static_cast<int>(amplitudes_.rows()));
    const int k = cutoff();
    for (int a = 0; a < k; ++a) {
        for (int b = k - a; b < k; ++b) {
            if (amplitudes_(a, b) != Complex(0.0)) {
                throw UsageError("two-mode amplitudes must vanish for n_a + n_b >= cutoff");
            }
        }
    }
}

double TwoModeFock::norm2() const { return amplitudes_.squaredNorm(); }

int TwoModeFock::max_total_photons(double threshold) const {
    int best = 0;
    for (int a = 0; a < cutoff(); ++a) {
        for (int b = 0; a + b < cutoff(); ++b) {
            if (std::norm(amplitudes_(a, b)) > threshold) {
                best = std::max(best, a + b);
            }
        }
    }
    return best;
}

TwoModeFock TwoModeFock::basis(int n_a, int n_b, int cutoff) {
    if (n_a < 0 || n_b < 0 || n_a + n_b >= cutoff) {
        throw UsageError("basis state outside the truncated space");
    }
    Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    amps(n_a, n_b) = 1.0;
    return TwoModeFock(amps, 0.0);
}

int cutoff_heuristic(double mean_photon) {
    check_photons(mean_photon, "mean photon number");
    return static_cast<int>(std::ceil(mean_photon + 10.0 * std::sqrt(mean_photon + 1.0) + 20.0));
}

double squeezed_tail(double n_s, int cutoff) {
    check_photons(n_s, "n_s");
    check_cutoff(cutoff);
    if (n_s == 0.0) {
        return 0.0;
    }
    double tail = 0.0;
    for (int m = (cutoff + 1) / 2;; ++m) {
        const double term = std::exp(squeezed_log_prob(n_s, m));
        tail += term;
        if (term < 1e-300 + 1e-18 * tail) {
            break;
        }
    }
    return tail;
}

int squeezed_cutoff(double n_s, double max_leak) {
    check_photons(n_s, "n_s");
    if (!(max_leak > 0.0)) {
        throw DomainError("max_leak must be positive");
    }
    if (n_s == 0.0) {
        return 2;
    }
    // Probabilities P(2m) are eventually monotone, so collect them until they
    // are far below the target and accumulate the tail from the top.
    std::vector<double> probs;
    for (int m = 0;; ++m) {
        const double p = std::exp(squeezed_log_prob(n_s, m));
        probs.push_back(p);
        if (m > 2 && p < 1e-6 * max_leak * (1.0 - n_s / (n_s + 1.0))) {
            break;
        }
    }
    double tail = 0.0;
    int m = static_cast<int>(probs.size());
    while (m > 0 && tail + probs[m - 1] < max_leak) {
        tail += probs[--m];
    }
    return 2 * m;
}

FockVector coherent_fock(double n_c, double phi_c, int cutoff, double max_leak) {
    check_photons(n_c, "n_c");
    check_cutoff(cutoff);
    std::vector<Complex> amps(cutoff, Complex(0.0));
    if (n_c == 0.0) {
        amps[0] = 1.0;
        return FockVector(std::move(amps), 0.0);
    }
    const double log_n = std::log(n_c);
    for (int k = 0; k < cutoff; ++k) {
        const double magnitude = std::exp(-0.5 * n_c + 0.5 * k * log_n - 0.5 * std::lgamma(k + 1.0));
        amps[k] = std::polar(magnitude, -k * phi_c);
    }
    const double leak = poisson_tail(n_c, cutoff);
    check_leak(leak, max_leak, "coherent state", cutoff);
    return FockVector(std::move(amps), leak);
}

FockVector squeezed_vacuum_fock(double n_s, int cutoff, double max_leak) {
    check_photons(n_s, "n_s");
    check_cutoff(cutoff);
    std::vector<Complex> amps(cutoff, Complex(0.0));
    if (n_s == 0.0) {
        amps[0] = 1.0;
        return FockVector(std::move(amps), 0.0);
    }
    for (int m = 0; 2 * m < cutoff; ++m) {
        const double magnitude = std::exp(0.5 * squeezed_log_prob(n_s, m));
        amps[2 * m] = (m % 2 == 0) ? magnitude : -magnitude;  // (-tanh r)^m
    }
    const double leak = squeezed_tail(n_s, cutoff);
    check_leak(leak, max_leak, "squeezed vacuum", cutoff);
    return FockVector(std::move(amps), leak);
}

TwoModeFock product(const FockVector& a, const FockVector& b, int cutoff) {
    if (cutoff == 0) {
        cutoff = a.cutoff() + b.cutoff() - 1;
    }
    check_cutoff(cutoff);
    Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    double dropped = 0.0;
    for (int n = 0; n < a.cutoff(); ++n) {
        for (int m = 0; m < b.cutoff(); ++m) {
            const Complex v = a.amplitudes()[n] * b.amplitudes()[m];
            if (n + m < cutoff) {
                amps(n, m) = v;
            } else {
                dropped += std::norm(v);
            }
        }
    }
    const double leak = a.leak() + b.leak() - a.leak() * b.leak() + dropped;
    return TwoModeFock(amps, leak);
}

SectorUnitary::SectorUnitary(const Eigen::Matrix2cd& u, int cutoff) {
    check_cutoff(cutoff);
    if (!(u.adjoint() * u).isApprox(Eigen::Matrix2cd::Identity(), 1e-12)) {
        throw DomainError("sector unitary needs a unitary 2x2 matrix");
    }
    // Creation operators transform as a^dag -> u00 a^dag + u10 b^dag and
    // b^dag -> u01 a^dag + u11 b^dag, i.e. U = exp(i sum_jk H_jk a_j^dag a_k)
    // with u = exp(iH). On sector N the generator is tridiagonal in |q, N-q>;
    // exponentiating it through its eigenbasis keeps every block unitary.
    // (Building blocks by repeated creation operators loses unitarity
    // above N ~ 60.)
    const Eigen::ComplexSchur<Eigen::Matrix2cd> schur(u);
    Eigen::Matrix2cd log_diag = Eigen::Matrix2cd::Zero();
    for (int k = 0; k < 2; ++k) {
        log_diag(k, k) = std::arg(schur.matrixT()(k, k));
    }
    const Eigen::Matrix2cd h = schur.matrixU() * log_diag * schur.matrixU().adjoint();

    sectors_.reserve(cutoff);
    for (int total = 0; total < cutoff; ++total) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(total + 1, total + 1);
        for (int q = 0; q <= total; ++q) {
            g(q, q) = h(0, 0) * static_cast<double>(q) + h(1, 1) * static_cast<double>(total - q);
            if (q < total) {
                const Complex hop = h(0, 1) * std::sqrt((q + 1.0) * (total - q));
                g(q + 1, q) = hop;
                g(q, q + 1) = std::conj(hop);
            }
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g);
        const Eigen::VectorXcd phases =
            eig.eigenvalues().unaryExpr([](double lambda) { return std::polar(1.0, lambda); });
        sectors_.push_back(eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint());
    }
}

TwoModeFock SectorUnitary::apply(const TwoModeFock& s) const {
    if (s.cutoff() != cutoff()) {
        throw UsageError("sector unitary built for cutoff " + std::to_string(cutoff()) + ", state has " +
                         std::to_string(s.cutoff()));
    }
    const int k = cutoff();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k, k);
    for (int total = 0; total < k; ++total) {
        Eigen::VectorXcd v(total + 1);
        for (int q = 0; q <= total; ++q) {
            v(q) = s.amplitude(q, total - q);
        }
        const Eigen::VectorXcd w = sectors_[total] * v;
        for (int p = 0; p <= total; ++p) {
            out(p, total - p) = w(p);
        }
    }
    return TwoModeFock(out, s.leak());
}

TwoModeFock apply_bs_fock(const TwoModeFock& s) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const SectorUnitary>> cache;
    std::shared_ptr<const SectorUnitary> unitary;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[s.cutoff()];
        if (!slot) {
            Eigen::Matrix2cd bs;
            bs << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;
            slot = std::make_shared<const SectorUnitary>(bs / std::sqrt(2.0), s.cutoff());
        }
        unitary = slot;
    }
    return unitary->apply(s);
}

TwoModeFock apply_phase_fock(const TwoModeFock& s, int mode, double phi) {
    if (mode != 0 && mode != 1) {
        throw UsageError("two-mode Fock state has modes 0 and 1 only");
    }
    Eigen::MatrixXcd out = s.amplitudes();
    for (int a = 0; a < s.cutoff(); ++a) {
        for (int b = 0; a + b < s.cutoff(); ++b) {
            out(a, b) *= std::polar(1.0, -phi * (mode == 0 ? a : b));
        }
    }
    return TwoModeFock(out, s.leak());
}

TwoModeFock apply_mzi_fock(const TwoModeFock& s, double phi) {
    return apply_bs_fock(apply_phase_fock(apply_bs_fock(s), 1, phi));
}

OracleValue parity_fock(const TwoModeFock& s, int mode) {
    if (mode != 0 && mode != 1) {
        throw UsageError("two-mode Fock state has modes 0 and 1 only");
    }
    double total = 0.0;
    for (int a = 0; a < s.cutoff(); ++a) {
        for (int b = 0; a + b < s.cutoff(); ++b) {
            const int n = mode == 0 ? a : b;
            total += (n % 2 == 0 ? 1.0 : -1.0) * std::norm(s.amplitude(a, b));
        }
    }
    return {total / s.norm2(), s.leak()};
}

NumberMoments number_moments_fock(const TwoModeFock& s) {
    double mean_a = 0.0;
    double mean_b = 0.0;
    double mean_diff = 0.0;
    double mean_diff2 = 0.0;
    for (int a = 0; a < s.cutoff(); ++a) {
        for (int b = 0; a + b < s.cutoff(); ++b) {
            const double p = std::norm(s.amplitude(a, b));
            mean_a += a * p;
            mean_b += b * p;
            mean_diff += (a - b) * p;
            mean_diff2 += static_cast<double>(a - b) * (a - b) * p;
        }
    }
    const double norm = s.norm2();
    mean_diff /= norm;
    return {mean_a / norm, mean_b / norm, mean_diff2 / norm - mean_diff * mean_diff, s.leak()};
}

}  // namespace cohsv::fock
