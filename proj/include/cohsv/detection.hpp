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

#ifndef COHSV_DETECTION_HPP
#define COHSV_DETECTION_HPP

#include <functional>
#include <span>

#include "cohsv/circuits.hpp"
#include "cohsv/gaussian_state.hpp"

namespace cohsv {

/// One evaluation of the error-propagation formula
///   dphi^2 = variance / (d signal / d phi)^2.
struct SensitivityPoint {
    double phi;
    double signal;
    double d_signal_dphi;
    double variance;
    double dphi;
};

/// Photon bookkeeping for an input of n_c coherent and n_s squeezed photons
/// plus n_lo local-oscillator photons.
struct ResourceAccounting {
    double n_in;
    double eta;
    double n_lo;
    double n_t;

    static ResourceAccounting from_photons(double n_c, double n_s, double n_lo = 0.0);
    /// (n_c, n_s) = ((1 - eta) n_in, eta n_in).
    static ResourceAccounting from_eta(double n_in, double eta, double n_lo = 0.0);

    double n_c() const { return n_in - eta * n_in; }
    double n_s() const { return eta * n_in; }
};

// ---------------------------------------------------------------------------
// Parity detection

/// <Pi> on one mode: (pi/2) times the mode's Wigner function at the origin.
double parity_numeric(const GaussianState& s, int mode);

/// Closed-form parity signal on the a_f output of the MZI with coherent and
/// squeezed vacuum input.
double parity_closed(double n_c, double n_s, double phi_c, double phi);

/// Analytic d<Pi>/dphi of parity_closed.
double parity_closed_derivative(double n_c, double n_s, double phi_c, double phi);

/// Curvature -d^2<Pi>/dphi^2 at phi = 0; its inverse is dphi^2 at the optimum:
///   2 n_c sqrt(n_s (n_s + 1)) cos(2 phi_c) + 2 n_c n_s + n_c + n_s.
double parity_curvature_at_origin(double n_c, double n_s, double phi_c);

/// Parity sensitivity in the phi -> 0 limit.
double parity_sensitivity_limit(double n_c, double n_s, double phi_c);

/// Error-propagation sensitivity of parity detection at phi, using the
/// analytic derivative. At phi = 0 (mod 2 pi) the analytic limit is
/// returned; other stationary points throw UndefinedSensitivityError.
SensitivityPoint parity_sensitivity(double n_c, double n_s, double phi_c, double phi);

/// The same quantity computed from the Gaussian pipeline: parity_numeric on
/// the built circuit and a Richardson-extrapolated central difference. At
/// phi = 0 the pipeline is evaluated at phi = 1e-4 and 2e-4 and extrapolated.
SensitivityPoint parity_sensitivity_numeric(const CircuitPreset& preset);

// ---------------------------------------------------------------------------
// Bounds

/// Quantum Cramer-Rao bound 1 / sqrt(n_c e^{2r} + sinh^2 r). Returns +inf for
/// zero input energy.
double qcrb(double n_c, double n_s);

double heisenberg_limit(double n);
double shot_noise_limit(double n);

// ---------------------------------------------------------------------------
// Intensity difference with a local oscillator

double intensity_signal_closed(double n_c, double n_s, double phi_c, double phi, double n_lo, double phi_lo);
double intensity_signal_closed_derivative(double n_c, double n_s, double phi_c, double phi, double n_lo,
                                          double phi_lo);

/// Closed-form optimum (phi = pi, phi_c = 0, phi_lo = pi/2) sensitivity of
/// the intensity-difference scheme. Note: it equals the exact
/// error-propagation value plus 1/2 / (dI/dphi)^2; see intensity_sensitivity_numeric.
double ono_sensitivity(double n_c, double n_s, double n_lo);

/// Infinite-LO limit sqrt((2 n_s - 2 sqrt(n_s^2 + n_s) + 1) / n_c); +inf when n_c = 0.
double ono_sensitivity_infinite_lo(double n_c, double n_s);

/// ono_sensitivity at n_c = n_s = n_in / 2.
double ono_sensitivity_balanced(double n_in, double n_lo);

/// Three-term large-n_in expansion of ono_sensitivity_balanced.
double ono_series(double n_in, double n_lo);

/// Error-propagation sensitivity of the ono_hofmann circuit: signal and
/// variance from intensity_difference_moments, derivative by central
/// difference with one Richardson step.
SensitivityPoint intensity_sensitivity_numeric(const CircuitPreset& preset);

// ---------------------------------------------------------------------------
// Signal width

/// Full width at half maximum of the fringe centred on phi = 0. The level is
/// half the value at the sample closest to phi = 0; crossings are located by
/// linear interpolation. Throws UsageError when either side has no crossing.
double signal_width(std::span<const double> phi, std::span<const double> signal);

// ---------------------------------------------------------------------------
// Numerics shared by the pipelines

/// Central difference with step h refined by one Richardson step (h, h/2).
double richardson_derivative(const std::function<double(double)>& f, double x, double h = 1e-5);

}  // namespace cohsv

#endif  // COHSV_DETECTION_HPP
