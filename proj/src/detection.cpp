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

#include "cohsv/detection.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cohsv/errors.hpp"

namespace cohsv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOriginTol = 1e-9;
constexpr double kStationaryTol = 1e-12;
constexpr double kOriginProbe = 1e-4;

void check_photons(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DomainError(std::string(name) + " must be finite and >= 0, got " + std::to_string(value));
    }
}

void check_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw DomainError(std::string(name) + " must be finite and > 0, got " + std::to_string(value));
    }
}

/// Distance of phi from the nearest multiple of 2 pi.
double wrap_to_origin(double phi) { return std::remainder(phi, 2.0 * kPi); }

/// 2 n_s + 1 - 2 sqrt(n_s^2 + n_s) = e^{-2r}, written without cancellation.
double antisqueezed_deficit(double n_s) { return 1.0 / (2.0 * n_s + 1.0 + 2.0 * std::sqrt(n_s * n_s + n_s)); }

struct ParityTerms {
    double log_signal;
    double derivative_log;
};

// log <Pi> and its phi derivative. The exponent is written with
// 1 - cos(phi) = 2 sin^2(phi/2) so that small phi keeps full precision.
ParityTerms parity_terms(double n_c, double n_s, double phi_c, double phi) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    const double a = std::sqrt(n_s * n_s + n_s) * std::cos(2.0 * phi_c);
    const double s = std::sin(phi);
    const double s2 = s * s;
    const double half = std::sin(0.5 * phi);
    const double d = n_s * s2 + 1.0;
    const double exponent = (a * s2 + 2.0 * half * half + n_s * s2) / d;  // g + 1
    const double sin2 = std::sin(2.0 * phi);
    const double g_num = a * s2 - std::cos(phi);
    const double dg = ((a * sin2 + s) * d - g_num * n_s * sin2) / (d * d);
    const double dd = n_s * sin2;
    return {-n_c * exponent - 0.5 * std::log(d), -n_c * dg - 0.5 * dd / d};
}

}  // namespace

ResourceAccounting ResourceAccounting::from_photons(double n_c, double n_s, double n_lo) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    check_photons(n_lo, "n_lo");
    const double n_in = n_c + n_s;
    return {n_in, n_in > 0.0 ? n_s / n_in : 0.0, n_lo, n_in + n_lo};
}

ResourceAccounting ResourceAccounting::from_eta(double n_in, double eta, double n_lo) {
    check_photons(n_in, "n_in");
    check_photons(n_lo, "n_lo");
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("eta must lie in [0, 1], got " + std::to_string(eta));
    }
    return {n_in, eta, n_lo, n_in + n_lo};
}

double parity_numeric(const GaussianState& s, int mode) {
    const GaussianState single = marginal(s, {mode});
    return 0.5 * kPi * wigner_at(single, Vector::Zero(2));
}

double parity_closed(double n_c, double n_s, double phi_c, double phi) {
    return std::exp(parity_terms(n_c, n_s, phi_c, phi).log_signal);
}

double parity_closed_derivative(double n_c, double n_s, double phi_c, double phi) {
    const ParityTerms t = parity_terms(n_c, n_s, phi_c, phi);
    return std::exp(t.log_signal) * t.derivative_log;
}

double parity_curvature_at_origin(double n_c, double n_s, double phi_c) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    return 2.0 * n_c * std::sqrt(n_s * (n_s + 1.0)) * std::cos(2.0 * phi_c) + 2.0 * n_c * n_s + n_c + n_s;
}

double parity_sensitivity_limit(double n_c, double n_s, double phi_c) {
    const double kappa = parity_curvature_at_origin(n_c, n_s, phi_c);
    if (!(kappa > 0.0)) {
        throw UndefinedSensitivityError("parity sensitivity undefined without input photons");
    }
    return 1.0 / std::sqrt(kappa);
}

SensitivityPoint parity_sensitivity(double n_c, double n_s, double phi_c, double phi) {
    if (!(n_c + n_s > 0.0)) {
        throw DomainError("parity sensitivity needs n_c + n_s > 0");
    }
    if (std::abs(wrap_to_origin(phi)) < kOriginTol) {
        return {phi, 1.0, 0.0, 0.0, parity_sensitivity_limit(n_c, n_s, phi_c)};
    }
    const ParityTerms t = parity_terms(n_c, n_s, phi_c, phi);
    const double signal = std::exp(t.log_signal);
    const double derivative = signal * t.derivative_log;
    if (std::abs(derivative) < kStationaryTol) {
        throw UndefinedSensitivityError("parity signal is stationary at phi = " + std::to_string(phi));
    }
    const double variance = -std::expm1(2.0 * t.log_signal);
    return {phi, signal, derivative, variance, std::sqrt(variance) / std::abs(derivative)};
}

SensitivityPoint parity_sensitivity_numeric(const CircuitPreset& preset) {
    if (preset.name != PresetName::parity_mzi) {
        throw UsageError("parity sensitivity needs the parity_mzi preset");
    }
    auto signal_at = [&](double phi) {
        CircuitPreset p = preset;
        p.phi = phi;
        const BuiltCircuit c = build(p);
        return parity_numeric(c.output(), c.mode_c);
    };
    auto dphi2_at = [&](double phi) {
        const double signal = signal_at(phi);
        const double derivative = richardson_derivative(signal_at, phi);
        return (1.0 - signal * signal) / (derivative * derivative);
    };
    const double phi = preset.phi;
    const double signal = signal_at(phi);
    if (std::abs(wrap_to_origin(phi)) < kOriginTol) {
        // dphi^2 is even in phi with a phi^2 correction; one Richardson step removes it.
        const double dphi2 = (4.0 * dphi2_at(phi + kOriginProbe) - dphi2_at(phi + 2.0 * kOriginProbe)) / 3.0;
        return {phi, signal, 0.0, 0.0, std::sqrt(dphi2)};
    }
    const double derivative = richardson_derivative(signal_at, phi);
    if (std::abs(derivative) < kStationaryTol) {
        throw UndefinedSensitivityError("parity signal is stationary at phi = " + std::to_string(phi));
    }
    const double variance = 1.0 - signal * signal;
    return {phi, signal, derivative, variance, std::sqrt(variance) / std::abs(derivative)};
}

double qcrb(double n_c, double n_s) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    const double r = squeezing_parameter(n_s);
    const double sh = std::sinh(r);
    const double fisher = n_c * std::exp(2.0 * r) + sh * sh;
    if (fisher == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / std::sqrt(fisher);
}

double heisenberg_limit(double n) {
    check_positive(n, "photon number");
    return 1.0 / n;
}

double shot_noise_limit(double n) {
    check_positive(n, "photon number");
    return 1.0 / std::sqrt(n);
}

double intensity_signal_closed(double n_c, double n_s, double phi_c, double phi, double n_lo, double phi_lo) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    check_photons(n_lo, "n_lo");
    return -2.0 * std::sqrt(n_c * n_lo) * std::cos(0.5 * phi) * std::cos(0.5 * phi + phi_c - phi_lo) +
           (n_c - n_s) * std::sin(phi);
}

double intensity_signal_closed_derivative(double n_c, double n_s, double phi_c, double phi, double n_lo,
                                          double phi_lo) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    check_photons(n_lo, "n_lo");
    return std::sqrt(n_c * n_lo) * std::sin(phi + phi_c - phi_lo) + (n_c - n_s) * std::cos(phi);
}

double ono_sensitivity(double n_c, double n_s, double n_lo) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    check_positive(n_lo, "n_lo");
    if (!(n_c + n_s > 0.0)) {
        throw DomainError("ono sensitivity needs n_c + n_s > 0");
    }
    const double rc = std::sqrt(n_c);
    const double rl = std::sqrt(n_lo);
    const double gain = rc * (rl - rc) + n_s;
    if (gain == 0.0) {
        throw UndefinedSensitivityError("ono sensitivity undefined: signal slope vanishes");
    }
    const double numerator = 2.0 * antisqueezed_deficit(n_s) * (rc - rl) * (rc - rl) + 2.0 * n_s + 1.0;
    return std::sqrt(numerator / (2.0 * gain * gain));
}

double ono_sensitivity_infinite_lo(double n_c, double n_s) {
    check_photons(n_c, "n_c");
    check_photons(n_s, "n_s");
    if (n_c == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::sqrt(antisqueezed_deficit(n_s) / n_c);
}

double ono_sensitivity_balanced(double n_in, double n_lo) {
    check_positive(n_in, "n_in");
    check_positive(n_lo, "n_lo");
    const double deficit = 1.0 / (n_in + 1.0 + std::sqrt(n_in * n_in + 2.0 * n_in));
    const double lo_term = n_in + 2.0 * n_lo - std::sqrt(8.0 * n_in * n_lo);
    return std::sqrt((deficit * lo_term + n_in + 1.0) / (n_in * n_lo));
}

double ono_series(double n_in, double n_lo) {
    check_positive(n_in, "n_in");
    check_positive(n_lo, "n_lo");
    const double rl = std::sqrt(n_lo);
    return 1.0 / rl + 3.0 / (4.0 * n_in * rl) - 1.0 / std::sqrt(2.0 * n_in * n_in * n_in);
}

SensitivityPoint intensity_sensitivity_numeric(const CircuitPreset& preset) {
    if (preset.name != PresetName::ono_hofmann) {
        throw UsageError("intensity-difference sensitivity needs the ono_hofmann preset");
    }
    auto moments_at = [&](double phi) {
        CircuitPreset p = preset;
        p.phi = phi;
        const BuiltCircuit c = build(p);
        return intensity_difference_moments(c.output(), c.mode_c, c.mode_d);
    };
    const IntensityMoments at = moments_at(preset.phi);
    const double derivative = richardson_derivative([&](double phi) { return moments_at(phi).mean; }, preset.phi);
    if (std::abs(derivative) < kStationaryTol) {
        throw UndefinedSensitivityError("intensity signal is stationary at phi = " + std::to_string(preset.phi));
    }
    return {preset.phi, at.mean, derivative, at.variance, std::sqrt(at.variance) / std::abs(derivative)};
}

double signal_width(std::span<const double> phi, std::span<const double> signal) {
    if (phi.size() != signal.size() || phi.size() < 3) {
        throw UsageError("signal_width needs matching phi and signal samples (at least 3)");
    }
    std::size_t centre = 0;
    for (std::size_t i = 1; i < phi.size(); ++i) {
        if (!(phi[i] > phi[i - 1])) {
            throw UsageError("phi samples must be strictly increasing");
        }
        if (std::abs(phi[i]) < std::abs(phi[centre])) {
            centre = i;
        }
    }
    const double level = 0.5 * signal[centre];
    auto crossing = [&](std::size_t inside, std::size_t outside) {
        const double t = (signal[inside] - level) / (signal[inside] - signal[outside]);
        return phi[inside] + t * (phi[outside] - phi[inside]);
    };
    double right = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = centre + 1; i < phi.size(); ++i) {
        if (signal[i] < level) {
            right = crossing(i - 1, i);
            break;
        }
    }
    double left = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = centre; i-- > 0;) {
        if (signal[i] < level) {
            left = crossing(i + 1, i);
            break;
        }
    }
    if (std::isnan(left) || std::isnan(right)) {
        throw UsageError("signal never drops below half maximum inside the sampled range");
    }
    return right - left;
}

double richardson_derivative(const std::function<double(double)>& f, double x, double h) {
    auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace cohsv
