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

#include "cohsv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cohsv/circuits.hpp"
#include "cohsv/detection.hpp"
#include "cohsv/errors.hpp"
#include "cohsv/fock_oracle.hpp"
#include "cohsv/gaussian_state.hpp"

namespace cohsv {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult make(std::string name, double measured, double tolerance, std::string detail = {}) {
    const bool ok = std::isfinite(measured) && measured < tolerance;
    return {std::move(name), ok, measured, tolerance, std::move(detail)};
}

template <typename F>
CheckResult guarded(const std::string& name, double tolerance, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, INFINITY, tolerance, std::string("threw: ") + e.what()};
    }
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

CheckResult check_closed_vs_numeric() {
    const double tol = 1e-9;
    return guarded("parity closed form vs Gaussian pipeline", tol, [&] {
        struct Config {
            double n_c, n_s, phi_c;
        };
        const Config configs[] = {{10, 0, 0}, {0, 10, 0}, {5, 5, 0}, {5, 5, kPi / 4}};
        double worst = 0.0;
        for (const Config& cfg : configs) {
            CircuitPreset p;
            p.n_c = cfg.n_c;
            p.n_s = cfg.n_s;
            p.phi_c = cfg.phi_c;
            for (int k = 0; k < 401; ++k) {
                p.phi = -kPi + 2.0 * kPi * k / 400.0;
                const BuiltCircuit c = build(p);
                const double numeric = parity_numeric(c.output(), c.mode_c);
                worst = std::max(worst, std::abs(numeric - parity_closed(cfg.n_c, cfg.n_s, cfg.phi_c, p.phi)));
            }
        }
        return make("parity closed form vs Gaussian pipeline", worst, tol, "401 phases, 4 input settings");
    });
}

CircuitPreset ono_preset(double n_c, double n_s, double n_lo, double phi) {
    CircuitPreset p;
    p.name = PresetName::ono_hofmann;
    p.n_c = n_c;
    p.n_s = n_s;
    p.n_lo = n_lo;
    p.phi_lo = kPi / 2.0;
    p.phi = phi;
    return p;
}

CheckResult check_intensity_calibration() {
    const double tol = 1e-9;
    return guarded("intensity signal: circuit vs closed form", tol, [&] {
        double worst = 0.0;
        for (int k = 0; k < 401; ++k) {
            const double phi = -kPi + 2.0 * kPi * k / 400.0;
            const BuiltCircuit c = build(ono_preset(5, 5, 100, phi));
            const double mean = intensity_difference_moments(c.output(), c.mode_c, c.mode_d).mean;
            const double closed = intensity_signal_closed(5, 5, 0, phi, 100, kPi / 2.0);
            worst = std::max(worst, std::abs(mean - closed) / std::max(1.0, std::abs(closed)));
        }
        return make("intensity signal: circuit vs closed form", worst, tol, "(5, 5, n_lo = 100), 401 phases");
    });
}

// The closed-form optimum omits the -1/2 ordering correction of the variance,
// so dphi_closed^2 (dI/dphi)^2 - Var = 1/2 exactly.
CheckResult check_intensity_offset() {
    const double tol = 1e-6;
    return guarded("intensity sensitivity: ordering offset", tol, [&] {
        struct Config {
            double n_c, n_s, n_lo;
        };
        const Config configs[] = {{5, 5, 100}, {2, 8, 100}, {8, 2, 50}, {1, 1, 10}};
        double worst = 0.0;
        for (const Config& cfg : configs) {
            const SensitivityPoint sp = intensity_sensitivity_numeric(ono_preset(cfg.n_c, cfg.n_s, cfg.n_lo, kPi));
            const double closed_form = ono_sensitivity(cfg.n_c, cfg.n_s, cfg.n_lo);
            const double offset = closed_form * closed_form * sp.d_signal_dphi * sp.d_signal_dphi - sp.variance;
            worst = std::max(worst, std::abs(offset - 0.5) / 0.5);
        }
        return make("intensity sensitivity: ordering offset", worst, tol,
                    "relative deviation of closed_form^2 * slope^2 - variance from 1/2");
    });
}

CheckResult check_infinite_lo_bound() {
    const double tol = 1e-12;
    return guarded("infinite-LO sensitivity respects the QCRB", tol, [&] {
        double worst = 0.0;
        for (int i = 1; i <= 20; ++i) {
            for (int j = 0; j <= 20; ++j) {
                const double n_c = 0.5 * i;
                const double n_s = 0.5 * j;
                const double ratio = qcrb(n_c, n_s) / ono_sensitivity_infinite_lo(n_c, n_s);
                worst = std::max(worst, ratio - 1.0);
            }
        }
        return make("infinite-LO sensitivity respects the QCRB", std::max(worst, 0.0), tol,
                    "max(QCRB / dphi - 1) over n_c in (0, 10], n_s in [0, 10]");
    });
}

int oracle_cutoff_coherent(double n_c) { return fock::cutoff_heuristic(n_c); }
int oracle_cutoff_squeezed(double n_s) {
    return std::max(fock::cutoff_heuristic(n_s), fock::squeezed_cutoff(n_s, 1e-16));
}

fock::TwoModeFock oracle_input(double n_c, double n_s, int extra, double phi_c = 0.0) {
    const fock::FockVector a = fock::coherent_fock(n_c, phi_c, oracle_cutoff_coherent(n_c) + extra);
    const fock::FockVector b = fock::squeezed_vacuum_fock(n_s, oracle_cutoff_squeezed(n_s) + extra);
    return fock::product(a, b, std::max(a.cutoff(), b.cutoff()) + extra);
}

CheckResult check_finite_t() {
    const double tol = 1e-5;
    return guarded("finite-T LO vs displacement LO", tol, [&] {
        double worst = 0.0;
        for (double phi : {0.3, 1.2, kPi, 4.0}) {
            CircuitPreset disp = ono_preset(5, 5, 100, phi);
            CircuitPreset fin = disp;
            fin.lo_model = LoModel::finite_t;
            fin.T = 1e-8;
            const BuiltCircuit a = build(disp);
            const BuiltCircuit b = build(fin);
            const IntensityMoments ma = intensity_difference_moments(a.output(), a.mode_c, a.mode_d);
            const IntensityMoments mb = intensity_difference_moments(b.output(), b.mode_c, b.mode_d);
            worst = std::max(worst, std::abs(ma.mean - mb.mean) / std::max(1.0, std::abs(ma.mean)));
            worst = std::max(worst, std::abs(ma.variance - mb.variance) / std::max(1.0, ma.variance));
        }
        return make("finite-T LO vs displacement LO", worst, tol, "T = 1e-8, relative mean and variance");
    });
}

CheckResult check_convergence() {
    const double tol = 1e-10;
    return guarded("Fock oracle cutoff convergence", tol, [&] {
        double worst = 0.0;
        for (double n : {0.5, 1.0, 2.0}) {
            for (double phi : {0.7, 3.0}) {
                const auto base = fock::apply_mzi_fock(oracle_input(n, n, 0), phi);
                const auto wide = fock::apply_mzi_fock(oracle_input(n, n, 20), phi);
                worst = std::max(worst, std::abs(fock::parity_fock(base, 0).value - fock::parity_fock(wide, 0).value));
                const auto mb = fock::number_moments_fock(base);
                const auto mw = fock::number_moments_fock(wide);
                worst = std::max(worst, std::abs(mb.var_difference - mw.var_difference));
            }
        }
        return make("Fock oracle cutoff convergence", worst, tol, "cutoff vs cutoff + 20");
    });
}

}  // namespace

CheckResult check_saturation(const std::function<double(double, double)>& curvature) {
    const double tol = 1e-10;
    return guarded("parity saturates the QCRB", tol, [&] {
        double worst = 0.0;
        for (int i = 1; i <= 20; ++i) {
            for (int j = 1; j <= 20; ++j) {
                const double n_c = 0.5 * i;
                const double n_s = 0.5 * j;
                const double dphi = 1.0 / std::sqrt(curvature(n_c, n_s));
                worst = std::max(worst, std::abs(dphi / qcrb(n_c, n_s) - 1.0));
            }
        }
        return make("parity saturates the QCRB", worst, tol, "(n_c, n_s) in {0.5, ..., 10}^2, phi_c = 0");
    });
}

std::vector<CheckResult> check_fock_grid(const std::vector<double>& photons) {
    const double tol = 1e-6;
    double parity_worst = 0.0;
    double moment_worst = 0.0;
    double leak_worst = 0.0;
    std::string error;
    try {
        for (double phi_c : {0.0, kPi / 4.0}) {
            for (double n_c : photons) {
                for (double n_s : photons) {
                    const fock::TwoModeFock input = oracle_input(n_c, n_s, 0, phi_c);
                    leak_worst = std::max(leak_worst, input.leak());
                    for (double phi : {0.1, 0.7, 1.6, 3.0}) {
                        const fock::TwoModeFock out = fock::apply_mzi_fock(input, phi);
                        const fock::OracleValue parity = fock::parity_fock(out, 0);
                        parity_worst =
                            std::max(parity_worst, std::abs(parity.value - parity_closed(n_c, n_s, phi_c, phi)));

                        CircuitPreset p;
                        p.n_c = n_c;
                        p.n_s = n_s;
                        p.phi_c = phi_c;
                        p.phi = phi;
                        const GaussianState g = build(p).output();
                        const IntensityMoments m = intensity_difference_moments(g, 0, 1);
                        const fock::NumberMoments f = fock::number_moments_fock(out);
                        moment_worst = std::max({moment_worst, std::abs(f.mean_a - g.mean_photon(0)),
                                                 std::abs(f.mean_b - g.mean_photon(1)),
                                                 std::abs((f.mean_a - f.mean_b) - m.mean),
                                                 std::abs(f.var_difference - m.variance)});
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        error = std::string("threw: ") + e.what();
    }
    const std::string grid = fmt("n_c, n_s <= %g, 4 phases, phi_c in {0, pi/4}", photons.empty() ? 0.0 : photons.back());
    std::vector<CheckResult> out{make("Fock oracle parity", parity_worst, tol, grid),
                                 make("Fock oracle number moments", moment_worst, tol, grid),
                                 make("Fock oracle truncation leak", leak_worst, 1e-8, grid)};
    if (!error.empty()) {
        for (CheckResult& c : out) {
            c.passed = false;
            c.detail = error;
        }
    }
    return out;
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["level"] = level == VerifyLevel::quick ? "quick" : "full";
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"passed", c.passed},
                               {"measured", std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured)
                                                                      : nlohmann::ordered_json("inf")},
                               {"tolerance", c.tolerance},
                               {"detail", c.detail}});
    }
    return j;
}

std::string VerifyReport::to_text() const {
    std::string out;
    for (const CheckResult& c : checks) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s  %-48s  max dev %.3e  (tol %.1e)", c.passed ? "PASS" : "FAIL",
                      c.name.c_str(), c.measured, c.tolerance);
        out += buf;
        if (!c.detail.empty()) out += "  " + c.detail;
        out += '\n';
    }
    return out;
}

VerifyReport verify(VerifyLevel level) {
    VerifyReport report{level, {}};
    report.checks.push_back(
        check_saturation([](double n_c, double n_s) { return parity_curvature_at_origin(n_c, n_s, 0.0); }));
    report.checks.push_back(check_closed_vs_numeric());
    const std::vector<double> photons =
        level == VerifyLevel::quick ? std::vector<double>{0, 0.5, 1} : std::vector<double>{0, 0.5, 1, 2};
    for (CheckResult& c : check_fock_grid(photons)) report.checks.push_back(std::move(c));
    report.checks.push_back(check_intensity_calibration());
    report.checks.push_back(check_intensity_offset());
    report.checks.push_back(check_infinite_lo_bound());
    if (level == VerifyLevel::full) {
        report.checks.push_back(check_finite_t());
        report.checks.push_back(check_convergence());
    }
    return report;
}

}  // namespace cohsv
