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

#include "cohsv/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "cohsv/detection.hpp"
#include "cohsv/errors.hpp"

namespace cohsv {

namespace {

constexpr double kPi = std::numbers::pi;

using Values = std::vector<std::optional<double>>;

enum Col { kSignal, kDSignal, kVariance, kDphi, kQcrb, kShot, kHeisenberg, kDphiNin, kDphiNt, kCount };

bool fraction_mode(const Scenario& s) {
    return s.n_in || s.eta || std::any_of(s.sweep.begin(), s.sweep.end(), [](const SweepAxis& a) {
               return a.var == "n_in" || a.var == "eta";
           });
}

void set_variable(CircuitPreset& p, double& n_in, double& eta, const std::string& var, double v) {
    if (var == "phi") p.phi = v;
    else if (var == "phi_c") p.phi_c = v;
    else if (var == "n_c") p.n_c = v;
    else if (var == "n_s") p.n_s = v;
    else if (var == "n_lo") p.n_lo = v;
    else if (var == "phi_lo") p.phi_lo = v;
    else if (var == "T") p.T = v;
    else if (var == "control_phase") p.control_phase = v;
    else if (var == "n_in") n_in = v;
    else if (var == "eta") eta = v;
    else throw UsageError("'" + var + "' is not a sweepable variable");
}

std::optional<double> finite_or_missing(double v) {
    if (std::isnan(v)) return std::nullopt;
    return v;
}

/// Signal, derivative, variance and dphi for one point. Missing entries
/// stay nullopt.
void detect(const Scenario& s, const CircuitPreset& p, Values& out) {
    const double n_total = p.n_c + p.n_s;
    switch (s.detection) {
        case Detection::parity: {
            if (s.method == Method::closed) {
                out[kSignal] = parity_closed(p.n_c, p.n_s, p.phi_c, p.phi);
                out[kDSignal] = parity_closed_derivative(p.n_c, p.n_s, p.phi_c, p.phi);
                out[kVariance] = 1.0 - *out[kSignal] * *out[kSignal];
                if (n_total > 0.0) {
                    try {
                        out[kDphi] = parity_sensitivity(p.n_c, p.n_s, p.phi_c, p.phi).dphi;
                    } catch (const UndefinedSensitivityError&) {
                    }
                }
                return;
            }
            const BuiltCircuit c = build(p);
            out[kSignal] = parity_numeric(c.output(), c.mode_c);
            out[kVariance] = 1.0 - *out[kSignal] * *out[kSignal];
            if (n_total > 0.0) {
                try {
                    const SensitivityPoint sp = parity_sensitivity_numeric(p);
                    out[kDSignal] = sp.d_signal_dphi;
                    out[kDphi] = sp.dphi;
                } catch (const UndefinedSensitivityError&) {
                }
            }
            return;
        }
        case Detection::intensity_difference: {
            if (s.method == Method::closed) {
                if (s.n_lo_infinite) {
                    out[kDphi] = ono_sensitivity_infinite_lo(p.n_c, p.n_s);
                    return;
                }
                out[kSignal] = intensity_signal_closed(p.n_c, p.n_s, p.phi_c, p.phi, p.n_lo, p.phi_lo);
                out[kDSignal] = intensity_signal_closed_derivative(p.n_c, p.n_s, p.phi_c, p.phi, p.n_lo, p.phi_lo);
                if (n_total > 0.0) {
                    try {
                        out[kDphi] = ono_sensitivity(p.n_c, p.n_s, p.n_lo);
                    } catch (const UndefinedSensitivityError&) {
                    }
                }
                return;
            }
            const BuiltCircuit c = build(p);
            const IntensityMoments m = intensity_difference_moments(c.output(), c.mode_c, c.mode_d);
            out[kSignal] = m.mean;
            out[kVariance] = m.variance;
            try {
                const SensitivityPoint sp = intensity_sensitivity_numeric(p);
                out[kDSignal] = sp.d_signal_dphi;
                out[kDphi] = sp.dphi;
            } catch (const UndefinedSensitivityError&) {
            }
            return;
        }
        case Detection::conventional_fringe: {
            if (!(n_total > 0.0)) {
                return;
            }
            // Coherent light only: every input photon goes into the coherent port.
            auto moments_at = [&](double phi) {
                CircuitPreset q = p;
                q.n_c = n_total;
                q.n_s = 0.0;
                q.phi = phi;
                const BuiltCircuit c = build(q);
                return intensity_difference_moments(c.output(), 1, 0);
            };
            const IntensityMoments m = moments_at(p.phi);
            const double derivative =
                richardson_derivative([&](double phi) { return moments_at(phi).mean; }, p.phi) / n_total;
            out[kSignal] = m.mean / n_total;
            out[kDSignal] = derivative;
            out[kVariance] = m.variance / (n_total * n_total);
            if (std::abs(derivative) > 1e-9) {
                out[kDphi] = std::sqrt(*out[kVariance]) / std::abs(derivative);
            }
            return;
        }
    }
}

}  // namespace

const std::vector<std::string>& column_names() {
    static const std::vector<std::string> names{"signal",     "dsignal_dphi", "variance",    "dphi",
                                                "qcrb",       "shot_noise",   "heisenberg",  "dphi_x_n_in",
                                                "dphi_x_sqrt_n_t"};
    return names;
}

Values evaluate_point(const Scenario& s, const std::vector<double>& coords) {
    if (coords.size() != s.sweep.size()) {
        throw UsageError("expected one coordinate per sweep axis");
    }
    CircuitPreset p = s.preset;
    double n_in = s.n_in.value_or(0.0);
    double eta = s.eta.value_or(0.0);
    for (std::size_t a = 0; a < coords.size(); ++a) {
        set_variable(p, n_in, eta, s.sweep[a].var, coords[a]);
    }
    if (fraction_mode(s)) {
        const ResourceAccounting r = ResourceAccounting::from_eta(n_in, eta);
        p.n_c = r.n_c();
        p.n_s = r.n_s();
    }
    if (s.n_lo_infinite) {
        p.n_lo = 0.0;
    }
    p.validate();

    Values out(kCount);
    detect(s, p, out);

    const double photons_in = p.n_c + p.n_s;
    const bool has_lo = p.name == PresetName::ono_hofmann;
    const double n_lo = has_lo ? (s.n_lo_infinite ? std::numeric_limits<double>::infinity() : p.n_lo) : 0.0;
    const double n_t = photons_in + n_lo;
    const double budget = s.resource == ResourceMode::n_in ? photons_in : n_t;
    out[kQcrb] = qcrb(p.n_c, p.n_s);
    out[kShot] = shot_noise_limit(budget);
    out[kHeisenberg] = heisenberg_limit(budget);
    if (out[kDphi]) {
        out[kDphiNin] = finite_or_missing(*out[kDphi] * photons_in);
        if (std::isfinite(n_t)) {
            out[kDphiNt] = finite_or_missing(*out[kDphi] * std::sqrt(n_t));
        }
    }
    for (auto& v : out) {
        if (v && std::isnan(*v)) {
            throw NumericalError("NaN produced at a grid point");
        }
    }
    return out;
}

SweepTable run(const Scenario& scenario) {
    scenario.validate();
    SweepTable table;
    for (const SweepAxis& a : scenario.sweep) {
        table.axes.push_back({a.var, a.grid()});
    }
    const std::size_t n_rows = table.rows();
    for (const std::string& name : column_names()) {
        table.columns.push_back({name, Values(n_rows)});
    }

    std::vector<std::exception_ptr> errors(n_rows);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<double> coords(table.axes.size());
        for (std::size_t r = next++; r < n_rows; r = next++) {
            for (std::size_t a = 0; a < coords.size(); ++a) coords[a] = table.coordinate(r, a);
            try {
                const Values v = evaluate_point(scenario, coords);
                for (std::size_t c = 0; c < v.size(); ++c) table.columns[c].values[r] = v[c];
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };
    const std::size_t n_threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, n_rows / 32));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : scenario.echo()) echo[k] = v;
    table.metadata["version"] = kVersion;
    table.metadata["scenario"] = echo;
    return table;
}

// ---------------------------------------------------------------------------
// Figure presets

namespace {

SweepAxis axis(std::string var, double lo, double hi, int points) { return {std::move(var), lo, hi, points}; }

Scenario parity_scenario(double n_in, double eta, Method method, std::vector<SweepAxis> sweep) {
    Scenario s;
    s.preset.name = PresetName::parity_mzi;
    s.n_in = n_in;
    s.eta = eta;
    s.detection = Detection::parity;
    s.method = method;
    s.sweep = std::move(sweep);
    return s;
}

Scenario ono_scenario(std::optional<double> n_in, std::optional<double> eta, double n_lo, Method method,
                      std::vector<SweepAxis> sweep) {
    Scenario s;
    s.preset.name = PresetName::ono_hofmann;
    s.preset.phi = kPi;
    s.preset.phi_lo = kPi / 2.0;
    s.n_in = n_in;
    s.eta = eta;
    if (std::isinf(n_lo)) {
        s.n_lo_infinite = true;
    } else {
        s.preset.n_lo = n_lo;
    }
    s.detection = Detection::intensity_difference;
    s.method = method;
    s.sweep = std::move(sweep);
    return s;
}

const std::vector<std::pair<std::string, double>> kEtaCurves{{"eta0", 0.0}, {"eta1", 1.0}, {"eta0.5", 0.5}};

}  // namespace

const std::vector<int>& figure_ids() {
    static const std::vector<int> ids{2, 3, 4, 6, 7, 8, 9};
    return ids;
}

std::string figure_description(int id) {
    switch (id) {
        case 2:
            return "parity signal vs phi at n_in = 10 for eta = 0, 1, 0.5, with the conventional fringe";
        case 3:
            return "parity phase sensitivity vs phi at n_in = 10 for eta = 0, 1, 0.5";
        case 4:
            return "optimal parity sensitivity over phi_c x eta at n_in = 10";
        case 6:
            return "intensity-difference signal vs phi at n_in = 10, n_lo = 100, phi_lo = pi/2";
        case 7:
            return "intensity-difference sensitivity vs eta at n_in = 10 (infinite and n_lo = 100 LO) with the QCRB";
        case 8:
            return "dphi * n_in over n_in x eta with an infinite local oscillator";
        case 9:
            return "dphi * sqrt(n_in + n_lo) over n_in x eta with n_lo = 100";
        default:
            throw UsageError("no figure preset " + std::to_string(id) + " (choose 2, 3, 4, 6, 7, 8 or 9)");
    }
}

std::vector<std::pair<std::string, Scenario>> figure_scenarios(int id) {
    figure_description(id);
    const SweepAxis phi_axis = axis("phi", -kPi, kPi, 401);
    std::vector<std::pair<std::string, Scenario>> out;
    switch (id) {
        case 2: {
            for (const auto& [label, eta] : kEtaCurves) {
                out.emplace_back(label, parity_scenario(10.0, eta, Method::numeric, {phi_axis}));
            }
            Scenario conv;
            conv.preset.n_c = 10.0;
            conv.detection = Detection::conventional_fringe;
            conv.sweep = {phi_axis};
            out.emplace_back("conventional", conv);
            break;
        }
        case 3:
            for (const auto& [label, eta] : kEtaCurves) {
                out.emplace_back(label, parity_scenario(10.0, eta, Method::closed, {phi_axis}));
            }
            break;
        case 4:
            out.emplace_back("parity", parity_scenario(10.0, 0.0, Method::closed,
                                                       {axis("phi_c", -kPi / 2.0, kPi / 2.0, 101),
                                                        axis("eta", 0.0, 1.0, 101)}));
            out.back().second.eta.reset();
            break;
        case 6:
            for (const auto& [label, eta] : kEtaCurves) {
                Scenario s = ono_scenario(10.0, eta, 100.0, Method::numeric, {phi_axis});
                out.emplace_back(label, s);
            }
            break;
        case 7: {
            const SweepAxis eta_axis = axis("eta", 0.0, 1.0, 401);
            out.emplace_back("lo_inf", ono_scenario(10.0, std::nullopt, INFINITY, Method::closed, {eta_axis}));
            out.emplace_back("lo100", ono_scenario(10.0, std::nullopt, 100.0, Method::numeric, {eta_axis}));
            break;
        }
        case 8:
            out.emplace_back("lo_inf", ono_scenario(std::nullopt, std::nullopt, INFINITY, Method::closed,
                                                    {axis("n_in", 1.0, 10.0, 101), axis("eta", 0.0, 1.0, 101)}));
            break;
        case 9: {
            Scenario s = ono_scenario(std::nullopt, std::nullopt, 100.0, Method::closed,
                                      {axis("n_in", 1.0, 10.0, 101), axis("eta", 0.0, 1.0, 101)});
            s.resource = ResourceMode::n_t;
            out.emplace_back("lo100", s);
            break;
        }
    }
    return out;
}

SweepTable figure(int id) {
    const auto scenarios = figure_scenarios(id);
    SweepTable merged;
    nlohmann::ordered_json echoes = nlohmann::ordered_json::object();
    for (const auto& [label, scenario] : scenarios) {
        SweepTable t = run(scenario);
        if (merged.axes.empty()) {
            merged.axes = t.axes;
        }
        for (Column& c : t.columns) {
            c.name = label + "." + c.name;
            merged.columns.push_back(std::move(c));
        }
        echoes[label] = t.metadata["scenario"];
    }
    merged.metadata["version"] = kVersion;
    merged.metadata["figure"] = id;
    merged.metadata["description"] = figure_description(id);
    merged.metadata["scenarios"] = echoes;
    return merged;
}

double parity_width(double n_in, double eta, int points) {
    const ResourceAccounting r = ResourceAccounting::from_eta(n_in, eta);
    const std::vector<double> phi = axis("phi", -kPi, kPi, points).grid();
    std::vector<double> signal(phi.size());
    for (std::size_t k = 0; k < phi.size(); ++k) {
        signal[k] = parity_closed(r.n_c(), r.n_s(), 0.0, phi[k]);
    }
    return signal_width(phi, signal);
}

double conventional_width(int points) {
    const std::vector<double> phi = axis("phi", -kPi, kPi, points).grid();
    std::vector<double> signal(phi.size());
    for (std::size_t k = 0; k < phi.size(); ++k) signal[k] = std::cos(phi[k]);
    return signal_width(phi, signal);
}

}  // namespace cohsv
