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

#include "cohsv/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "cohsv/errors.hpp"

namespace cohsv {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view key) {
    text = trim(text);
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    double value = 0.0;
    const char* begin = text.data();
    if (!text.empty() && text.front() == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError("invalid number '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

int parse_int(std::string_view text, std::string_view key) {
    text = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw UsageError("invalid integer '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
    text = trim(text);
    if (text == "true") return true;
    if (text == "false") return false;
    throw UsageError("expected true or false for " + std::string(key));
}

bool is_fraction_var(std::string_view v) { return v == "n_in" || v == "eta"; }

}  // namespace

std::string_view to_string(Detection d) {
    switch (d) {
        case Detection::parity:
            return "parity";
        case Detection::intensity_difference:
            return "intensity_difference";
        case Detection::conventional_fringe:
            return "conventional_fringe";
    }
    return "unknown";
}

std::string_view to_string(Method m) { return m == Method::numeric ? "numeric" : "closed"; }
std::string_view to_string(ResourceMode r) { return r == ResourceMode::n_in ? "n_in" : "n_t"; }
std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat output_format_from_string(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw UsageError("unknown output format '" + std::string(s) + "' (expected csv or json)");
}

std::vector<double> SweepAxis::grid() const {
    std::vector<double> values(points);
    for (int k = 0; k < points; ++k) {
        values[k] = min + (max - min) * static_cast<double>(k) / (points - 1);
    }
    values.back() = max;
    return values;
}

const std::vector<std::string>& sweep_variables() {
    static const std::vector<std::string> vars{"phi",  "phi_c", "n_c", "n_s",           "n_lo",
                                               "phi_lo", "T",   "eta", "control_phase", "n_in"};
    return vars;
}

std::string format_double(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double parse_angle(std::string_view text) {
    const std::string_view t = trim(text);
    const auto at = t.find("pi");
    if (at == std::string_view::npos) {
        return parse_number(t, "angle");
    }
    std::string_view prefix = trim(t.substr(0, at));
    std::string_view suffix = trim(t.substr(at + 2));
    double factor = 1.0;
    if (prefix == "-") {
        factor = -1.0;
    } else if (!prefix.empty()) {
        if (prefix.back() != '*') {
            throw UsageError("invalid angle '" + std::string(t) + "'");
        }
        factor = parse_number(prefix.substr(0, prefix.size() - 1), "angle");
    }
    double divisor = 1.0;
    if (!suffix.empty()) {
        if (suffix.front() != '/') {
            throw UsageError("invalid angle '" + std::string(t) + "'");
        }
        divisor = parse_number(suffix.substr(1), "angle");
        if (divisor == 0.0) {
            throw UsageError("division by zero in angle '" + std::string(t) + "'");
        }
    }
    return factor * std::numbers::pi / divisor;
}

void Scenario::validate() const {
    if (sweep.empty() || sweep.size() > 2) {
        throw UsageError("a scenario needs one or two sweep axes (sweep.x, optional sweep.y)");
    }
    const auto& vars = sweep_variables();
    bool fraction = n_in.has_value() || eta.has_value();
    for (const SweepAxis& axis : sweep) {
        if (std::find(vars.begin(), vars.end(), axis.var) == vars.end()) {
            throw UsageError("'" + axis.var + "' is not a sweepable variable");
        }
        if (axis.points < 2) {
            throw UsageError("sweep axis '" + axis.var + "' needs at least 2 points");
        }
        if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.max > axis.min)) {
            throw UsageError("sweep axis '" + axis.var + "' needs finite min < max");
        }
        fraction = fraction || is_fraction_var(axis.var);
    }
    if (sweep.size() == 2 && sweep[0].var == sweep[1].var) {
        throw UsageError("the two sweep axes must use different variables");
    }
    auto swept = [&](std::string_view v) {
        return std::any_of(sweep.begin(), sweep.end(), [&](const SweepAxis& a) { return a.var == v; });
    };
    if (fraction) {
        if (swept("n_c") || swept("n_s")) {
            throw UsageError("n_c/n_s cannot be swept when photon numbers are given by n_in and eta");
        }
        if (!n_in && !swept("n_in")) throw UsageError("eta parameterization needs preset.n_in or an n_in sweep");
        if (!eta && !swept("eta")) throw UsageError("n_in parameterization needs preset.eta or an eta sweep");
    }
    if (swept("eta")) {
        for (const SweepAxis& a : sweep) {
            if (a.var == "eta" && (a.min < 0.0 || a.max > 1.0)) throw UsageError("eta sweep must stay within [0, 1]");
        }
    }
    if (n_lo_infinite && (detection != Detection::intensity_difference || method != Method::closed)) {
        throw UsageError("n_lo = inf is only meaningful for closed-form intensity_difference detection");
    }
    if (n_lo_infinite && swept("n_lo")) {
        throw UsageError("n_lo cannot be swept when it is infinite");
    }
    if (detection == Detection::intensity_difference && preset.name != PresetName::ono_hofmann) {
        throw UsageError("intensity_difference detection needs preset.name = ono_hofmann");
    }
    if (detection != Detection::intensity_difference && preset.name != PresetName::parity_mzi) {
        throw UsageError(std::string(to_string(detection)) + " detection needs preset.name = parity_mzi");
    }
    if (detection == Detection::conventional_fringe && method == Method::closed) {
        throw UsageError("conventional_fringe has only a numeric method");
    }
    CircuitPreset probe = preset;
    if (n_lo_infinite) probe.n_lo = 0.0;
    if (n_in || eta) {
        probe.n_c = 0.0;
        probe.n_s = 0.0;
    }
    probe.validate();
}

std::vector<std::pair<std::string, std::string>> Scenario::echo() const {
    std::vector<std::pair<std::string, std::string>> out;
    const bool fraction = n_in || eta || std::any_of(sweep.begin(), sweep.end(), [](const SweepAxis& a) {
                              return is_fraction_var(a.var);
                          });
    out.emplace_back("preset.name", std::string(to_string(preset.name)));
    out.emplace_back("preset.phi", format_double(preset.phi));
    out.emplace_back("preset.phi_c", format_double(preset.phi_c));
    if (fraction) {
        if (n_in) out.emplace_back("preset.n_in", format_double(*n_in));
        if (eta) out.emplace_back("preset.eta", format_double(*eta));
    } else {
        out.emplace_back("preset.n_c", format_double(preset.n_c));
        out.emplace_back("preset.n_s", format_double(preset.n_s));
    }
    if (preset.name == PresetName::ono_hofmann) {
        out.emplace_back("preset.n_lo", n_lo_infinite ? "inf" : format_double(preset.n_lo));
        out.emplace_back("preset.phi_lo", format_double(preset.phi_lo));
        out.emplace_back("preset.T", format_double(preset.T));
        out.emplace_back("preset.control_phase", format_double(preset.control_phase));
        out.emplace_back("preset.lo_model", std::string(to_string(preset.lo_model)));
    }
    out.emplace_back("detection", std::string(to_string(detection)));
    out.emplace_back("detection.method", std::string(to_string(method)));
    const char* names[] = {"x", "y"};
    for (std::size_t a = 0; a < sweep.size(); ++a) {
        const std::string base = std::string("sweep.") + names[a] + ".";
        out.emplace_back(base + "var", sweep[a].var);
        out.emplace_back(base + "min", format_double(sweep[a].min));
        out.emplace_back(base + "max", format_double(sweep[a].max));
        out.emplace_back(base + "points", std::to_string(sweep[a].points));
    }
    out.emplace_back("resource_accounting", std::string(to_string(resource)));
    out.emplace_back("output.format", std::string(to_string(format)));
    if (!output_path.empty()) out.emplace_back("output.path", output_path);
    out.emplace_back("output.timestamp", timestamp ? "true" : "false");
    return out;
}

Scenario parse_scenario(std::string_view text) {
    Scenario s;
    std::map<std::string, std::string, std::less<>> entries;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            throw UsageError("line " + std::to_string(line_no) + ": empty key or value");
        }
        if (!entries.emplace(key, value).second) {
            throw UsageError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }

    SweepAxis axes[2];
    bool has_axis[2] = {false, false};
    bool explicit_photons = false;
    for (const auto& [key, value] : entries) {
        if (key == "preset.name") {
            s.preset.name = preset_name_from_string(value);
        } else if (key == "preset.phi") {
            s.preset.phi = parse_angle(value);
        } else if (key == "preset.phi_c") {
            s.preset.phi_c = parse_angle(value);
        } else if (key == "preset.phi_lo") {
            s.preset.phi_lo = parse_angle(value);
        } else if (key == "preset.control_phase") {
            s.preset.control_phase = parse_angle(value);
        } else if (key == "preset.n_c") {
            s.preset.n_c = parse_number(value, key);
            explicit_photons = true;
        } else if (key == "preset.n_s") {
            s.preset.n_s = parse_number(value, key);
            explicit_photons = true;
        } else if (key == "preset.n_lo") {
            const double v = parse_number(value, key);
            if (std::isinf(v) && v > 0) {
                s.n_lo_infinite = true;
            } else {
                s.preset.n_lo = v;
            }
        } else if (key == "preset.T") {
            s.preset.T = parse_number(value, key);
        } else if (key == "preset.n_in") {
            s.n_in = parse_number(value, key);
        } else if (key == "preset.eta") {
            s.eta = parse_number(value, key);
        } else if (key == "preset.lo_model") {
            s.preset.lo_model = lo_model_from_string(value);
        } else if (key == "detection") {
            if (value == "parity") s.detection = Detection::parity;
            else if (value == "intensity_difference") s.detection = Detection::intensity_difference;
            else if (value == "conventional_fringe") s.detection = Detection::conventional_fringe;
            else throw UsageError("unknown detection '" + value + "'");
        } else if (key == "detection.method") {
            if (value == "numeric") s.method = Method::numeric;
            else if (value == "closed") s.method = Method::closed;
            else throw UsageError("unknown detection.method '" + value + "'");
        } else if (key == "resource_accounting") {
            if (value == "n_in") s.resource = ResourceMode::n_in;
            else if (value == "n_t") s.resource = ResourceMode::n_t;
            else throw UsageError("unknown resource_accounting '" + value + "'");
        } else if (key == "output.format") {
            s.format = output_format_from_string(value);
        } else if (key == "output.path") {
            s.output_path = value;
        } else if (key == "output.timestamp") {
            s.timestamp = parse_bool(value, key);
        } else if (key.starts_with("sweep.x.") || key.starts_with("sweep.y.")) {
            const int a = key[6] == 'x' ? 0 : 1;
            const std::string field = key.substr(8);
            has_axis[a] = true;
            if (field == "var") axes[a].var = value;
            else if (field == "min") axes[a].min = parse_angle(value);
            else if (field == "max") axes[a].max = parse_angle(value);
            else if (field == "points") axes[a].points = parse_int(value, key);
            else throw UsageError("unknown key '" + key + "'");
        } else {
            throw UsageError("unknown key '" + key + "'");
        }
    }
    if (explicit_photons && (s.n_in || s.eta)) {
        throw UsageError("give photon numbers either as preset.n_c/n_s or as preset.n_in/eta, not both");
    }
    if (has_axis[1] && !has_axis[0]) {
        throw UsageError("sweep.y requires sweep.x");
    }
    for (int a = 0; a < 2; ++a) {
        if (has_axis[a]) {
            if (axes[a].var.empty()) throw UsageError("sweep axis is missing its var");
            s.sweep.push_back(axes[a]);
        }
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open scenario file '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

}  // namespace cohsv
