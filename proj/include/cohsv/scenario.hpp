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

#ifndef COHSV_SCENARIO_HPP
#define COHSV_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cohsv/circuits.hpp"

namespace cohsv {

enum class Detection { parity, intensity_difference, conventional_fringe };
enum class Method { numeric, closed };
enum class ResourceMode { n_in, n_t };
enum class OutputFormat { csv, json };

std::string_view to_string(Detection d);
std::string_view to_string(Method m);
std::string_view to_string(ResourceMode r);
std::string_view to_string(OutputFormat f);
OutputFormat output_format_from_string(std::string_view s);

/// One swept parameter. Grid points are min + (max - min) k / (points - 1).
struct SweepAxis {
    std::string var;
    double min = 0.0;
    double max = 0.0;
    int points = 0;

    std::vector<double> grid() const;
};

/// Declarative experiment: a circuit preset, what to detect, and up to two
/// swept parameters.
///
/// Photon numbers are given either explicitly (n_c, n_s) or as a total n_in
/// and squeezed fraction eta, in which case (n_c, n_s) = ((1 - eta) n_in, eta n_in).
struct Scenario {
    CircuitPreset preset;
    std::optional<double> n_in;
    std::optional<double> eta;
    bool n_lo_infinite = false;

    Detection detection = Detection::parity;
    Method method = Method::numeric;
    std::vector<SweepAxis> sweep;
    ResourceMode resource = ResourceMode::n_in;

    OutputFormat format = OutputFormat::csv;
    std::string output_path;
    bool timestamp = false;

    /// Throws UsageError on inconsistent combinations.
    void validate() const;

    /// Every field as canonical key/value pairs, in a fixed order. Parsing
    /// the echo reproduces the scenario.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Sweepable variable names.
const std::vector<std::string>& sweep_variables();

/// Parses the `key = value` scenario format. Blank lines and `#` comments
/// are ignored; unknown or repeated keys are errors.
///
/// Keys:
///   preset.name            parity_mzi | ono_hofmann
///   preset.phi, preset.phi_c, preset.phi_lo, preset.control_phase   (angles)
///   preset.n_c, preset.n_s, preset.n_lo (may be `inf`), preset.T
///   preset.n_in, preset.eta
///   preset.lo_model        displacement | finite_t
///   detection              parity | intensity_difference | conventional_fringe
///   detection.method       numeric | closed
///   sweep.x.var, sweep.x.min, sweep.x.max, sweep.x.points   (and sweep.y.*)
///   resource_accounting    n_in | n_t
///   output.format          csv | json
///   output.path
///   output.timestamp       true | false
///
/// Angles accept plain numbers or multiples of pi: `pi`, `-pi/2`, `0.25*pi`, `3*pi/4`.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Parses a number that may be expressed in units of pi.
double parse_angle(std::string_view text);

/// Formats a double so that parsing it back gives the same value.
std::string format_double(double value);

}  // namespace cohsv

#endif  // COHSV_SCENARIO_HPP
