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

#ifndef COHSV_SWEEP_TABLE_HPP
#define COHSV_SWEEP_TABLE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohsv/scenario.hpp"

namespace cohsv {

struct Axis {
    std::string name;
    std::vector<double> values;
};

/// A named observable series. std::nullopt marks an undefined point.
struct Column {
    std::string name;
    std::vector<std::optional<double>> values;
};

/// Grid coordinates and observables. Rows enumerate the grid with the first
/// axis outermost.
struct SweepTable {
    std::vector<Axis> axes;
    std::vector<Column> columns;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

    std::size_t rows() const;
    /// Coordinate of `row` along axis `a`.
    double coordinate(std::size_t row, std::size_t a) const;
    /// Throws std::out_of_range for unknown names.
    const Column& column(const std::string& name) const;

    /// Throws UsageError when column lengths differ from the grid size.
    void check() const;
};

bool operator==(const Axis& a, const Axis& b);
bool operator==(const Column& a, const Column& b);
/// Bit-for-bit equality of axes, columns and metadata.
bool operator==(const SweepTable& a, const SweepTable& b);

/// CSV layout:
///   # axes: {"phi":401}
///   # metadata: {...}
///   phi,signal,...
///   -3.1415926535897931,0.5,...
/// Values are printed with 17 significant digits; undefined points are NA.
std::string to_csv(const SweepTable& table);
SweepTable from_csv(const std::string& text);

/// {"axes": [{"name", "values"}], "columns": [{"name", "values"}], "metadata": {...}}.
/// Undefined points are null; infinities are the strings "inf" and "-inf".
std::string to_json(const SweepTable& table);
SweepTable from_json(const std::string& text);

/// Writes the table to `path`, or to stdout when path is empty or "-".
/// Throws IoError naming the path on failure.
void emit(const SweepTable& table, OutputFormat format, const std::filesystem::path& path);

/// Reads a file written by emit; the format is chosen by the extension
/// (.json, anything else is CSV).
SweepTable read_table(const std::filesystem::path& path);

}  // namespace cohsv

#endif  // COHSV_SWEEP_TABLE_HPP
