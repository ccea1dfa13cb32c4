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

#include "cohsv/sweep_table.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "cohsv/errors.hpp"

namespace cohsv {

using nlohmann::ordered_json;

std::size_t SweepTable::rows() const {
    std::size_t n = axes.empty() ? 0 : 1;
    for (const Axis& a : axes) n *= a.values.size();
    return n;
}

double SweepTable::coordinate(std::size_t row, std::size_t a) const {
    std::size_t stride = 1;
    for (std::size_t k = a + 1; k < axes.size(); ++k) stride *= axes[k].values.size();
    return axes[a].values[(row / stride) % axes[a].values.size()];
}

const Column& SweepTable::column(const std::string& name) const {
    for (const Column& c : columns) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("no column named '" + name + "'");
}

void SweepTable::check() const {
    const std::size_t n = rows();
    for (const Column& c : columns) {
        if (c.values.size() != n) {
            throw UsageError("column '" + c.name + "' has " + std::to_string(c.values.size()) +
                             " values for a grid of " + std::to_string(n));
        }
    }
}

namespace {

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : "NA"; }

std::optional<double> parse_cell(const std::string& text) {
    if (text == "NA") return std::nullopt;
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        throw UsageError("malformed table cell '" + text + "'");
    }
    return v;
}

ordered_json json_value(const std::optional<double>& v) {
    if (!v) return nullptr;
    if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
    return *v;
}

std::optional<double> json_cell(const ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    if (j.is_string()) return parse_cell(j.get<std::string>());
    return j.get<double>();
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

bool operator==(const Axis& a, const Axis& b) {
    if (a.name != b.name || a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (!same_bits(a.values[i], b.values[i])) return false;
    }
    return true;
}

bool operator==(const Column& a, const Column& b) {
    if (a.name != b.name || a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i].has_value() != b.values[i].has_value()) return false;
        if (a.values[i] && !same_bits(*a.values[i], *b.values[i])) return false;
    }
    return true;
}

bool operator==(const SweepTable& a, const SweepTable& b) {
    return a.axes == b.axes && a.columns == b.columns && a.metadata == b.metadata;
}

std::string to_csv(const SweepTable& table) {
    table.check();
    ordered_json axes = ordered_json::object();
    for (const Axis& a : table.axes) axes[a.name] = a.values.size();
    std::string out = "# axes: " + axes.dump() + "\n";
    out += "# metadata: " + table.metadata.dump() + "\n";
    std::string header;
    for (const Axis& a : table.axes) header += (header.empty() ? "" : ",") + a.name;
    for (const Column& c : table.columns) header += "," + c.name;
    out += header + "\n";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t a = 0; a < table.axes.size(); ++a) {
            if (a > 0) out += ',';
            out += format_double(table.coordinate(r, a));
        }
        for (const Column& c : table.columns) {
            out += ',';
            out += cell(c.values[r]);
        }
        out += '\n';
    }
    return out;
}

SweepTable from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ordered_json axes_spec;
    SweepTable table;
    while (std::getline(in, line) && line.starts_with("#")) {
        try {
            if (line.starts_with("# axes: ")) {
                axes_spec = ordered_json::parse(line.substr(8));
            } else if (line.starts_with("# metadata: ")) {
                table.metadata = ordered_json::parse(line.substr(12));
            }
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("malformed CSV preamble: ") + e.what());
        }
    }
    if (!axes_spec.is_object() || axes_spec.empty()) {
        throw UsageError("CSV is missing its '# axes:' line");
    }
    const std::vector<std::string> header = split_commas(line);
    const std::size_t n_axes = axes_spec.size();
    if (header.size() < n_axes) throw UsageError("CSV header is shorter than the axis list");
    std::size_t n_rows = 1;
    for (const auto& [name, count] : axes_spec.items()) {
        table.axes.push_back({name, std::vector<double>(count.get<std::size_t>())});
        n_rows *= count.get<std::size_t>();
    }
    for (std::size_t c = n_axes; c < header.size(); ++c) {
        table.columns.push_back({header[c], std::vector<std::optional<double>>(n_rows)});
    }
    std::vector<std::size_t> strides(n_axes, 1);
    for (std::size_t a = n_axes; a-- > 1;) strides[a - 1] = strides[a] * table.axes[a].values.size();

    std::size_t r = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (r >= n_rows) throw UsageError("CSV has more rows than its grid");
        const std::vector<std::string> cells = split_commas(line);
        if (cells.size() != header.size()) {
            throw UsageError("CSV row " + std::to_string(r + 1) + " has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(header.size()));
        }
        for (std::size_t a = 0; a < n_axes; ++a) {
            const std::size_t idx = (r / strides[a]) % table.axes[a].values.size();
            table.axes[a].values[idx] = *parse_cell(cells[a]);
        }
        for (std::size_t c = n_axes; c < cells.size(); ++c) {
            table.columns[c - n_axes].values[r] = parse_cell(cells[c]);
        }
        ++r;
    }
    if (r != n_rows) throw UsageError("CSV has fewer rows than its grid");
    return table;
}

std::string to_json(const SweepTable& table) {
    table.check();
    ordered_json j;
    j["axes"] = ordered_json::array();
    for (const Axis& a : table.axes) {
        ordered_json values = ordered_json::array();
        for (double v : a.values) values.push_back(json_value(v));
        j["axes"].push_back({{"name", a.name}, {"values", values}});
    }
    j["columns"] = ordered_json::array();
    for (const Column& c : table.columns) {
        ordered_json values = ordered_json::array();
        for (const auto& v : c.values) values.push_back(json_value(v));
        j["columns"].push_back({{"name", c.name}, {"values", values}});
    }
    j["metadata"] = table.metadata;
    return j.dump(1) + "\n";
}

SweepTable from_json(const std::string& text) {
    SweepTable table;
    try {
        const ordered_json j = ordered_json::parse(text);
        for (const auto& a : j.at("axes")) {
            Axis axis{a.at("name").get<std::string>(), {}};
            for (const auto& v : a.at("values")) axis.values.push_back(*json_cell(v));
            table.axes.push_back(std::move(axis));
        }
        for (const auto& c : j.at("columns")) {
            Column column{c.at("name").get<std::string>(), {}};
            for (const auto& v : c.at("values")) column.values.push_back(json_cell(v));
            table.columns.push_back(std::move(column));
        }
        table.metadata = j.at("metadata");
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON table: ") + e.what());
    }
    table.check();
    return table;
}

void emit(const SweepTable& table, OutputFormat format, const std::filesystem::path& path) {
    const std::string text = format == OutputFormat::csv ? to_csv(table) : to_json(table);
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

SweepTable read_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return path.extension() == ".json" ? from_json(buffer.str()) : from_csv(buffer.str());
}

}  // namespace cohsv
