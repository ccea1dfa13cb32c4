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

// Command-line front end: run scenarios, reproduce figure data, verify.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cohsv/errors.hpp"
#include "cohsv/experiments.hpp"
#include "cohsv/scenario.hpp"
#include "cohsv/sweep_table.hpp"
#include "cohsv/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent plus squeezed-vacuum interferometry: scenarios, figure data and cross-checks."};
    app.require_subcommand(1);
    app.set_version_flag("--version", cohsv::kVersion);

    std::string scenario_path;
    std::string run_out;
    std::string run_format;
    CLI::App* run_cmd = app.add_subcommand("run", "Evaluate a scenario file and write its table");
    run_cmd->add_option("scenario", scenario_path, "Scenario file (key = value lines)")->required();
    run_cmd->add_option("--out", run_out, "Output path, overrides output.path ('-' for stdout)");
    run_cmd->add_option("--format", run_format, "csv or json, overrides output.format")
        ->check(CLI::IsMember({"csv", "json"}));

    bool full = false;
    bool verify_json = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the cross-check matrix");
    verify_cmd->add_flag("--full", full, "Include the slower checks");
    verify_cmd->add_flag("--json", verify_json, "Print the report as JSON");

    int figure_id = 0;
    std::string figure_out;
    std::string figure_format = "csv";
    CLI::App* figure_cmd = app.add_subcommand("figure", "Write the data of a named figure preset");
    figure_cmd->add_option("id", figure_id, "Figure number")
        ->required()
        ->check(CLI::IsMember(cohsv::figure_ids()));
    figure_cmd->add_option("--out", figure_out, "Output path (default stdout)");
    figure_cmd->add_option("--format", figure_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    double eta = 0.0;
    double n_in = 0.0;
    int points = 20001;
    CLI::App* width_cmd = app.add_subcommand("width", "Full width at half maximum of the parity fringe");
    width_cmd->add_option("--eta", eta, "Squeezed fraction")->required()->check(CLI::Range(0.0, 1.0));
    width_cmd->add_option("--n-in", n_in, "Total input photons")->required()->check(CLI::PositiveNumber);
    width_cmd->add_option("--points", points, "Samples on [-pi, pi]")->check(CLI::Range(3, 100000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run_cmd) {
            const cohsv::Scenario scenario = cohsv::load_scenario(scenario_path);
            cohsv::SweepTable table = cohsv::run(scenario);
            if (scenario.timestamp) {
                table.metadata["timestamp"] = utc_now();
            }
            const cohsv::OutputFormat format =
                run_format.empty() ? scenario.format : cohsv::output_format_from_string(run_format);
            cohsv::emit(table, format, run_out.empty() ? scenario.output_path : run_out);
            return kExitOk;
        }
        if (*verify_cmd) {
            const cohsv::VerifyReport report =
                cohsv::verify(full ? cohsv::VerifyLevel::full : cohsv::VerifyLevel::quick);
            if (verify_json) {
                std::cout << report.to_json().dump(2) << "\n";
            } else {
                std::cout << report.to_text();
                std::cout << (report.passed() ? "all checks passed\n" : "verification FAILED\n");
            }
            return report.passed() ? kExitOk : kExitVerifyFailed;
        }
        if (*figure_cmd) {
            const cohsv::SweepTable table = cohsv::figure(figure_id);
            cohsv::emit(table, cohsv::output_format_from_string(figure_format), figure_out);
            return kExitOk;
        }
        if (*width_cmd) {
            std::printf("fwhm %.10f\n", cohsv::parity_width(n_in, eta, points));
            return kExitOk;
        }
    } catch (const cohsv::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const cohsv::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cohsv::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
