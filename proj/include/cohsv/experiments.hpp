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

#ifndef COHSV_EXPERIMENTS_HPP
#define COHSV_EXPERIMENTS_HPP

#include <functional>
#include <string>
#include <vector>

#include "cohsv/scenario.hpp"
#include "cohsv/sweep_table.hpp"

namespace cohsv {

inline constexpr const char* kVersion = "1.0.0";

/// Evaluates the scenario on its grid. Points are computed in parallel and
/// stored by grid index, so the result does not depend on scheduling.
///
/// Columns: signal, dsignal_dphi, variance, dphi, qcrb, shot_noise,
/// heisenberg, dphi_x_n_in, dphi_x_sqrt_n_t. Points where the sensitivity
/// is undefined (stationary signal, no photons) are missing.
///
/// shot_noise and heisenberg use the photon budget chosen by
/// resource_accounting: n_in, or n_t = n_in + n_lo.
///
/// Per detection:
///   parity               <Pi> on a_f; numeric = Gaussian pipeline, closed = analytic.
///   intensity_difference numeric = built circuit with error propagation;
///                        closed = analytic signal, and the closed-form optimum
///                        sensitivity (n_lo = inf selects the infinite-LO form).
///   conventional_fringe  all n_c + n_s photons as coherent light in one port;
///                        signal (n_b - n_a) / n = cos(phi), variance of the
///                        normalized difference.
SweepTable run(const Scenario& scenario);

/// Evaluates one grid point: scenario parameters with the sweep variables
/// replaced by `coords` (one per axis). Returns the column values in the
/// order of column_names().
std::vector<std::optional<double>> evaluate_point(const Scenario& scenario, const std::vector<double>& coords);

const std::vector<std::string>& column_names();

/// Figure ids with a named preset: 2, 3, 4, 6, 7, 8, 9.
const std::vector<int>& figure_ids();

/// The scenarios behind one figure, each with a label used to prefix its
/// columns ("label.column").
std::vector<std::pair<std::string, Scenario>> figure_scenarios(int id);

/// Runs every scenario of a figure on a shared grid and merges the columns.
/// Throws UsageError for unknown ids.
SweepTable figure(int id);

/// One-line caption describing what a figure preset contains.
std::string figure_description(int id);

/// FWHM of the parity fringe at (n_in, eta, phi_c = 0), sampled on `points`
/// equally spaced phases in [-pi, pi].
double parity_width(double n_in, double eta, int points = 20001);

/// FWHM of the conventional fringe cos(phi), sampled the same way.
double conventional_width(int points = 20001);

}  // namespace cohsv

#endif  // COHSV_EXPERIMENTS_HPP
