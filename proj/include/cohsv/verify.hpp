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

#ifndef COHSV_VERIFY_HPP
#define COHSV_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cohsv {

enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    bool passed;
    /// Largest deviation observed; compared against tolerance.
    double measured;
    double tolerance;
    std::string detail;
};

struct VerifyReport {
    VerifyLevel level;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::ordered_json to_json() const;
    /// One line per check: PASS/FAIL, name, measured and tolerance.
    std::string to_text() const;
};

/// Cross-check matrix. Every check runs; failures are collected.
///
/// quick: parity saturation of the bound, closed vs Gaussian parity,
///        Fock oracle at n_c, n_s <= 1, intensity-signal calibration,
///        intensity-sensitivity ordering offset, leak flags.
/// full:  adds the oracle grid to n <= 2, finite-T vs displacement LO and
///        cutoff convergence.
VerifyReport verify(VerifyLevel level);

/// max over (n_c, n_s) in {0.5, 1, ..., 10}^2 of |dphi / dphi_QCRB - 1| with
/// dphi = 1 / sqrt(curvature(n_c, n_s)). Passes below 1e-10.
CheckResult check_saturation(const std::function<double(double, double)>& curvature);

/// Parity and number moments of the Fock oracle against the Gaussian
/// pipeline on (n_c, n_s) in `photons`^2, phi in {0.1, 0.7, 1.6, 3.0} and
/// phi_c in {0, pi/4}.
std::vector<CheckResult> check_fock_grid(const std::vector<double>& photons);

}  // namespace cohsv

#endif  // COHSV_VERIFY_HPP
