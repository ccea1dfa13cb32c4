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

#include <gtest/gtest.h>

#include "cohsv/detection.hpp"
#include "cohsv/verify.hpp"

namespace cohsv {
namespace {

TEST(Verify, QuickPasses) {
    const VerifyReport r = verify(VerifyLevel::quick);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_GE(r.checks.size(), 8u);
    EXPECT_EQ(r.to_json()["level"], "quick");
}

TEST(Verify, TamperedCurvatureFailsSaturation) {
    const CheckResult ok =
        check_saturation([](double n_c, double n_s) { return parity_curvature_at_origin(n_c, n_s, 0.0); });
    EXPECT_TRUE(ok.passed);
    const CheckResult bad = check_saturation([](double n_c, double n_s) {
        return 2 * n_c * std::sqrt(n_s * (n_s + 1)) + 2 * n_c * n_s + n_c + n_s + 1e-6;
    });
    EXPECT_FALSE(bad.passed);
    EXPECT_GT(bad.measured, 1e-10);
}

TEST(Verify, FailuresAreCollected) {
    // A saturation failure does not stop the other checks from reporting.
    const auto grid = check_fock_grid({0.0, 0.5});
    EXPECT_EQ(grid.size(), 3u);
    for (const CheckResult& c : grid) EXPECT_TRUE(c.passed) << c.name << " " << c.measured;
}

}  // namespace
}  // namespace cohsv
