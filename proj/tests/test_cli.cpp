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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "cohsv/sweep_table.hpp"

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
    const std::string cmd = std::string(COHSV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("cohsv_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path write(const std::string& name, const std::string& text) {
        std::ofstream(dir_ / name) << text;
        return dir_ / name;
    }
    fs::path dir_;
};

TEST_F(Cli, RunWritesTable) {
    const fs::path out = dir_ / "out.json";
    const fs::path sc = write("s.txt", "preset.n_c = 2\npreset.n_s = 1\nsweep.x.var = phi\nsweep.x.min = 0\n"
                                       "sweep.x.max = 1\nsweep.x.points = 5\noutput.format = json\noutput.path = " +
                                           out.string() + "\n");
    EXPECT_EQ(run_cli("run " + sc.string()), 0);
    const cohsv::SweepTable t = cohsv::read_table(out);
    EXPECT_EQ(t.rows(), 5u);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("run " + (dir_ / "missing.txt").string()), 3);
    const fs::path bad = write("bad.txt", "preset.colour = red\n");
    EXPECT_EQ(run_cli("run " + bad.string()), 2);
    const fs::path one = write("one.txt", "sweep.x.var = phi\nsweep.x.min = 0\nsweep.x.max = 1\nsweep.x.points = 1\n");
    EXPECT_EQ(run_cli("run " + one.string()), 2);
    EXPECT_EQ(run_cli("figure 5"), 2);
    EXPECT_EQ(run_cli("nonsense"), 2);
    EXPECT_EQ(run_cli("figure 2 --out /nonexistent/dir/f.csv"), 3);
    EXPECT_EQ(run_cli("width --eta 0 --n-in 10"), 0);
    EXPECT_EQ(run_cli("width --eta 2 --n-in 10"), 2);
}

TEST_F(Cli, FigureOutputIsStable) {
    EXPECT_EQ(run_cli("figure 3 --out " + (dir_ / "a.csv").string()), 0);
    EXPECT_EQ(run_cli("figure 3 --out " + (dir_ / "b.csv").string()), 0);
    std::ifstream a(dir_ / "a.csv"), b(dir_ / "b.csv");
    const std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, sb);
}

TEST_F(Cli, ShippedScenariosRun) {
    int count = 0;
    for (const auto& entry : fs::directory_iterator(fs::path(COHSV_SOURCE_DIR) / "scenarios")) {
        const fs::path out = dir_ / (entry.path().stem().string() + ".out");
        EXPECT_EQ(run_cli("run " + entry.path().string() + " --out " + out.string()), 0) << entry.path();
        EXPECT_GT(fs::file_size(out), 0u);
        ++count;
    }
    EXPECT_GE(count, 2);
}

TEST_F(Cli, VerifyQuickSucceeds) { EXPECT_EQ(run_cli("verify"), 0); }

}  // namespace
