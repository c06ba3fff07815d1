// Copyright 2026 The exactsimon Authors
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

// Drives the installed-layout binary through a shell and inspects its
// output and exit status.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + EXACTSIMON_CLI_PATH + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
    const CliRun r = run("--format json " + args);
    EXPECT_EQ(r.code, expected_code) << args << "\n" << r.out;
    return nlohmann::json::parse(r.out);
}

std::string tmp_path(const std::string& name) {
    return std::string(EXACTSIMON_TEST_TMPDIR) + "/" + name;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        lines += c == '\n';
    }
    return lines;
}

}  // namespace

TEST(CliExactSimon, n5_reports_period_and_twelve_queries) {
    const nlohmann::json doc = run_json("exact-simon --n 5 --s 10110");
    ASSERT_EQ(doc["tool"], "exactsimon");
    ASSERT_TRUE(doc.contains("version"));
    ASSERT_EQ(doc["outcome"]["s"], "10110");
    ASSERT_EQ(doc["outcome"]["correct"], true);
    ASSERT_EQ(doc["queries"]["quantum"], 12);
    ASSERT_LT(doc["outcome"]["max_bad_mass"].get<double>(), 1e-18);
}

TEST(CliExactSimon, n2_text_output) {
    const CliRun r = run("exact-simon --n 2 --s 11");
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("11"), std::string::npos);
    ASSERT_NE(r.out.find("quantum"), std::string::npos);
}

TEST(CliExactSimon, usage_errors) {
    ASSERT_EQ(run("exact-simon --n 1 --s 1").code, 2);
    ASSERT_EQ(run("exact-simon --n 3 --s 11").code, 2);
    ASSERT_EQ(run("exact-simon --n 3").code, 2);
    ASSERT_EQ(run("exact-simon --n 11 --seed 1").code, 2);
    ASSERT_EQ(run("exact-simon --n 3 --s 101 --seed 4").code, 2);
    ASSERT_EQ(run("no-such-command").code, 2);
}

TEST(CliExactSimon, cap_comes_from_environment) {
    ASSERT_EQ(run("exact-simon --n 4 --seed 1", "EXACTSIMON_QUANTUM_MAX_N=3").code, 2);
    ASSERT_EQ(run("exact-simon --n 11 --seed 1", "EXACTSIMON_QUANTUM_MAX_N=11").code, 0);
}

TEST(CliExactSimon, broken_promise_exits_with_exactness_code) {
    const std::string path = tmp_path("broken_oracle.json");
    std::ofstream(path) << R"({"n": 3, "m": 3, "mode": "table", "table": [0, 1, 0, 1, 0, 1, 0, 1]})";
    ASSERT_EQ(run("exact-simon --oracle " + path).code, 4);
    ASSERT_EQ(run("solve-classical --audit-promise --oracle " + path).code, 3);
}

TEST(CliSimon, n2_and_reproducible_reports) {
    const nlohmann::json a = run_json("simon --n 2 --s 11 --rng-seed 9");
    ASSERT_EQ(a["outcome"]["s"], "11");
    nlohmann::json x = run_json("simon --n 7 --seed 3 --labeling seeded --labeling-seed 2 --rng-seed 5");
    nlohmann::json y = run_json("simon --n 7 --seed 3 --labeling seeded --labeling-seed 2 --rng-seed 5");
    x.erase("timing");
    y.erase("timing");
    ASSERT_EQ(x.dump(), y.dump());
}

TEST(CliSimon, trials_report_mean_iterations) {
    const nlohmann::json doc = run_json("simon --n 6 --seed 1 --trials 100");
    ASSERT_EQ(doc["parameters"]["trials"], 100);
    ASSERT_EQ(doc["outcome"]["wrong"], 0);
    const double mean = doc["outcome"]["mean_iterations"].get<double>();
    ASSERT_GE(mean, 5.0);
    ASSERT_LT(mean, 9.0);
}

TEST(CliSimon, exhausted_budget_keeps_partial_report) {
    const nlohmann::json doc = run_json("simon --n 8 --s 10000001 --max-iter 2", 6);
    ASSERT_EQ(doc["outcome"]["iterations"], 2);
    ASSERT_TRUE(doc.contains("error"));
}

TEST(CliQset, gen_verify_minimize) {
    const CliRun gen = run("qset gen --n 10 --alg final");
    ASSERT_EQ(gen.code, 0);
    ASSERT_EQ(count_lines(gen.out), 64);  // header plus 63 strings
    ASSERT_EQ(gen.out.rfind("n=10 alg=final\n", 0), 0u);

    const std::string path = tmp_path("final10.qset");
    ASSERT_EQ(run("qset gen --n 10 --alg final --file " + path).code, 0);
    const nlohmann::json v = run_json("qset verify --file " + path);
    ASSERT_EQ(v["outcome"]["verdict"], "pass");
    bool saw_strict = false;
    for (const auto& c : v["checks"]) {
        saw_strict |= c["name"] == "strict-n-significance" && c["passed"] == true;
    }
    ASSERT_TRUE(saw_strict);

    ASSERT_EQ(run_json("qset minimize --n 3")["outcome"]["min_size"], 5);
    ASSERT_EQ(run("qset minimize --n 6").code, 2);
}

TEST(CliQset, verify_rejects_bad_files) {
    const std::string weak = tmp_path("weak.qset");
    std::ofstream(weak) << "n=4 alg=final\n0000\n0001\n0010\n";
    ASSERT_EQ(run("qset verify --file " + weak).code, 5);
    const std::string junk = tmp_path("junk.qset");
    std::ofstream(junk) << "hello\n";
    ASSERT_EQ(run("qset verify --file " + junk).code, 2);
}

TEST(CliSolveClassical, n8_within_budget) {
    const nlohmann::json doc = run_json("solve-classical --n 8 --s 10010110");
    ASSERT_EQ(doc["outcome"]["s"], "10010110");
    ASSERT_LE(doc["queries"]["classical"].get<int>(), 31);
    ASSERT_EQ(doc["queries"]["budget"], 31);
}

TEST(CliSolveClassical, injective_and_significance_flag) {
    const nlohmann::json doc = run_json("solve-classical --n 6 --injective");
    ASSERT_EQ(doc["outcome"]["verdict"], "one-to-one");
    ASSERT_EQ(doc["queries"]["classical"], 15);
    ASSERT_EQ(run("solve-classical --n 6 --seed 2 --check-significance").code, 0);
}

TEST(CliVerifyAll, small_range_passes_and_mutation_fails) {
    const nlohmann::json ok = run_json("verify-all --quantum-max-n 4 --classical-max-n 8");
    ASSERT_EQ(ok["outcome"]["verdict"], "pass");
    ASSERT_EQ(ok["checks"].size(), 12u);
    ASSERT_TRUE(ok["timing"].contains("exact-correctness"));

    const nlohmann::json bad = run_json("verify-all --quantum-max-n 4 --classical-max-n 8 --mutate-phase", 5);
    for (const auto& c : bad["checks"]) {
        if (c["name"] == "phase-condition") {
            ASSERT_EQ(c["passed"], false);
        }
    }
}
