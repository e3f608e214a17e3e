// Copyright 2026 The msq Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "msq/io.hpp"

namespace fs = std::filesystem;
using namespace msq;

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string &args) {
    const std::string cmd = std::string(MSQ_CLI_PATH) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string output;
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe) != nullptr) {
        output += buf;
    }
    const int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), output};
}

class TempDir {
  public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("msq_test_" + std::to_string(counter_++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string str() const { return path_.string(); }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

  private:
    fs::path path_;
    static inline int counter_ = 0;
};

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    out << content;
}

std::string sample_counts_args() {
    const std::string dir = std::string(MSQ_DATA_DIR) + "/sample_counts/";
    std::string args;
    for (const char *label : {"row1", "row2", "row3", "col1", "col2", "col3"}) {
        args += dir + label + ".counts.json ";
    }
    return args;
}

std::string strip_date_line(const std::string &text) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("\"date\"") == std::string::npos) {
            out += line + "\n";
        }
    }
    return out;
}

const char *kNoiselessConfig = R"({
  "schema_version": 1,
  "lines": "all",
  "input_state": "+1_z,+1_z",
  "shots": 8192,
  "seed": 42,
  "noise": "none"
})";

}  // namespace

TEST(CountsFileFormat, RoundTripIsByteIdentical) {
    TempDir dir;
    CountsFile cf;
    cf.label = "row2";
    cf.counts.histogram = {{"0", 100}, {"1", 28}};
    cf.counts.shots = 128;
    cf.date = "2026-01-01T00:00:00Z";
    cf.backend = "unit-test";
    cf.seed = 7;
    cf.extra["mode"] = "ancilla";
    const std::string first = dir.file("a.json");
    const std::string second = dir.file("b.json");
    write_counts_file(first, cf);
    write_counts_file(second, read_counts_file(first));
    EXPECT_EQ(read_text_file(first), read_text_file(second));
}

TEST(CountsFileFormat, RejectsBadLabelSumAndKeys) {
    nlohmann::json good = counts_file_to_json([] {
        CountsFile cf;
        cf.label = "row1";
        cf.counts.histogram = {{"0", 2}};
        cf.counts.shots = 2;
        return cf;
    }());
    nlohmann::json bad_label = good;
    bad_label["label"] = "diag1";
    EXPECT_THROW(counts_file_from_json(bad_label), io_error);
    nlohmann::json bad_sum = good;
    bad_sum["shots"] = 3;
    EXPECT_THROW(counts_file_from_json(bad_sum), io_error);
    nlohmann::json bad_key = good;
    bad_key["counts"] = {{"x", 2}};
    EXPECT_THROW(counts_file_from_json(bad_key), io_error);
}

TEST(ConfigParsing, AcceptsEigenstatePairsAndAmplitudes) {
    const ExperimentConfig a = parse_config(nlohmann::json::parse(kNoiselessConfig));
    EXPECT_EQ(a.lines.size(), 6u);
    EXPECT_EQ(a.shots, 8192u);

    nlohmann::json j = nlohmann::json::parse(kNoiselessConfig);
    j["input_state"] = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    const ExperimentConfig b = parse_config(j);
    EXPECT_NEAR(std::abs(b.input_state.amplitude(0) - 1.0), 0.0, 1e-12);

    j["input_state"] = {"+1_x", "-1_y"};
    EXPECT_EQ(parse_config(j).input_state_desc, "+1_x,-1_y");
}

TEST(ConfigParsing, RejectsMalformedConfigs) {
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"lines": []})")), io_error);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"lines": ["row9"]})")), io_error);
    EXPECT_THROW(parse_config(nlohmann::json::parse(
                     R"({"lines": "all", "input_state": "+1_q,+1_z"})")),
                 io_error);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"lines": "all", "shots": 0})")), io_error);
    EXPECT_THROW(parse_config(nlohmann::json::parse(
                     R"({"lines": "all", "noise": {"p1_depol": 2.0}})")),
                 io_error);
    EXPECT_THROW(parse_config(nlohmann::json::parse(
                     R"({"lines": "all", "order": [1, 1, 2]})")),
                 io_error);
    // Amplitudes must be normalized.
    EXPECT_THROW(parse_config(nlohmann::json::parse(
                     R"({"lines": "all", "input_state": [[1,0],[1,0],[0,0],[0,0]]})")),
                 io_error);
}

TEST(Cli, SimulateNoiselessProducesDeterministicLineCounts) {
    TempDir dir;
    write_file(dir.file("config.json"), kNoiselessConfig);
    const CliResult r =
        run_cli("simulate --config " + dir.file("config.json") + " --out " + dir.str());
    ASSERT_EQ(r.exit_code, 0) << r.output;
    for (const char *label : {"row1", "row2", "row3", "col1", "col2"}) {
        const CountsFile cf = read_counts_file(dir.file(std::string(label) + ".counts.json"));
        EXPECT_EQ(cf.counts.count("0"), 8192u) << label;
    }
    const CountsFile col3 = read_counts_file(dir.file("col3.counts.json"));
    EXPECT_EQ(col3.counts.count("1"), 8192u);
}

TEST(Cli, SimulateWithPresetNoiseKeepsMeansStrictlyInsideUnitInterval) {
    TempDir dir;
    nlohmann::json j = nlohmann::json::parse(kNoiselessConfig);
    j["noise"] = "ibmqx4-like";
    write_file(dir.file("config.json"), j.dump());
    const CliResult r =
        run_cli("simulate --config " + dir.file("config.json") + " --out " + dir.str());
    ASSERT_EQ(r.exit_code, 0) << r.output;
    for (int ordinal = 0; ordinal < 6; ++ordinal) {
        const std::string label = line_label(line_from_ordinal(ordinal));
        const CountsFile cf = read_counts_file(dir.file(label + ".counts.json"));
        const LineStats s = stats_from_counts(cf.counts);
        EXPECT_GT(s.mean, -1.0) << label;
        EXPECT_LT(s.mean, 1.0) << label;
    }
}

TEST(Cli, SimulateIsByteIdenticalApartFromDate) {
    // Holds under noise as well: every random draw derives from the seed.
    TempDir a, b;
    nlohmann::json j = nlohmann::json::parse(kNoiselessConfig);
    j["noise"] = "ibmqx4-like";
    write_file(a.file("config.json"), j.dump());
    ASSERT_EQ(run_cli("simulate --config " + a.file("config.json") + " --out " + a.str()).exit_code,
              0);
    ASSERT_EQ(run_cli("simulate --config " + a.file("config.json") + " --out " + b.str()).exit_code,
              0);
    for (int ordinal = 0; ordinal < 6; ++ordinal) {
        const std::string name = line_label(line_from_ordinal(ordinal)) + ".counts.json";
        EXPECT_EQ(strip_date_line(read_text_file(a.file(name))),
                  strip_date_line(read_text_file(b.file(name))));
    }
}

TEST(Cli, SimulateSequentialModeWritesProductAndSlotFiles) {
    TempDir dir;
    nlohmann::json j = nlohmann::json::parse(kNoiselessConfig);
    j["lines"] = {"row3"};
    j["order"] = {3, 2, 1};
    j["shots"] = 2048;
    write_file(dir.file("config.json"), j.dump());
    const CliResult r =
        run_cli("simulate --config " + dir.file("config.json") + " --out " + dir.str());
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const CountsFile product = read_counts_file(dir.file("row3.product.counts.json"));
    EXPECT_EQ(product.counts.count("0"), 2048u);  // row 3 product is +1
    EXPECT_EQ(product.extra["order"], (nlohmann::json{3, 2, 1}));
    // Slot 1 measured cell (3,3) = ZxZ; on |+1_z>|+1_z> that is deterministic +1.
    const CountsFile slot1 = read_counts_file(dir.file("row3.slot1.r3c3.counts.json"));
    EXPECT_EQ(slot1.label, "r3c3");
    EXPECT_EQ(slot1.counts.count("0"), 2048u);
    EXPECT_TRUE(fs::exists(dir.file("row3.slot2.r3c2.counts.json")));
    EXPECT_TRUE(fs::exists(dir.file("row3.slot3.r3c1.counts.json")));
}

TEST(Cli, SimulateSingleObservableRuns) {
    TempDir dir;
    nlohmann::json j = nlohmann::json::parse(kNoiselessConfig);
    j.erase("lines");
    j["observables"] = {"r3c3"};
    j["input_state"] = "-1_z,-1_z";
    write_file(dir.file("config.json"), j.dump());
    ASSERT_EQ(
        run_cli("simulate --config " + dir.file("config.json") + " --out " + dir.str()).exit_code,
        0);
    const CountsFile cf = read_counts_file(dir.file("r3c3.counts.json"));
    EXPECT_EQ(cf.counts.count("0"), 8192u);
}

TEST(Cli, MalformedConfigExitsWithCode2) {
    TempDir dir;
    write_file(dir.file("bad.json"), "{ not json");
    EXPECT_EQ(run_cli("simulate --config " + dir.file("bad.json") + " --out " + dir.str()).exit_code,
              2);
    write_file(dir.file("nostate.json"), R"({"lines": "all", "input_state": "+2_w,+1_z"})");
    EXPECT_EQ(
        run_cli("simulate --config " + dir.file("nostate.json") + " --out " + dir.str()).exit_code,
        2);
    EXPECT_EQ(run_cli("simulate --config " + dir.file("missing.json") + " --out " + dir.str())
                  .exit_code,
              2);
}

TEST(Cli, AnalyzeSampleCountsReproducesHeadlineNumbers) {
    TempDir dir;
    const CliResult r = run_cli("analyze --counts " + sample_counts_args() + " --out " +
                                dir.file("report.json"));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const nlohmann::json rep = parse_json_file(dir.file("report.json"));
    EXPECT_NEAR(rep["max_overlap"]["value"].get<double>(), 4.987, 1e-3);
    EXPECT_NEAR(rep["hull"]["distance"].get<double>(), 0.4029, 5e-4);
    EXPECT_NEAR(rep["sigma_radius"].get<double>(), 0.0145, 1e-4);
    EXPECT_NEAR(rep["score"].get<double>(), 27.8, 0.5);
    EXPECT_TRUE(rep["violation"].get<bool>());
    EXPECT_TRUE(r.output.find("27.8") != std::string::npos) << r.output;

    // report re-renders the same summary from the saved JSON
    const CliResult rr = run_cli("report --analysis " + dir.file("report.json"));
    EXPECT_EQ(rr.exit_code, 0);
    EXPECT_EQ(rr.output, run_cli("analyze --counts " + sample_counts_args()).output);
}

TEST(Cli, AnalyzeRejectsDuplicateAndMissingLabels) {
    const std::string dir = std::string(MSQ_DATA_DIR) + "/sample_counts/";
    std::string dup;
    for (const char *label : {"row1", "row1", "row3", "col1", "col2", "col3"}) {
        dup += dir + label + ".counts.json ";
    }
    const CliResult r = run_cli("analyze --counts " + dup);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("duplicate"), std::string::npos);
    // Wrong number of files is a usage error -> malformed input.
    EXPECT_EQ(run_cli("analyze --counts " + dir + "row1.counts.json").exit_code, 2);
}

TEST(Cli, AnalyzeFlagsShotMismatchButSucceeds) {
    TempDir dir;
    for (int ordinal = 0; ordinal < 6; ++ordinal) {
        CountsFile cf;
        cf.label = line_label(line_from_ordinal(ordinal));
        const std::uint64_t shots = ordinal == 0 ? 4096u : 8192u;
        cf.counts.histogram["0"] = shots - 100;
        cf.counts.histogram["1"] = 100;
        cf.counts.shots = shots;
        write_counts_file(dir.file(cf.label + ".json"), cf);
    }
    std::string args;
    for (int ordinal = 0; ordinal < 6; ++ordinal) {
        args += dir.file(line_label(line_from_ordinal(ordinal)) + ".json") + " ";
    }
    const CliResult r = run_cli("analyze --counts " + args);
    EXPECT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NE(r.output.find("shot counts differ"), std::string::npos);
}

TEST(Cli, EnumerateDumpHasExpectedStructure) {
    TempDir dir;
    const CliResult r = run_cli("enumerate --out " + dir.file("sets.json"));
    ASSERT_EQ(r.exit_code, 0) << r.output;
    const nlohmann::json dump = parse_json_file(dir.file("sets.json"));
    EXPECT_EQ(dump["realism"].size(), 32u);
    EXPECT_EQ(dump["quantum"].size(), 32u);
    EXPECT_EQ(dump["sign_squares"].size(), 512u);
    // The ideal quantum vector appears in the quantum set.
    bool found = false;
    for (const auto &q : dump["quantum"]) {
        if (q == nlohmann::json{1, 1, 1, 1, 1, -1}) {
            found = true;
        }
    }
    EXPECT_TRUE(found);
    // Every realism vector has an even number of -1 entries.
    for (const auto &rvec : dump["realism"]) {
        int minus = 0;
        for (const auto &entry : rvec) {
            minus += entry.get<int>() == -1 ? 1 : 0;
        }
        EXPECT_EQ(minus % 2, 0);
    }
}

TEST(Cli, VerifyPassesAndSupportsAuditHooks) {
    const CliResult ok = run_cli("verify");
    EXPECT_EQ(ok.exit_code, 0) << ok.output;
    EXPECT_NE(ok.output.find("all checks passed"), std::string::npos);
    EXPECT_EQ(ok.output.find("FAIL"), std::string::npos);

    // Built-in gates hold to a much tighter tolerance than required.
    EXPECT_EQ(run_cli("verify --unitarity-tol 1e-15").exit_code, 0);

    // Flipping one cell breaks the line-product audit.
    const CliResult flipped = run_cli("verify --flip-cell 1 1");
    EXPECT_EQ(flipped.exit_code, 1);
    EXPECT_NE(flipped.output.find("FAIL  line operator products"), std::string::npos)
        << flipped.output;
}

TEST(Cli, UnknownSubcommandIsBadInput) {
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("analyze").exit_code, 2);  // missing required --counts
}
