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

// Command-line front end. Exit codes: 0 success, 1 failed verification or a
// violated analysis precondition, 2 malformed input.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msq/io.hpp"
#include "msq/line_circuits.hpp"
#include "msq/qnd.hpp"
#include "msq/simulate.hpp"
#include "msq/verify.hpp"

namespace fs = std::filesystem;
using namespace msq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

std::uint64_t derive_run_seed(std::uint64_t master, std::uint64_t salt) {
    return Rng::stream(master, 0x5EED0000ULL + salt).next_u64();
}

CountsFile make_counts_file(const std::string &label, Counts counts, std::uint64_t derived_seed,
                            const ExperimentConfig &cfg, const nlohmann::json &extra) {
    CountsFile cf;
    cf.label = label;
    cf.counts = std::move(counts);
    cf.date = now_utc_iso8601();
    cf.backend = std::string("msq-sim ") + kToolVersion;
    cf.seed = derived_seed;
    cf.extra = extra;
    cf.extra["master_seed"] = cfg.seed;
    cf.extra["input_state"] = cfg.input_state_desc;
    cf.extra["noise"] = {{"preset", cfg.noise_desc},
                         {"p1_depol", cfg.noise.p1_depol},
                         {"p2_depol", cfg.noise.p2_depol},
                         {"gamma_ad", cfg.noise.gamma_ad},
                         {"readout_flip", cfg.noise.readout_flip}};
    return cf;
}

int run_simulate(const std::string &config_path, const std::string &out_dir) {
    const ExperimentConfig cfg = read_config_file(config_path);
    fs::create_directories(out_dir);
    const QuantumState input3 = tensor(cfg.input_state, QuantumState(1));
    std::vector<std::string> written;

    for (const LineId &line : cfg.lines) {
        const std::string label = line_label(line);
        const auto ordinal = static_cast<std::uint64_t>(line_ordinal(line));
        if (cfg.order.has_value()) {
            // Sequential QND mode: three projective measurements per shot,
            // each readout flipped independently. Gate-noise parameters do
            // not apply (there are no gates).
            const std::uint64_t seed = derive_run_seed(cfg.seed, 0x300 + ordinal);
            const auto result = sequential_line_run(cfg.input_state, line, *cfg.order, cfg.shots,
                                                    seed, cfg.noise.readout_flip);
            nlohmann::json extra{{"mode", "sequential"}, {"order", *cfg.order}};
            const std::string product_path = out_dir + "/" + label + ".product.counts.json";
            write_counts_file(product_path,
                              make_counts_file(label, result.product, seed, cfg, extra));
            written.push_back(product_path);
            for (int k = 0; k < 3; ++k) {
                const int pos = (*cfg.order)[static_cast<std::size_t>(k)];
                const std::string cell = line.kind == LineKind::Row
                                             ? cell_label(line.index, pos)
                                             : cell_label(pos, line.index);
                nlohmann::json slot_extra = extra;
                slot_extra["slot"] = k + 1;
                const std::string slot_path = out_dir + "/" + label + ".slot" +
                                              std::to_string(k + 1) + "." + cell + ".counts.json";
                write_counts_file(slot_path,
                                  make_counts_file(cell, result.per_slot[static_cast<std::size_t>(k)],
                                                   seed, cfg, slot_extra));
                written.push_back(slot_path);
            }
        } else {
            const std::uint64_t seed = derive_run_seed(cfg.seed, 0x100 + ordinal);
            const Counts counts =
                run_shots(build_line_circuit(line), input3, cfg.noise, cfg.shots, seed);
            const std::string path = out_dir + "/" + label + ".counts.json";
            write_counts_file(path, make_counts_file(label, counts, seed, cfg,
                                                     nlohmann::json{{"mode", "ancilla"}}));
            written.push_back(path);
        }
    }
    for (const auto &[row, col] : cfg.cells) {
        const std::string label = cell_label(row, col);
        const std::uint64_t seed =
            derive_run_seed(cfg.seed, 0x200 + static_cast<std::uint64_t>(3 * (row - 1) + col - 1));
        const Counts counts = run_shots(build_observable_circuit(observable_at(row, col)), input3,
                                        cfg.noise, cfg.shots, seed);
        const std::string path = out_dir + "/" + label + ".counts.json";
        write_counts_file(path, make_counts_file(label, counts, seed, cfg,
                                                 nlohmann::json{{"mode", "observable"}}));
        written.push_back(path);
    }
    for (const std::string &path : written) {
        std::cout << "wrote " << path << "\n";
    }
    return kExitOk;
}

int run_analyze(const std::vector<std::string> &counts_paths, const std::string &out_path,
                bool quiet) {
    std::vector<CountsFile> files;
    files.reserve(counts_paths.size());
    for (const std::string &path : counts_paths) {
        files.push_back(read_counts_file(path));
    }
    std::vector<std::string> warnings;
    const std::array<Counts, 6> counts = counts_for_analysis(files, &warnings);
    AnalysisReport rep = analyze(counts);
    rep.notes.insert(rep.notes.end(), warnings.begin(), warnings.end());
    if (!out_path.empty()) {
        write_text_file(out_path, report_to_json(rep).dump(2) + "\n");
    }
    if (!quiet) {
        std::cout << render_summary(rep);
    }
    if (!rep.projection.converged) {
        std::cerr << "hull projection did not converge: residual " << rep.projection.kkt_residual
                  << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_enumerate(const std::string &out_path) {
    const nlohmann::json dump = enumeration_to_json();
    write_text_file(out_path, dump.dump(2) + "\n");
    std::cout << "realism vectors: " << dump["realism"].size() << "\n"
              << "quantum vectors: " << dump["quantum"].size() << "\n"
              << "sign squares:    " << dump["sign_squares"].size() << "\n"
              << "wrote " << out_path << "\n";
    return kExitOk;
}

int run_verify(const VerifyOptions &opts) {
    const std::vector<Check> checks = run_verification(opts);
    for (const Check &c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) {
            std::cout << "  (" << c.detail << ")";
        }
        std::cout << "\n";
    }
    if (!all_passed(checks)) {
        std::cout << "verification FAILED\n";
        return kExitFailure;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

int run_report(const std::string &analysis_path) {
    const AnalysisReport rep = report_from_json(parse_json_file(analysis_path));
    std::cout << render_summary(rep);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Mermin-Peres magic square simulator and contextuality analyzer"};
    app.set_version_flag("--version", std::string("msq ") + kToolVersion);
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    CLI::App *simulate = app.add_subcommand("simulate", "run line/observable programs from a config");
    simulate->add_option("--config", config_path, "experiment config (JSON)")->required();
    simulate->add_option("--out", out_dir, "output directory for counts files");

    std::vector<std::string> counts_paths;
    std::string report_out;
    bool quiet = false;
    CLI::App *analyze_cmd = app.add_subcommand("analyze", "analyze six line counts files");
    analyze_cmd->add_option("--counts", counts_paths, "six counts files, one per line")
        ->required()
        ->expected(6);
    analyze_cmd->add_option("--out", report_out, "write the analysis report (JSON) here");
    analyze_cmd->add_flag("--quiet", quiet, "suppress the human summary");

    std::string enum_out = "vector_sets.json";
    CLI::App *enumerate_cmd =
        app.add_subcommand("enumerate", "dump the realism/quantum vector sets and all 512 squares");
    enumerate_cmd->add_option("--out", enum_out, "output path");

    VerifyOptions vopts;
    std::vector<int> flip_cell;
    CLI::App *verify_cmd = app.add_subcommand("verify", "run the invariant battery");
    verify_cmd->add_option("--unitarity-tol", vopts.unitarity_tol, "gate unitarity tolerance");
    verify_cmd->add_option("--seed", vopts.seed, "seed for the randomized checks");
    verify_cmd->add_option("--flip-cell", flip_cell, "audit hook: flip the sign of cell (row col)")
        ->expected(2);

    std::string analysis_path;
    CLI::App *report_cmd = app.add_subcommand("report", "render the summary of a saved report");
    report_cmd->add_option("--analysis", analysis_path, "analysis report (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(config_path, out_dir);
        }
        if (analyze_cmd->parsed()) {
            return run_analyze(counts_paths, report_out, quiet);
        }
        if (enumerate_cmd->parsed()) {
            return run_enumerate(enum_out);
        }
        if (verify_cmd->parsed()) {
            if (flip_cell.size() == 2) {
                vopts.flip_row = flip_cell[0];
                vopts.flip_col = flip_cell[1];
            }
            return run_verify(vopts);
        }
        if (report_cmd->parsed()) {
            return run_report(analysis_path);
        }
    } catch (const io_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
