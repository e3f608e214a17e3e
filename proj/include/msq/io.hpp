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

#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "msq/analysis.hpp"
#include "msq/counts.hpp"
#include "msq/magic_square.hpp"
#include "msq/noise.hpp"
#include "msq/state.hpp"
#include "msq/vectors.hpp"

namespace msq {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char *kToolVersion = "0.1.0";

/// Malformed persistent input (config or counts file).
class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string &msg) : std::runtime_error(msg) {}
};

inline std::string now_utc_iso8601() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline bool is_line_or_cell_label(const std::string &label) {
    try {
        parse_line_label(label);
        return true;
    } catch (const std::invalid_argument &) {
    }
    try {
        parse_cell_label(label);
        return true;
    } catch (const std::invalid_argument &) {
    }
    return false;
}

// ---------------------------------------------------------------------------
// Counts files
// ---------------------------------------------------------------------------

/// Persistent counts record. The schema is stable and human-readable so that
/// counts obtained elsewhere (e.g. from cloud hardware) can be converted by
/// hand: bit '0' is the +1 outcome, bit '1' the -1 outcome.
struct CountsFile {
    int schema_version = kSchemaVersion;
    std::string label;  // one of the six line names or nine cell names
    Counts counts;
    std::string date;
    std::string backend;
    std::optional<std::uint64_t> seed;
    nlohmann::json extra = nlohmann::json::object();
};

inline nlohmann::json counts_file_to_json(const CountsFile &cf) {
    nlohmann::json j;
    j["schema_version"] = cf.schema_version;
    j["label"] = cf.label;
    j["shots"] = cf.counts.shots;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto &[key, n] : cf.counts.histogram) {
        hist[key] = n;
    }
    j["counts"] = hist;
    nlohmann::json meta = nlohmann::json::object();
    meta["date"] = cf.date;
    meta["backend"] = cf.backend;
    if (cf.seed.has_value()) {
        meta["seed"] = *cf.seed;
    } else {
        meta["seed"] = nullptr;
    }
    for (auto it = cf.extra.begin(); it != cf.extra.end(); ++it) {
        meta[it.key()] = it.value();
    }
    j["metadata"] = meta;
    return j;
}

inline CountsFile counts_file_from_json(const nlohmann::json &j) {
    CountsFile cf;
    try {
        cf.schema_version = j.at("schema_version").get<int>();
        if (cf.schema_version != kSchemaVersion) {
            throw io_error("unsupported counts schema_version " +
                           std::to_string(cf.schema_version));
        }
        cf.label = j.at("label").get<std::string>();
        if (!is_line_or_cell_label(cf.label)) {
            throw io_error("counts label '" + cf.label + "' is not a line or cell name");
        }
        cf.counts.shots = j.at("shots").get<std::uint64_t>();
        for (const auto &[key, value] : j.at("counts").items()) {
            for (char ch : key) {
                if (ch != '0' && ch != '1') {
                    throw io_error("counts key '" + key + "' is not a bitstring");
                }
            }
            cf.counts.histogram[key] = value.get<std::uint64_t>();
        }
        if (!cf.counts.consistent()) {
            throw io_error("counts do not sum to shots");
        }
        if (j.contains("metadata")) {
            const nlohmann::json &meta = j.at("metadata");
            cf.date = meta.value("date", "");
            cf.backend = meta.value("backend", "");
            if (meta.contains("seed") && !meta.at("seed").is_null()) {
                cf.seed = meta.at("seed").get<std::uint64_t>();
            }
            for (auto it = meta.begin(); it != meta.end(); ++it) {
                if (it.key() != "date" && it.key() != "backend" && it.key() != "seed") {
                    cf.extra[it.key()] = it.value();
                }
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw io_error(std::string("malformed counts file: ") + e.what());
    }
    return cf;
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot write '" + path + "'");
    }
    out << content;
}

inline nlohmann::json parse_json_file(const std::string &path) {
    try {
        return nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception &e) {
        throw io_error("invalid JSON in '" + path + "': " + e.what());
    }
}

inline CountsFile read_counts_file(const std::string &path) {
    return counts_file_from_json(parse_json_file(path));
}

inline void write_counts_file(const std::string &path, const CountsFile &cf) {
    write_text_file(path, counts_file_to_json(cf).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Experiment configuration
// ---------------------------------------------------------------------------

/// A parsed simulation request: which lines/cells to run, on which input
/// state, how many shots, under which noise model.
struct ExperimentConfig {
    std::vector<LineId> lines;
    std::vector<std::pair<int, int>> cells;
    QuantumState input_state{2};
    std::string input_state_desc = "+1_z,+1_z";
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
    NoiseModel noise;
    std::string noise_desc = "none";
    std::optional<std::array<int, 3>> order;  // QND sequential mode when set
};

inline QuantumState parse_input_state(const nlohmann::json &j, std::string *desc) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto comma = s.find(',');
        if (comma == std::string::npos) {
            throw io_error("input_state string must be '<eig>,<eig>', e.g. '+1_z,+1_z'");
        }
        *desc = s;
        try {
            return tensor(pauli_eigenstate(s.substr(0, comma)),
                          pauli_eigenstate(s.substr(comma + 1)));
        } catch (const std::invalid_argument &e) {
            throw io_error(e.what());
        }
    }
    if (j.is_array() && j.size() == 2 && j[0].is_string()) {
        *desc = j[0].get<std::string>() + "," + j[1].get<std::string>();
        try {
            return tensor(pauli_eigenstate(j[0].get<std::string>()),
                          pauli_eigenstate(j[1].get<std::string>()));
        } catch (const std::invalid_argument &e) {
            throw io_error(e.what());
        }
    }
    if (j.is_array() && j.size() == 4) {
        std::vector<cdouble> amps;
        for (const auto &entry : j) {
            if (!entry.is_array() || entry.size() != 2) {
                throw io_error("explicit amplitudes must be [re, im] pairs");
            }
            amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
        *desc = "custom amplitudes";
        try {
            return QuantumState::from_amplitudes(2, std::move(amps));
        } catch (const std::invalid_argument &e) {
            throw io_error(e.what());
        }
    }
    throw io_error("input_state must be an eigenstate pair or four [re, im] amplitudes");
}

inline NoiseModel parse_noise(const nlohmann::json &j, std::string *desc) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        *desc = name;
        if (name == "none") {
            return NoiseModel::none();
        }
        if (name == "ibmqx4-like") {
            return NoiseModel::ibmqx4_like();
        }
        throw io_error("unknown noise preset '" + name + "'");
    }
    if (j.is_object()) {
        NoiseModel m;
        m.p1_depol = j.value("p1_depol", 0.0);
        m.p2_depol = j.value("p2_depol", 0.0);
        m.gamma_ad = j.value("gamma_ad", 0.0);
        m.readout_flip = j.value("readout_flip", 0.0);
        try {
            m.validate();
        } catch (const std::invalid_argument &e) {
            throw io_error(e.what());
        }
        *desc = "custom";
        return m;
    }
    throw io_error("noise must be a preset name or a parameter object");
}

inline ExperimentConfig parse_config(const nlohmann::json &j) {
    ExperimentConfig cfg;
    try {
        if (j.value("schema_version", kSchemaVersion) != kSchemaVersion) {
            throw io_error("unsupported config schema_version");
        }
        if (j.contains("lines")) {
            const auto &lines = j.at("lines");
            if (lines.is_string() && lines.get<std::string>() == "all") {
                for (int ordinal = 0; ordinal < 6; ++ordinal) {
                    cfg.lines.push_back(line_from_ordinal(ordinal));
                }
            } else if (lines.is_array()) {
                for (const auto &entry : lines) {
                    try {
                        cfg.lines.push_back(parse_line_label(entry.get<std::string>()));
                    } catch (const std::invalid_argument &e) {
                        throw io_error(e.what());
                    }
                }
            } else {
                throw io_error("lines must be \"all\" or an array of labels");
            }
        }
        if (j.contains("observables")) {
            for (const auto &entry : j.at("observables")) {
                try {
                    cfg.cells.push_back(parse_cell_label(entry.get<std::string>()));
                } catch (const std::invalid_argument &e) {
                    throw io_error(e.what());
                }
            }
        }
        if (cfg.lines.empty() && cfg.cells.empty()) {
            throw io_error("config selects no lines or observables");
        }
        if (j.contains("input_state")) {
            cfg.input_state = parse_input_state(j.at("input_state"), &cfg.input_state_desc);
        } else {
            cfg.input_state = tensor(pauli_eigenstate("+1_z"), pauli_eigenstate("+1_z"));
        }
        cfg.shots = j.value("shots", std::uint64_t{8192});
        if (cfg.shots < 1) {
            throw io_error("shots must be >= 1");
        }
        cfg.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("noise")) {
            cfg.noise = parse_noise(j.at("noise"), &cfg.noise_desc);
        }
        if (j.contains("order")) {
            const auto &order = j.at("order");
            if (!order.is_array() || order.size() != 3) {
                throw io_error("order must be a permutation of [1,2,3]");
            }
            std::array<int, 3> perm{order[0].get<int>(), order[1].get<int>(), order[2].get<int>()};
            bool seen[3] = {false, false, false};
            for (int slot : perm) {
                if (slot < 1 || slot > 3 || seen[slot - 1]) {
                    throw io_error("order must be a permutation of [1,2,3]");
                }
                seen[slot - 1] = true;
            }
            if (cfg.lines.empty()) {
                throw io_error("order requires at least one line");
            }
            cfg.order = perm;
        }
    } catch (const nlohmann::json::exception &e) {
        throw io_error(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

inline ExperimentConfig read_config_file(const std::string &path) {
    return parse_config(parse_json_file(path));
}

// ---------------------------------------------------------------------------
// Analysis report serialization
// ---------------------------------------------------------------------------

inline nlohmann::json report_to_json(const AnalysisReport &rep) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["generated_by"] = std::string("msq ") + kToolVersion;
    nlohmann::json lines = nlohmann::json::array();
    for (int i = 0; i < 6; ++i) {
        const LineStats &s = rep.lines[static_cast<std::size_t>(i)];
        nlohmann::json line;
        line["label"] = line_label(line_from_ordinal(i));
        line["n_plus"] = s.n_plus;
        line["n_minus"] = s.n_minus;
        line["shots"] = s.shots;
        line["mean"] = s.mean;
        line["sigma"] = s.sigma;
        line["sigma_degenerate"] = s.degenerate;
        if (s.degenerate) {
            line["sigma_rule_of_three"] = s.sigma_rule_of_three;
        }
        lines.push_back(line);
    }
    j["lines"] = lines;
    j["result_vector"] = rep.result_vector;
    j["sigma_vector"] = rep.sigma_vector;
    j["overlaps"] = rep.overlaps;
    j["max_overlap"] = {{"value", rep.overlap_max.value},
                        {"index", rep.overlap_max.index},
                        {"vector", rep.overlap_max.argmax}};
    j["hull"] = {{"distance", rep.projection.distance},
                 {"nearest_point", rep.projection.nearest_point},
                 {"weights", rep.projection.weights},
                 {"kkt_residual", rep.projection.kkt_residual},
                 {"iterations", rep.projection.iterations},
                 {"converged", rep.projection.converged}};
    j["sigma_radius"] = rep.sigma_sphere_radius;
    if (rep.score_unbounded) {
        j["score"] = nullptr;
        j["score_note"] = "unbounded: sigma radius is zero with nonzero hull distance";
    } else {
        j["score"] = rep.score;
        j["score_note"] = nullptr;
    }
    j["violation"] = rep.violation;
    j["notes"] = rep.notes;
    return j;
}

inline AnalysisReport report_from_json(const nlohmann::json &j) {
    AnalysisReport rep;
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) {
            throw io_error("unsupported report schema_version");
        }
        const nlohmann::json &lines = j.at("lines");
        if (lines.size() != 6) {
            throw io_error("report must carry six lines");
        }
        for (std::size_t i = 0; i < 6; ++i) {
            LineStats &s = rep.lines[i];
            s.n_plus = lines[i].at("n_plus").get<std::uint64_t>();
            s.n_minus = lines[i].at("n_minus").get<std::uint64_t>();
            s.shots = lines[i].at("shots").get<std::uint64_t>();
            s.mean = lines[i].at("mean").get<double>();
            s.sigma = lines[i].at("sigma").get<double>();
            s.degenerate = lines[i].value("sigma_degenerate", false);
            s.sigma_rule_of_three = lines[i].value("sigma_rule_of_three", 0.0);
        }
        rep.result_vector = j.at("result_vector").get<Point6>();
        rep.sigma_vector = j.at("sigma_vector").get<Point6>();
        rep.overlaps = j.at("overlaps").get<std::vector<double>>();
        rep.overlap_max.value = j.at("max_overlap").at("value").get<double>();
        rep.overlap_max.index = j.at("max_overlap").at("index").get<int>();
        rep.overlap_max.argmax = j.at("max_overlap").at("vector").get<LineSigns>();
        rep.projection.distance = j.at("hull").at("distance").get<double>();
        rep.projection.nearest_point = j.at("hull").at("nearest_point").get<Point6>();
        rep.projection.weights = j.at("hull").at("weights").get<std::vector<double>>();
        rep.projection.kkt_residual = j.at("hull").at("kkt_residual").get<double>();
        rep.projection.iterations = j.at("hull").at("iterations").get<int>();
        rep.projection.converged = j.at("hull").at("converged").get<bool>();
        rep.sigma_sphere_radius = j.at("sigma_radius").get<double>();
        if (j.at("score").is_null()) {
            rep.score_unbounded = true;
            rep.score = std::numeric_limits<double>::infinity();
        } else {
            rep.score = j.at("score").get<double>();
        }
        rep.violation = j.at("violation").get<bool>();
        rep.notes = j.at("notes").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception &e) {
        throw io_error(std::string("malformed analysis report: ") + e.what());
    }
    return rep;
}

inline std::string format_significant(double value, int digits) {
    std::ostringstream ss;
    ss.precision(digits);
    ss << value;
    return ss.str();
}

/// Human-readable summary: the per-line table plus the four headline numbers.
inline std::string render_summary(const AnalysisReport &rep) {
    std::ostringstream out;
    out << "line    +1      -1      mean      std dev\n";
    for (int i = 0; i < 6; ++i) {
        const LineStats &s = rep.lines[static_cast<std::size_t>(i)];
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-6s  %-6llu  %-6llu  %+.3f    %.3g\n",
                      line_label(line_from_ordinal(i)).c_str(),
                      static_cast<unsigned long long>(s.n_plus),
                      static_cast<unsigned long long>(s.n_minus), s.mean, s.sigma);
        out << buf;
    }
    out << "\n";
    out << "max overlap v.q   = " << format_significant(rep.overlap_max.value, 4) << "  (bound for realism: 4)\n";
    out << "hull distance     = " << format_significant(rep.projection.distance, 4) << "\n";
    out << "sigma radius      = " << format_significant(rep.sigma_sphere_radius, 3) << "\n";
    if (rep.score_unbounded) {
        out << "score             = unbounded (zero sigma radius)\n";
    } else {
        out << "score             = " << format_significant(rep.score, 3)
            << " standard deviations\n";
    }
    out << "verdict           = "
        << (rep.violation ? "VIOLATES realistic non-contextual models"
                          : "consistent with realistic non-contextual models")
        << "\n";
    for (const std::string &note : rep.notes) {
        out << "note: " << note << "\n";
    }
    return out.str();
}

/// Reconstruct the counts (in canonical line order) from six files, checking
/// that every line appears exactly once. Duplicate or missing labels are
/// precondition violations, distinct from malformed files.
inline std::array<Counts, 6> counts_for_analysis(const std::vector<CountsFile> &files,
                                                 std::vector<std::string> *warnings) {
    std::array<Counts, 6> counts;
    std::array<bool, 6> seen{};
    for (const CountsFile &cf : files) {
        LineId line{};
        try {
            line = parse_line_label(cf.label);
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("analysis needs line counts, got label '" + cf.label + "'");
        }
        const auto ordinal = static_cast<std::size_t>(line_ordinal(line));
        if (seen[ordinal]) {
            throw std::invalid_argument("duplicate counts for " + cf.label);
        }
        seen[ordinal] = true;
        counts[ordinal] = cf.counts;
    }
    for (int i = 0; i < 6; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("missing counts for " + line_label(line_from_ordinal(i)));
        }
    }
    if (warnings != nullptr) {
        for (std::size_t i = 1; i < 6; ++i) {
            if (counts[i].shots != counts[0].shots) {
                warnings->push_back("shot counts differ between lines");
                break;
            }
        }
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Vector-set dump
// ---------------------------------------------------------------------------

inline nlohmann::json enumeration_to_json() {
    const VectorSets &sets = VectorSets::standard();
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["realism"] = sets.realism;
    j["quantum"] = sets.quantum;
    nlohmann::json squares = nlohmann::json::array();
    for (const auto &[square, products] : enumerate_sign_squares()) {
        nlohmann::json s;
        s["cells"] = square.cells;
        s["products"] = products;
        squares.push_back(s);
    }
    j["sign_squares"] = squares;
    return j;
}

}  // namespace msq
