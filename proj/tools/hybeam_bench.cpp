// SPDX-License-Identifier: Apache-2.0
//
// hybeam: hybrid beamforming algorithms for mmWave XL-MIMO links
// Copyright (C) 2026 hybeam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Benchmark CLI: runs a configured Monte-Carlo sweep and writes one CSV
// row per (method, sweep point, trial) plus mean/std aggregates, and
// optionally the beam-pattern grids of the first realization as JSON.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hybeam/hybeam.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybeam-bench: Monte-Carlo spectral-efficiency sweeps for hybrid beamforming"};

    std::string config_path;
    std::string out_path;
    std::vector<double> snr_db;
    std::vector<long long> n_rf;
    std::vector<std::string> methods;
    long long trials = -1;
    long long seed = -1;
    long long partition = -1;
    long long threads = -1;
    bool emit_beam_patterns = false;

    app.add_option("--config", config_path, "experiment config file (key = value sections)");
    app.add_option("--seed", seed, "base seed; trial t uses seed+t");
    app.add_option("--trials", trials, "channel realizations per sweep point");
    app.add_option("--snr-db", snr_db, "target SNR sweep in dB")->delimiter(',');
    app.add_option("--n-rf", n_rf, "RF-chain sweep (applies to both ends)")->delimiter(',');
    app.add_option("--methods", methods,
                   "methods: fully_digital, aree[:random|:pe_omp|:pe_smd], pe_omp, pe_smd, omp")
        ->delimiter(',');
    app.add_option("--out", out_path, "output CSV path");
    app.add_flag("--emit-beam-patterns", emit_beam_patterns,
                 "also write beam-pattern grids of the first realization as JSON");
    app.add_option("--partition", partition, "leading digital-block rows for aree");
    app.add_option("--threads", threads, "worker threads over trials (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        hybeam::ExperimentConfig cfg;
        cfg.methods = hybeam::ExperimentConfig::default_methods();
        if (!config_path.empty())
            cfg = hybeam::parse_experiment_config(read_file(config_path));

        if (seed >= 0)
            cfg.seed = static_cast<std::uint64_t>(seed);
        if (trials >= 0)
            cfg.trials = static_cast<hybeam::uword>(trials);
        if (!snr_db.empty())
            cfg.snr_db = snr_db;
        if (!n_rf.empty()) {
            cfg.n_rf.clear();
            for (long long v : n_rf)
                cfg.n_rf.push_back(static_cast<hybeam::uword>(v));
        }
        if (!methods.empty()) {
            cfg.methods.clear();
            for (const std::string& m : methods)
                cfg.methods.push_back(hybeam::parse_method(m));
        }
        if (!out_path.empty())
            cfg.out = out_path;
        if (emit_beam_patterns)
            cfg.emit_beam_patterns = true;
        if (partition >= 0)
            cfg.partition = static_cast<hybeam::uword>(partition);
        if (threads >= 1)
            cfg.threads = static_cast<hybeam::uword>(threads);

        const hybeam::RunResult result = hybeam::run_experiment(cfg);
        write_file(cfg.out, hybeam::to_csv(cfg, result));

        std::size_t ok_rows = 0;
        for (const auto& row : result.rows)
            ok_rows += row.ok ? 1 : 0;
        std::cout << "wrote " << ok_rows << "/" << result.rows.size() << " rows to " << cfg.out
                  << "\n";

        if (!result.beam_pattern_json.empty()) {
            const std::string beams_path =
                std::filesystem::path(cfg.out).replace_extension().string() + "_beams.json";
            write_file(beams_path, result.beam_pattern_json);
            std::cout << "wrote beam patterns to " << beams_path << "\n";
        }

        if (!result.errors.empty()) {
            std::cerr << result.errors.size() << " row(s) failed:\n";
            for (const auto& e : result.errors)
                std::cerr << "  " << e << "\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
