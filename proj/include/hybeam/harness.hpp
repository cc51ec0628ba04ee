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
// Monte-Carlo experiment driver: seeded channel draws, per-method precoder
// and combiner design, per-method noise calibration to a target SNR, and
// deterministic CSV/JSON emission. Identical configs produce byte-identical
// output.

#ifndef HYBEAM_HARNESS_HPP
#define HYBEAM_HARNESS_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hybeam/beamform.hpp"
#include "hybeam/channel.hpp"
#include "hybeam/eval.hpp"
#include "hybeam/gcsvd.hpp"
#include "hybeam/types.hpp"

namespace hybeam {

/// Noise variance that makes realized_snr hit the target exactly for the
/// given beamformer pair.
inline double calibrate_noise(const cx_mat& h, const cx_mat& f_total, const cx_mat& w_total,
                              double p_t, double target_snr) {
    if (!(target_snr > 0.0))
        throw std::invalid_argument("calibrate_noise: target SNR must be positive");
    const double wn = sq_fro(w_total);
    if (wn == 0.0)
        throw std::invalid_argument("calibrate_noise: zero combiner");
    const double signal = sq_fro(w_total.t() * h * f_total);
    if (signal == 0.0)
        throw std::runtime_error("calibrate_noise: combined channel is zero, cannot calibrate");
    const double n_s = static_cast<double>(f_total.n_cols);
    return p_t / (n_s * target_snr) * signal / wn;
}

/// Method selection as written in configs, e.g. "aree:pe_smd" or "omp".
struct HarnessMethod {
    MethodSpec spec;
    std::string label;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

}  // namespace detail

inline HarnessMethod parse_method(const std::string& text) {
    const std::string name = detail::to_lower(detail::trim(text));
    HarnessMethod m;
    m.label = name;
    if (name == "fully_digital") {
        m.spec.method = BeamformMethod::fully_digital;
    } else if (name == "pe_omp") {
        m.spec.method = BeamformMethod::pe_omp;
    } else if (name == "pe_smd") {
        m.spec.method = BeamformMethod::pe_smd;
    } else if (name == "omp") {
        m.spec.method = BeamformMethod::omp;
    } else if (name == "aree" || name == "aree:random") {
        m.spec.method = BeamformMethod::aree;
        m.spec.init = AreeInit::random;
    } else if (name == "aree:pe_omp") {
        m.spec.method = BeamformMethod::aree;
        m.spec.init = AreeInit::pe_omp;
    } else if (name == "aree:pe_smd") {
        m.spec.method = BeamformMethod::aree;
        m.spec.init = AreeInit::pe_smd;
    } else {
        throw std::invalid_argument("unknown method '" + text + "'");
    }
    return m;
}

/// Full experiment description: system, method list, sweep axes, trial
/// count and output options. The sweep is the cross product of snr_db and
/// n_rf (each usually a singleton on one axis).
struct ExperimentConfig {
    SystemConfig system;
    std::vector<HarnessMethod> methods;
    std::vector<double> snr_db = {-10.0};
    std::vector<uword> n_rf;  // empty: keep system.n_rf_t
    uword trials = 200;
    std::uint64_t seed = 1;
    std::string out = "results.csv";
    bool emit_beam_patterns = false;
    std::optional<uword> partition;  // applied to aree methods without their own
    uword threads = 1;
    StoppingRule stopping;

    static std::vector<HarnessMethod> default_methods() {
        return {parse_method("fully_digital"), parse_method("aree"), parse_method("pe_omp"),
                parse_method("pe_smd"), parse_method("omp")};
    }

    void validate() const {
        system.validate();
        if (methods.empty())
            throw std::invalid_argument("ExperimentConfig: method list is empty");
        if (snr_db.empty())
            throw std::invalid_argument("ExperimentConfig: snr_db sweep is empty");
        if (trials == 0)
            throw std::invalid_argument("ExperimentConfig: trials must be >= 1");
        if (threads == 0)
            throw std::invalid_argument("ExperimentConfig: threads must be >= 1");
    }
};

/// One (method, sweep point, trial) outcome. Trace columns are NaN for
/// non-iterative methods; NaN prints as an empty CSV field.
struct ResultRow {
    std::string method;
    double snr_db = 0.0;
    uword n_rf = 0;
    uword trial = 0;
    std::uint64_t seed = 0;
    LinkReport report;
    double n_iter1 = std::numeric_limits<double>::quiet_NaN();
    double n_iter2 = std::numeric_limits<double>::quiet_NaN();
    double n_iter3 = std::numeric_limits<double>::quiet_NaN();
    double nmse_bb1 = std::numeric_limits<double>::quiet_NaN();
    double nmse_bb2 = std::numeric_limits<double>::quiet_NaN();
    bool ok = true;
    std::string error;
};

struct RunResult {
    std::vector<ResultRow> rows;           // canonical (snr, n_rf, method, trial) order
    std::vector<std::string> errors;       // one entry per failed row
    std::string beam_pattern_json;         // filled when emit_beam_patterns is set
};

namespace detail {

struct MethodTotals {
    cx_mat f_total;
    cx_mat w_total;
    std::optional<SolveTrace> tx_trace;
};

// Builds the transmit/receive totals of one method on one channel. Derived
// seeds keep random initializations independent across (trial, sweep point,
// method) while staying reproducible.
inline MethodTotals build_method(const ChannelRealization& ch, const GcSvd& gc,
                                 const SystemConfig& sys, const cx_mat& f_opt,
                                 const cx_mat& w_opt, const HarnessMethod& method,
                                 const std::optional<uword>& global_partition,
                                 std::uint64_t seed_tx, std::uint64_t seed_rx,
                                 const StoppingRule& stop) {
    MethodTotals t;
    if (method.spec.method == BeamformMethod::fully_digital) {
        t.f_total = f_opt;
        t.w_total = w_opt;
        return t;
    }
    MethodSpec spec = method.spec;
    if (!spec.partition && global_partition)
        spec.partition = global_partition;
    DesignResult dp = design_precoder(ch, gc, sys, spec, seed_tx, stop);
    DesignResult dc = design_combiner(ch, gc, sys, spec, seed_rx, stop);
    assert_precoder_invariants(dp.precoder);
    assert_precoder_invariants(dc.precoder);
    t.f_total = dp.precoder.total();
    t.w_total = dc.precoder.total();
    t.tx_trace = std::move(dp.trace);
    return t;
}

inline void fill_trace_summary(ResultRow& row, const std::optional<SolveTrace>& trace) {
    if (!trace)
        return;
    double n1 = 0.0;
    double n2 = 0.0;
    for (const auto& [a, b] : trace->inner_counts) {
        n1 += static_cast<double>(a);
        n2 += static_cast<double>(b);
    }
    row.n_iter1 = n1;
    row.n_iter2 = n2;
    row.n_iter3 = static_cast<double>(trace->total_outer);
    if (!trace->nmse_bb1.empty())
        row.nmse_bb1 = trace->nmse_bb1.back();
    if (!trace->nmse_bb2.empty())
        row.nmse_bb2 = trace->nmse_bb2.back();
}

inline std::string format_double(double v) {
    if (std::isnan(v))
        return "";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Pattern magnitudes are plotting data; 6 significant digits keep the file
// a fraction of full double precision. Rounding through text is
// deterministic.
inline double round_sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::strtod(buf, nullptr);
}

inline nlohmann::json grid_to_json(const BeamPatternGrid& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (uword i = 0; i < g.values.n_rows; ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (uword j = 0; j < g.values.n_cols; ++j)
            r.push_back(round_sig6(g.values(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace detail

/// Runs the configured sweep. For each trial the channel is drawn from
/// seed + trial, decomposed once, and every method designs its precoder and
/// combiner per sweep point; each method's own beamformer pair is then used
/// to calibrate the noise variance to the target SNR before evaluation.
/// Failed rows are recorded and skipped, the run continues.
inline RunResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::vector<uword> nrfs = cfg.n_rf.empty() ? std::vector<uword>{cfg.system.n_rf_t} : cfg.n_rf;
    const uword n_snr = cfg.snr_db.size();
    const uword n_nrf = nrfs.size();
    const uword n_methods = cfg.methods.size();

    RunResult result;
    result.rows.resize(n_snr * n_nrf * n_methods * cfg.trials);
    const auto row_index = [&](uword si, uword ni, uword mi, uword trial) {
        return ((si * n_nrf + ni) * n_methods + mi) * cfg.trials + trial;
    };

    const auto run_trial = [&](uword trial) {
        const std::uint64_t trial_seed = cfg.seed + trial;

        // Prefill identity fields so errored rows still carry coordinates.
        for (uword si = 0; si < n_snr; ++si)
            for (uword ni = 0; ni < n_nrf; ++ni)
                for (uword mi = 0; mi < n_methods; ++mi) {
                    ResultRow& row = result.rows[row_index(si, ni, mi, trial)];
                    row.method = cfg.methods[mi].label;
                    row.snr_db = cfg.snr_db[si];
                    row.n_rf = nrfs[ni];
                    row.trial = trial;
                    row.seed = trial_seed;
                }

        ChannelRealization ch;
        GcSvd gc;
        try {
            ch = sample_channel(cfg.system, trial_seed);
            gc = gc_svd(ch);
        } catch (const std::exception& ex) {
            for (uword si = 0; si < n_snr; ++si)
                for (uword ni = 0; ni < n_nrf; ++ni)
                    for (uword mi = 0; mi < n_methods; ++mi) {
                        ResultRow& row = result.rows[row_index(si, ni, mi, trial)];
                        row.ok = false;
                        row.error = ex.what();
                    }
            return;
        }

        for (uword ni = 0; ni < n_nrf; ++ni) {
            SystemConfig sys = cfg.system;
            sys.n_rf_t = nrfs[ni];
            sys.n_rf_r = nrfs[ni];
            cx_mat f_opt;
            cx_mat w_opt;
            std::string point_error;
            try {
                sys.validate();
                f_opt = optimal_precoder(gc.svd, sys.n_s);
                w_opt = optimal_combiner(gc.svd, sys.n_s);
            } catch (const std::exception& ex) {
                point_error = ex.what();
            }

            for (uword mi = 0; mi < n_methods; ++mi) {
                detail::MethodTotals totals;
                std::string method_error = point_error;
                if (method_error.empty()) {
                    try {
                        totals = detail::build_method(
                            ch, gc, sys, f_opt, w_opt, cfg.methods[mi], cfg.partition,
                            derive_seed(cfg.seed, trial, ni, 2 * mi),
                            derive_seed(cfg.seed, trial, ni, 2 * mi + 1), cfg.stopping);
                    } catch (const std::exception& ex) {
                        method_error = ex.what();
                    }
                }

                for (uword si = 0; si < n_snr; ++si) {
                    ResultRow& row = result.rows[row_index(si, ni, mi, trial)];
                    if (!method_error.empty()) {
                        row.ok = false;
                        row.error = method_error;
                        continue;
                    }
                    try {
                        const double target = std::pow(10.0, cfg.snr_db[si] / 10.0);
                        const double sigma =
                            calibrate_noise(ch.h, totals.f_total, totals.w_total, sys.p_t, target);
                        row.report.spectral_efficiency = spectral_efficiency(
                            ch.h, totals.f_total, totals.w_total, sys.p_t, sigma);
                        row.report.mutual_information =
                            mutual_information(ch.h, totals.f_total, sys.p_t, sigma);
                        row.report.realized_snr =
                            realized_snr(ch.h, totals.f_total, totals.w_total, sys.p_t, sigma);
                        row.report.objective = sq_fro(f_opt - totals.f_total);
                        row.report.gap_energy =
                            sq_fro(channel_gap(ch.h, f_opt, w_opt, totals.f_total, totals.w_total));
                        detail::fill_trace_summary(row, totals.tx_trace);
                    } catch (const std::exception& ex) {
                        row.ok = false;
                        row.error = ex.what();
                    }
                }
            }
        }
    };

    if (cfg.threads <= 1) {
        for (uword trial = 0; trial < cfg.trials; ++trial)
            run_trial(trial);
    } else {
        // Trials are independent; shard them over a fixed thread count.
        // Rows land in preallocated slots, so output order never depends on
        // completion order.
        std::vector<std::future<void>> futures;
        const uword n_threads = std::min<uword>(cfg.threads, cfg.trials);
        for (uword t = 0; t < n_threads; ++t) {
            futures.push_back(std::async(std::launch::async, [&, t]() {
                for (uword trial = t; trial < cfg.trials; trial += n_threads)
                    run_trial(trial);
            }));
        }
        for (auto& f : futures)
            f.get();
    }

    for (const ResultRow& row : result.rows) {
        if (!row.ok) {
            std::ostringstream os;
            os << "method=" << row.method << " snr_db=" << row.snr_db << " n_rf=" << row.n_rf
               << " trial=" << row.trial << ": " << row.error;
            result.errors.push_back(os.str());
        }
    }

    if (cfg.emit_beam_patterns) {
        // One realization (trial 0, first sweep point) is enough for the
        // angular view; grids grow with the grid spec, not the array size.
        SystemConfig sys = cfg.system;
        sys.n_rf_t = nrfs[0];
        sys.n_rf_r = nrfs[0];
        sys.validate();
        const ChannelRealization ch = sample_channel(cfg.system, cfg.seed);
        const GcSvd gc = gc_svd(ch);
        const cx_mat f_opt = optimal_precoder(gc.svd, sys.n_s);
        const cx_mat w_opt = optimal_combiner(gc.svd, sys.n_s);

        nlohmann::json j;
        j["snr_db"] = cfg.snr_db[0];
        j["n_rf"] = nrfs[0];
        j["trial"] = 0;
        j["seed"] = ch.seed_used;
        const BeamGridSpec grid = BeamGridSpec::defaults();
        j["phi_grid"] = std::vector<double>(grid.phi_t.begin(), grid.phi_t.end());
        j["theta_grid"] = std::vector<double>(grid.theta_t.begin(), grid.theta_t.end());
        j["ordering"] = "row = i_phi_r*n_theta + i_theta_r; col = i_phi_t*n_theta + i_theta_t";
        for (uword mi = 0; mi < n_methods; ++mi) {
            const HarnessMethod& method = cfg.methods[mi];
            const detail::MethodTotals totals = detail::build_method(
                ch, gc, sys, f_opt, w_opt, method, cfg.partition,
                derive_seed(cfg.seed, 0, 0, 2 * mi), derive_seed(cfg.seed, 0, 0, 2 * mi + 1),
                cfg.stopping);
            const cx_mat h_eq = equivalent_channel(ch.h, totals.f_total, totals.w_total);
            j["methods"][method.label]["h_eq"] = detail::grid_to_json(beam_pattern(h_eq, grid));
            if (method.spec.method != BeamformMethod::fully_digital) {
                const cx_mat gap = channel_gap(ch.h, f_opt, w_opt, totals.f_total, totals.w_total);
                j["methods"][method.label]["h_gap"] = detail::grid_to_json(beam_pattern(gap, grid));
            }
        }
        result.beam_pattern_json = j.dump();
    }

    return result;
}

/// Serializes per-trial rows plus mean/std aggregate rows per
/// (method, sweep point). Failed rows are omitted (they are reported in
/// RunResult::errors); aggregates cover the successful rows.
inline std::string to_csv(const ExperimentConfig& cfg, const RunResult& result) {
    const std::vector<uword> nrfs = cfg.n_rf.empty() ? std::vector<uword>{cfg.system.n_rf_t} : cfg.n_rf;
    const uword n_snr = cfg.snr_db.size();
    const uword n_nrf = nrfs.size();
    const uword n_methods = cfg.methods.size();
    const auto row_index = [&](uword si, uword ni, uword mi, uword trial) {
        return ((si * n_nrf + ni) * n_methods + mi) * cfg.trials + trial;
    };

    std::ostringstream os;
    os << "method,snr_db,n_rf,trial,seed,se_bits,mi_bits,objective,gap_energy,"
          "n_iter1,n_iter2,n_iter3,nmse_bb1,nmse_bb2\n";

    constexpr uword n_metrics = 9;
    const auto metrics_of = [](const ResultRow& r) {
        return std::array<double, n_metrics>{
            r.report.spectral_efficiency, r.report.mutual_information, r.report.objective,
            r.report.gap_energy, r.n_iter1, r.n_iter2, r.n_iter3, r.nmse_bb1, r.nmse_bb2};
    };

    for (uword si = 0; si < n_snr; ++si) {
        for (uword ni = 0; ni < n_nrf; ++ni) {
            for (uword mi = 0; mi < n_methods; ++mi) {
                std::array<double, n_metrics> sum{};
                std::array<uword, n_metrics> count{};
                std::vector<const ResultRow*> ok_rows;
                for (uword trial = 0; trial < cfg.trials; ++trial) {
                    const ResultRow& row = result.rows[row_index(si, ni, mi, trial)];
                    if (!row.ok)
                        continue;
                    ok_rows.push_back(&row);
                    os << row.method << ',' << detail::format_double(row.snr_db) << ','
                       << row.n_rf << ',' << row.trial << ',' << row.seed << ','
                       << detail::format_double(row.report.spectral_efficiency) << ','
                       << detail::format_double(row.report.mutual_information) << ','
                       << detail::format_double(row.report.objective) << ','
                       << detail::format_double(row.report.gap_energy) << ','
                       << detail::format_double(row.n_iter1) << ','
                       << detail::format_double(row.n_iter2) << ','
                       << detail::format_double(row.n_iter3) << ','
                       << detail::format_double(row.nmse_bb1) << ','
                       << detail::format_double(row.nmse_bb2) << '\n';
                    const auto m = metrics_of(row);
                    for (uword k = 0; k < n_metrics; ++k)
                        if (!std::isnan(m[k])) {
                            sum[k] += m[k];
                            ++count[k];
                        }
                }

                std::array<double, n_metrics> mean;
                mean.fill(std::numeric_limits<double>::quiet_NaN());
                for (uword k = 0; k < n_metrics; ++k)
                    if (count[k] > 0)
                        mean[k] = sum[k] / static_cast<double>(count[k]);

                std::array<double, n_metrics> sq{};
                for (const ResultRow* row : ok_rows) {
                    const auto m = metrics_of(*row);
                    for (uword k = 0; k < n_metrics; ++k)
                        if (!std::isnan(m[k]))
                            sq[k] += (m[k] - mean[k]) * (m[k] - mean[k]);
                }
                std::array<double, n_metrics> stdev;
                stdev.fill(std::numeric_limits<double>::quiet_NaN());
                for (uword k = 0; k < n_metrics; ++k)
                    if (count[k] > 0)
                        stdev[k] = std::sqrt(sq[k] / static_cast<double>(count[k]));

                const std::string& label = cfg.methods[mi].label;
                for (const char* agg : {"mean", "std"}) {
                    const auto& vals = (std::string(agg) == "mean") ? mean : stdev;
                    os << label << ',' << detail::format_double(cfg.snr_db[si]) << ','
                       << nrfs[ni] << ',' << agg << ',' << "";
                    for (uword k = 0; k < n_metrics; ++k)
                        os << ',' << detail::format_double(vals[k]);
                    os << '\n';
                }
            }
        }
    }
    return os.str();
}

// ---------- config file parsing ----------

/// Parses the declarative key-value config format:
///
///   [system]
///   n_t = 64
///   ...
///   [experiment]
///   methods = fully_digital, aree:pe_smd, omp
///   snr_db = -10, -5, 0
///
/// '#' and ';' start comments. Unknown sections or keys are rejected.
inline ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.methods = ExperimentConfig::default_methods();

    std::string section;
    std::istringstream in(text);
    std::string raw;
    uword line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": unterminated section header");
            section = detail::to_lower(detail::trim(line.substr(1, line.size() - 2)));
            if (section != "system" && section != "experiment")
                throw std::invalid_argument("config: unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = detail::to_lower(detail::trim(line.substr(0, eq)));
        const std::string value = detail::trim(line.substr(eq + 1));

        const auto as_uword = [&]() -> uword { return static_cast<uword>(std::stoull(value)); };
        const auto as_double = [&]() -> double { return std::stod(value); };
        const auto as_bool = [&]() -> bool {
            const std::string v = detail::to_lower(value);
            if (v == "true" || v == "1" || v == "yes")
                return true;
            if (v == "false" || v == "0" || v == "no")
                return false;
            throw std::invalid_argument("config: bad boolean '" + value + "'");
        };

        if (section == "system") {
            if (key == "n_t")
                cfg.system.n_t = as_uword();
            else if (key == "n_r")
                cfg.system.n_r = as_uword();
            else if (key == "n_s")
                cfg.system.n_s = as_uword();
            else if (key == "n_rf_t")
                cfg.system.n_rf_t = as_uword();
            else if (key == "n_rf_r")
                cfg.system.n_rf_r = as_uword();
            else if (key == "p_t")
                cfg.system.p_t = as_double();
            else if (key == "sigma_n_sq")
                cfg.system.sigma_n_sq = as_double();
            else if (key == "n_cl")
                cfg.system.n_cl = as_uword();
            else if (key == "n_ray")
                cfg.system.n_ray = as_uword();
            else if (key == "sigma_phi_deg")
                cfg.system.sigma_phi = as_double() * pi / 180.0;
            else if (key == "sigma_theta_deg")
                cfg.system.sigma_theta = as_double() * pi / 180.0;
            else if (key == "d_over_lambda")
                cfg.system.d_over_lambda = as_double();
            else
                throw std::invalid_argument("config: unknown key '" + key + "' in [system]");
        } else if (section == "experiment") {
            if (key == "methods") {
                cfg.methods.clear();
                for (const std::string& item : detail::split_list(value))
                    cfg.methods.push_back(parse_method(item));
            } else if (key == "snr_db") {
                cfg.snr_db.clear();
                for (const std::string& item : detail::split_list(value))
                    cfg.snr_db.push_back(std::stod(item));
            } else if (key == "n_rf") {
                cfg.n_rf.clear();
                for (const std::string& item : detail::split_list(value))
                    cfg.n_rf.push_back(static_cast<uword>(std::stoull(item)));
            } else if (key == "trials") {
                cfg.trials = as_uword();
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "out") {
                cfg.out = value;
            } else if (key == "emit_beam_patterns") {
                cfg.emit_beam_patterns = as_bool();
            } else if (key == "partition") {
                cfg.partition = as_uword();
            } else if (key == "threads") {
                cfg.threads = as_uword();
            } else {
                throw std::invalid_argument("config: unknown key '" + key + "' in [experiment]");
            }
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": key outside any section");
        }
    }
    return cfg;
}

}  // namespace hybeam

#endif  // HYBEAM_HARNESS_HPP
