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
// Precoder and combiner constructions. The centerpiece is the AREE solver
// (alternating residual error elimination): the analog matrix is split into
// two column blocks with matching digital row blocks, and the two
// low-dimensional subproblems alternately cancel each other's residual
// against the fully-digital target. Both digital blocks are row full-rank,
// so each subproblem decouples its analog and digital factors cleanly.
//
// PE-OMP, PE-SMD and a classic OMP projection scheme provide non-iterative
// constructions that double as solver initializers.

#ifndef HYBEAM_BEAMFORM_HPP
#define HYBEAM_BEAMFORM_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hybeam/gcsvd.hpp"
#include "hybeam/rng.hpp"
#include "hybeam/types.hpp"

namespace hybeam {

/// Analog/digital factor pair. Analog entries all have modulus
/// 1/sqrt(rows); a power-normalized transmit pair additionally satisfies
/// ||f_rf * f_bb||_F^2 = n_s.
struct HybridPrecoder {
    enum class Side { transmitter, receiver };

    cx_mat f_rf;  // N x n_rf, constant-modulus entries
    cx_mat f_bb;  // n_rf x n_s
    Side side = Side::transmitter;
    bool power_normalized = false;

    cx_mat total() const { return f_rf * f_bb; }
    double modulus() const { return 1.0 / std::sqrt(static_cast<double>(f_rf.n_rows)); }
};

/// Throws if the constant-modulus or (for normalized transmit pairs) the
/// power contract is violated.
inline void assert_precoder_invariants(const HybridPrecoder& p) {
    const double mod = p.modulus();
    const arma::mat mags = arma::abs(p.f_rf);
    if (mags.n_elem > 0 && arma::abs(mags - mod).max() > 1e-14)
        throw std::runtime_error("HybridPrecoder: analog entry off the constant modulus");
    if (p.side == HybridPrecoder::Side::transmitter && p.power_normalized) {
        const double n_s = static_cast<double>(p.f_bb.n_cols);
        if (std::abs(sq_fro(p.f_rf * p.f_bb) - n_s) > 1e-10)
            throw std::runtime_error("HybridPrecoder: transmit power off n_s");
    }
}

/// Rows assigned to the leading digital block. Valid range is
/// n_rf - n_s <= n <= n_s, which keeps both digital blocks row full-rank;
/// n = n_s (square leading block) performs best.
struct PartitionSpec {
    uword n = 0;
};

struct StoppingRule {
    // The inner tolerance is calibrated so that measured inner counts match
    // the regime the algorithm is known to need (about 8 and 5 alternations
    // for the two subproblems on a well-initialized first pass, 2-3 after);
    // a much tighter tolerance just runs every loop into the cap.
    double inner_tol = 1e-2;  // relative objective change per inner loop
    uword max_inner = 20;
    double outer_tol = 1e-4;  // relative change of the outer objective
    uword max_outer = 10;
};

/// Per-iteration diagnostics of one AREE solve. outer_objectives holds the
/// objective ||f_opt - f_rf1*f_bb1 - f_rf2*f_bb2||_F^2 after each completed
/// outer pass; best-iterate retention in the inner loops makes the sequence
/// non-increasing. nmse entries are NaN for an empty block.
struct SolveTrace {
    std::vector<double> outer_objectives;
    std::vector<std::pair<uword, uword>> inner_counts;  // (inner1, inner2) per pass
    std::vector<double> nmse_bb1;
    std::vector<double> nmse_bb2;
    bool converged = false;
    uword total_outer = 0;

    cx_mat digital_unnormalized;  // final f_bb before power normalization
    uword partition_rows = 0;
};

/// First n_s right singular vectors: the fully-digital optimum.
inline cx_mat optimal_precoder(const SvdTriple& svd, uword n_s) {
    if (svd.k < n_s)
        throw std::runtime_error("optimal_precoder: channel rank " + std::to_string(svd.k) +
                                 " below stream count " + std::to_string(n_s));
    return svd.v.cols(0, n_s - 1);
}

/// First n_s left singular vectors: the fully-digital combining optimum.
inline cx_mat optimal_combiner(const SvdTriple& svd, uword n_s) {
    if (svd.k < n_s)
        throw std::runtime_error("optimal_combiner: channel rank " + std::to_string(svd.k) +
                                 " below stream count " + std::to_string(n_s));
    return svd.u.cols(0, n_s - 1);
}

/// Entrywise projection onto the constant-modulus set: keep the phase, fix
/// the magnitude. A zero entry has no phase; it maps to +modulus.
inline cx_mat phase_extract(const cx_mat& m, double modulus) {
    cx_mat out(m.n_rows, m.n_cols);
    for (uword j = 0; j < m.n_cols; ++j) {
        for (uword i = 0; i < m.n_rows; ++i) {
            const cx_double z = m(i, j);
            out(i, j) = (z == cx_double(0.0, 0.0)) ? cx_double(modulus, 0.0)
                                                   : std::polar(modulus, std::arg(z));
        }
    }
    return out;
}

/// Least-squares digital factor for a fixed analog matrix.
inline cx_mat ls_digital(const cx_mat& f_rf, const cx_mat& target) {
    if (f_rf.n_rows != target.n_rows)
        throw std::invalid_argument("ls_digital: row mismatch");
    return pinv_tol(f_rf) * target;
}

/// Scale-invariant distance of block * block^H from the identity (sized to
/// the block's Gram matrix). Zero for any scaled matrix with orthonormal
/// rows; used to monitor how close the digital blocks stay to semi-unitary.
inline double nmse_unitary(const cx_mat& block) {
    if (block.n_elem == 0)
        throw std::runtime_error("nmse_unitary: empty block");
    cx_mat gram = block * block.t();
    const double g = arma::norm(gram, "fro");
    if (g == 0.0)
        throw std::runtime_error("nmse_unitary: zero block");
    gram /= g;
    const double m = static_cast<double>(gram.n_rows);
    gram.diag() -= 1.0 / std::sqrt(m);
    return sq_fro(gram);  // reference identity has unit Frobenius norm
}

/// Random starting point: uniform phases in the analog matrix, complex
/// normal digital matrix scaled to transmit power n_s.
inline HybridPrecoder random_init(uword n_rows, uword n_rf, uword n_s, Rng& rng,
                                  HybridPrecoder::Side side = HybridPrecoder::Side::transmitter) {
    HybridPrecoder p;
    p.side = side;
    const double mod = 1.0 / std::sqrt(static_cast<double>(n_rows));
    p.f_rf.set_size(n_rows, n_rf);
    for (uword j = 0; j < n_rf; ++j)
        for (uword i = 0; i < n_rows; ++i)
            p.f_rf(i, j) = std::polar(mod, rng.uniform(0.0, 2.0 * pi));
    p.f_bb.set_size(n_rf, n_s);
    for (uword j = 0; j < n_s; ++j)
        for (uword i = 0; i < n_rf; ++i)
            p.f_bb(i, j) = rng.complex_normal();
    const double g = arma::norm(p.f_rf * p.f_bb, "fro");
    if (g > 0.0)
        p.f_bb *= std::sqrt(static_cast<double>(n_s)) / g;
    p.power_normalized = true;
    return p;
}

namespace detail {

struct BlockResult {
    cx_mat f_rf;
    cx_mat f_bb;
    double objective = std::numeric_limits<double>::infinity();
    uword iterations = 0;
};

// One subproblem: minimize ||target - f_rf * f_bb||_F^2 over a
// constant-modulus f_rf and free f_bb, by alternating the exact LS digital
// update with the phase-only analog update. The phase step is a surrogate
// and may raise the objective, so the best iterate seen is retained; the
// returned objective is therefore no worse than the LS fit of the incoming
// analog block.
inline BlockResult optimize_block(const cx_mat& target, cx_mat f_rf, double modulus,
                                  double tol, uword max_iters) {
    BlockResult best;
    double prev = std::numeric_limits<double>::infinity();
    for (uword it = 0; it < max_iters; ++it) {
        const cx_mat f_bb = pinv_tol(f_rf) * target;
        const double obj = sq_fro(target - f_rf * f_bb);
        best.iterations = it + 1;
        if (obj < best.objective) {
            best.f_rf = f_rf;
            best.f_bb = f_bb;
            best.objective = obj;
        }
        if (it > 0 && std::abs(prev - obj) <= tol * std::max(prev, 1e-300))
            break;
        prev = obj;
        f_rf = phase_extract(target * f_bb.t() * pinv_tol(f_bb * f_bb.t()), modulus);
    }
    return best;
}

inline double nmse_or_nan(const cx_mat& block) {
    return block.n_elem == 0 ? std::numeric_limits<double>::quiet_NaN() : nmse_unitary(block);
}

// Side-agnostic AREE loop; the public wrappers fix dimensions and modulus.
inline std::pair<HybridPrecoder, SolveTrace> aree_core(const cx_mat& target, cx_mat f_rf_init,
                                                       cx_mat f_bb_init, uword split,
                                                       const StoppingRule& stop, double modulus,
                                                       bool normalize,
                                                       HybridPrecoder::Side side) {
    const uword n_rows = target.n_rows;
    const uword n_s = target.n_cols;
    const uword n_rf = f_rf_init.n_cols;
    const uword n1 = split;
    const uword n2 = n_rf - split;

    cx_mat f_rf1 = (n1 > 0) ? cx_mat(f_rf_init.cols(0, n1 - 1)) : cx_mat(n_rows, 0);
    cx_mat f_rf2 = (n2 > 0) ? cx_mat(f_rf_init.cols(n1, n_rf - 1)) : cx_mat(n_rows, 0);
    cx_mat f_bb1 = (n1 > 0) ? cx_mat(f_bb_init.rows(0, n1 - 1)) : cx_mat(0, n_s);
    cx_mat f_bb2 = (n2 > 0) ? cx_mat(f_bb_init.rows(n1, n_rf - 1)) : cx_mat(0, n_s);

    SolveTrace trace;
    trace.partition_rows = split;

    // The first pass targets the full optimum; afterwards each subproblem
    // chases the other's residual.
    cx_mat residual2 = target;  // target minus the second block's product
    double prev_obj = std::numeric_limits<double>::infinity();
    for (uword t = 0; t < stop.max_outer; ++t) {
        uword it1 = 0;
        uword it2 = 0;
        if (n1 > 0) {
            BlockResult r = optimize_block(residual2, f_rf1, modulus, stop.inner_tol, stop.max_inner);
            f_rf1 = std::move(r.f_rf);
            f_bb1 = std::move(r.f_bb);
            it1 = r.iterations;
        }
        const cx_mat residual1 = target - f_rf1 * f_bb1;
        if (n2 > 0) {
            BlockResult r = optimize_block(residual1, f_rf2, modulus, stop.inner_tol, stop.max_inner);
            f_rf2 = std::move(r.f_rf);
            f_bb2 = std::move(r.f_bb);
            it2 = r.iterations;
            residual2 = target - f_rf2 * f_bb2;
        } else {
            residual2 = target;
        }

        const double obj = sq_fro(residual1 - f_rf2 * f_bb2);
        trace.outer_objectives.push_back(obj);
        trace.inner_counts.emplace_back(it1, it2);
        trace.nmse_bb1.push_back(nmse_or_nan(f_bb1));
        trace.nmse_bb2.push_back(nmse_or_nan(f_bb2));
        trace.total_outer = t + 1;
        if (t > 0 && std::abs(prev_obj - obj) <= stop.outer_tol * std::max(prev_obj, 1e-300)) {
            trace.converged = true;
            break;
        }
        prev_obj = obj;
    }

    HybridPrecoder out;
    out.side = side;
    out.f_rf = arma::join_rows(f_rf1, f_rf2);
    out.f_bb = arma::join_cols(f_bb1, f_bb2);
    trace.digital_unnormalized = out.f_bb;
    if (normalize) {
        const double g = arma::norm(out.f_rf * out.f_bb, "fro");
        if (g == 0.0)
            throw std::runtime_error("aree: zero product, cannot power-normalize");
        out.f_bb *= std::sqrt(static_cast<double>(n_s)) / g;
        out.power_normalized = true;
    }
    return {std::move(out), std::move(trace)};
}

}  // namespace detail

/// AREE solve of the transmit approximation problem against f_opt.
///
/// The analog matrix splits into columns [0, n) and [n, n_rf) with matching
/// digital row blocks (n from the partition). Per outer pass, each block is
/// refined by its inner alternation against the other block's residual,
/// then the roles swap. Returns the power-normalized precoder and the full
/// iteration trace.
inline std::pair<HybridPrecoder, SolveTrace> aree_solve(const cx_mat& f_opt,
                                                        const SystemConfig& cfg,
                                                        const HybridPrecoder& init,
                                                        const PartitionSpec& partition,
                                                        const StoppingRule& stop = {}) {
    if (f_opt.n_rows != cfg.n_t || f_opt.n_cols != cfg.n_s)
        throw std::invalid_argument("aree_solve: f_opt must be n_t x n_s");
    if (init.f_rf.n_rows != cfg.n_t || init.f_rf.n_cols != cfg.n_rf_t ||
        init.f_bb.n_rows != cfg.n_rf_t || init.f_bb.n_cols != cfg.n_s)
        throw std::invalid_argument("aree_solve: init dimensions do not match cfg");
    if (partition.n > cfg.n_s || partition.n + cfg.n_s < cfg.n_rf_t)
        throw std::invalid_argument("aree_solve: partition outside [n_rf-n_s, n_s]");

    return detail::aree_core(f_opt, init.f_rf, init.f_bb, partition.n, stop,
                             1.0 / std::sqrt(static_cast<double>(cfg.n_t)), true,
                             HybridPrecoder::Side::transmitter);
}

namespace detail {

// Greedy projection selection shared by PE-OMP and the OMP scheme. Each
// round picks the steering column with the largest projection row norm onto
// the running residual (ties to the smallest index), refits the LS
// coefficients over everything selected, and updates the residual.
inline std::vector<uword> greedy_select(const cx_mat& target, const cx_mat& steering,
                                        uword rounds, cx_mat& selected_out,
                                        cx_mat& residual_out) {
    std::vector<uword> picks;
    picks.reserve(rounds);
    cx_mat selected(target.n_rows, 0);
    cx_mat residual = target;
    for (uword round = 0; round < rounds; ++round) {
        const cx_mat proj = steering.t() * residual;
        uword best = 0;
        double best_norm = -1.0;
        for (uword l = 0; l < proj.n_rows; ++l) {
            const double n = arma::norm(proj.row(l), 2);
            if (n > best_norm) {
                best_norm = n;
                best = l;
            }
        }
        picks.push_back(best);
        selected = arma::join_rows(selected, steering.col(best));
        residual = target - selected * (pinv_tol(selected) * target);
    }
    selected_out = std::move(selected);
    residual_out = std::move(residual);
    return picks;
}

// Shared tail: constant-modulus projection of the chosen basis, LS digital
// factor, optional power normalization.
inline HybridPrecoder finish_phase_init(const cx_mat& basis, const cx_mat& target,
                                        double modulus, bool normalize,
                                        HybridPrecoder::Side side) {
    HybridPrecoder p;
    p.side = side;
    p.f_rf = phase_extract(basis, modulus);
    p.f_bb = pinv_tol(p.f_rf) * target;
    if (normalize) {
        const double g = arma::norm(p.f_rf * p.f_bb, "fro");
        if (g == 0.0)
            throw std::runtime_error("phase init: zero product, cannot power-normalize");
        p.f_bb *= std::sqrt(static_cast<double>(target.n_cols)) / g;
        p.power_normalized = true;
    }
    return p;
}

inline HybridPrecoder pe_omp_core(const cx_mat& target, const cx_mat& steering, uword n_rf,
                                  double modulus, bool normalize, HybridPrecoder::Side side,
                                  std::vector<uword>* picks_out) {
    const uword n_s = target.n_cols;
    if (n_rf < n_s)
        throw std::invalid_argument("pe_omp: n_rf below stream count");
    const uword rounds = n_rf - n_s;
    if (steering.n_cols < rounds)
        throw std::invalid_argument("pe_omp: not enough steering columns");

    cx_mat selected;
    cx_mat residual;
    std::vector<uword> picks = greedy_select(target, steering, rounds, selected, residual);
    if (picks_out != nullptr)
        *picks_out = picks;
    return finish_phase_init(arma::join_rows(residual, selected), target, modulus, normalize, side);
}

inline HybridPrecoder pe_smd_core(const cx_mat& target, const cx_mat& steering,
                                  const cx_mat& mixing, uword n_rf, double modulus,
                                  bool normalize, HybridPrecoder::Side side,
                                  std::vector<uword>* picks_out) {
    const uword n_s = target.n_cols;
    if (n_rf < n_s)
        throw std::invalid_argument("pe_smd: n_rf below stream count");
    if (mixing.n_rows != steering.n_cols)
        throw std::invalid_argument("pe_smd: mixing rows must match steering columns");
    if (mixing.n_cols < n_s)
        throw std::runtime_error("pe_smd: mixing has fewer than n_s columns");
    const uword rounds = n_rf - n_s;
    if (steering.n_cols < rounds)
        throw std::invalid_argument("pe_smd: not enough steering columns");

    // All rows ranked at once by their norm over the leading n_s mixing
    // columns; strongest first, ties to the smallest index.
    const cx_mat lead = mixing.cols(0, n_s - 1);
    std::vector<uword> order(lead.n_rows);
    std::iota(order.begin(), order.end(), uword{0});
    arma::vec norms(lead.n_rows);
    for (uword l = 0; l < lead.n_rows; ++l)
        norms(l) = arma::norm(lead.row(l), 2);
    std::stable_sort(order.begin(), order.end(),
                     [&](uword a, uword b) { return norms(a) > norms(b); });
    order.resize(rounds);
    if (picks_out != nullptr)
        *picks_out = order;

    cx_mat selected(target.n_rows, 0);
    for (uword l : order)
        selected = arma::join_rows(selected, steering.col(l));

    // Conjugate transpose instead of the pseudo-inverse: steering columns of
    // a large array are nearly orthonormal, so the two nearly coincide.
    const cx_mat residual = target - selected * (selected.t() * target);
    return finish_phase_init(arma::join_rows(residual, selected), target, modulus, normalize, side);
}

inline HybridPrecoder omp_core(const cx_mat& target, const cx_mat& steering, uword n_rf,
                               double modulus, bool normalize, HybridPrecoder::Side side,
                               std::vector<uword>* picks_out) {
    if (steering.n_cols < n_rf)
        throw std::invalid_argument("omp: fewer steering columns than RF chains");

    cx_mat selected;
    cx_mat residual;
    std::vector<uword> picks = greedy_select(target, steering, n_rf, selected, residual);
    if (picks_out != nullptr)
        *picks_out = picks;
    return finish_phase_init(selected, target, modulus, normalize, side);
}

}  // namespace detail

/// PE-OMP: greedily select n_rf - n_s steering columns by projection onto
/// the running residual, keep the final residual itself (phase-projected)
/// on the remaining n_s chains, then refit the digital factor.
inline HybridPrecoder pe_omp_init(const cx_mat& f_opt, const cx_mat& a_t, const SystemConfig& cfg,
                                  std::vector<uword>* picks_out = nullptr) {
    if (f_opt.n_rows != cfg.n_t || f_opt.n_cols != cfg.n_s)
        throw std::invalid_argument("pe_omp_init: f_opt must be n_t x n_s");
    return detail::pe_omp_core(f_opt, a_t, cfg.n_rf_t,
                               1.0 / std::sqrt(static_cast<double>(cfg.n_t)), true,
                               HybridPrecoder::Side::transmitter, picks_out);
}

/// PE-SMD: like PE-OMP but the selection reads row norms of the mixing
/// matrix (steering-to-singular-vector weights) delivered by gc_svd, all at
/// once, and projects with the conjugate transpose.
inline HybridPrecoder pe_smd_init(const cx_mat& f_opt, const cx_mat& a_t, const cx_mat& mixing,
                                  const SystemConfig& cfg,
                                  std::vector<uword>* picks_out = nullptr) {
    if (f_opt.n_rows != cfg.n_t || f_opt.n_cols != cfg.n_s)
        throw std::invalid_argument("pe_smd_init: f_opt must be n_t x n_s");
    return detail::pe_smd_core(f_opt, a_t, mixing, cfg.n_rf_t,
                               1.0 / std::sqrt(static_cast<double>(cfg.n_t)), true,
                               HybridPrecoder::Side::transmitter, picks_out);
}

/// Classic OMP projection scheme: select n_rf steering columns and use only
/// those (phase-projected) as the analog matrix.
inline HybridPrecoder omp_baseline(const cx_mat& f_opt, const cx_mat& a_t, const SystemConfig& cfg,
                                   std::vector<uword>* picks_out = nullptr) {
    if (f_opt.n_rows != cfg.n_t || f_opt.n_cols != cfg.n_s)
        throw std::invalid_argument("omp_baseline: f_opt must be n_t x n_s");
    return detail::omp_core(f_opt, a_t, cfg.n_rf_t,
                            1.0 / std::sqrt(static_cast<double>(cfg.n_t)), true,
                            HybridPrecoder::Side::transmitter, picks_out);
}

enum class BeamformMethod { fully_digital, aree, pe_omp, pe_smd, omp };
enum class AreeInit { random, pe_omp, pe_smd };

/// One method choice for a precoder/combiner design run.
struct MethodSpec {
    BeamformMethod method = BeamformMethod::aree;
    AreeInit init = AreeInit::random;          // only read for aree
    std::optional<uword> partition;            // leading block rows; default n_s
};

struct DesignResult {
    HybridPrecoder precoder;
    std::optional<SolveTrace> trace;  // present for aree
};

namespace detail {

inline DesignResult design_side(const cx_mat& target, const cx_mat& steering,
                                const cx_mat& mixing, uword n_rf, double modulus, bool normalize,
                                HybridPrecoder::Side side, const MethodSpec& spec,
                                std::uint64_t init_seed, const StoppingRule& stop) {
    const uword n_s = target.n_cols;
    switch (spec.method) {
        case BeamformMethod::pe_omp:
            return {pe_omp_core(target, steering, n_rf, modulus, normalize, side, nullptr), {}};
        case BeamformMethod::pe_smd:
            return {pe_smd_core(target, steering, mixing, n_rf, modulus, normalize, side, nullptr), {}};
        case BeamformMethod::omp:
            return {omp_core(target, steering, n_rf, modulus, normalize, side, nullptr), {}};
        case BeamformMethod::aree: {
            HybridPrecoder start;
            switch (spec.init) {
                case AreeInit::random: {
                    Rng rng(init_seed);
                    start = random_init(target.n_rows, n_rf, n_s, rng, side);
                    break;
                }
                case AreeInit::pe_omp:
                    start = pe_omp_core(target, steering, n_rf, modulus, normalize, side, nullptr);
                    break;
                case AreeInit::pe_smd:
                    start = pe_smd_core(target, steering, mixing, n_rf, modulus, normalize, side,
                                        nullptr);
                    break;
            }
            const uword split = spec.partition.value_or(std::min<uword>(n_s, n_rf));
            if (split > n_s || split + n_s < n_rf)
                throw std::invalid_argument("design: partition outside [n_rf-n_s, n_s]");
            auto [precoder, trace] =
                aree_core(target, start.f_rf, start.f_bb, split, stop, modulus, normalize, side);
            return {std::move(precoder), std::move(trace)};
        }
        case BeamformMethod::fully_digital:
            break;
    }
    throw std::invalid_argument("design: fully_digital has no hybrid factorization");
}

}  // namespace detail

/// Designs the transmit precoder with the chosen method against the
/// fully-digital optimum of the given channel decomposition.
inline DesignResult design_precoder(const ChannelRealization& ch, const GcSvd& gc,
                                    const SystemConfig& cfg, const MethodSpec& spec,
                                    std::uint64_t init_seed = 0, const StoppingRule& stop = {}) {
    const cx_mat f_opt = optimal_precoder(gc.svd, cfg.n_s);
    return detail::design_side(f_opt, ch.a_t, gc.right_mixing, cfg.n_rf_t,
                               1.0 / std::sqrt(static_cast<double>(cfg.n_t)), true,
                               HybridPrecoder::Side::transmitter, spec, init_seed, stop);
}

/// Same machinery on the receive side, against the left singular vectors
/// and the receive steering matrix. Combiners carry no transmit power
/// budget, so the digital factor is left unnormalized: the link metric is
/// invariant to combiner scaling.
inline DesignResult design_combiner(const ChannelRealization& ch, const GcSvd& gc,
                                    const SystemConfig& cfg, const MethodSpec& spec,
                                    std::uint64_t init_seed = 0, const StoppingRule& stop = {}) {
    const cx_mat w_opt = optimal_combiner(gc.svd, cfg.n_s);
    return detail::design_side(w_opt, ch.a_r, gc.left_mixing, cfg.n_rf_r,
                               1.0 / std::sqrt(static_cast<double>(cfg.n_r)), false,
                               HybridPrecoder::Side::receiver, spec, init_seed, stop);
}

}  // namespace hybeam

#endif  // HYBEAM_BEAMFORM_HPP
