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

#include <catch2/catch_amalgamated.hpp>

#include "hybeam/channel.hpp"
#include "hybeam/eval.hpp"

using namespace hybeam;

namespace {

cx_mat random_cx_mat(uword m, uword n, Rng& rng) {
    cx_mat out(m, n);
    for (uword j = 0; j < n; ++j)
        for (uword i = 0; i < m; ++i)
            out(i, j) = rng.complex_normal();
    return out;
}

cx_mat random_semi_unitary(uword m, uword n, Rng& rng) {
    return thin_svd(random_cx_mat(m, n, rng)).u;
}

}  // namespace

TEST_CASE("spectral efficiency of the identity channel", "[eval]") {
    const uword n = 4;
    const cx_mat eye = arma::eye<cx_mat>(n, n);
    // p_t / (n_s * sigma) = 1 makes every stream contribute log2(2).
    const double se = spectral_efficiency(eye, eye, eye, 4.0, 1.0);
    CHECK(std::abs(se - 4.0) < 1e-9);
}

TEST_CASE("spectral efficiency of the zero channel is zero", "[eval]") {
    const cx_mat eye = arma::eye<cx_mat>(4, 4);
    CHECK(spectral_efficiency(cx_mat(4, 4, arma::fill::zeros), eye, eye, 4.0, 1.0) == 0.0);
}

TEST_CASE("spectral efficiency of a rank-1 link has a closed form", "[eval]") {
    SystemConfig cfg;
    cfg.n_t = 16;
    cfg.n_r = 4;
    cfg.n_s = 1;
    cfg.n_rf_t = 1;
    cfg.n_rf_r = 1;
    cfg.n_cl = 1;
    cfg.n_ray = 1;
    const cx_double alpha = std::polar(1.5, 0.3);
    const ChannelRealization ch =
        assemble_channel(cfg, {PathAngles{0.8, 1.2, 2.4, 0.5}}, cx_vec{alpha});
    const GcSvd gc = gc_svd(ch);
    const cx_mat f = optimal_precoder(gc.svd, 1);
    const cx_mat w = optimal_combiner(gc.svd, 1);

    const double p_t = 2.0, sigma = 0.3;
    const double se = spectral_efficiency(ch.h, f, w, p_t, sigma);
    const double expected =
        std::log2(1.0 + p_t / sigma * 16.0 * 4.0 * std::norm(alpha));
    CHECK(std::abs(se - expected) < 1e-9 * expected);
}

TEST_CASE("spectral efficiency rejects inconsistent shapes", "[eval]") {
    const cx_mat eye = arma::eye<cx_mat>(4, 4);
    CHECK_THROWS_AS(spectral_efficiency(cx_mat(4, 5, arma::fill::ones), eye, eye, 1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("rate and mutual information agree for a range-aligned combiner", "[eval]") {
    const SystemConfig cfg = SystemConfig::desk_default();
    const ChannelRealization ch = sample_channel(cfg, 42);
    const GcSvd gc = gc_svd(ch);
    const cx_mat f = optimal_precoder(gc.svd, cfg.n_s);
    // combiner spanning exactly range(H F)
    const cx_mat w = thin_svd(ch.h * f).u;
    const double se = spectral_efficiency(ch.h, f, w, cfg.p_t, 0.05);
    const double mi = mutual_information(ch.h, f, cfg.p_t, 0.05);
    CHECK(std::abs(se - mi) < 1e-8);
}

TEST_CASE("optimal precoder maximizes mutual information", "[eval]") {
    const SystemConfig cfg = SystemConfig::desk_default();
    const ChannelRealization ch = sample_channel(cfg, 43);
    const GcSvd gc = gc_svd(ch);
    const cx_mat f_opt = optimal_precoder(gc.svd, cfg.n_s);
    const double best = mutual_information(ch.h, f_opt, cfg.p_t, 0.1);
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const cx_mat f = random_semi_unitary(cfg.n_t, cfg.n_s, rng);
        CHECK(mutual_information(ch.h, f, cfg.p_t, 0.1) <= best + 1e-9);
    }
}

TEST_CASE("mutual information of a zero precoder is zero", "[eval]") {
    const ChannelRealization ch = sample_channel(SystemConfig::desk_default(), 44);
    CHECK(mutual_information(ch.h, cx_mat(64, 4, arma::fill::zeros), 1.0, 1.0) == 0.0);
}

TEST_CASE("determinant identity for mutual information", "[eval]") {
    // The implementation evaluates the receive-side determinant; the
    // stream-side form must agree.
    const SystemConfig cfg = SystemConfig::desk_default();
    const ChannelRealization ch = sample_channel(cfg, 45);
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        const cx_mat f = random_cx_mat(cfg.n_t, cfg.n_s, rng);
        const double mi = mutual_information(ch.h, f, cfg.p_t, 0.2);
        const double c = cfg.p_t / (static_cast<double>(cfg.n_s) * 0.2);
        const cx_mat g = ch.h * f;
        const cx_mat small = arma::eye<cx_mat>(cfg.n_s, cfg.n_s) + c * (g.t() * g);
        const cx_double ld = arma::log_det(0.5 * (small + small.t()));
        CHECK(std::abs(mi - ld.real() / std::log(2.0)) < 1e-9);
    }
}

TEST_CASE("realized snr scales inversely with the noise variance", "[eval]") {
    const ChannelRealization ch = sample_channel(SystemConfig::desk_default(), 46);
    const cx_mat f = arma::eye<cx_mat>(64, 4);
    const cx_mat w = arma::eye<cx_mat>(16, 4);
    const double a = realized_snr(ch.h, f, w, 1.0, 0.2);
    const double b = realized_snr(ch.h, f, w, 1.0, 0.4);
    CHECK(std::abs(a - 2.0 * b) < 1e-12 * a);

    CHECK(realized_snr(cx_mat(16, 64, arma::fill::zeros), f, w, 1.0, 0.1) == 0.0);
    CHECK_THROWS_AS(realized_snr(ch.h, f, cx_mat(16, 4, arma::fill::zeros), 1.0, 0.1),
                    std::invalid_argument);
}

TEST_CASE("fully-digital pair closes the channel gap", "[eval]") {
    const SystemConfig cfg = SystemConfig::desk_default();
    const ChannelRealization ch = sample_channel(cfg, 47);
    const GcSvd gc = gc_svd(ch);
    const cx_mat f = optimal_precoder(gc.svd, cfg.n_s);
    const cx_mat w = optimal_combiner(gc.svd, cfg.n_s);
    const cx_mat gap = channel_gap(ch.h, f, w, f, w);
    CHECK(arma::norm(gap, "fro") < 1e-12);
}

TEST_CASE("semi-unitary projections contract the equivalent channel", "[eval]") {
    const SystemConfig cfg = SystemConfig::desk_default();
    const ChannelRealization ch = sample_channel(cfg, 48);
    Rng rng(7);
    for (int t = 0; t < 5; ++t) {
        const cx_mat f = random_semi_unitary(cfg.n_t, cfg.n_s, rng);
        const cx_mat w = random_semi_unitary(cfg.n_r, cfg.n_s, rng);
        const cx_mat h_eq = equivalent_channel(ch.h, f, w);
        CHECK(arma::norm(h_eq, "fro") <= arma::norm(ch.h, "fro") + 1e-9);
    }
}

TEST_CASE("beam pattern peaks at the matched grid point", "[eval]") {
    const BeamGridSpec grid = BeamGridSpec::defaults();
    const uword ip = 10, it = 3;
    const double phi0 = grid.phi_t(ip);
    const double theta0 = grid.theta_t(it);
    const cx_vec ar = steering_vector(phi0, theta0, 16);
    const cx_vec at = steering_vector(phi0, theta0, 64);
    const cx_mat h_eq = std::sqrt(16.0 * 64.0) * (ar * at.t());

    const BeamPatternGrid pattern = beam_pattern(h_eq, grid);
    const uword flat = pattern.values.index_max();
    const uword row = flat % pattern.values.n_rows;  // column-major storage
    const uword col = flat / pattern.values.n_rows;
    CHECK(row == ip * grid.theta_r.n_elem + it);
    CHECK(col == ip * grid.theta_t.n_elem + it);
    CHECK(std::abs(pattern.value(ip, it, ip, it) - std::sqrt(16.0 * 64.0)) < 1e-9);
}

TEST_CASE("beam pattern of the zero channel vanishes", "[eval]") {
    const BeamPatternGrid pattern = beam_pattern(cx_mat(16, 64, arma::fill::zeros));
    CHECK(pattern.values.max() == 0.0);
    CHECK(pattern.values.n_rows == 64 * 9);
    CHECK(pattern.values.n_cols == 64 * 9);
}

TEST_CASE("equivalent-channel pattern is bounded by the channel spectral norm", "[eval]") {
    // Pointwise domination of the full channel's pattern does not hold for
    // projections (a truncated channel can exceed the full one at single
    // grid points), but the spectral norm bound does.
    const SystemConfig cfg = SystemConfig::desk_default();
    const ChannelRealization ch = sample_channel(cfg, 49);
    const GcSvd gc = gc_svd(ch);
    const cx_mat f = optimal_precoder(gc.svd, cfg.n_s);
    const cx_mat w = optimal_combiner(gc.svd, cfg.n_s);
    const cx_mat h_eq = equivalent_channel(ch.h, f, w);
    const BeamPatternGrid pattern = beam_pattern(h_eq);
    CHECK(pattern.values.max() <= gc.svd.sigma(0) + 1e-9);
    CHECK(arma::norm(h_eq, "fro") <= arma::norm(ch.h, "fro") + 1e-9);
}

TEST_CASE("nmse_unitary vanishes for scaled unitary blocks", "[eval]") {
    Rng rng(8);
    const cx_mat q = random_semi_unitary(4, 4, rng);
    CHECK(nmse_unitary(3.7 * q) < 1e-12);
    const cx_mat b = random_cx_mat(3, 5, rng);
    CHECK(std::abs(nmse_unitary(b) - nmse_unitary(2.0 * b)) < 1e-12);
}

TEST_CASE("nmse_unitary of a rank-deficient block has the hand value", "[eval]") {
    cx_mat f(2, 2, arma::fill::zeros);
    f(0, 0) = cx_double(1.0, 0.0);
    // normalized Gram diag(1, 0) against I/sqrt(2): (1 - 1/sqrt(2))^2 + 1/2
    const double expected = 2.0 - std::sqrt(2.0);
    CHECK(std::abs(nmse_unitary(f) - expected) < 1e-12);
}

TEST_CASE("nmse_unitary rejects the zero block", "[eval]") {
    CHECK_THROWS_AS(nmse_unitary(cx_mat(2, 3, arma::fill::zeros)), std::runtime_error);
}

TEST_CASE("rate is invariant to a unitary rotation of the digital combiner", "[eval]") {
    const SystemConfig cfg = SystemConfig::desk_default();
    const ChannelRealization ch = sample_channel(cfg, 50);
    const GcSvd gc = gc_svd(ch);
    Rng rng(9);
    const MethodSpec spec{BeamformMethod::pe_omp, AreeInit::random, {}};
    HybridPrecoder f = design_precoder(ch, gc, cfg, spec).precoder;
    HybridPrecoder w = design_combiner(ch, gc, cfg, spec).precoder;

    const double base = spectral_efficiency(ch.h, f, w, cfg.p_t, 0.07);
    for (int t = 0; t < 5; ++t) {
        const cx_mat q = random_semi_unitary(cfg.n_s, cfg.n_s, rng);
        HybridPrecoder w2 = w;
        w2.f_bb = w.f_bb * q;
        CHECK(std::abs(spectral_efficiency(ch.h, f, w2, cfg.p_t, 0.07) - base) < 1e-9);
    }
}
