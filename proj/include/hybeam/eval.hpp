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
// Link metrics: achievable rate under Gaussian signaling, mutual
// information, realized SNR, and the equivalent-channel / beam-pattern
// machinery used to visualize how much of the physical channel a
// beamformer actually exploits.

#ifndef HYBEAM_EVAL_HPP
#define HYBEAM_EVAL_HPP

#include <iostream>

#include "hybeam/beamform.hpp"
#include "hybeam/types.hpp"

namespace hybeam {

namespace detail {

// log2 det of a Hermitian positive-definite matrix; input is symmetrized
// first to shed rounding skew. Returns false if the Cholesky path fails.
inline bool log2_det_hpd(const cx_mat& a, double& out) {
    const cx_mat sym = 0.5 * (a + a.t());
    double val = 0.0;
    if (!arma::log_det_sympd(val, sym))
        return false;
    out = val / std::log(2.0);
    return true;
}

}  // namespace detail

/// Achievable rate in bits/s/Hz for a transmit total f_total and combine
/// total w_total over channel h:
///   log2 det(I + (p_t/n_s) * R_n^-1 * (W^H H F)(W^H H F)^H),
/// R_n = sigma_n_sq * W^H W. Evaluated as the log-det ratio of two
/// Hermitian positive-definite matrices; if the combiner Gram matrix is
/// numerically singular, falls back to its pseudo-inverse with a warning.
inline double spectral_efficiency(const cx_mat& h, const cx_mat& f_total, const cx_mat& w_total,
                                  double p_t, double sigma_n_sq) {
    if (h.n_rows != w_total.n_rows || h.n_cols != f_total.n_rows ||
        f_total.n_cols != w_total.n_cols)
        throw std::invalid_argument("spectral_efficiency: inconsistent dimensions");
    const double n_s = static_cast<double>(f_total.n_cols);
    const cx_mat g = w_total.t() * h * f_total;
    const cx_mat noise_gram = sigma_n_sq * (w_total.t() * w_total);
    const double c = p_t / n_s;

    double result = 0.0;
    double num = 0.0;
    double den = 0.0;
    if (detail::log2_det_hpd(noise_gram + c * (g * g.t()), num) &&
        detail::log2_det_hpd(noise_gram, den)) {
        result = num - den;
    } else {
        std::cerr << "hybeam: warning: singular combiner Gram matrix, using pseudo-inverse\n";
        const cx_mat arg = arma::eye<cx_mat>(g.n_rows, g.n_rows) +
                           c * (pinv_tol(noise_gram) * (g * g.t()));
        cx_double ld;
        try {
            ld = arma::log_det(arg);
        } catch (const std::exception&) {
            throw std::runtime_error("spectral_efficiency: log-det failed");
        }
        if (std::abs(ld.imag()) > 1e-9)
            throw std::runtime_error("spectral_efficiency: log-det not real");
        result = ld.real() / std::log(2.0);
    }
    if (!std::isfinite(result))
        throw std::runtime_error("spectral_efficiency: non-finite result");
    return std::max(result, 0.0);
}

inline double spectral_efficiency(const cx_mat& h, const HybridPrecoder& f,
                                  const HybridPrecoder& w, double p_t, double sigma_n_sq) {
    return spectral_efficiency(h, f.total(), w.total(), p_t, sigma_n_sq);
}

/// Mutual information of Gaussian signaling through h with transmit total
/// f_total: log2 det(I_{n_r} + p_t/(n_s*sigma) * H F F^H H^H).
inline double mutual_information(const cx_mat& h, const cx_mat& f_total, double p_t,
                                 double sigma_n_sq) {
    if (h.n_cols != f_total.n_rows)
        throw std::invalid_argument("mutual_information: inconsistent dimensions");
    const double n_s = static_cast<double>(f_total.n_cols);
    const double c = p_t / (n_s * sigma_n_sq);
    const cx_mat g = h * f_total;  // n_r x n_s
    double result = 0.0;
    if (!detail::log2_det_hpd(arma::eye<cx_mat>(h.n_rows, h.n_rows) + c * (g * g.t()), result))
        throw std::runtime_error("mutual_information: log-det failed");
    if (!std::isfinite(result))
        throw std::runtime_error("mutual_information: non-finite result");
    return std::max(result, 0.0);
}

/// Ratio of combined signal power to combined noise power,
///   p_t/(n_s*sigma) * ||W^H H F||_F^2 / ||W^H||_F^2.
inline double realized_snr(const cx_mat& h, const cx_mat& f_total, const cx_mat& w_total,
                           double p_t, double sigma_n_sq) {
    const double wn = sq_fro(w_total);
    if (wn == 0.0)
        throw std::invalid_argument("realized_snr: zero combiner");
    const double n_s = static_cast<double>(f_total.n_cols);
    return p_t / (n_s * sigma_n_sq) * sq_fro(w_total.t() * h * f_total) / wn;
}

inline double realized_snr(const cx_mat& h, const HybridPrecoder& f, const HybridPrecoder& w,
                           double p_t, double sigma_n_sq) {
    return realized_snr(h, f.total(), w.total(), p_t, sigma_n_sq);
}

/// Part of the channel actually used after beamforming: W W^H H F F^H.
/// Computed with the literal products, not orthonormalized factors.
inline cx_mat equivalent_channel(const cx_mat& h, const cx_mat& f_total, const cx_mat& w_total) {
    return w_total * (w_total.t() * h * f_total) * f_total.t();
}

/// Difference between the fully-digital equivalent channel and the one a
/// given beamformer pair achieves; its energy measures what the pair leaves
/// on the table.
inline cx_mat channel_gap(const cx_mat& h, const cx_mat& f_opt, const cx_mat& w_opt,
                          const cx_mat& f_total, const cx_mat& w_total) {
    return equivalent_channel(h, f_opt, w_opt) - equivalent_channel(h, f_total, w_total);
}

/// Angular sample points for beam patterns, one azimuth/elevation pair of
/// vectors per side.
struct BeamGridSpec {
    arma::vec phi_r;
    arma::vec theta_r;
    arma::vec phi_t;
    arma::vec theta_t;

    // 64 azimuth midpoints over (0, pi); elevations pi/6 + i*pi/12, i = 0..8.
    static BeamGridSpec defaults() {
        BeamGridSpec g;
        arma::vec phi(64);
        for (uword k = 0; k < 64; ++k)
            phi(k) = (static_cast<double>(k) + 0.5) * pi / 64.0;
        arma::vec theta(9);
        for (uword i = 0; i < 9; ++i)
            theta(i) = pi / 6.0 + static_cast<double>(i) * pi / 12.0;
        g.phi_r = phi;
        g.theta_r = theta;
        g.phi_t = phi;
        g.theta_t = theta;
        return g;
    }
};

/// |a_r(phi_r, theta_r)^H * H_eq * a_t(phi_t, theta_t)| over the 4-D grid,
/// linear scale. Flattening: row = i_phi_r * n_theta_r + i_theta_r,
/// col = i_phi_t * n_theta_t + i_theta_t.
struct BeamPatternGrid {
    arma::vec phi_r;
    arma::vec theta_r;
    arma::vec phi_t;
    arma::vec theta_t;
    arma::mat values;

    double value(uword i_phi_r, uword i_theta_r, uword i_phi_t, uword i_theta_t) const {
        return values(i_phi_r * theta_r.n_elem + i_theta_r, i_phi_t * theta_t.n_elem + i_theta_t);
    }
};

inline BeamPatternGrid beam_pattern(const cx_mat& h_eq, const BeamGridSpec& spec = BeamGridSpec::defaults()) {
    if (spec.phi_r.n_elem == 0 || spec.theta_r.n_elem == 0 || spec.phi_t.n_elem == 0 ||
        spec.theta_t.n_elem == 0)
        throw std::invalid_argument("beam_pattern: empty grid");

    const uword n_rx = spec.phi_r.n_elem * spec.theta_r.n_elem;
    const uword n_tx = spec.phi_t.n_elem * spec.theta_t.n_elem;
    cx_mat rx_steer(h_eq.n_rows, n_rx);
    for (uword ip = 0; ip < spec.phi_r.n_elem; ++ip)
        for (uword it = 0; it < spec.theta_r.n_elem; ++it)
            rx_steer.col(ip * spec.theta_r.n_elem + it) =
                steering_vector(spec.phi_r(ip), spec.theta_r(it), h_eq.n_rows);
    cx_mat tx_steer(h_eq.n_cols, n_tx);
    for (uword ip = 0; ip < spec.phi_t.n_elem; ++ip)
        for (uword it = 0; it < spec.theta_t.n_elem; ++it)
            tx_steer.col(ip * spec.theta_t.n_elem + it) =
                steering_vector(spec.phi_t(ip), spec.theta_t(it), h_eq.n_cols);

    BeamPatternGrid grid;
    grid.phi_r = spec.phi_r;
    grid.theta_r = spec.theta_r;
    grid.phi_t = spec.phi_t;
    grid.theta_t = spec.theta_t;
    grid.values = arma::abs(rx_steer.t() * h_eq * tx_steer);
    return grid;
}

/// Per-link evaluation summary.
struct LinkReport {
    double spectral_efficiency = 0.0;  // bits/s/Hz
    double mutual_information = 0.0;   // bits/s/Hz
    double realized_snr = 0.0;         // linear
    double objective = 0.0;            // ||f_opt - f_rf*f_bb||_F^2
    double gap_energy = 0.0;           // ||H_gap||_F^2
};

}  // namespace hybeam

#endif  // HYBEAM_EVAL_HPP
