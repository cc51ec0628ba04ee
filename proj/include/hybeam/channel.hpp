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
// Clustered geometric channel model for uniform square planar arrays (USPA):
// a small number of scattering clusters, each contributing several rays with
// Laplace-distributed angles around the cluster mean, complex normal gains,
// and unit-norm array steering vectors on both sides.

#ifndef HYBEAM_CHANNEL_HPP
#define HYBEAM_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "hybeam/rng.hpp"
#include "hybeam/types.hpp"

namespace hybeam {

/// USPA steering vector for azimuth phi and elevation theta (radians).
///
/// The array lies in a vertical plane; antenna (n_h, n_v) contributes phase
/// 2*pi*(d/lambda)*(n_h*cos(phi)*sin(theta) + n_v*cos(theta)). Entries are
/// flattened n_v-major: element k maps to n_v = k / sqrt(n), n_h = k % sqrt(n).
/// The 1/sqrt(n) prefactor makes the result a unit vector.
inline cx_vec steering_vector(double phi, double theta, uword n, double d_over_lambda = 0.5) {
    if (!is_perfect_square(n))
        throw std::invalid_argument("steering_vector: antenna count must be a perfect square, got " +
                                    std::to_string(n));
    const uword side = static_cast<uword>(std::llround(std::sqrt(static_cast<double>(n))));
    const double horiz = std::cos(phi) * std::sin(theta);
    const double vert = std::cos(theta);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double factor = 2.0 * pi * d_over_lambda;

    cx_vec a(n);
    for (uword nv = 0; nv < side; ++nv) {
        for (uword nh = 0; nh < side; ++nh) {
            const double phase = factor * (static_cast<double>(nh) * horiz + static_cast<double>(nv) * vert);
            a(nv * side + nh) = std::polar(scale, phase);
        }
    }
    return a;
}

/// Departure/arrival angles of one propagation path [rad].
struct PathAngles {
    double phi_t = 0.0;
    double theta_t = 0.0;
    double phi_r = 0.0;
    double theta_r = 0.0;
};

/// Mean angles of one scattering cluster [rad].
struct ClusterAngles {
    double phi_t = 0.0;
    double theta_t = 0.0;
    double phi_r = 0.0;
    double theta_r = 0.0;
};

/// One draw of the sparse geometric channel, kept in both factor form
/// (steering matrices plus diagonal gains) and assembled dense form.
struct ChannelRealization {
    cx_mat a_r;    // receive steering matrix, n_r x (n_cl*n_ray)
    cx_mat a_t;    // transmit steering matrix, n_t x (n_cl*n_ray)
    cx_vec h_d;    // diagonal of the path-gain matrix, length n_cl*n_ray
    cx_mat h;      // dense channel a_r * diag(h_d) * a_t^H, n_r x n_t

    std::vector<ClusterAngles> cluster_means;  // one per cluster
    std::vector<PathAngles> angles;            // cluster-major, one per path

    std::uint64_t seed_used = 0;  // seed that produced this draw
    uword redraws = 0;            // rank-deficient draws skipped before it
};

/// Builds steering matrices, scaled gains and the dense channel from
/// explicit per-path angles and unscaled gains alpha.
inline ChannelRealization assemble_channel(const SystemConfig& cfg,
                                           const std::vector<PathAngles>& paths,
                                           const cx_vec& alpha) {
    const uword n_paths = cfg.n_paths();
    if (paths.size() != n_paths || alpha.n_elem != n_paths)
        throw std::invalid_argument("assemble_channel: need n_cl*n_ray paths and gains");

    ChannelRealization ch;
    ch.a_r.set_size(cfg.n_r, n_paths);
    ch.a_t.set_size(cfg.n_t, n_paths);
    for (uword l = 0; l < n_paths; ++l) {
        ch.a_r.col(l) = steering_vector(paths[l].phi_r, paths[l].theta_r, cfg.n_r, cfg.d_over_lambda);
        ch.a_t.col(l) = steering_vector(paths[l].phi_t, paths[l].theta_t, cfg.n_t, cfg.d_over_lambda);
    }
    const double gain_scale =
        std::sqrt(static_cast<double>(cfg.n_t) * static_cast<double>(cfg.n_r) / static_cast<double>(n_paths));
    ch.h_d = gain_scale * alpha;
    ch.h = ch.a_r * arma::diagmat(ch.h_d) * ch.a_t.t();
    ch.angles = paths;
    return ch;
}

namespace detail {

// Numerical rank of the dense channel at the library-wide relative threshold.
inline uword dense_rank(const cx_mat& m) {
    arma::vec s = arma::svd(m);
    if (s.n_elem == 0 || s(0) <= 0.0)
        return 0;
    const double cutoff = svd_rank_rel_tol * s(0);
    return static_cast<uword>(arma::sum(s > cutoff));
}

}  // namespace detail

/// Draws one channel realization. Deterministic given (cfg, seed).
///
/// Draw order, fixed for reproducibility: for each cluster, the four mean
/// angles (phi_t, theta_t, phi_r, theta_r) uniform on (0, pi); then for each
/// ray the four path angles, Laplace around the cluster mean with scale
/// spread/sqrt(2), followed by the ray's complex normal gain. Laplace draws
/// are used unwrapped; steering vectors depend on angles only through
/// cos/sin, so no support restriction is needed.
///
/// Realizations whose dense rank falls below n_s cannot carry n_s streams;
/// such draws are discarded and the sampler retries with seed+1, recording
/// the number of redraws.
inline ChannelRealization sample_channel(const SystemConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const uword n_paths = cfg.n_paths();
    const double laplace_scale_phi = cfg.sigma_phi / std::sqrt(2.0);
    const double laplace_scale_theta = cfg.sigma_theta / std::sqrt(2.0);

    for (uword attempt = 0;; ++attempt) {
        Rng rng(seed + attempt);
        std::vector<ClusterAngles> means(cfg.n_cl);
        std::vector<PathAngles> paths(n_paths);
        cx_vec alpha(n_paths);

        for (uword i = 0; i < cfg.n_cl; ++i) {
            ClusterAngles& m = means[i];
            m.phi_t = rng.uniform(0.0, pi);
            m.theta_t = rng.uniform(0.0, pi);
            m.phi_r = rng.uniform(0.0, pi);
            m.theta_r = rng.uniform(0.0, pi);
            for (uword l = 0; l < cfg.n_ray; ++l) {
                PathAngles& p = paths[i * cfg.n_ray + l];
                p.phi_t = rng.laplace(m.phi_t, laplace_scale_phi);
                p.theta_t = rng.laplace(m.theta_t, laplace_scale_theta);
                p.phi_r = rng.laplace(m.phi_r, laplace_scale_phi);
                p.theta_r = rng.laplace(m.theta_r, laplace_scale_theta);
                alpha(i * cfg.n_ray + l) = rng.complex_normal();
            }
        }

        ChannelRealization ch = assemble_channel(cfg, paths, alpha);
        if (detail::dense_rank(ch.h) >= cfg.n_s) {
            ch.cluster_means = std::move(means);
            ch.seed_used = seed + attempt;
            ch.redraws = attempt;
            return ch;
        }
    }
}

}  // namespace hybeam

#endif  // HYBEAM_CHANNEL_HPP
