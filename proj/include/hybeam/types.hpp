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

#ifndef HYBEAM_TYPES_HPP
#define HYBEAM_TYPES_HPP

#include <armadillo>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hybeam {

using arma::cx_double;
using arma::cx_mat;
using arma::cx_vec;
using arma::uword;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Relative threshold below which singular values count as zero, everywhere
// a numerical rank or a pseudo-inverse is needed.
inline constexpr double svd_rank_rel_tol = 1e-12;

inline double sq_fro(const cx_mat& m) {
    const double n = arma::norm(m, "fro");
    return n * n;
}

inline bool is_perfect_square(uword n) {
    if (n == 0)
        return false;
    const uword r = static_cast<uword>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

/// Scalar parameters of a single-user narrowband link with uniform square
/// planar arrays at both ends and a fully-connected hybrid architecture.
struct SystemConfig {
    uword n_t = 64;    // transmit antennas (perfect square)
    uword n_r = 16;    // receive antennas (perfect square)
    uword n_s = 4;     // data streams
    uword n_rf_t = 7;  // transmit RF chains
    uword n_rf_r = 7;  // receive RF chains

    double p_t = 1.0;         // total transmit power (dimensionless)
    double sigma_n_sq = 1.0;  // noise variance

    uword n_cl = 5;    // scattering clusters
    uword n_ray = 10;  // rays per cluster

    double sigma_phi = 10.0 * pi / 180.0;    // azimuth angle spread [rad]
    double sigma_theta = 10.0 * pi / 180.0;  // elevation angle spread [rad]
    double d_over_lambda = 0.5;              // element spacing over wavelength

    uword n_paths() const { return n_cl * n_ray; }

    // Throws std::invalid_argument on the first violated constraint.
    // RF chain counts may equal twice the stream count; that boundary is the
    // regime where the hybrid solver reaches the fully-digital optimum.
    void validate() const {
        if (!is_perfect_square(n_t))
            throw std::invalid_argument("SystemConfig: n_t must be a perfect square, got " +
                                        std::to_string(n_t));
        if (!is_perfect_square(n_r))
            throw std::invalid_argument("SystemConfig: n_r must be a perfect square, got " +
                                        std::to_string(n_r));
        if (n_s == 0)
            throw std::invalid_argument("SystemConfig: n_s must be positive");
        if (n_rf_t < n_s || n_rf_t > 2 * n_s)
            throw std::invalid_argument("SystemConfig: need n_s <= n_rf_t <= 2*n_s");
        if (n_rf_r < n_s || n_rf_r > 2 * n_s)
            throw std::invalid_argument("SystemConfig: need n_s <= n_rf_r <= 2*n_s");
        if (n_rf_t >= n_t || n_rf_r >= n_r)
            throw std::invalid_argument("SystemConfig: RF chains must be fewer than antennas");
        if (n_cl == 0 || n_ray == 0)
            throw std::invalid_argument("SystemConfig: n_cl and n_ray must be positive");
        if (!(p_t > 0.0))
            throw std::invalid_argument("SystemConfig: p_t must be positive");
        if (!(sigma_n_sq > 0.0))
            throw std::invalid_argument("SystemConfig: sigma_n_sq must be positive");
        if (sigma_phi < 0.0 || sigma_theta < 0.0)
            throw std::invalid_argument("SystemConfig: angle spreads must be nonnegative");
        if (!(d_over_lambda > 0.0))
            throw std::invalid_argument("SystemConfig: d_over_lambda must be positive");
    }

    // Desk-scale setup used by the bundled experiments and tests.
    static SystemConfig desk_default() { return SystemConfig{}; }

    // Large setup matching common XL-MIMO simulation studies.
    static SystemConfig paper_default() {
        SystemConfig cfg;
        cfg.n_t = 256;
        cfg.n_r = 64;
        cfg.n_s = 6;
        cfg.n_rf_t = 9;
        cfg.n_rf_r = 9;
        return cfg;
    }
};

}  // namespace hybeam

#endif  // HYBEAM_TYPES_HPP
