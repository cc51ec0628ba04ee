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
// Thin SVD plumbing plus GC-SVD, the geometric-channel SVD: instead of
// decomposing the dense n_r x n_t channel, whiten the two steering factors
// (each tall and skinny), decompose a small non-sparse core, and map the
// result back. Cost scales with (n_t + n_r) * (n_cl*n_ray)^2 instead of
// n_t * n_r^2.

#ifndef HYBEAM_GCSVD_HPP
#define HYBEAM_GCSVD_HPP

#include <vector>

#include "hybeam/channel.hpp"
#include "hybeam/types.hpp"

namespace hybeam {

/// Rank-truncated SVD m = u * diag(sigma) * v^H.
struct SvdTriple {
    cx_mat u;        // m x k, orthonormal columns
    arma::vec sigma; // length k, descending, positive
    cx_mat v;        // n x k, orthonormal columns
    uword k = 0;     // effective rank
};

namespace detail {

// SVD columns are unique only up to a per-column phase. Rotate each column
// group so the largest-magnitude entry of u's column is real nonnegative.
// All matrices in the group share u's column space relation and must rotate
// together (u with anything expressing u, v with anything expressing v).
inline void fix_svd_phases(cx_mat& u, std::vector<cx_mat*> followers) {
    for (uword j = 0; j < u.n_cols; ++j) {
        const uword i = arma::abs(u.col(j)).index_max();
        const cx_double pivot = u(i, j);
        const double mag = std::abs(pivot);
        if (mag == 0.0)
            continue;
        const cx_double rot = std::conj(pivot) / mag;
        u.col(j) *= rot;
        for (cx_mat* f : followers)
            f->col(j) *= rot;
    }
}

}  // namespace detail

/// Thin SVD with rank truncation at sigma > 1e-12 * sigma_max and a fixed
/// phase convention (largest-|u| entry per column made real nonnegative).
inline SvdTriple thin_svd(const cx_mat& m) {
    if (!m.is_finite())
        throw std::invalid_argument("thin_svd: input has non-finite entries");

    SvdTriple out;
    out.u.set_size(m.n_rows, 0);
    out.v.set_size(m.n_cols, 0);
    out.sigma.set_size(0);
    if (m.n_elem == 0)
        return out;

    cx_mat u;
    arma::vec s;
    cx_mat v;
    if (!arma::svd_econ(u, s, v, m))
        throw std::runtime_error("thin_svd: decomposition failed");

    uword k = 0;
    if (s.n_elem > 0 && s(0) > 0.0) {
        const double cutoff = svd_rank_rel_tol * s(0);
        k = static_cast<uword>(arma::sum(s > cutoff));
    }
    if (k == 0)
        return out;

    out.u = u.cols(0, k - 1);
    out.v = v.cols(0, k - 1);
    out.sigma = s.head(k);
    out.k = k;
    detail::fix_svd_phases(out.u, {&out.v});
    return out;
}

/// Moore-Penrose pseudo-inverse through the thin SVD above.
inline cx_mat pinv_tol(const cx_mat& m) {
    const SvdTriple s = thin_svd(m);
    if (s.k == 0)
        return cx_mat(m.n_cols, m.n_rows, arma::fill::zeros);
    return s.v * arma::diagmat(1.0 / s.sigma) * s.u.t();
}

/// Whitening of one steering factor A: a column transform q_tilde with
/// A * q_tilde semi-unitary. sigma_diag holds the squared singular values
/// of A (the Gram spectrum), rank their count above threshold.
struct WhitenedFactor {
    cx_mat a_tilde;       // N x rank, orthonormal columns
    cx_mat q_tilde;       // (n_cl*n_ray) x rank
    arma::vec sigma_diag; // length rank
    uword rank = 0;
};

inline WhitenedFactor whiten_factor(const cx_mat& a) {
    const SvdTriple s = thin_svd(a);
    if (s.k == 0)
        throw std::runtime_error("whiten_factor: matrix has no numerical rank");

    WhitenedFactor w;
    w.rank = s.k;
    w.sigma_diag = arma::square(s.sigma);
    w.q_tilde = s.v * arma::diagmat(1.0 / s.sigma);
    w.a_tilde = a * w.q_tilde;
    return w;
}

/// GC-SVD output: the channel SVD plus the mixing matrices that express the
/// singular vectors as combinations of steering columns,
///   u = a_r * left_mixing,   v = a_t * right_mixing.
/// The right mixing drives the PE-SMD initializer.
struct GcSvd {
    SvdTriple svd;
    cx_mat left_mixing;   // (n_cl*n_ray) x k
    cx_mat right_mixing;  // (n_cl*n_ray) x k
};

/// SVD of the sparse geometric channel from its factor form.
///
/// Whitens both steering factors, forms the small whitened core
/// diag(sigma_r) * q_r^H * diag(h_d) * q_t * diag(sigma_t), decomposes it,
/// and lifts the singular vectors back through the steering matrices.
inline GcSvd gc_svd(const ChannelRealization& ch) {
    const WhitenedFactor wr = whiten_factor(ch.a_r);
    const WhitenedFactor wt = whiten_factor(ch.a_t);

    // h_d is diagonal: scale rows of q_tilde instead of forming the matrix.
    const cx_mat core = arma::diagmat(wr.sigma_diag) *
                        (wr.q_tilde.t() * (arma::diagmat(ch.h_d) * wt.q_tilde)) *
                        arma::diagmat(wt.sigma_diag);
    const SvdTriple inner = thin_svd(core);

    GcSvd out;
    out.left_mixing = wr.q_tilde * inner.u;
    out.right_mixing = wt.q_tilde * inner.v;
    out.svd.sigma = inner.sigma;
    out.svd.k = inner.k;
    out.svd.u = ch.a_r * out.left_mixing;
    out.svd.v = ch.a_t * out.right_mixing;
    detail::fix_svd_phases(out.svd.u, {&out.svd.v, &out.left_mixing, &out.right_mixing});
    return out;
}

}  // namespace hybeam

#endif  // HYBEAM_GCSVD_HPP
