// Copyright 2026 The nsfind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "nsfind/errors.hpp"
#include "nsfind/tolerances.hpp"

namespace nsfind {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Result of a Hermitian eigendecomposition. Eigenvalues are sorted
/// descending; eigenvector columns form a unitary matrix; `clusters`
/// partitions the index range into groups whose internal eigenvalue gaps
/// stay at or below the clustering tolerance.
struct EigenSystem {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
    std::vector<std::vector<Eigen::Index>> clusters;

    /// Spectral projection onto the span of cluster `k`.
    ComplexMatrix cluster_projection(std::size_t k) const;
};

/// Eigendecomposition of a Hermitian matrix, with gap clustering.
/// Throws NonHermitianError when ||A - A^dag||_F > 1e-8 * max(1, ||A||_F).
EigenSystem hermitian_eig(const ComplexMatrix& a, double cluster_tol);

/// Orthonormal basis of the null space of an explicit matrix, as columns.
/// Rank is decided by singular values above rank_rel * sigma_max.
ComplexMatrix kernel_basis(const ComplexMatrix& m, double rank_rel);

/// HS-orthonormal basis of { X : apply(X) = 0 } where `apply` is a linear
/// map from dim x dim matrices to matrices of any fixed shape. Linearity
/// is probed on seeded random inputs; the kernel is read off a full SVD
/// of the map's matrix over the standard basis.
std::vector<ComplexMatrix> kernel_of_linear_map(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
    Eigen::Index dim, double rank_rel = 1e-8);

/// Hilbert-Schmidt orthonormalization of a list of equally shaped
/// matrices. Output length equals the numerical rank of the span.
std::vector<ComplexMatrix> orthonormalize_hs(const std::vector<ComplexMatrix>& ops,
                                             double rank_rel = 1e-8);

/// Deterministic isometry onto the range of a (numerical) projector,
/// built by column-pivoted QR. Columns are orthonormal and V V^dag
/// reproduces the projector.
ComplexMatrix range_isometry(const ComplexMatrix& projector, Eigen::Index rank);

/// Orthonormal basis of the column span of `m` (deterministic, rank by
/// relative singular-value threshold).
ComplexMatrix column_space_basis(const ComplexMatrix& m, double rank_rel = 1e-8);

// ---- small dense helpers ----

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace over the first factor of C^{da} (x) C^{db}; result is db x db.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, Eigen::Index da, Eigen::Index db);

/// Partial trace over the second factor; result is da x da.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, Eigen::Index da, Eigen::Index db);

/// Row-major flattening of a matrix and its inverse.
ComplexVector vec_rm(const ComplexMatrix& m);
ComplexMatrix unvec_rm(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols);

/// Tr(A^dag B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest principal angle (radians) between the column spans of two
/// isometries of equal rank.
double max_principal_angle(const ComplexMatrix& u, const ComplexMatrix& w);

/// || Pi_U - Pi_W ||_F for the orthogonal projections onto two column spans.
double span_distance(const ComplexMatrix& u, const ComplexMatrix& w);

/// Residual of `x` against the span of an HS-orthonormal family.
double span_membership_residual(const std::vector<ComplexMatrix>& basis,
                                const ComplexMatrix& x);

/// Component of `x` inside the span of an HS-orthonormal family.
ComplexMatrix project_onto_span(const std::vector<ComplexMatrix>& basis,
                                const ComplexMatrix& x);

bool entries_finite(const ComplexMatrix& m);

}  // namespace nsfind
