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

#include "nsfind/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "nsfind/rng.hpp"

namespace nsfind {

bool entries_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

ComplexMatrix EigenSystem::cluster_projection(std::size_t k) const {
    const Eigen::Index d = eigenvectors.rows();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (Eigen::Index idx : clusters.at(k)) {
        p += eigenvectors.col(idx) * eigenvectors.col(idx).adjoint();
    }
    return p;
}

EigenSystem hermitian_eig(const ComplexMatrix& a, double cluster_tol) {
    if (a.rows() != a.cols())
        throw ShapeMismatchError("hermitian_eig: matrix is not square");
    if (!entries_finite(a))
        throw ShapeMismatchError("hermitian_eig: non-finite entries");

    const double scale = std::max(1.0, a.norm());
    const double herm_residual = (a - a.adjoint()).norm();
    if (herm_residual > 1e-8 * scale)
        throw NonHermitianError("hermitian_eig: input fails the symmetry check", herm_residual);

    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NoConvergenceError("hermitian_eig: QL iteration did not converge",
                                 30 * a.rows());

    EigenSystem sys;
    // Eigen sorts ascending; the contract wants descending.
    sys.eigenvalues = solver.eigenvalues().reverse();
    sys.eigenvectors = solver.eigenvectors().rowwise().reverse();

    std::vector<Eigen::Index> current{0};
    for (Eigen::Index i = 1; i < sys.eigenvalues.size(); ++i) {
        if (sys.eigenvalues(i - 1) - sys.eigenvalues(i) > cluster_tol) {
            sys.clusters.push_back(current);
            current.clear();
        }
        current.push_back(i);
    }
    if (sys.eigenvalues.size() > 0) sys.clusters.push_back(current);
    return sys;
}

ComplexMatrix kernel_basis(const ComplexMatrix& m, double rank_rel) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_rel * sigma_max) ++rank;
    if (sigma_max == 0.0) rank = 0;
    return svd.matrixV().rightCols(m.cols() - rank);
}

std::vector<ComplexMatrix> kernel_of_linear_map(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
    Eigen::Index dim, double rank_rel) {
    // Probe linearity on seeded random inputs.
    Rng rng(0x9e3779b97f4a7c15ull);
    const ComplexMatrix x = rng.gaussian_matrix(dim, dim);
    const ComplexMatrix y = rng.gaussian_matrix(dim, dim);
    const Complex alpha = rng.complex_gaussian();
    const Complex beta = rng.complex_gaussian();
    const ComplexMatrix fx = apply(x);
    const ComplexMatrix fy = apply(y);
    if (fx.rows() != fy.rows() || fx.cols() != fy.cols())
        throw NonlinearMapError("kernel_of_linear_map: output shape is input-dependent", 0.0);
    const ComplexMatrix fxy = apply(alpha * x + beta * y);
    const double probe_scale = fx.norm() + fy.norm() + 1.0;
    const double probe_residual = (fxy - alpha * fx - beta * fy).norm();
    if (probe_residual > 1e-10 * probe_scale)
        throw NonlinearMapError("kernel_of_linear_map: linearity probe failed", probe_residual);

    const Eigen::Index out_size = fx.rows() * fx.cols();
    ComplexMatrix map_matrix(out_size, dim * dim);
    ComplexMatrix basis_elem = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            basis_elem(r, c) = 1.0;
            map_matrix.col(r * dim + c) = vec_rm(apply(basis_elem));
            basis_elem(r, c) = 0.0;
        }
    }

    const ComplexMatrix null_cols = kernel_basis(map_matrix, rank_rel);
    std::vector<ComplexMatrix> kernel;
    kernel.reserve(null_cols.cols());
    for (Eigen::Index j = 0; j < null_cols.cols(); ++j) {
        ComplexMatrix k = unvec_rm(null_cols.col(j), dim, dim);
        const double residual = apply(k).norm();
        if (residual > 1e-9)
            throw Error("kernel_of_linear_map: kernel vector residual " +
                        std::to_string(residual) + " exceeds 1e-9");
        kernel.push_back(std::move(k));
    }
    return kernel;
}

std::vector<ComplexMatrix> orthonormalize_hs(const std::vector<ComplexMatrix>& ops,
                                             double rank_rel) {
    if (ops.empty()) return {};
    const Eigen::Index rows = ops.front().rows();
    const Eigen::Index cols = ops.front().cols();
    for (const auto& op : ops)
        if (op.rows() != rows || op.cols() != cols)
            throw ShapeMismatchError("orthonormalize_hs: mixed shapes");

    ComplexMatrix stacked(rows * cols, static_cast<Eigen::Index>(ops.size()));
    for (std::size_t i = 0; i < ops.size(); ++i)
        stacked.col(static_cast<Eigen::Index>(i)) = vec_rm(ops[i]);

    Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sigma_max > 0.0 && sv(i) > rank_rel * sigma_max) ++rank;

    // Modified Gram-Schmidt with re-orthogonalization keeps the leading
    // inputs recognizable in the output (the SVD rank decides how many
    // directions survive).
    std::vector<ComplexVector> q;
    const double drop_tol = rank_rel * std::max(sigma_max, 1e-300);
    for (Eigen::Index j = 0; j < stacked.cols() && static_cast<Eigen::Index>(q.size()) < rank; ++j) {
        ComplexVector v = stacked.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : q) v -= u * u.dot(v);
        if (v.norm() > drop_tol) q.push_back(v.normalized());
    }
    if (static_cast<Eigen::Index>(q.size()) != rank) {
        // Borderline conditioning: fall back to the left singular vectors.
        Eigen::JacobiSVD<ComplexMatrix> full(stacked, Eigen::ComputeThinU);
        q.clear();
        for (Eigen::Index i = 0; i < rank; ++i) q.push_back(full.matrixU().col(i));
    }

    std::vector<ComplexMatrix> out;
    out.reserve(q.size());
    for (const auto& v : q) out.push_back(unvec_rm(v, rows, cols));
    return out;
}

ComplexMatrix range_isometry(const ComplexMatrix& projector, Eigen::Index rank) {
    const Eigen::Index d = projector.rows();
    if (rank == 0) return ComplexMatrix::Zero(d, 0);
    Eigen::ColPivHouseholderQR<ComplexMatrix> qr(projector);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, rank);
    return q;
}

ComplexMatrix column_space_basis(const ComplexMatrix& m, double rank_rel) {
    if (m.cols() == 0) return ComplexMatrix::Zero(m.rows(), 0);
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sigma_max > 0.0 && sv(i) > rank_rel * sigma_max) ++rank;
    return svd.matrixU().leftCols(rank);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, Eigen::Index da, Eigen::Index db) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index j = 0; j < da; ++j)
        out += m.block(j * db, j * db, db, db);
    return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, Eigen::Index da, Eigen::Index db) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < da; ++k)
            out(j, k) = m.block(j * db, k * db, db, db).trace();
    return out;
}

ComplexVector vec_rm(const ComplexMatrix& m) {
    ComplexVector v(m.rows() * m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
    return v;
}

ComplexMatrix unvec_rm(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = v(r * cols + c);
    return m;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a.adjoint() * b).trace();
}

double max_principal_angle(const ComplexMatrix& u, const ComplexMatrix& w) {
    Eigen::JacobiSVD<ComplexMatrix> svd(u.adjoint() * w);
    const auto& sv = svd.singularValues();
    double cos_min = 1.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) cos_min = std::min(cos_min, sv(i));
    cos_min = std::clamp(cos_min, -1.0, 1.0);
    return std::acos(cos_min);
}

double span_distance(const ComplexMatrix& u, const ComplexMatrix& w) {
    return (u * u.adjoint() - w * w.adjoint()).norm();
}

ComplexMatrix project_onto_span(const std::vector<ComplexMatrix>& basis,
                                const ComplexMatrix& x) {
    ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
    for (const auto& b : basis) out += hs_inner(b, x) * b;
    return out;
}

double span_membership_residual(const std::vector<ComplexMatrix>& basis,
                                const ComplexMatrix& x) {
    return (x - project_onto_span(basis, x)).norm();
}

}  // namespace nsfind
