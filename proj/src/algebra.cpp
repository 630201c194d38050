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

#include "nsfind/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nsfind/rng.hpp"

namespace nsfind {

namespace {

constexpr int kMaxResampleAttempts = 8;

// Relative clustering tolerance for eigenvalues of randomly sampled
// central elements.
constexpr double kClusterRel = 1e-6;

std::uint64_t derive_seed(unsigned seed, int attempt) {
    return 0x6e73616c67ull ^ (static_cast<std::uint64_t>(seed) * 0x100000001b3ull) ^
           static_cast<std::uint64_t>(attempt);
}

// Random Hermitian element of the span of a dagger-closed HS-orthonormal
// family.
ComplexMatrix random_hermitian_element(const std::vector<ComplexMatrix>& basis, Rng& rng) {
    ComplexMatrix m = ComplexMatrix::Zero(basis.front().rows(), basis.front().cols());
    for (const auto& b : basis) m += rng.complex_gaussian() * b;
    return 0.5 * (m + m.adjoint());
}

double spectral_diameter(const RealVector& eigenvalues) {
    if (eigenvalues.size() == 0) return 0.0;
    return eigenvalues(0) - eigenvalues(eigenvalues.size() - 1);
}

// Aligns the eigenspace bases of a block so that the algebra acts
// identically on every copy: solves rep_j(t) M = M rep_1(t) for the
// (Schur-unique) intertwiner M and absorbs it into the basis.
ComplexMatrix align_representation_copy(const std::vector<ComplexMatrix>& restricted,
                                        const ComplexMatrix& reference_frame,
                                        const ComplexMatrix& frame, double rank_rel) {
    const Eigen::Index n = frame.cols();
    std::vector<ComplexMatrix> ref_reps;
    std::vector<ComplexMatrix> reps;
    ref_reps.reserve(restricted.size());
    reps.reserve(restricted.size());
    for (const auto& s : restricted) {
        ref_reps.push_back(reference_frame.adjoint() * s * reference_frame);
        reps.push_back(frame.adjoint() * s * frame);
    }
    const auto intertwine = [&](const ComplexMatrix& x) {
        ComplexMatrix stacked(static_cast<Eigen::Index>(reps.size()) * n, n);
        for (std::size_t t = 0; t < reps.size(); ++t)
            stacked.middleRows(static_cast<Eigen::Index>(t) * n, n) =
                reps[t] * x - x * ref_reps[t];
        return stacked;
    };
    const std::vector<ComplexMatrix> solutions = kernel_of_linear_map(intertwine, n, rank_rel);
    if (solutions.size() != 1)
        throw StructureInconsistentError(
            "structure_decompose: intertwiner space has dimension " +
            std::to_string(solutions.size()) + ", expected 1");
    ComplexMatrix m = solutions.front();
    m *= std::sqrt(static_cast<double>(n)) / m.norm();
    const double unitarity = (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm();
    if (unitarity > 1e-6)
        throw StructureInconsistentError(
            "structure_decompose: intertwiner is not unitary, residual " +
            std::to_string(unitarity));
    return frame * m;
}

bool lexicographic_less(const ComplexMatrix& a, const ComplexMatrix& b) {
    for (Eigen::Index c = 0; c < a.cols() && c < b.cols(); ++c) {
        for (Eigen::Index r = 0; r < a.rows() && r < b.rows(); ++r) {
            const Complex x = a(r, c);
            const Complex y = b(r, c);
            if (x.real() != y.real()) return x.real() < y.real();
            if (x.imag() != y.imag()) return x.imag() < y.imag();
        }
    }
    return false;
}

}  // namespace

double MatrixAlgebra::adjoint_closure_residual() const {
    double worst = 0.0;
    for (const auto& b : basis)
        worst = std::max(worst, span_membership_residual(basis, b.adjoint().eval()));
    return worst;
}

double MatrixAlgebra::product_closure_residual() const {
    double worst = 0.0;
    for (const auto& a : basis)
        for (const auto& b : basis)
            worst = std::max(worst, span_membership_residual(basis, (a * b).eval()));
    return worst;
}

double MatrixAlgebra::unit_action_residual() const {
    double worst = 0.0;
    for (const auto& b : basis) worst = std::max(worst, (unit.matrix * b - b).norm());
    return worst;
}

double MatrixAlgebra::max_commutator_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            worst = std::max(worst, (basis[i] * basis[j] - basis[j] * basis[i]).norm());
    return worst;
}

MatrixAlgebra commutant(const std::vector<ComplexMatrix>& ops, const Projector& unit,
                        const Tolerances& tol) {
    const Eigen::Index d = unit.dim;
    const Eigen::Index r = unit.rank;
    if (r < 1) throw Error("commutant: unit projector has rank 0");
    for (const auto& op : ops) {
        if (op.rows() != d || op.cols() != d)
            throw ShapeMismatchError("commutant: op dimension mismatch");
        const double support = (unit.matrix * op * unit.matrix - op).norm();
        if (support > tol.decision * std::max(1.0, op.norm()))
            throw Error("commutant: op not supported on the unit's range, residual " +
                        std::to_string(support));
    }

    const ComplexMatrix v = projector_isometry(unit);
    std::vector<ComplexMatrix> compressed;
    compressed.reserve(ops.size());
    for (const auto& op : ops) compressed.push_back(v.adjoint() * op * v);

    const auto commutators = [&](const ComplexMatrix& x) {
        ComplexMatrix stacked(2 * static_cast<Eigen::Index>(compressed.size()) * r, r);
        Eigen::Index row = 0;
        for (const auto& a : compressed) {
            stacked.middleRows(row, r) = x * a - a * x;
            row += r;
            const ComplexMatrix ad = a.adjoint();
            stacked.middleRows(row, r) = x * ad - ad * x;
            row += r;
        }
        return stacked;
    };

    std::vector<ComplexMatrix> kernel;
    if (ops.empty()) {
        // Commutant of the empty set is everything on the unit's range.
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < r; ++j) {
                ComplexMatrix e = ComplexMatrix::Zero(r, r);
                e(i, j) = 1.0;
                kernel.push_back(e);
            }
    } else {
        kernel = kernel_of_linear_map(commutators, r, tol.rank_rel);
    }

    MatrixAlgebra algebra;
    algebra.ambient_dim = d;
    algebra.unit = unit;
    algebra.basis.reserve(kernel.size());
    for (const auto& k : kernel) algebra.basis.push_back(v * k * v.adjoint());
    return algebra;
}

StructureDecomposition structure_decompose(const MatrixAlgebra& algebra, unsigned seed,
                                           const Tolerances& tol) {
    if (algebra.basis.empty())
        throw StructureInconsistentError("structure_decompose: empty algebra");
    const Eigen::Index r = algebra.unit.rank;
    const ComplexMatrix v = projector_isometry(algebra.unit);

    std::vector<ComplexMatrix> compressed;
    compressed.reserve(algebra.basis.size());
    for (const auto& b : algebra.basis) compressed.push_back(v.adjoint() * b * v);
    const auto p = static_cast<Eigen::Index>(compressed.size());

    // Center = { sum_j c_j B_j : [sum_j c_j B_j, B_i] = 0 for all i },
    // solved on the coefficient vector c.
    ComplexMatrix center_system(2 * p * r * r, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index i = 0; i < p; ++i) {
            const ComplexMatrix comm = compressed[j] * compressed[i] - compressed[i] * compressed[j];
            const ComplexMatrix adj = compressed[i].adjoint();
            const ComplexMatrix comm_dag = compressed[j] * adj - adj * compressed[j];
            center_system.block(2 * i * r * r, j, r * r, 1) = vec_rm(comm);
            center_system.block((2 * i + 1) * r * r, j, r * r, 1) = vec_rm(comm_dag);
        }
    }
    const ComplexMatrix center_coeffs = kernel_basis(center_system, tol.rank_rel);
    const Eigen::Index num_blocks = center_coeffs.cols();
    if (num_blocks < 1)
        throw StructureInconsistentError("structure_decompose: center has dimension 0");
    std::vector<ComplexMatrix> center;
    center.reserve(num_blocks);
    for (Eigen::Index t = 0; t < num_blocks; ++t) {
        ComplexMatrix z = ComplexMatrix::Zero(r, r);
        for (Eigen::Index j = 0; j < p; ++j) z += center_coeffs(j, t) * compressed[j];
        center.push_back(std::move(z));
    }

    // Minimal central projections from a random Hermitian central element.
    std::vector<ComplexMatrix> central_projections;
    if (num_blocks == 1) {
        central_projections.push_back(ComplexMatrix::Identity(r, r));
    } else {
        int attempt = 0;
        for (; attempt <= kMaxResampleAttempts; ++attempt) {
            Rng rng(derive_seed(seed, attempt));
            const ComplexMatrix h = random_hermitian_element(center, rng);
            EigenSystem probe = hermitian_eig(h, 0.0);
            const double diam = spectral_diameter(probe.eigenvalues);
            if (diam <= 0.0) continue;
            EigenSystem sys = hermitian_eig(h, kClusterRel * diam);
            if (static_cast<Eigen::Index>(sys.clusters.size()) != num_blocks) continue;
            central_projections.clear();
            for (std::size_t k = 0; k < sys.clusters.size(); ++k)
                central_projections.push_back(sys.cluster_projection(k));
            break;
        }
        if (attempt > kMaxResampleAttempts)
            throw DegenerateSampleError(
                "structure_decompose: central element failed to separate blocks after " +
                    std::to_string(kMaxResampleAttempts + 1) + " samples",
                kMaxResampleAttempts + 1);
    }

    // Resolve each block into its 1_m (x) M_n coordinates.
    struct BlockFrame {
        Block block;
        ComplexMatrix frame;  // r x (m*n), orthonormal columns
    };
    std::vector<BlockFrame> frames;
    frames.reserve(central_projections.size());

    for (const ComplexMatrix& q : central_projections) {
        const auto dk = static_cast<Eigen::Index>(std::llround(q.trace().real()));
        const ComplexMatrix vk = range_isometry(q, dk);

        std::vector<ComplexMatrix> restricted_raw;
        restricted_raw.reserve(compressed.size());
        for (const auto& b : compressed)
            restricted_raw.push_back(vk.adjoint() * b * vk);
        const std::vector<ComplexMatrix> restricted =
            orthonormalize_hs(restricted_raw, tol.rank_rel);

        const auto n_sq = static_cast<Eigen::Index>(restricted.size());
        const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n_sq))));
        if (n * n != n_sq)
            throw StructureInconsistentError(
                "structure_decompose: restricted algebra dimension " + std::to_string(n_sq) +
                " is not a perfect square");
        if (n < 1 || dk % n != 0)
            throw StructureInconsistentError(
                "structure_decompose: block of size " + std::to_string(dk) +
                " is incompatible with factor dimension " + std::to_string(n));
        const Eigen::Index m = dk / n;

        ComplexMatrix frame;
        if (m == 1) {
            frame = vk;
        } else {
            // Relative commutant of the restricted algebra inside the block.
            const auto rel_comm_map = [&](const ComplexMatrix& x) {
                ComplexMatrix stacked(2 * n_sq * dk, dk);
                Eigen::Index row = 0;
                for (const auto& s : restricted) {
                    stacked.middleRows(row, dk) = x * s - s * x;
                    row += dk;
                    const ComplexMatrix sd = s.adjoint();
                    stacked.middleRows(row, dk) = x * sd - sd * x;
                    row += dk;
                }
                return stacked;
            };
            const std::vector<ComplexMatrix> rel_comm =
                kernel_of_linear_map(rel_comm_map, dk, tol.rank_rel);
            if (static_cast<Eigen::Index>(rel_comm.size()) != m * m)
                throw StructureInconsistentError(
                    "structure_decompose: relative commutant dimension " +
                    std::to_string(rel_comm.size()) + " != m^2 = " + std::to_string(m * m));

            // Random Hermitian relative-commutant element: its eigenspaces
            // are m copies of the n-dimensional factor.
            std::vector<ComplexMatrix> eigenframes;
            int attempt = 0;
            for (; attempt <= kMaxResampleAttempts; ++attempt) {
                Rng rng(derive_seed(seed, attempt) ^ 0x5555u);
                const ComplexMatrix y = random_hermitian_element(rel_comm, rng);
                EigenSystem probe = hermitian_eig(y, 0.0);
                const double diam = spectral_diameter(probe.eigenvalues);
                if (diam <= 0.0) continue;
                EigenSystem sys = hermitian_eig(y, kClusterRel * diam);
                if (static_cast<Eigen::Index>(sys.clusters.size()) != m) continue;
                bool sizes_ok = true;
                for (const auto& cluster : sys.clusters)
                    sizes_ok = sizes_ok && static_cast<Eigen::Index>(cluster.size()) == n;
                if (!sizes_ok) continue;
                eigenframes.clear();
                for (const auto& cluster : sys.clusters) {
                    ComplexMatrix u(dk, n);
                    for (Eigen::Index c = 0; c < n; ++c)
                        u.col(c) = sys.eigenvectors.col(cluster[static_cast<std::size_t>(c)]);
                    eigenframes.push_back(std::move(u));
                }
                break;
            }
            if (attempt > kMaxResampleAttempts)
                throw DegenerateSampleError(
                    "structure_decompose: relative-commutant element failed to split a block "
                    "after " +
                        std::to_string(kMaxResampleAttempts + 1) + " samples",
                    kMaxResampleAttempts + 1);

            frame.resize(r, dk);
            frame.leftCols(n) = vk * eigenframes.front();
            for (Eigen::Index j = 1; j < m; ++j) {
                const ComplexMatrix aligned = align_representation_copy(
                    restricted, eigenframes.front(), eigenframes[static_cast<std::size_t>(j)],
                    tol.rank_rel);
                frame.middleCols(j * n, n) = vk * aligned;
            }
        }
        frames.push_back(BlockFrame{Block{m, n}, std::move(frame)});
    }

    std::sort(frames.begin(), frames.end(), [](const BlockFrame& a, const BlockFrame& b) {
        if (a.block.n != b.block.n) return a.block.n > b.block.n;
        if (a.block.m != b.block.m) return a.block.m > b.block.m;
        return lexicographic_less(a.frame, b.frame);
    });

    Eigen::Index total = 0;
    for (const auto& f : frames) total += f.frame.cols();
    if (total != r)
        throw StructureInconsistentError("structure_decompose: block sizes sum to " +
                                         std::to_string(total) + " != rank " +
                                         std::to_string(r));
    ComplexMatrix assembled(r, r);
    Eigen::Index offset = 0;
    for (const auto& f : frames) {
        assembled.middleCols(offset, f.frame.cols()) = f.frame;
        offset += f.frame.cols();
    }
    // Newton polish toward the nearest unitary.
    for (int it = 0; it < 2; ++it)
        assembled = 0.5 * assembled * (3.0 * ComplexMatrix::Identity(r, r) -
                                       assembled.adjoint() * assembled);

    StructureDecomposition decomposition;
    decomposition.rank = r;
    decomposition.unitary = assembled.adjoint();
    offset = 0;
    for (const auto& f : frames) {
        decomposition.blocks.push_back(f.block);
        decomposition.block_isometries.push_back(
            v * assembled.middleCols(offset, f.frame.cols()));
        offset += f.frame.cols();
    }
    return decomposition;
}

DecompositionReport verify_decomposition(const MatrixAlgebra& algebra,
                                         const StructureDecomposition& decomposition,
                                         double threshold) {
    DecompositionReport report;
    const Eigen::Index r = decomposition.rank;
    report.unitary_residual =
        (decomposition.unitary.adjoint() * decomposition.unitary -
         ComplexMatrix::Identity(r, r))
            .norm();
    for (const auto& block : decomposition.blocks) {
        report.sum_mn += block.m * block.n;
        report.sum_n_sq += block.n * block.n;
    }

    const ComplexMatrix v = projector_isometry(algebra.unit);
    for (const auto& b : algebra.basis) {
        const ComplexMatrix c = decomposition.unitary * (v.adjoint() * b * v) *
                                decomposition.unitary.adjoint();
        ComplexMatrix off = c;
        Eigen::Index offset = 0;
        for (const auto& block : decomposition.blocks) {
            const Eigen::Index m = block.m;
            const Eigen::Index n = block.n;
            ComplexMatrix mean = ComplexMatrix::Zero(n, n);
            for (Eigen::Index j = 0; j < m; ++j)
                mean += c.block(offset + j * n, offset + j * n, n, n);
            mean /= static_cast<double>(m);
            for (Eigen::Index j = 0; j < m; ++j) {
                report.identity_factor_residual = std::max(
                    report.identity_factor_residual,
                    (c.block(offset + j * n, offset + j * n, n, n) - mean).norm());
                off.block(offset + j * n, offset + j * n, n, n).setZero();
            }
            offset += m * n;
        }
        report.off_pattern_residual = std::max(report.off_pattern_residual, off.norm());
    }

    report.pass = report.off_pattern_residual < threshold &&
                  report.identity_factor_residual < threshold &&
                  report.unitary_residual < 1e-10 && report.sum_mn == r &&
                  report.sum_n_sq == algebra.dim();
    return report;
}

}  // namespace nsfind
