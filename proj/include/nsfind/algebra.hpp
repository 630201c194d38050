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

#include <vector>

#include "nsfind/channel.hpp"
#include "nsfind/linalg.hpp"
#include "nsfind/tolerances.hpp"

namespace nsfind {

/// A dagger-closed operator algebra, stored as an HS-orthonormal basis of
/// ambient matrices supported on the range of `unit` (the algebra's
/// identity element).
struct MatrixAlgebra {
    Eigen::Index ambient_dim = 0;
    std::vector<ComplexMatrix> basis;
    Projector unit;

    Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }

    double membership_residual(const ComplexMatrix& x) const {
        return span_membership_residual(basis, x);
    }

    // Diagnostics used by invariant tests.
    double adjoint_closure_residual() const;
    double product_closure_residual() const;
    double unit_action_residual() const;
    double max_commutator_residual() const;  // 0 iff abelian
};

/// The algebra of all operators on the range of `unit` commuting with
/// every op and every op's adjoint. Ops must be supported on that range.
MatrixAlgebra commutant(const std::vector<ComplexMatrix>& ops, const Projector& unit,
                        const Tolerances& tol = {});

struct Block {
    Eigen::Index m = 0;  // multiplicity (dim of the A factor)
    Eigen::Index n = 0;  // block size (dim of the B factor)

    friend bool operator==(const Block&, const Block&) = default;
};

/// Unitary change of basis U on the range of the algebra's unit under
/// which every algebra element becomes blockdiag_k(1_{m_k} (x) X_k),
/// together with ambient isometries W_k onto the k-th tensor summand.
struct StructureDecomposition {
    ComplexMatrix unitary;                        // r x r, r = rank(unit)
    std::vector<Block> blocks;                    // canonical order
    std::vector<ComplexMatrix> block_isometries;  // ambient_dim x (m_k * n_k)
    Eigen::Index rank = 0;                        // rank of the unit projector
};

/// Wedderburn decomposition of a dagger-algebra by randomized central and
/// relative-commutant sampling. Deterministic for a fixed (algebra, seed).
StructureDecomposition structure_decompose(const MatrixAlgebra& algebra, unsigned seed,
                                           const Tolerances& tol = {});

struct DecompositionReport {
    double off_pattern_residual = 0.0;       // mass outside the block pattern
    double identity_factor_residual = 0.0;   // deviation of the 1_m factor
    double unitary_residual = 0.0;           // || U^dag U - 1 ||_F
    Eigen::Index sum_mn = 0;
    Eigen::Index sum_n_sq = 0;
    bool pass = false;
};

/// Certifies a decomposition by conjugating every basis element and
/// measuring how far it falls from the 1_m (x) X pattern.
DecompositionReport verify_decomposition(const MatrixAlgebra& algebra,
                                         const StructureDecomposition& decomposition,
                                         double threshold = 1e-7);

}  // namespace nsfind
