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

#include <string>
#include <vector>

#include "nsfind/linalg.hpp"
#include "nsfind/tolerances.hpp"

namespace nsfind {

/// A completely positive trace-preserving map in operator-sum form,
/// E(X) = sum_a E_a X E_a^dag. Immutable once validated.
struct Channel {
    Eigen::Index dim = 0;
    std::vector<ComplexMatrix> kraus;
    std::string label;

    // Recorded at validation time.
    bool unital = false;
    double unitality_residual = 0.0;
    double trace_residual = 0.0;
    double choi_min_eigenvalue = 0.0;
};

/// Hermitian idempotent marking a candidate invariant subspace.
struct Projector {
    Eigen::Index dim = 0;
    ComplexMatrix matrix;
    Eigen::Index rank = 0;
};

/// Checks the operator-sum contract (trace preservation, complete
/// positivity via the Choi matrix) and records unitality.
Channel validate_channel(std::vector<ComplexMatrix> kraus, std::string label = "",
                         const Tolerances& tol = {});

/// sum_a E_a X E_a^dag.
ComplexMatrix apply_channel(const Channel& channel, const ComplexMatrix& x);

/// Heisenberg-picture adjoint, sum_a E_a^dag X E_a.
ComplexMatrix apply_channel_adjoint(const Channel& channel, const ComplexMatrix& x);

struct UnitalityCheck {
    bool unital = false;
    double residual = 0.0;
};

/// Whether E(1) = 1 within tolerance; the residual is always reported.
UnitalityCheck is_unital(const Channel& channel, const Tolerances& tol = {});

/// Choi matrix sum_ij |i><j| (x) E(|i><j|).
ComplexMatrix choi_matrix(const std::vector<ComplexMatrix>& kraus);

/// Validates Hermiticity and idempotence, rounds the trace to the rank.
Projector make_projector(const ComplexMatrix& matrix, const Tolerances& tol = {});

/// P = V V^dag for an isometry (columns get orthonormalized first).
Projector projector_from_columns(const ComplexMatrix& columns, double rank_rel = 1e-8);

Projector identity_projector(Eigen::Index dim);

Projector complement(const Projector& p);

/// || E(P) - P E(P) P ||_F, the invariance-condition residual.
double invariance_condition_residual(const Channel& channel, const Projector& p);

/// max_a || P_perp E_a P ||_F, the equivalent per-Kraus form.
double max_offrange_kraus_residual(const Channel& channel, const Projector& p);

/// Deterministic isometry onto the range of P (column-pivoted QR).
ComplexMatrix projector_isometry(const Projector& p);

/// Compressed Kraus operators { V^dag E_a V } on the range of an
/// invariant projector. Throws NotInvariantError when P fails the
/// invariance condition at the decision tolerance.
std::vector<ComplexMatrix> compress_kraus(const Channel& channel, const Projector& p,
                                          const Tolerances& tol = {});

}  // namespace nsfind
