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

#include "nsfind/channel.hpp"

#include <cmath>

namespace nsfind {

Channel validate_channel(std::vector<ComplexMatrix> kraus, std::string label,
                         const Tolerances& tol) {
    if (kraus.empty()) throw ShapeMismatchError("validate_channel: empty Kraus list");
    const Eigen::Index d = kraus.front().rows();
    for (const auto& k : kraus) {
        if (k.rows() != d || k.cols() != d)
            throw ShapeMismatchError("validate_channel: Kraus operators must be equal-shape square");
        if (!entries_finite(k))
            throw ShapeMismatchError("validate_channel: non-finite Kraus entries");
    }

    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& k : kraus) sum += k.adjoint() * k;
    const double trace_residual = (sum - ComplexMatrix::Identity(d, d)).norm();
    if (trace_residual > tol.decision)
        throw NotTracePreservingError(
            "validate_channel: sum E_a^dag E_a deviates from identity by " +
                std::to_string(trace_residual),
            trace_residual);

    const ComplexMatrix choi = choi_matrix(kraus);
    const EigenSystem choi_eig = hermitian_eig(choi, tol.decision);
    const double min_eig = choi_eig.eigenvalues(choi_eig.eigenvalues.size() - 1);
    if (min_eig < -tol.decision)
        throw NotCompletelyPositiveError(
            "validate_channel: Choi matrix has eigenvalue " + std::to_string(min_eig),
            min_eig);

    Channel channel;
    channel.dim = d;
    channel.kraus = std::move(kraus);
    channel.label = std::move(label);
    channel.trace_residual = trace_residual;
    channel.choi_min_eigenvalue = min_eig;

    ComplexMatrix e_of_one = ComplexMatrix::Zero(d, d);
    for (const auto& k : channel.kraus) e_of_one += k * k.adjoint();
    channel.unitality_residual = (e_of_one - ComplexMatrix::Identity(d, d)).norm();
    channel.unital = channel.unitality_residual <= tol.decision;
    return channel;
}

ComplexMatrix apply_channel(const Channel& channel, const ComplexMatrix& x) {
    if (x.rows() != channel.dim || x.cols() != channel.dim)
        throw ShapeMismatchError("apply_channel: operand must be dim x dim");
    ComplexMatrix out = ComplexMatrix::Zero(channel.dim, channel.dim);
    for (const auto& k : channel.kraus) out += k * x * k.adjoint();
    return out;
}

ComplexMatrix apply_channel_adjoint(const Channel& channel, const ComplexMatrix& x) {
    if (x.rows() != channel.dim || x.cols() != channel.dim)
        throw ShapeMismatchError("apply_channel_adjoint: operand must be dim x dim");
    ComplexMatrix out = ComplexMatrix::Zero(channel.dim, channel.dim);
    for (const auto& k : channel.kraus) out += k.adjoint() * x * k;
    return out;
}

UnitalityCheck is_unital(const Channel& channel, const Tolerances& tol) {
    const Eigen::Index d = channel.dim;
    const ComplexMatrix diff =
        apply_channel(channel, ComplexMatrix::Identity(d, d)) - ComplexMatrix::Identity(d, d);
    UnitalityCheck check;
    check.residual = diff.norm();
    check.unital = check.residual <= tol.decision;
    return check;
}

ComplexMatrix choi_matrix(const std::vector<ComplexMatrix>& kraus) {
    const Eigen::Index d = kraus.front().rows();
    // Choi = sum_a v_a v_a^dag with v_a = sum_i |i> (x) E_a|i>.
    ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& k : kraus) {
        ComplexVector v(d * d);
        for (Eigen::Index i = 0; i < d; ++i) v.segment(i * d, d) = k.col(i);
        choi += v * v.adjoint();
    }
    return choi;
}

Projector make_projector(const ComplexMatrix& matrix, const Tolerances& tol) {
    if (matrix.rows() != matrix.cols())
        throw ShapeMismatchError("make_projector: matrix is not square");
    const double herm = (matrix - matrix.adjoint()).norm();
    const double idem = (matrix * matrix - matrix).norm();
    if (herm > tol.strict || idem > tol.strict)
        throw ValidationError("make_projector: not a projector (hermiticity " +
                              std::to_string(herm) + ", idempotence " + std::to_string(idem) +
                              ")");
    const double trace = matrix.trace().real();
    const auto rank = static_cast<Eigen::Index>(std::llround(trace));
    if (std::abs(trace - static_cast<double>(rank)) > tol.decision)
        throw ValidationError("make_projector: trace " + std::to_string(trace) +
                              " is not near an integer");
    return Projector{matrix.rows(), matrix, rank};
}

Projector projector_from_columns(const ComplexMatrix& columns, double rank_rel) {
    const ComplexMatrix basis = column_space_basis(columns, rank_rel);
    Projector p;
    p.dim = columns.rows();
    p.matrix = basis * basis.adjoint();
    p.rank = basis.cols();
    return p;
}

Projector identity_projector(Eigen::Index dim) {
    return Projector{dim, ComplexMatrix::Identity(dim, dim), dim};
}

Projector complement(const Projector& p) {
    return Projector{p.dim, ComplexMatrix::Identity(p.dim, p.dim) - p.matrix,
                     p.dim - p.rank};
}

double invariance_condition_residual(const Channel& channel, const Projector& p) {
    const ComplexMatrix ep = apply_channel(channel, p.matrix);
    return (ep - p.matrix * ep * p.matrix).norm();
}

double max_offrange_kraus_residual(const Channel& channel, const Projector& p) {
    const ComplexMatrix perp = ComplexMatrix::Identity(p.dim, p.dim) - p.matrix;
    double worst = 0.0;
    for (const auto& k : channel.kraus)
        worst = std::max(worst, (perp * k * p.matrix).norm());
    return worst;
}

ComplexMatrix projector_isometry(const Projector& p) {
    return range_isometry(p.matrix, p.rank);
}

std::vector<ComplexMatrix> compress_kraus(const Channel& channel, const Projector& p,
                                          const Tolerances& tol) {
    if (p.dim != channel.dim)
        throw ShapeMismatchError("compress_kraus: projector dimension mismatch");
    const double residual = invariance_condition_residual(channel, p);
    if (residual > tol.decision)
        throw NotInvariantError("compress_kraus: projector fails E(P) = P E(P) P, residual " +
                                    std::to_string(residual),
                                residual);
    const ComplexMatrix v = projector_isometry(p);
    std::vector<ComplexMatrix> compressed;
    compressed.reserve(channel.kraus.size());
    for (const auto& k : channel.kraus) compressed.push_back(v.adjoint() * k * v);
    return compressed;
}

}  // namespace nsfind
