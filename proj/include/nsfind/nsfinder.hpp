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

#include <optional>
#include <string>
#include <vector>

#include "nsfind/algebra.hpp"
#include "nsfind/channel.hpp"

namespace nsfind {

enum class CandidateSource { kTrivial, kFixedSupport, kKrylovSeed, kUser };

std::string to_string(CandidateSource source);

/// A projector tested against the invariance condition E(P) = P E(P) P.
struct CandidateProjector {
    Projector projector;
    CandidateSource source = CandidateSource::kUser;
    std::vector<CandidateSource> sources;  // every strategy that produced it
    double condition_residual = 0.0;       // || E(P) - P E(P) P ||_F
    double invariance_residual = 0.0;      // max_a || P_perp E_a P ||_F
    bool accepted = false;
    bool residuals_agree = true;           // both notions give the same verdict
};

/// Evaluates both residual notions for the invariance condition.
CandidateProjector check_projector_condition(const Channel& channel, const Projector& p,
                                             CandidateSource source = CandidateSource::kUser,
                                             const Tolerances& tol = {});

struct StrategySet {
    bool trivial = true;
    bool fixed_support = true;
    bool krylov_seed = true;
};

struct FinderResult {
    std::vector<CandidateProjector> candidates;  // accepted, deduplicated, canonical order
    bool budget_exceeded = false;                // lattice closure was truncated
};

/// Candidate generation: heuristic strategies, each candidate verified
/// exactly before inclusion. P = 1 is always present. The Krylov strategy
/// closes seed vectors (standard basis, eigenvectors of a random Kraus
/// combination, and whole eigenspace clusters) under all E_a, then takes
/// the lattice closure (pairwise meets and joins) of accepted ranges up
/// to `max_candidates`.
FinderResult find_invariant_projectors(const Channel& channel, const StrategySet& strategies,
                                       unsigned seed, int max_candidates,
                                       const Tolerances& tol = {},
                                       const std::vector<Projector>& user_projectors = {});

/// Scalars lambda_{a,k,l} with P_kk E_a P_ll = lambda_{akl} P_kl, packed
/// into the m x m matrices Lambda_a of the restricted channel.
struct LambdaTensor {
    Eigen::Index m = 0;
    Eigen::Index n = 0;
    std::vector<ComplexMatrix> cofactor_kraus;  // Lambda_a, one per Kraus op
    double eq_residual = 0.0;                   // max || P_kk E_a P_ll - lambda P_kl ||_F
    double completeness_residual = 0.0;         // || sum Lambda^dag Lambda - 1_m ||_F
};

/// Residuals from randomized verification of the defining property
/// E(sigma_A (x) sigma_B) = tau_A (x) sigma_B.
struct NsVerification {
    double product_fit_residual = 0.0;   // best tau_A (x) sigma_B fit
    double partial_trace_residual = 0.0; // || Tr_A E(sigma) - Tr_A sigma ||_F
    double cofactor_residual = 0.0;      // against sigma_k with uniform A input
    double leak_residual = 0.0;          // mass escaping the subsystem's support
    bool trace_degenerate = false;       // output trace collapsed (flags misuse)
};

/// One tensor factor H^B with dim > 1 surviving the structure
/// decomposition of A'_P, with its certificates.
struct NoiselessSubsystem {
    int block_index = 0;
    Eigen::Index m = 0;
    Eigen::Index n = 0;
    ComplexMatrix isometry;   // ambient_dim x (m*n)
    ComplexMatrix cofactor;   // m x m positive matrix sigma_k
    LambdaTensor lambda;
    NsVerification residuals;
};

/// Everything computed for one accepted candidate.
struct CandidateAnalysis {
    MatrixAlgebra algebra;
    StructureDecomposition decomposition;
    DecompositionReport decomposition_report;
    std::vector<ComplexMatrix> cofactors;  // sigma_k for every block, in block order
    std::vector<NoiselessSubsystem> subsystems;
};

/// Full pipeline for one candidate: compress Kraus, build A'_P, decompose,
/// extract cofactors and lambda scalars, verify. Soundness failures throw.
CandidateAnalysis analyze_candidate(const Channel& channel, const CandidateProjector& candidate,
                                    unsigned seed, const Tolerances& tol = {});

/// The subsystem list of analyze_candidate (blocks with n > 1 only).
std::vector<NoiselessSubsystem> noiseless_subsystems(const Channel& channel,
                                                     const CandidateProjector& candidate,
                                                     unsigned seed, const Tolerances& tol = {});

/// Recovers the sigma_k with E(P) = sum_k W_k (sigma_k (x) 1_{n_k}) W_k^dag
/// and verifies the reconstruction plus commutation with the algebra.
std::vector<ComplexMatrix> extract_cofactors(const Channel& channel, const Projector& p,
                                             const StructureDecomposition& decomposition,
                                             const MatrixAlgebra& algebra,
                                             const Tolerances& tol = {});

/// Least-squares lambda scalars for a given subsystem frame.
LambdaTensor extract_lambda(const Channel& channel, const ComplexMatrix& isometry,
                            Eigen::Index m, Eigen::Index n, const Tolerances& tol = {});

LambdaTensor extract_lambda(const Channel& channel, const NoiselessSubsystem& ns,
                            const Tolerances& tol = {});

/// Randomized check of the defining property on seeded product states.
NsVerification verify_ns(const Channel& channel, const NoiselessSubsystem& ns, int trials,
                         unsigned seed, const Tolerances& tol = {});

/// Report from checking Fix_P(E) = A'_P: forward membership, the
/// positive-semidefinite Schwarz gap, and the converse inclusion.
struct FixpointReport {
    double forward_residual = 0.0;       // worst violation over basis + random combos
    double schwarz_min_eigenvalue = 0.0; // min eig of E(s^dag s) - s^dag E(P) s over samples
    double converse_residual = 0.0;      // membership residual of quadratic-passing samples
    Eigen::Index linear_solution_dim = 0;
    int quadratic_pass_count = 0;
    bool pass = false;
};

FixpointReport verify_fixpoint_set(const Channel& channel, const Projector& p,
                                   const MatrixAlgebra& algebra, int trials, unsigned seed,
                                   const Tolerances& tol = {});

/// Unital-channel consequence: every noiseless-subsystem algebra embeds in
/// the full noise commutant, and its supporting projector is fixed.
struct CorollaryReport {
    bool applicable = false;             // channel is unital
    double max_commutator_residual = 0.0;
    double projector_fix_residual = 0.0;
    bool pass = false;
};

struct FoundSubsystem {
    Projector projector;  // the candidate that produced the subsystem
    NoiselessSubsystem subsystem;
};

/// Throws NotUnitalError when the channel is not unital.
CorollaryReport check_unital_corollary(const Channel& channel,
                                       const std::vector<FoundSubsystem>& found,
                                       const Tolerances& tol = {});

}  // namespace nsfind
