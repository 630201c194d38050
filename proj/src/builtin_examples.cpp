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

#include "nsfind/builtin_examples.hpp"

#include <cmath>

#include "nsfind/rng.hpp"

namespace nsfind {

namespace {

ComplexMatrix pauli_z() {
    ComplexMatrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

int popcount_index(Eigen::Index i) {
    int bits = 0;
    for (; i > 0; i >>= 1) bits += static_cast<int>(i & 1);
    return bits;
}

}  // namespace

Channel z_dephasing_channel() {
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    const double w = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> kraus{w * kron(pauli_z(), id2), w * kron(id2, pauli_z())};
    return validate_channel(std::move(kraus), "z-dephasing");
}

Channel u_dfs_channel() {
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    ComplexMatrix u = ComplexMatrix::Identity(4, 4);
    u(3, 3) = -1.0;
    const double w = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> kraus{w * u * kron(pauli_z(), id2),
                                     w * u * kron(id2, pauli_z())};
    return validate_channel(std::move(kraus), "u-dfs");
}

Channel kl97_channel(double q) {
    if (!(q > 0.0 && q <= 0.5))
        throw BadParameterError(
            "kl97 requires q in (0, 1/2]: alpha = sqrt(1-2q) is real only there");
    const double alpha = std::sqrt(1.0 - 2.0 * q);
    const double beta = std::sqrt(q / 2.0);

    // Basis order |00>, |01>, |10>, |11>.
    ComplexMatrix e0 = ComplexMatrix::Zero(4, 4);
    e0(0, 0) = alpha;
    e0(1, 1) = 1.0;
    e0(2, 2) = 1.0;
    e0(3, 3) = alpha;

    ComplexMatrix e1 = ComplexMatrix::Zero(4, 4);
    e1(0, 0) = beta;
    e1(2, 0) = beta;
    e1(1, 3) = beta;
    e1(3, 3) = beta;

    ComplexMatrix e2 = ComplexMatrix::Zero(4, 4);
    e2(0, 0) = beta;
    e2(2, 0) = -beta;
    e2(1, 3) = -beta;
    e2(3, 3) = beta;

    return validate_channel({e0, e1, e2}, "kl97");
}

Channel identity_channel(Eigen::Index dim) {
    if (dim < 1) throw BadParameterError("identity channel needs dim >= 1");
    return validate_channel({ComplexMatrix::Identity(dim, dim)}, "identity");
}

Channel depolarizing_channel(Eigen::Index dim, double q) {
    if (dim < 2) throw BadParameterError("depolarizing channel needs dim >= 2");
    if (!(q >= 0.0 && q <= 1.0)) throw BadParameterError("depolarizing strength must be in [0, 1]");

    // Clock and shift generators of the Weyl basis.
    ComplexMatrix shift = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) shift((i + 1) % dim, i) = 1.0;
    ComplexMatrix clock = ComplexMatrix::Zero(dim, dim);
    const double theta = 2.0 * M_PI / static_cast<double>(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        clock(i, i) = Complex(std::cos(theta * static_cast<double>(i)),
                              std::sin(theta * static_cast<double>(i)));

    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - q) * ComplexMatrix::Identity(dim, dim));
    const double w = std::sqrt(q) / static_cast<double>(dim);
    ComplexMatrix xj = ComplexMatrix::Identity(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        ComplexMatrix wjk = xj;
        for (Eigen::Index k = 0; k < dim; ++k) {
            kraus.push_back(w * wjk);
            wjk = wjk * clock;
        }
        xj = shift * xj;
    }
    return validate_channel(std::move(kraus), "depolarizing");
}

Channel random_unitary_mixture(Eigen::Index dim, int count, unsigned seed) {
    if (dim < 2 || count < 1)
        throw BadParameterError("random unitary mixture needs dim >= 2 and count >= 1");
    Rng rng(0x72756d6978ull ^ (static_cast<std::uint64_t>(seed) << 16));
    std::vector<double> weights(static_cast<std::size_t>(count));
    double total = 0.0;
    for (auto& w : weights) {
        w = rng.uniform() + 0.1;
        total += w;
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(weights.size());
    for (const double w : weights) kraus.push_back(std::sqrt(w / total) * rng.unitary(dim));
    return validate_channel(std::move(kraus), "random-unitary-mix");
}

Channel collective_dephasing_channel(int qubits) {
    if (qubits < 1 || qubits > 6)
        throw BadParameterError("collective dephasing supports 1..6 qubits");
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    std::vector<ComplexMatrix> kraus(static_cast<std::size_t>(qubits) + 1,
                                     ComplexMatrix::Zero(dim, dim));
    for (Eigen::Index i = 0; i < dim; ++i) kraus[popcount_index(i)](i, i) = 1.0;
    return validate_channel(std::move(kraus), "collective-dephasing");
}

std::vector<std::string> builtin_example_names() {
    return {"z-dephasing",  "u-dfs",    "kl97",
            "identity",     "depolarizing", "random-unitary-mix",
            "collective-dephasing"};
}

Channel builtin_example(const std::string& name, const ExampleParams& params) {
    if (name == "z-dephasing") return z_dephasing_channel();
    if (name == "u-dfs") return u_dfs_channel();
    if (name == "kl97") return kl97_channel(params.q);
    if (name == "identity") return identity_channel(params.dim > 0 ? params.dim : 2);
    if (name == "depolarizing")
        return depolarizing_channel(params.dim > 0 ? params.dim : 2, params.q);
    if (name == "random-unitary-mix")
        return random_unitary_mixture(params.dim > 0 ? params.dim : 4, params.count, params.seed);
    if (name == "collective-dephasing") {
        const Eigen::Index dim = params.dim > 0 ? params.dim : 4;
        int qubits = 0;
        while ((Eigen::Index{1} << qubits) < dim) ++qubits;
        if ((Eigen::Index{1} << qubits) != dim)
            throw BadParameterError("collective-dephasing needs a power-of-two dim");
        return collective_dephasing_channel(qubits);
    }
    throw UnknownExampleError("unknown example '" + name + "'");
}

}  // namespace nsfind
