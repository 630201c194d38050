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

#include "nsfind/channel.hpp"

namespace nsfind {

/// Parameters consumed by the named example generators. Only the fields
/// a given example cares about are read.
struct ExampleParams {
    double q = 0.3;          // kl97 / depolarizing strength
    Eigen::Index dim = 0;    // Hilbert-space dimension (0 = example default)
    int count = 5;           // number of unitaries in random mixtures
    unsigned seed = 0;       // seed for randomized examples
};

std::vector<std::string> builtin_example_names();

/// Named example channels. Throws UnknownExampleError / BadParameterError.
Channel builtin_example(const std::string& name, const ExampleParams& params = {});

/// Two-qubit phase-flip pair: E(rho) = (Z1 rho Z1 + Z2 rho Z2) / 2.
Channel z_dephasing_channel();

/// Same pair conjugated by U = 1 - 2|11><11|; carries a qubit DFS on
/// span{|00>, |11>}.
Channel u_dfs_channel();

/// Three-element non-unital channel on two qubits with alpha = sqrt(1-2q),
/// beta = sqrt(q/2). Requires q in (0, 1/2].
Channel kl97_channel(double q);

Channel identity_channel(Eigen::Index dim);

/// Weyl-twirl depolarizing channel of strength q on C^dim.
Channel depolarizing_channel(Eigen::Index dim, double q);

/// Mixture of `count` Haar-random unitaries with random weights.
Channel random_unitary_mixture(Eigen::Index dim, int count, unsigned seed);

/// Projective dephasing across total-excitation sectors of `qubits`
/// qubits; the weight-1 sector of two qubits is the classic DFS.
Channel collective_dephasing_channel(int qubits);

}  // namespace nsfind
