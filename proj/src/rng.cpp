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

#include "nsfind/rng.hpp"

#include <Eigen/QR>

namespace nsfind {

Eigen::MatrixXcd Rng::unitary(Eigen::Index dim) {
    const Eigen::MatrixXcd g = gaussian_matrix(dim, dim);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR();
    // Fix the phase gauge so the distribution is Haar.
    for (Eigen::Index i = 0; i < dim; ++i) {
        const std::complex<double> diag = r(i, i);
        const double mag = std::abs(diag);
        q.col(i) *= (mag > 0.0) ? diag / mag : 1.0;
    }
    return q;
}

Eigen::MatrixXcd Rng::isometry(Eigen::Index rows, Eigen::Index cols) {
    return unitary(rows).leftCols(cols);
}

}  // namespace nsfind
