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
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace nsfind {

/// Deterministic random source for all seeded sampling. Gaussians come
/// from a hand-rolled Box-Muller so that streams are reproducible across
/// standard-library implementations, not just across runs.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {
        // 53-bit mantissa in [0, 1)
        return (gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_gaussian();
        return m;
    }

    Eigen::MatrixXcd hermitian_matrix(Eigen::Index dim) {
        Eigen::MatrixXcd g = gaussian_matrix(dim, dim);
        return 0.5 * (g + g.adjoint());
    }

    /// Haar-distributed unitary: QR of a Gaussian matrix with the phase
    /// gauge fixed by making diag(R) positive.
    Eigen::MatrixXcd unitary(Eigen::Index dim);

    /// Haar-ish isometry with `cols` orthonormal columns.
    Eigen::MatrixXcd isometry(Eigen::Index rows, Eigen::Index cols);

    /// Random density matrix G G^dag / Tr(G G^dag).
    Eigen::MatrixXcd density_matrix(Eigen::Index dim) {
        Eigen::MatrixXcd g = gaussian_matrix(dim, dim);
        Eigen::MatrixXcd rho = g * g.adjoint();
        return rho / rho.trace().real();
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace nsfind
