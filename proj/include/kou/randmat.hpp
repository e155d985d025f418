/*
 * Copyright 2026 The kou authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <random>

#include "kou/matcore.hpp"

namespace kou {

inline Matrix random_matrix(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int n) {
    Matrix m = random_matrix(rng, n);
    return (m + m.adjoint()) / 2.0;
}

// Operator norm drawn uniformly from [0.1, 1).
inline Matrix random_contraction(std::mt19937_64& rng, int n) {
    Matrix m = random_matrix(rng, n);
    const double s = Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    return m * (u(rng) / s);
}

inline Matrix random_skew(std::mt19937_64& rng, int n) {
    Matrix m = random_matrix(rng, n);
    return m - m.transpose();
}

inline Matrix random_real_orthogonal(std::mt19937_64& rng, int n, bool special = true) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    if (special && q.determinant() < 0) q.col(0) = -q.col(0);
    return q.cast<cplx>();
}

inline Matrix random_unitary(std::mt19937_64& rng, int n) {
    Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n));
    return qr.householderQ();
}

// V diag(signs) V^* with V random unitary.
inline Matrix random_symmetry(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution coin;
    Eigen::VectorXcd d(n);
    for (int k = 0; k < n; ++k) d(k) = coin(rng) ? 1.0 : -1.0;
    const Matrix v = random_unitary(rng, n);
    return v * d.asDiagonal() * v.adjoint();
}

}  // namespace kou
