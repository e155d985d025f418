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

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace kou {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kResidualTol = 1e-9;
inline constexpr double kClipTol = 1e-10;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Structural (complex-linear, antimultiplicative) involutions on M_n(C).
//   Transpose             x -> x^T
//   TransposeTilde        2x2 grid of n x n blocks: [[x,y],[z,w]] -> [[w^T,y^T],[z^T,x^T]]
//   SharpBlock2           the sharp map on M_2(C) only
//   SharpTilde            2x2 grid of n x n blocks: [[c11,c12],[c21,c22]] -> [[c22^T,-c12^T],[-c21^T,c11^T]]
//   SharpTensorTranspose  n x n grid of 2x2 blocks, sharp applied per block, grid transposed
//   SharpTildeSharp       2x2 grid of 2n x 2n blocks, SharpTilde outside and
//                         SharpTensorTranspose inside each block
enum class InvolutionKind {
    Transpose,
    TransposeTilde,
    SharpBlock2,
    SharpTilde,
    SharpTensorTranspose,
    SharpTildeSharp,
};

std::string to_string(InvolutionKind kind);
InvolutionKind involution_from_string(const std::string& name);

// Every involution above has the form x -> J x^T J^T with J a signed
// permutation: J e_{perm[a]} = sign[a] e_a.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;

    int dim() const { return static_cast<int>(perm.size()); }
    Matrix dense() const;
    bool symmetric() const;  // J^T == J  (orthogonal type)
};

SignedPerm identity_perm(int dim);
SignedPerm involution_structure(InvolutionKind kind, int dim);
SignedPerm kron(const SignedPerm& outer, const SignedPerm& inner);

Matrix involute(const Matrix& m, const SignedPerm& j);
Matrix involute(const Matrix& m, InvolutionKind kind);

Matrix conjugator_W(int half);
Matrix conjugator_Q(int quarter);
Matrix conjugator_V(int half);
Matrix conjugator_X(int quarter);

Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
double residual(const Matrix& a, const Matrix& b);  // max-abs entry of a - b
double unitarity_residual(const Matrix& u);
double hermiticity_residual(const Matrix& m);

struct EigenDecomposition {
    RealVector values;  // ascending
    Matrix frame;
};

EigenDecomposition herm_eig(const Matrix& m, double tol = kResidualTol);

// f applied to a Hermitian matrix through its eigendecomposition.
template <class F>
Matrix herm_apply(const EigenDecomposition& e, F&& f) {
    Eigen::VectorXcd d(e.values.size());
    for (Eigen::Index k = 0; k < e.values.size(); ++k) d(k) = f(e.values(k));
    return e.frame * d.asDiagonal() * e.frame.adjoint();
}

Matrix psd_sqrt(const Matrix& m, double tol = kClipTol);
Matrix neg_exp_pi_i(const Matrix& m, double tol = kResidualTol);

// Pfaffian by Parlett-Reid tridiagonalisation with partial pivoting.
cplx pfaffian(const Matrix& m, double tol = kResidualTol);

}  // namespace kou
