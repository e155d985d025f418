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

#include "kou/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kou {

namespace {

SignedPerm sharp2() { return SignedPerm{{1, 0}, {1, -1}}; }
SignedPerm swap2() { return SignedPerm{{1, 0}, {1, 1}}; }

void require_even(int dim, InvolutionKind kind) {
    if (dim <= 0 || dim % 2 != 0)
        throw DimensionError(to_string(kind) + " needs an even dimension, got " + std::to_string(dim));
}

}  // namespace

std::string to_string(InvolutionKind kind) {
    switch (kind) {
        case InvolutionKind::Transpose: return "transpose";
        case InvolutionKind::TransposeTilde: return "transpose-tilde";
        case InvolutionKind::SharpBlock2: return "sharp";
        case InvolutionKind::SharpTilde: return "sharp-tilde";
        case InvolutionKind::SharpTensorTranspose: return "sharp-tensor-transpose";
        case InvolutionKind::SharpTildeSharp: return "sharp-tilde-sharp";
    }
    return "?";
}

InvolutionKind involution_from_string(const std::string& name) {
    for (auto k : {InvolutionKind::Transpose, InvolutionKind::TransposeTilde, InvolutionKind::SharpBlock2,
                   InvolutionKind::SharpTilde, InvolutionKind::SharpTensorTranspose,
                   InvolutionKind::SharpTildeSharp})
        if (to_string(k) == name) return k;
    throw std::invalid_argument("unknown matrix involution '" + name + "'");
}

Matrix SignedPerm::dense() const {
    Matrix j = Matrix::Zero(dim(), dim());
    for (int a = 0; a < dim(); ++a) j(a, perm[a]) = sign[a];
    return j;
}

bool SignedPerm::symmetric() const {
    for (int a = 0; a < dim(); ++a)
        if (perm[perm[a]] != a || sign[perm[a]] != sign[a]) return false;
    return true;
}

SignedPerm identity_perm(int dim) {
    SignedPerm p;
    p.perm.resize(dim);
    p.sign.assign(dim, 1);
    for (int a = 0; a < dim; ++a) p.perm[a] = a;
    return p;
}

SignedPerm kron(const SignedPerm& outer, const SignedPerm& inner) {
    const int di = inner.dim();
    SignedPerm p;
    p.perm.resize(outer.dim() * di);
    p.sign.resize(outer.dim() * di);
    for (int a = 0; a < outer.dim(); ++a)
        for (int b = 0; b < di; ++b) {
            p.perm[a * di + b] = outer.perm[a] * di + inner.perm[b];
            p.sign[a * di + b] = outer.sign[a] * inner.sign[b];
        }
    return p;
}

SignedPerm involution_structure(InvolutionKind kind, int dim) {
    if (dim <= 0) throw DimensionError("matrix dimension must be positive");
    switch (kind) {
        case InvolutionKind::Transpose:
            return identity_perm(dim);
        case InvolutionKind::TransposeTilde:
            require_even(dim, kind);
            return kron(swap2(), identity_perm(dim / 2));
        case InvolutionKind::SharpBlock2:
            if (dim != 2) throw DimensionError("sharp acts on 2x2 matrices only");
            return sharp2();
        case InvolutionKind::SharpTilde:
            require_even(dim, kind);
            return kron(sharp2(), identity_perm(dim / 2));
        case InvolutionKind::SharpTensorTranspose:
            require_even(dim, kind);
            return kron(identity_perm(dim / 2), sharp2());
        case InvolutionKind::SharpTildeSharp:
            if (dim % 4 != 0) throw DimensionError("sharp-tilde-sharp needs a multiple of 4");
            return kron(kron(sharp2(), identity_perm(dim / 4)), sharp2());
    }
    throw DimensionError("unknown involution");
}

Matrix involute(const Matrix& m, const SignedPerm& j) {
    if (m.rows() != m.cols() || m.rows() != j.dim())
        throw DimensionError("involution of size " + std::to_string(j.dim()) + " applied to a " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    const int n = j.dim();
    Matrix r(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r(a, b) = double(j.sign[a] * j.sign[b]) * m(j.perm[b], j.perm[a]);
    return r;
}

Matrix involute(const Matrix& m, InvolutionKind kind) {
    if (m.rows() != m.cols()) throw DimensionError("matrix must be square");
    return involute(m, involution_structure(kind, static_cast<int>(m.rows())));
}

Matrix conjugator_W(int half) {
    if (half < 1) throw DimensionError("W needs n >= 1");
    const double s = 1.0 / std::sqrt(2.0);
    Matrix w = Matrix::Zero(2 * half, 2 * half);
    for (int k = 0; k < half; ++k) {
        w(k, k) = cplx(0, s);
        w(k, half + k) = s;
        w(half + k, k) = s;
        w(half + k, half + k) = cplx(0, s);
    }
    return w;
}

Matrix conjugator_Q(int quarter) {
    if (quarter < 1) throw DimensionError("Q needs n >= 1");
    const int h = 2 * quarter;
    const double s = 1.0 / std::sqrt(2.0);
    Matrix q = Matrix::Zero(2 * h, 2 * h);
    for (int k = 0; k < h; ++k) {
        q(k, k) = s;
        q(h + k, h + k) = s;
    }
    // off-diagonal blocks -I and +I with I = diag([[0,i],[-i,0]], ...)
    for (int k = 0; k < quarter; ++k) {
        const int a = 2 * k;
        q(a, h + a + 1) = cplx(0, -s);
        q(a + 1, h + a) = cplx(0, s);
        q(h + a, a + 1) = cplx(0, s);
        q(h + a + 1, a) = cplx(0, -s);
    }
    return q;
}

Matrix conjugator_V(int half) {
    if (half < 1) throw DimensionError("V needs n >= 1");
    Matrix v = Matrix::Zero(2 * half, 2 * half);
    for (int k = 0; k < 2 * half; ++k) v(k, k % 2 == 0 ? k / 2 : half + k / 2) = 1.0;
    return v;
}

Matrix conjugator_X(int quarter) {
    if (quarter < 1) throw DimensionError("X needs n >= 1");
    return kron(conjugator_V(quarter), Matrix::Identity(2, 2));
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    r.topLeftCorner(a.rows(), a.cols()) = a;
    r.bottomRightCorner(b.rows(), b.cols()) = b;
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

double residual(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("residual of mismatched shapes");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_residual(const Matrix& u) {
    return residual(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()));
}

double hermiticity_residual(const Matrix& m) { return residual(m, m.adjoint()); }

EigenDecomposition herm_eig(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("herm_eig needs a square matrix");
    const double r = hermiticity_residual(m);
    if (r > tol) throw DomainError("herm_eig: matrix is not Hermitian (residual " + std::to_string(r) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
    return {es.eigenvalues(), es.eigenvectors()};
}

Matrix psd_sqrt(const Matrix& m, double tol) {
    auto e = herm_eig(m);
    if (e.values.size() > 0 && e.values.minCoeff() < -tol)
        throw DomainError("psd_sqrt: eigenvalue " + std::to_string(e.values.minCoeff()) + " below zero");
    return herm_apply(e, [](double x) { return cplx(std::sqrt(std::max(x, 0.0)), 0.0); });
}

Matrix neg_exp_pi_i(const Matrix& m, double tol) {
    auto e = herm_eig(m, tol);
    return herm_apply(e, [](double x) { return -std::exp(cplx(0.0, std::numbers::pi * x)); });
}

cplx pfaffian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("pfaffian needs a square matrix");
    const Eigen::Index n = m.rows();
    if (n % 2 != 0) throw DimensionError("pfaffian needs an even dimension");
    const double scale = std::max(1.0, n == 0 ? 0.0 : m.cwiseAbs().maxCoeff());
    const double skew = n == 0 ? 0.0 : (m + m.transpose()).cwiseAbs().maxCoeff();
    if (skew > tol * scale) throw DomainError("pfaffian: matrix is not skew-symmetric");

    Matrix a = 0.5 * (m - m.transpose());
    cplx pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index kp;
        a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
        kp += k + 1;
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            pf = -pf;
        }
        if (a(k + 1, k) == cplx(0.0)) return 0.0;
        pf *= a(k, k + 1);
        if (k + 2 < n) {
            const Eigen::Index r = n - k - 2;
            Eigen::VectorXcd tau = a.row(k).tail(r).transpose() / a(k, k + 1);
            Eigen::VectorXcd col = a.col(k + 1).tail(r);
            a.bottomRightCorner(r, r) += tau * col.transpose() - col * tau.transpose();
        }
    }
    return pf;
}

}  // namespace kou
