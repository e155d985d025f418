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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kou/matcore.hpp"
#include "support.hpp"

using namespace kou;
using namespace kou::testing;

namespace {

const cplx I(0, 1);

const InvolutionKind kAllKinds[] = {
    InvolutionKind::Transpose,        InvolutionKind::TransposeTilde,       InvolutionKind::SharpBlock2,
    InvolutionKind::SharpTilde,       InvolutionKind::SharpTensorTranspose, InvolutionKind::SharpTildeSharp,
};

int dim_for(InvolutionKind k) {
    switch (k) {
        case InvolutionKind::SharpBlock2: return 2;
        case InvolutionKind::SharpTildeSharp: return 8;
        case InvolutionKind::Transpose: return 5;
        default: return 6;
    }
}

}  // namespace

TEST_CASE("involute on matrix units and 2x2 blocks") {
    const cplx a(1, 2), b(3, -1), c(-2, 0.5), d(0.25, 4);
    const Matrix m = mat2(a, b, c, d);
    Matrix e12 = Matrix::Zero(2, 2);
    e12(0, 1) = 1;
    CHECK(residual(involute(e12, InvolutionKind::Transpose), e12.transpose()) == 0.0);
    CHECK(residual(involute(m, InvolutionKind::SharpBlock2), mat2(d, -b, -c, a)) == 0.0);
    CHECK(residual(involute(m, InvolutionKind::TransposeTilde), mat2(d, b, c, a)) == 0.0);
    CHECK_THROWS_AS(involute(Matrix::Identity(3, 3), InvolutionKind::SharpTilde), DimensionError);
    CHECK_THROWS_AS(involute(Matrix::Identity(4, 4), InvolutionKind::SharpBlock2), DimensionError);
}

TEST_CASE("SharpTilde and SharpTensorTranspose block conventions") {
    std::mt19937_64 rng(7);
    const int n = 3;
    const Matrix x = random_matrix(rng, 2 * n);
    const Matrix st = involute(x, InvolutionKind::SharpTilde);
    CHECK(residual(st.topLeftCorner(n, n), x.bottomRightCorner(n, n).transpose()) == 0.0);
    CHECK(residual(st.topRightCorner(n, n), -x.topRightCorner(n, n).transpose()) == 0.0);
    CHECK(residual(st.bottomLeftCorner(n, n), -x.bottomLeftCorner(n, n).transpose()) == 0.0);

    const Matrix stt = involute(x, InvolutionKind::SharpTensorTranspose);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Matrix blk = x.block(2 * j, 2 * i, 2, 2);
            CHECK(residual(stt.block(2 * i, 2 * j, 2, 2), involute(blk, InvolutionKind::SharpBlock2)) == 0.0);
        }
}

TEST_CASE("involutions are exact, order two and antimultiplicative") {
    std::mt19937_64 rng(11);
    for (auto kind : kAllKinds) {
        const int n = dim_for(kind);
        for (int rep = 0; rep < 100; ++rep) {
            const Matrix x = random_matrix(rng, n), y = random_matrix(rng, n);
            CHECK(residual(involute(involute(x, kind), kind), x) == 0.0);
            CHECK(residual(involute(x * y, kind), involute(y, kind) * involute(x, kind)) <= 1e-12);
            CHECK(residual(involute(x.adjoint(), kind), involute(x, kind).adjoint()) == 0.0);
        }
    }
}

TEST_CASE("conjugator W") {
    const double r = 1 / std::sqrt(2.0);
    CHECK(residual(conjugator_W(1), r * mat2(I, 1, 1, I)) <= 1e-15);
    CHECK(residual(conjugator_W(1) * diag({1, -1}) * conjugator_W(1).adjoint(), mat2(0, I, -I, 0)) <= 1e-12);
    for (int n = 1; n <= 4; ++n) {
        const Matrix w = conjugator_W(n);
        CHECK(unitarity_residual(w) <= 1e-12);
        Eigen::VectorXcd d(2 * n);
        d << Eigen::VectorXcd::Ones(n), -Eigen::VectorXcd::Ones(n);
        Matrix target = Matrix::Zero(2 * n, 2 * n);
        target.topRightCorner(n, n) = I * Matrix::Identity(n, n);
        target.bottomLeftCorner(n, n) = -I * Matrix::Identity(n, n);
        CHECK(residual(w * d.asDiagonal() * w.adjoint(), target) <= 1e-12);
    }
    std::mt19937_64 rng(3);
    const Matrix w = conjugator_W(1);
    for (int rep = 0; rep < 200; ++rep) {
        const Matrix x = random_matrix(rng, 2);
        CHECK(residual((w * x * w.adjoint()).transpose(),
                       w * involute(x, InvolutionKind::TransposeTilde) * w.adjoint()) <= 1e-12);
    }
}

TEST_CASE("conjugator Q") {
    const double r = 1 / std::sqrt(2.0);
    Matrix q1(4, 4);
    q1 << 1, 0, 0, -I, 0, 1, I, 0, 0, I, 1, 0, -I, 0, 0, 1;
    CHECK(residual(conjugator_Q(1), r * q1) <= 1e-15);
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        const Matrix q = conjugator_Q(n);
        CHECK(unitarity_residual(q) <= 1e-12);
        CHECK(residual(q * q.adjoint(), Matrix::Identity(4 * n, 4 * n)) <= 1e-12);
        for (int rep = 0; rep < 50; ++rep) {
            const Matrix x = random_matrix(rng, 4 * n);
            CHECK(residual(q * x.transpose() * q.adjoint(),
                           involute(q * x * q.adjoint(), InvolutionKind::SharpTildeSharp)) <= 1e-12);
        }
    }
}

TEST_CASE("conjugators V and X") {
    const Matrix v2 = conjugator_V(2);
    CHECK(residual(v2 * diag({1, 2, 3, 4}) * v2.adjoint(), diag({1, 3, 2, 4})) == 0.0);
    CHECK(residual(conjugator_V(1), Matrix::Identity(2, 2)) == 0.0);
    CHECK(residual(conjugator_X(1), Matrix::Identity(4, 4)) == 0.0);
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 4; ++n) {
        const Matrix v = conjugator_V(n);
        CHECK(residual(v * v.adjoint(), Matrix::Identity(2 * n, 2 * n)) == 0.0);
        for (int rep = 0; rep < 50; ++rep) {
            const Matrix x = random_matrix(rng, 2 * n);
            CHECK(residual(v * involute(x, InvolutionKind::SharpTilde) * v.adjoint(),
                           involute(v * x * v.adjoint(), InvolutionKind::SharpTensorTranspose)) <= 1e-12);
        }
        const Matrix xq = conjugator_X(n);
        CHECK(residual(xq, kron(conjugator_V(n), Matrix::Identity(2, 2))) == 0.0);
    }
}

TEST_CASE("herm_eig") {
    auto e = herm_eig(diag({1, -1}));
    CHECK(e.values(0) == doctest::Approx(-1));
    CHECK(e.values(1) == doctest::Approx(1));
    e = herm_eig(mat2(0, I, -I, 0));
    CHECK(e.values(0) == doctest::Approx(-1));
    CHECK(e.values(1) == doctest::Approx(1));
    e = herm_eig(Matrix::Identity(3, 3));
    for (int k = 0; k < 3; ++k) CHECK(e.values(k) == doctest::Approx(1));
    CHECK_THROWS_AS(herm_eig(mat2(0, 1, 0, 0)), DomainError);
    std::mt19937_64 rng(1);
    const Matrix h = random_hermitian(rng, 6);
    e = herm_eig(h);
    CHECK(residual(e.frame * e.values.cast<cplx>().asDiagonal() * e.frame.adjoint(), h) <= 1e-12);
    CHECK(unitarity_residual(e.frame) <= 1e-12);
}

TEST_CASE("psd_sqrt") {
    CHECK(residual(psd_sqrt(Matrix::Zero(2, 2)), Matrix::Zero(2, 2)) <= 1e-15);
    CHECK(residual(psd_sqrt(diag({4, 9})), diag({2, 3})) <= 1e-12);
    const Matrix a = diag({0.6});
    CHECK(residual(psd_sqrt(Matrix::Identity(1, 1) - a.adjoint() * a), diag({0.8})) <= 1e-12);
    CHECK(residual(psd_sqrt(diag({-1e-12, 1})), diag({0, 1})) <= 1e-12);
    CHECK_THROWS_AS(psd_sqrt(diag({-1e-3, 1})), DomainError);
}

TEST_CASE("neg_exp_pi_i") {
    CHECK(residual(neg_exp_pi_i(diag({1, -1})), Matrix::Identity(2, 2)) <= 1e-12);
    CHECK(residual(neg_exp_pi_i(Matrix::Zero(3, 3)), -Matrix::Identity(3, 3)) <= 1e-12);
    CHECK(residual(neg_exp_pi_i(diag({0.5})), diag({-I})) <= 1e-12);
    CHECK_THROWS_AS(neg_exp_pi_i(mat2(0, 1, 0, 0)), DomainError);
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 50; ++rep) {
        Matrix h = random_hermitian(rng, 5);
        h /= herm_eig(h).values.cwiseAbs().maxCoeff();
        CHECK(unitarity_residual(neg_exp_pi_i(h)) <= 1e-10);
    }
}

TEST_CASE("pfaffian") {
    const cplx m(0.3, -1.7);
    CHECK(std::abs(pfaffian(mat2(0, m, -m, 0)) - m) <= 1e-15);
    const Matrix i2 = mat2(0, I, -I, 0);
    CHECK(std::abs(pfaffian(i2) - I) <= 1e-15);
    CHECK(std::abs(pfaffian(block_diag(i2, i2)) - cplx(-1)) <= 1e-15);
    CHECK_THROWS_AS(pfaffian(Matrix::Zero(3, 3)), DimensionError);
    CHECK_THROWS_AS(pfaffian(Matrix::Identity(2, 2)), DomainError);

    std::mt19937_64 rng(13);
    for (int n = 2; n <= 8; n += 2)
        for (int rep = 0; rep < 50; ++rep) {
            const Matrix a = random_skew(rng, n);
            const cplx pf = pfaffian(a);
            CHECK(std::abs(pf * pf - a.determinant()) <= 1e-9 * std::max(1.0, std::abs(a.determinant())));
            const Matrix b = random_matrix(rng, n);
            const cplx lhs = pfaffian(b * a * b.transpose());
            CHECK(std::abs(lhs - b.determinant() * pf) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
}
