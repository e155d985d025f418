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

#include <cmath>

#include "kou/boundary.hpp"
#include "support.hpp"

using namespace kou;
using namespace kou::testing;

namespace {

const cplx I(0, 1);

FnElement z_power(const BasePtr& circle, int k) {
    return make_element(circle, 1, [k](const GridPoint& p) { return Matrix::Constant(1, 1, std::pow(cplx(p.x[0], p.x[1]), k)); });
}

}  // namespace

TEST_CASE("B of a scalar contraction") {
    for (double r : {0.0, 0.3, 0.8, 1.0}) {
        for (double phi : {0.0, 1.0, -2.5}) {
            const cplx a = std::polar(r, phi);
            const double s = std::sqrt(1 - r * r);
            const Matrix expected = mat2(2 * r * r - 1, 2.0 * a * s, 2.0 * std::conj(a) * s, 1 - 2 * r * r);
            CHECK(residual(B_matrix(Matrix::Constant(1, 1, a)), expected) <= 1e-14);
        }
    }
}

TEST_CASE("B of a contraction is a symmetry") {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix b = B_matrix(random_contraction(rng, n));
            CHECK(unitarity_residual(b) <= 1e-12);
            CHECK(hermiticity_residual(b) <= 1e-12);
        }
        const Matrix u = random_unitary(rng, n);
        const Matrix bu = B_matrix(u);
        CHECK(residual(bu.topLeftCorner(n, n), Matrix::Identity(n, n)) <= 1e-12);
        CHECK(residual(bu.bottomRightCorner(n, n), -Matrix::Identity(n, n)) <= 1e-12);
        CHECK(residual(B_matrix(Matrix(Matrix::Zero(n, n))), kron(diag({-1, 1}), Matrix::Identity(n, n))) == 0.0);
    }
}

TEST_CASE("E is -exp(pi i a)") {
    CHECK(residual(E_matrix(diag({1, -1})), Matrix::Identity(2, 2)) <= 1e-14);
    CHECK(residual(E_matrix(diag({0})), diag({-1})) <= 1e-14);
    CHECK(residual(E_matrix(diag({0.5})), diag({-I})) <= 1e-14);
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix h = random_hermitian(rng, 3);
        h /= Eigen::JacobiSVD<Matrix>(h).singularValues()(0);
        const Matrix e = E_matrix(h);
        CHECK(unitarity_residual(e) <= 1e-12);
        CHECK(residual(e * h, h * e) <= 1e-12);
    }
    CHECK_THROWS_AS(E_matrix(diag({1.5})), DomainError);
}

TEST_CASE("Y conjugators") {
    for (int cls : {-1, 1, 3, 5, KU1}) {
        for (int n : {1, 2, 3}) {
            const Matrix y = Y_conjugator(cls, n);
            CHECK(y.rows() == (cls == 3 || cls == 5 ? 4 * n : 2 * n));
            CHECK(unitarity_residual(y) <= 1e-14);
        }
    }
    CHECK_THROWS_AS(Y_conjugator(0, 1), DomainError);
    CHECK_THROWS_AS(Y_conjugator(1, 0), DimensionError);
}

TEST_CASE("boundary of z^k over the disk") {
    const SESDescriptor ses = make_ses("disk-id", 32);
    for (int k = -2; k <= 2; ++k) {
        const KOClassRep u = make_rep(z_power(ses.quotient, k), KU1);
        for (LiftStrategy s : ses.strategies) {
            const BoundaryResult r = boundary_map(u, ses, s);
            CHECK(r.rep.cls == KU0);
            CHECK(r.closed_set_residual <= 1e-10);
            CHECK(signature(r.rep).components.front().value == k);
        }
    }
}

TEST_CASE("boundary of a neutral element is zero") {
    const std::pair<std::string, std::vector<int>> cases[] = {
        {"disk-id", {-1, 3, KU1}}, {"disk-zeta", {1, 5}}, {"circle-zeta", {0, 4, KU0}}, {"circle-sigma", {2, 6}}};
    for (const auto& [name, classes] : cases) {
        const SESDescriptor ses = make_ses(name, 32);
        for (int cls : classes) {
            CAPTURE(name);
            CAPTURE(cls);
            const KOClassRep u = make_rep(constant_element(ses.quotient, neutral(cls, 1)), cls);
            const BoundaryResult r = boundary_map(u, ses, ses.strategies.front());
            CHECK(r.rep.cls == boundary_target(cls));
            CHECK(signature(r.rep).is_zero());
        }
    }
}

TEST_CASE("boundary input validation") {
    const SESDescriptor ses = make_ses("disk-id", 32);
    const KOClassRep u = make_rep(z_power(ses.quotient, 1), KU1);
    // A lift that restricts to z^2 instead of z.
    const FnElement wrong = make_element(ses.total, 1, [](const GridPoint& p) {
        const cplx z(p.x[0], p.x[1]);
        return Matrix::Constant(1, 1, z * z);
    });
    CHECK_THROWS_AS(boundary_map(u, ses, LiftStrategy::Radial, wrong), DomainError);
    const FnElement right = make_element(ses.total, 1, [](const GridPoint& p) { return Matrix::Constant(1, 1, cplx(p.x[0], p.x[1])); });
    CHECK(signature(boundary_map(u, ses, LiftStrategy::Radial, right).rep).components.front().value == 1);

    const SESDescriptor other = make_ses("disk-id", 16);
    CHECK_THROWS_AS(boundary_map(u, other, LiftStrategy::Radial), DimensionError);
    const KOClassRep bad{KU1, scaled(u.element, 0.5), u.diagnostics};
    CHECK_THROWS_AS(boundary_map(bad, ses, LiftStrategy::Radial), MembershipError);
}
