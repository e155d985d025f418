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

#include "kou/catalog.hpp"
#include "support.hpp"

using namespace kou;
using namespace kou::testing;

namespace {

std::vector<long> values(const InvariantSignature& s) {
    std::vector<long> out;
    for (const auto& c : s.components) out.push_back(c.value);
    return out;
}

// The generator u_0 = U(h_0, x_0, k_0) written out entrywise.
Matrix u0(double t) {
    const double r = 2 * std::sqrt(t - t * t);
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1 - 2 * t;
    m(0, 3) = r;
    m(1, 1) = 1;
    m(2, 2) = -1;
    m(3, 0) = r;
    m(3, 3) = 2 * t - 1;
    return m;
}

}  // namespace

TEST_CASE("every catalog entry is a member with the expected invariants") {
    for (const CatalogEntry& e : catalog()) {
        CAPTURE(e.name);
        const KOClassRep g = generator(e.name);
        CHECK(g.cls == e.cls);
        CHECK(g.diagnostics.passed);
        CHECK(values(signature(g)) == e.expected);
        CHECK(signature(stabilize(g)) == signature(g));
        if (e.torsion) CHECK(signature(add(g, g)).is_zero());
    }
    CHECK(catalog_names().size() == catalog().size());
    CHECK_THROWS_AS(catalog_entry("x7"), DomainError);
    CHECK_THROWS_AS(generator("x7"), DomainError);
}

TEST_CASE("invariants are stable under refinement") {
    for (const CatalogEntry& e : catalog()) {
        if (e.default_resolution <= 1) continue;
        CAPTURE(e.name);
        CHECK(values(signature(generator(e.name, 2 * e.default_resolution))) == e.expected);
    }
}

TEST_CASE("x0 matches the generator matrix") {
    const KOClassRep x0 = generator("x0");
    const BaseSpace& b = *x0.element.base;
    for (int p = 0; p < b.size(); ++p) {
        const double t = b.points[static_cast<size_t>(p)].param[0];
        CHECK(residual(x0.element.at(p), u0(t)) <= 1e-14);
    }
    CHECK(residual(x0.element.at(0), kron(diag({1, -1}), Matrix::Identity(2, 2))) == 0.0);
}

TEST_CASE("x2 is self-adjoint and odd under the class involution") {
    const KOClassRep x2 = generator("x2");
    const FnElement flipped = apply_full_involution(x2.element, class_structure(2, x2.element.outer_dim()));
    CHECK(max_norm_residual(adjoint(x2.element), x2.element) <= 1e-14);
    CHECK(max_norm_residual(flipped, scaled(x2.element, -1.0)) <= 1e-14);
}

TEST_CASE("x3 and x5 satisfy their relations in the combined structure") {
    const SignedPerm j = involution_structure(InvolutionKind::SharpTildeSharp, 4);
    const KOClassRep x3 = generator("x3"), x5 = generator("x5");
    for (int p = 0; p < x3.element.base->size(); ++p) CHECK(residual(involute(x3.element.at(p), j), x3.element.at(p)) <= 1e-14);
    const auto& pair = x5.element.base->pairing;
    for (int p = 0; p < x5.element.base->size(); ++p)
        CHECK(residual(involute(x5.element.at(p), j), x5.element.at(pair[static_cast<size_t>(p)]).adjoint()) <= 1e-14);
}

TEST_CASE("x4 agrees with the Q (x) 1_2 conjugate") {
    const KOClassRep x0 = generator("x0");
    const Matrix q = kron(conjugator_Q(1), Matrix::Identity(2, 2));
    const SignedPerm j = kron(involution_structure(InvolutionKind::SharpTildeSharp, 4), identity_perm(2));
    for (int p = 0; p < x0.element.base->size(); ++p) {
        Matrix d = Matrix::Zero(8, 8);
        d.topLeftCorner(4, 4) = x0.element.at(p);
        d.bottomRightCorner(4, 4) = diag({1, 1, -1, -1});
        const Matrix y = q * d * q.adjoint();
        CHECK(residual(involute(y, j), y.adjoint()) <= 1e-12);
        CHECK(hermiticity_residual(y) <= 1e-12);
        CHECK(unitarity_residual(y) <= 1e-12);
    }
    CHECK(values(signature(generator("x4"))) == std::vector<long>{-1});
}

TEST_CASE("sphere generators") {
    const KOClassRep s = generator("sphere_ko0");
    for (int p = 0; p < s.element.base->size(); ++p) {
        const auto& x = s.element.base->points[static_cast<size_t>(p)].x;
        CHECK(residual(s.element.at(p), mat2(x[2], cplx(x[0], -x[1]), cplx(x[0], x[1]), -x[2])) <= 1e-14);
    }
    const KOClassRep s3 = generator("sphere_ko-3");
    CHECK(s3.element.base->basepoints == std::vector<int>{0});
    CHECK(residual(s3.element.at(0), Matrix::Identity(2, 2)) <= 1e-14);
}

TEST_CASE("torus profiles") {
    CHECK(values(signature(torus_bott())) == std::vector<long>{-1});
    CHECK(signature(torus_bott(32, TorusProfile::Constant)).is_zero());
}
