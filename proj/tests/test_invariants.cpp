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
#include <numbers>

#include "kou/catalog.hpp"
#include "kou/invariants.hpp"
#include "support.hpp"

using namespace kou;
using namespace kou::testing;

namespace {

const cplx I(0, 1);

FnElement scalar_loop(int n, int k, PointInvolution inv = PointInvolution::Identity) {
    return make_element(sample_space(SpaceKind::Circle, n, inv), 1,
                        [k](const GridPoint& p) { return Matrix::Constant(1, 1, std::pow(cplx(p.x[0], p.x[1]), k)); });
}

long floor_half(long k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

FnElement sphere_symmetry(int n, double orientation) {
    return make_element(sample_space(SpaceKind::Sphere2, n, PointInvolution::Identity), 2, [orientation](const GridPoint& p) {
        return mat2(p.x[2], cplx(p.x[0], -orientation * p.x[1]), cplx(p.x[0], orientation * p.x[1]), -p.x[2]);
    });
}

FnElement su2_map(int n, double orientation) {
    return make_element(sample_space(SpaceKind::Sphere3, n, PointInvolution::Identity), 2, [orientation](const GridPoint& p) {
        const cplx a(p.x[0], orientation * p.x[1]), b(p.x[2], p.x[3]);
        return mat2(a, -std::conj(b), b, std::conj(a));
    });
}

}  // namespace

TEST_CASE("point invariants") {
    CHECK(half_trace(diag({1, 1, 1, -1})) == 1);
    CHECK(half_trace(diag({1, -1})) == 0);
    CHECK(half_trace(diag({-1, -1})) == -1);
    CHECK_THROWS_AS(half_trace(diag({1, 1, -1})), DomainError);
    CHECK(quarter_trace(Matrix::Identity(4, 4)) == 1);
    CHECK(quarter_trace(diag({1, 1, -1, -1})) == 0);
    CHECK(det_sign(diag({-1, 1})) == -1);
    CHECK(det_sign(diag({-1, -1})) == 1);
    CHECK_THROWS_AS(det_sign(diag({I, 1})), DomainError);
    for (int copies : {1, 2, 3}) {
        CHECK(pf_sign(neutral(2, copies)) == 1);
        CHECK(pf_sign(Matrix(-neutral(2, copies))) == (copies % 2 ? -1 : 1));
    }
    CHECK_THROWS_AS(pf_sign(Matrix::Identity(3, 3)), DimensionError);
    CHECK_THROWS_AS(pf_sign(Matrix::Identity(2, 2)), DomainError);
}

TEST_CASE("the Pfaffian sign follows the orientation of a real conjugation") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int copies = 1 + trial % 3;
        const bool special = trial % 2 == 0;
        const Matrix o = random_real_orthogonal(rng, 2 * copies, special);
        const int det = o.determinant().real() > 0 ? 1 : -1;
        CHECK(det == (special ? 1 : -1));
        CHECK(pf_sign(Matrix(o * neutral(2, copies) * o.transpose())) == det);
    }
}

TEST_CASE("winding numbers of z^k") {
    for (int k = -3; k <= 3; ++k) {
        CHECK(winding_det(scalar_loop(64, k)) == k);
        CHECK(winding_half(scalar_loop(64, k)) == floor_half(k));
        CHECK(winding_half(scalar_loop(64, k), false) == -floor_half(-k));
    }
    CHECK_THROWS_AS(winding_det(scalar_loop(8, 3)), DomainError);
    CHECK_THROWS_AS(winding_half(scalar_loop(63, 1)), DomainError);
    const FnElement sum = direct_sum(scalar_loop(64, 2), scalar_loop(64, -1));
    CHECK(winding_det(sum) == 1);
    const std::vector<cplx> square = {1, I, -1, -I};
    CHECK(phase_sum(square, true) == doctest::Approx(2 * std::numbers::pi));
    const std::vector<cplx> spin = {1, std::polar(1.0, 1.0), std::polar(1.0, 2.0)};
    CHECK(phase_sum(spin, false) == doctest::Approx(2.0));
}

TEST_CASE("Chern numbers of sphere projections") {
    CHECK(chern_of_projection(sphere_symmetry(32, 1)) == 1);
    CHECK(chern_of_projection(sphere_symmetry(32, -1)) == -1);
    CHECK(chern_of_projection(direct_sum(sphere_symmetry(32, 1), sphere_symmetry(32, 1))) == 2);
    CHECK(chern_of_projection(direct_sum(sphere_symmetry(32, 1), sphere_symmetry(32, -1))) == 0);
    const BasePtr s2 = sample_space(SpaceKind::Sphere2, 32, PointInvolution::Identity);
    CHECK(chern_of_projection(constant_element(s2, diag({1, -1}))) == 0);
    CHECK_THROWS_AS(chern_of_projection(scalar_loop(32, 1)), DomainError);
}

TEST_CASE("degree of maps from the 3-sphere") {
    CHECK(degree_s3(su2_map(16, 1)) == -degree_s3(su2_map(16, -1)));
    CHECK(std::abs(degree_s3(su2_map(16, 1))) == 1);
    CHECK(degree_s3(generator("sphere_ko-3").element) == 1);
    CHECK(degree_s3(constant_element(sample_space(SpaceKind::Sphere3, 16, PointInvolution::Identity),
                                     Matrix::Identity(2, 2))) == 0);
    CHECK_THROWS_AS(degree_s3(sphere_symmetry(16, 1)), DomainError);
}

TEST_CASE("signatures of neutral elements vanish on every catalog pair") {
    for (const CatalogEntry& e : catalog()) {
        const FnElement g = e.build(e.default_resolution);
        CAPTURE(e.name);
        REQUIRE(has_signature(*g.base, e.cls));
        const int outer = g.outer_dim() / class_spec(e.cls).size_multiple;
        const FnElement n = constant_element(g.base, neutral(e.cls, outer));
        CHECK(signature(n, e.cls).is_zero());
        CHECK(signature(n, e.cls).pair == signature(g, e.cls).pair);
    }
}

TEST_CASE("uncataloged pairs are rejected") {
    const BasePtr torus = sample_space(SpaceKind::Torus2, 16, PointInvolution::Identity);
    CHECK_FALSE(has_signature(*torus, 3));
    CHECK_THROWS_AS(signature(constant_element(torus, neutral(3, 1)), 3), DomainError);
}

TEST_CASE("signature arithmetic") {
    const InvariantSignature a{"p", {{"w", 1, 2}, {"n", 3, 0}}, false};
    const InvariantSignature b{"p", {{"w", 1, 2}, {"n", -1, 0}}, false};
    const InvariantSignature s = a + b;
    CHECK(s.components[0].value == 0);
    CHECK(s.components[1].value == 2);
    CHECK(s.to_string() == "(w=0 mod 2, n=2)");
    CHECK_FALSE(s.is_zero());
    const InvariantSignature c{"p", {{"w", 0, 2}, {"n", -2, 0}}, false};
    CHECK((s + c).is_zero());
    const InvariantSignature other{"q", {{"w", 1, 2}, {"n", 0, 0}}, false};
    CHECK_THROWS_AS(a + other, DomainError);
    const InvariantSignature derived{"p", {{"w", 1, 2}, {"n", 3, 0}}, true};
    CHECK(a == derived);
}

TEST_CASE("signatures are additive under direct sums") {
    for (const CatalogEntry& e : catalog()) {
        CAPTURE(e.name);
        const KOClassRep g = generator(e.name);
        const InvariantSignature s = signature(g);
        CHECK(signature(add(g, g)) == s + s);
        if (e.torsion) CHECK(signature(add(g, g)).is_zero());
    }
}
