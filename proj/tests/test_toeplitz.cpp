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

#include "kou/catalog.hpp"
#include "kou/json_io.hpp"
#include "kou/toeplitz.hpp"
#include "support.hpp"

using namespace kou;
using namespace kou::toeplitz;

namespace {

ExactMatrix exact(std::initializer_list<std::initializer_list<long long>> rows) {
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (long long v : row) m(r, c++) = GaussRational(v);
        ++r;
    }
    return m;
}

GaussRational gi(long long re, long long im) { return {Rational(re), Rational(im)}; }

const ShiftAlgElement one = identity(), s = shift(), e = rank_one_e();
const ShiftAlgElement zero = scalar(GaussRational(0));

ShiftAlgElement v2_lift() {
    const ShiftAlgElement is = scale(kUnitI, s);
    return assemble({{zero, is}, {adjoint(is), zero}});  // (is)^* = -i s^*
}

}  // namespace

TEST_CASE("shift relations") {
    CHECK(equal(mul(adjoint(s), s), one));
    CHECK(equal(mul(s, adjoint(s)), sub(one, e)));
    CHECK(equal(involute_tau(s), adjoint(s)));
    CHECK(equal(mul(e, e), e));
    CHECK(equal(adjoint(e), e));
    CHECK(equal(mul(adjoint(s), e), zero));
    CHECK(equal(mul(e, s), zero));
    CHECK_FALSE(equal(s, adjoint(s)));
    // s^2 s^*2 = 1 - e - s e s^*
    const ShiftAlgElement s2 = mul(s, s);
    CHECK(equal(mul(s2, adjoint(s2)), sub(sub(one, e), mul(mul(s, e), adjoint(s)))));
}

TEST_CASE("window blocks are the truncated matrices") {
    const ExactMatrix w = s.window_block(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(w(r, c) == GaussRational(r == c + 1 ? 1 : 0));
    const ExactMatrix we = e.window_block(3);
    CHECK(we == exact({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(sub(one, e).window_block(2) == exact({{0, 0}, {0, 1}}));
}

TEST_CASE("exact determinant and Pfaffian") {
    CHECK(determinant(exact({{1, 2}, {3, 4}})) == GaussRational(-2));
    CHECK(determinant(exact({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})) == GaussRational(1));
    CHECK(determinant(exact({{2, 0}, {0, 0}})) == GaussRational(0));
    ExactMatrix a(2, 2);
    a(0, 1) = gi(3, 1);
    a(1, 0) = gi(-3, -1);
    CHECK(pfaffian(a) == gi(3, 1));
    // pf = a01 a23 - a02 a13 + a03 a12
    const long long v[6] = {2, -1, 5, 3, 7, -4};
    ExactMatrix b(4, 4);
    int k = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c) {
            b(r, c) = GaussRational(v[k]);
            b(c, r) = GaussRational(-v[k]);
            ++k;
        }
    const long long pf = v[0] * v[5] - v[1] * v[4] + v[2] * v[3];
    CHECK(pfaffian(b) == GaussRational(pf));
    CHECK(determinant(b) == GaussRational(pf * pf));
    const GaussRational half{Rational(1, 2), Rational(0)};
    CHECK(determinant(half * exact({{1, 1}, {-1, 1}})) == half);
}

TEST_CASE("Gaussian integer conversion") {
    const Matrix m = testing::mat2(1, cplx(0, -2), cplx(3, 1), 0);
    CHECK(ExactMatrix::from_complex(m).to_complex() == m);
    CHECK_THROWS_AS(ExactMatrix::from_complex(testing::diag({0.5})), DomainError);
}

TEST_CASE("powers of the class-2 lift") {
    const ShiftAlgElement a = v2_lift();
    const ShiftAlgElement a2 = assemble({{sub(one, e), zero}, {zero, one}});
    CHECK(equal(adjoint(a), a));
    CHECK(equal(mul(a, a), a2));
    ShiftAlgElement p = identity(2);
    for (int k = 1; k <= 6; ++k) {
        p = mul(p, a);
        CHECK(equal(p, k % 2 ? a : a2));
    }
}

TEST_CASE("algebra identities") {
    const ShiftAlgElement x = add(s, scale(gi(0, 2), e));
    const ShiftAlgElement y = sub(mul(s, s), scale(GaussRational(3), adjoint(s)));
    CHECK(equal(adjoint(mul(x, y)), mul(adjoint(y), adjoint(x))));
    CHECK(equal(involute_tau(mul(x, y)), mul(involute_tau(y), involute_tau(x))));
    CHECK(equal(involute_tau(involute_tau(x)), x));
    CHECK(equal(mul(mul(x, y), x), mul(x, mul(y, x))));
    CHECK(direct_sum(x, y).d == 2);
    const FnElement sym = symbol_map(s, sample_space(SpaceKind::Circle, 16, PointInvolution::Identity));
    for (int k = 0; k < 16; ++k) {
        const auto& p = sym.base->points[static_cast<size_t>(k)];
        CHECK(std::abs(sym.at(k)(0, 0) - cplx(p.x[0], p.x[1])) <= 1e-14);
    }
}

TEST_CASE("invariants of the compact and Calkin examples") {
    for (const CalkinEntry& c : calkin_catalog()) {
        CAPTURE(c.name);
        if (c.over_compacts) {
            const CompactInvariant inv = compact_invariant(c.element, c.cls);
            CHECK(inv.name == c.invariant_name);
            CHECK(inv.value == c.expected);
        } else {
            const CalkinResult r = calkin_boundary(c.element, c.cls);
            CHECK(r.cls == kou::boundary_target(c.cls));
            CHECK(r.invariant_name == c.invariant_name);
            CHECK(r.invariant == c.expected);
            CHECK(compact_invariant(r.element, r.cls).value == r.invariant);
        }
    }
    CHECK(compact_invariant(identity(1), 1).value == 1);
    CHECK_THROWS_AS(compact_invariant(s, 1), DomainError);
    CHECK_THROWS_AS(calkin_entry("nope"), DomainError);
}

TEST_CASE("Toeplitz JSON round trip") {
    for (const CalkinEntry& c : calkin_catalog()) {
        const auto j = toeplitz_to_json(c.element);
        CHECK(is_toeplitz_json(j));
        CHECK(equal(toeplitz_from_json(j), c.element));
        CHECK(toeplitz_to_json(toeplitz_from_json(j)) == j);
    }
    const ShiftAlgElement q = scale(GaussRational(Rational(1, 3), Rational(-2, 5)), s);
    CHECK(equal(toeplitz_from_json(toeplitz_to_json(q)), q));
    CHECK_FALSE(is_toeplitz_json(json::object()));
}
