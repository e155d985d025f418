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


#include "kou/catalog.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "kou/boundary.hpp"

namespace kou {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCatalogTol = 1e-10;
const cplx kI{0, 1};

Matrix mat(std::initializer_list<std::initializer_list<cplx>> rows) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (const cplx& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

Matrix scalar_matrix(cplx v) { return Matrix::Constant(1, 1, v); }

Matrix diag(std::initializer_list<cplx> d) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index k = 0;
    for (const cplx& v : d) { m(k, k) = v; ++k; }
    return m;
}

cplx zof(const GridPoint& p) { return {p.x[0], p.x[1]}; }
bool upper(const GridPoint& p) { return p.x[1] >= 0; }

BasePtr circle(int n, PointInvolution inv, bool pointed, Fibre fibre = {}) {
    BasePtr b = sample_space(SpaceKind::Circle, n, inv, fibre);
    return pointed ? with_basepoints(b, {0}) : b;
}

// (t e11, sqrt(t - t^2) e21, t e22) assembled into the unitization of qC.
FnElement qc_generator(int n, InvolutionKind fibre_kind) {
    const BasePtr b = sample_space(SpaceKind::Interval01, n, PointInvolution::Identity, Fibre{2, fibre_kind});
    return make_element(b, 4, [](const GridPoint& p) {
        const double t = p.param[0];
        const double s = std::sqrt(std::max(0.0, t - t * t));
        return build_U(diag({t, 0}), mat({{0, 0}, {s, 0}}), diag({0, t}));
    });
}

FnElement point_constant(const Matrix& m) {
    return constant_element(sample_space(SpaceKind::Point, 1, PointInvolution::Identity), m);
}

FnElement q_diag_z(int n, PointInvolution inv) {
    const BasePtr b = circle(n, inv, true, Fibre{2, InvolutionKind::SharpBlock2});
    const Matrix q = conjugator_Q(1);
    return make_element(b, 4, [q](const GridPoint& p) -> Matrix { return q * diag({zof(p), 1, 1, 1}) * q.adjoint(); });
}

Matrix bott_sphere(const GridPoint& p) {
    const double x = p.x[0], y = p.x[1], z = p.x[2];
    return mat({{z, cplx(x, -y)}, {cplx(x, y), -z}});
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };
    using PI = PointInvolution;

    // Generators of KO_i^u(A_i) for the classifying algebras.
    add({"x-1", -1, "circle, id, pointed at 1", "KO_-1(C_0(S^1 \\ 1), id)", "", {1}, false, 64,
         [](int n) { return make_element(circle(n, PI::Identity, true), 1, [](const GridPoint& p) { return scalar_matrix(zof(p)); }); }});
    add({"x0", 0, "interval [0,1] pointed at 0, fibre M_2 with transpose", "KO_0(qC, tr)", "", {-1}, false, 64,
         [](int n) { return qc_generator(n, InvolutionKind::Transpose); }});
    add({"x1", 1, "circle, zeta, pointed at 1", "KO_1(C_0(S^1 \\ 1), zeta)", "", {1}, false, 64,
         [](int n) { return make_element(circle(n, PI::Zeta, true), 1, [](const GridPoint& p) { return scalar_matrix(zof(p)); }); }});
    add({"x2", 2, "interval [0,1] pointed at 0, fibre M_2 with sharp", "KO_2(qC, sharp)", "", {-1}, false, 64,
         [](int n) {
             const FnElement x0 = qc_generator(n, InvolutionKind::SharpBlock2);
             return conjugate_outer(x0, conjugator_W(1));
         }});
    add({"x3", 3, "circle, id, pointed at 1, fibre M_2 with sharp", "KO_3(M_2 (x) C_0(S^1 \\ 1), sharp (x) id)",
         "Q acts on the outer and fibre legs, outer leg first", {1}, false, 64,
         [](int n) { return q_diag_z(n, PI::Identity); }});
    add({"x4", 4, "interval [0,1] pointed at 0, fibre M_2 with transpose", "KO_4(M_2 (x) qC, sharp (x) tr)",
         "realized as x0 (x) 1_2 with legs (unitization, M_2, fibre); the Q (x) 1_2 conjugate is equivalent", {-1}, false, 64,
         [](int n) {
             const FnElement x0 = qc_generator(n, InvolutionKind::Transpose);
             return pointwise(x0, [](const Matrix& m) {
                 // m = sum_{ab} e_ab (x) m_ab with 2x2 fibre blocks m_ab; insert 1_2 between the legs.
                 Matrix out = Matrix::Zero(8, 8);
                 for (int a = 0; a < 2; ++a)
                     for (int b = 0; b < 2; ++b)
                         for (int q = 0; q < 2; ++q)
                             out.block(a * 4 + q * 2, b * 4 + q * 2, 2, 2) = m.block(a * 2, b * 2, 2, 2);
                 return out;
             });
         }});
    add({"x5", 5, "circle, zeta, pointed at 1, fibre M_2 with sharp", "KO_5(M_2 (x) C_0(S^1 \\ 1), sharp (x) zeta)",
         "Q acts on the outer and fibre legs, outer leg first", {1}, false, 64,
         [](int n) { return q_diag_z(n, PI::Zeta); }});
    add({"x6", 6, "interval [0,1] pointed at 0, fibre M_2 with transpose-tilde", "KO_6(qC, tr~)", "", {-1}, false, 64,
         [](int n) { return qc_generator(n, InvolutionKind::TransposeTilde); }});

    // Generators over the reals.
    add({"real_ko0", 0, "point", "KO_0(R)", "", {1}, false, 1, [](int) { return point_constant(Matrix::Identity(2, 2)); }});
    add({"real_ko1", 1, "point", "KO_1(R)", "", {1}, true, 1, [](int) { return point_constant(scalar_matrix(-1)); }});
    add({"real_ko2", 2, "point", "KO_2(R)", "", {1}, true, 1,
         [](int) { return point_constant(mat({{0, -kI}, {kI, 0}})); }});
    add({"real_ko4", 4, "point", "KO_4(R)", "", {1}, false, 1, [](int) { return point_constant(Matrix::Identity(4, 4)); }});
    add({"complex_ku0", KU0, "point", "KU_0(C)", "", {1}, false, 1, [](int) { return point_constant(Matrix::Identity(2, 2)); }});

    // Spheres.
    add({"sphere_ko1", 1, "circle, zeta, pointed at 1", "KO_1(C_0(S^1 \\ 1), zeta)", "", {1}, false, 64,
         [](int n) { return make_element(circle(n, PI::Zeta, true), 1, [](const GridPoint& p) { return scalar_matrix(cplx(p.x[0], p.x[1])); }); }});
    add({"sphere_ko-1", -1, "circle, id, pointed at 1", "KO_-1(C_0(S^1 \\ 1), id)", "", {1}, false, 64,
         [](int n) { return make_element(circle(n, PI::Identity, true), 1, [](const GridPoint& p) { return scalar_matrix(cplx(p.x[0], p.x[1])); }); }});
    add({"sphere_ko0", 0, "2-sphere, zeta", "KO_0(C_0(S^2 \\ 1), zeta)", "", {1, 0}, false, 32,
         [](int n) { return make_element(sample_space(SpaceKind::Sphere2, n, PI::Zeta), 2, bott_sphere); }});
    add({"sphere_ko-2", 6, "2-sphere, id", "KO_-2(C_0(S^2 \\ 1), id)", "", {1}, false, 32,
         [](int n) { return make_element(sample_space(SpaceKind::Sphere2, n, PI::Identity), 2, bott_sphere); }});
    add({"sphere_ko-3", 5, "3-sphere, id, pointed at (1,0,0,0)", "KO_-3(C_0(S^3 \\ 1), id)",
         "coordinates rotated by (x, y, z, w) = (x4, x2, x3, -x1) so that the value at the basepoint is 1_2",
         {1}, false, 16,
         [](int n) {
             return make_element(sample_space(SpaceKind::Sphere3, n, PI::Identity), 2, [](const GridPoint& p) {
                 const double x = p.x[3], y = p.x[1], z = p.x[2], w = -p.x[0];
                 return mat({{kI * z - w, kI * x + y}, {kI * x - y, -kI * z - w}});
             });
         }});

    // The circle with z -> -z.
    add({"circle_sigma_w-1", -1, "circle, sigma", "KO_-1(C(S^1), sigma)", "", {1}, false, 64,
         [](int n) { return make_element(circle(n, PI::Sigma, false), 1, [](const GridPoint& p) { return scalar_matrix(zof(p) * zof(p)); }); }});
    add({"circle_sigma_w0", 0, "circle, sigma", "KO_0(C(S^1), sigma)", "", {1}, false, 64,
         [](int n) { return constant_element(circle(n, PI::Sigma, false), Matrix::Identity(2, 2)); }});
    add({"circle_sigma_w1", 1, "circle, sigma", "KO_1(C(S^1), sigma)", "", {1}, true, 64,
         [](int n) { return constant_element(circle(n, PI::Sigma, false), scalar_matrix(-1)); }});
    add({"circle_sigma_w3", 3, "circle, sigma", "KO_3(C(S^1), sigma)", "", {1}, false, 64,
         [](int n) { return make_element(circle(n, PI::Sigma, false), 2, [](const GridPoint& p) { return diag({zof(p), -zof(p)}); }); }});
    add({"circle_sigma_w4", 4, "circle, sigma", "KO_4(C(S^1), sigma)", "", {1}, false, 64,
         [](int n) {
             return make_element(circle(n, PI::Sigma, false), 4, [](const GridPoint& p) {
                 Matrix m = Matrix::Identity(4, 4);
                 m.bottomRightCorner(2, 2) = mat({{p.x[0], p.x[1]}, {p.x[1], -p.x[0]}});
                 return m;
             });
         }});
    add({"circle_sigma_w5", 5, "circle, sigma", "KO_5(C(S^1), sigma)",
         "diag(z, -conj(z)); diag(z, conj(z)) does not satisfy the class-5 relation", {1}, true, 64,
         [](int n) { return make_element(circle(n, PI::Sigma, false), 2, [](const GridPoint& p) { return diag({zof(p), -std::conj(zof(p))}); }); }});

    // The circle with z -> conj(z).
    add({"circle_zeta_w0", 0, "circle, zeta", "KO_0(C(S^1), zeta)", "", {1}, false, 64,
         [](int n) { return constant_element(circle(n, PI::Zeta, false), Matrix::Identity(2, 2)); }});
    add({"circle_zeta_w1", 1, "circle, zeta", "KO_1(C(S^1), zeta), free part", "", {1, 0}, false, 64,
         [](int n) { return make_element(circle(n, PI::Zeta, false), 1, [](const GridPoint& p) { return scalar_matrix(zof(p)); }); }});
    add({"circle_zeta_w1p", 1, "circle, zeta", "KO_1(C(S^1), zeta), torsion part", "", {0, 1}, true, 64,
         [](int n) { return constant_element(circle(n, PI::Zeta, false), scalar_matrix(-1)); }});
    add({"circle_zeta_w2", 2, "circle, zeta", "KO_2(C(S^1), zeta), first summand", "[[y, ix], [-ix, -y]]; the lower-right sign makes it unitary", {0, 1}, true, 64,
         [](int n) {
             return make_element(circle(n, PI::Zeta, false), 2, [](const GridPoint& p) {
                 return mat({{p.x[1], kI * p.x[0]}, {-kI * p.x[0], -p.x[1]}});
             });
         }});
    add({"circle_zeta_w2p", 2, "circle, zeta", "KO_2(C(S^1), zeta), second summand", "[[y, -ix], [ix, -y]]; the lower-right sign makes it unitary", {1, 0}, true, 64,
         [](int n) {
             return make_element(circle(n, PI::Zeta, false), 2, [](const GridPoint& p) {
                 return mat({{p.x[1], -kI * p.x[0]}, {kI * p.x[0], -p.x[1]}});
             });
         }});
    add({"circle_zeta_w3", 3, "circle, zeta", "KO_3(C(S^1), zeta)", "", {1}, true, 64,
         [](int n) {
             return make_element(circle(n, PI::Zeta, false), 2, [](const GridPoint& p) {
                 const cplx z = zof(p);
                 return upper(p) ? diag({z * z, 1}) : diag({1, std::conj(z * z)});
             });
         }});
    add({"circle_zeta_w4", 4, "circle, zeta", "KO_4(C(S^1), zeta)", "", {1}, false, 64,
         [](int n) { return constant_element(circle(n, PI::Zeta, false), Matrix::Identity(4, 4)); }});
    add({"circle_zeta_w5", 5, "circle, zeta", "KO_5(C(S^1), zeta)", "", {1}, false, 64,
         [](int n) {
             return make_element(circle(n, PI::Zeta, false), 2, [](const GridPoint& p) {
                 const cplx z = zof(p);
                 return upper(p) ? diag({z * z, 1}) : diag({1, z * z});
             });
         }});

    // The open disk.
    add({"disk_bott", 6, "disk, id, pointed at the boundary circle", "KO_-2(C_0(U), id)", "W_2 B(x + iy) W_2^*", {1}, false, 32,
         [](int n) {
             BasePtr b = sample_space(SpaceKind::Disk, n, PI::Identity);
             b = with_basepoints(b, b->disk_boundary());
             const Matrix w = conjugator_W(1);
             return make_element(b, 2, [w](const GridPoint& p) -> Matrix {
                 return w * B_matrix(scalar_matrix(cplx(p.x[0], p.x[1]))) * w.adjoint();
             });
         }});
    add({"torus_bott", 6, "2-torus, id", "KO_-2(C(T^2), id)",
         "f = cos t1, g = sin t1 on [0, pi], h = -sin t1 on [pi, 2 pi]", {-1}, false, 32,
         [](int n) { return torus_bott(n).element; }});
    return c;
}

toeplitz::ShiftAlgElement block2(const toeplitz::ShiftAlgElement& a, const toeplitz::ShiftAlgElement& b,
                                 const toeplitz::ShiftAlgElement& c, const toeplitz::ShiftAlgElement& d) {
    return toeplitz::assemble({{a, b}, {c, d}});
}

std::vector<CalkinEntry> build_calkin() {
    using namespace toeplitz;
    const ShiftAlgElement one = identity(), zero = scalar(GaussRational(0)), e = rank_one_e(), s = shift();
    const ShiftAlgElement one_m_2e = sub(one, scale(GaussRational(2), e));
    const ShiftAlgElement i = scalar(kUnitI);
    std::vector<CalkinEntry> c;
    c.push_back({"compact_w0", 0, true, "KO_0(K)", block2(one, zero, zero, scale(GaussRational(-1), one_m_2e)), "defect", -1});
    c.push_back({"compact_w1", 1, true, "KO_1(K)", one_m_2e, "det_sign", -1});
    c.push_back({"compact_w2", 2, true, "KO_2(K)",
                 block2(zero, mul(i, one_m_2e), mul(i, scale(GaussRational(-1), one_m_2e)), zero), "pf_sign", -1});
    c.push_back({"compact_w4", 4, true, "KO_4(K)",
                 direct_sum(direct_sum(one, one), direct_sum(scale(GaussRational(-1), one_m_2e), scale(GaussRational(-1), one_m_2e))),
                 "defect", -1});
    c.push_back({"calkin_v1", 1, false, "KO_1(Q)", s, "defect", 1});
    c.push_back({"calkin_v2", 2, false, "KO_2(Q)", block2(zero, mul(i, s), scale(GaussRational(-1), mul(i, adjoint(s))), zero),
                 "det_sign", -1});
    c.push_back({"calkin_v3", 3, false, "KO_3(Q)", direct_sum(s, adjoint(s)), "pf_sign", -1});
    c.push_back({"calkin_v5", 5, false, "KO_5(Q)", direct_sum(s, s), "defect", 1});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw DomainError("unknown catalog entry: " + name);
}

KOClassRep generator(const std::string& name, int resolution) {
    const CatalogEntry& e = catalog_entry(name);
    KOClassRep rep = make_rep(e.build(resolution > 0 ? resolution : e.default_resolution), e.cls, kCatalogTol);
    const InvariantSignature sig = signature(rep);
    std::vector<long> got;
    for (const auto& comp : sig.components) got.push_back(comp.value);
    if (got != e.expected) throw DomainError(name + ": signature " + sig.to_string() + " differs from the expected value");
    return rep;
}

KOClassRep torus_bott(int resolution, TorusProfile profile) {
    const BasePtr b = sample_space(SpaceKind::Torus2, resolution, PointInvolution::Identity);
    const FnElement u = make_element(b, 2, [profile](const GridPoint& p) {
        const double t = p.param[0];
        const cplx w = std::polar(1.0, p.param[1]);
        double f = 1, g = 0, h = 0;
        if (profile == TorusProfile::Bump) {
            f = std::cos(t);
            (t <= kPi ? g : h) = (t <= kPi ? 1 : -1) * std::sin(t);
        }
        return mat({{f, g + h * std::conj(w)}, {g + h * w, -f}});
    });
    return make_rep(u, 6, kCatalogTol);
}

const std::vector<CalkinEntry>& calkin_catalog() {
    static const std::vector<CalkinEntry> entries = build_calkin();
    return entries;
}

const CalkinEntry& calkin_entry(const std::string& name) {
    for (const auto& e : calkin_catalog())
        if (e.name == name) return e;
    throw DomainError("unknown Calkin entry: " + name);
}

}  // namespace kou
