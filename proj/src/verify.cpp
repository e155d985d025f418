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


#include "kou/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>

#include "kou/boundary.hpp"
#include "kou/catalog.hpp"
#include "kou/randmat.hpp"

namespace kou {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0, 1};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

Matrix diag_of(const std::vector<cplx>& d) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
    for (size_t k = 0; k < d.size(); ++k) v(static_cast<Eigen::Index>(k)) = d[k];
    return v.asDiagonal();
}

long first_component(const InvariantSignature& s) {
    if (s.components.empty()) throw DomainError("signature has no components");
    return s.components.front().value;
}

// exp(iK) with K = (H - H^J) / 2, so that (exp(iK))^J = exp(-iK).
Matrix anti_invariant_unitary(std::mt19937_64& rng, const SignedPerm& j) {
    const Matrix h = random_hermitian(rng, j.dim());
    const Matrix k = (h - involute(h, j)) / 2.0;
    return herm_apply(herm_eig(k), [](double x) { return std::exp(kI * x); });
}

class Runner {
public:
    explicit Runner(const VerifyOptions& o) : opts_(o), rng_(o.seed) {}

    bool enabled(const Criterion& c) const {
        return opts_.only.empty() || opts_.only == c.tag || opts_.only == std::to_string(c.number);
    }

    void check(int crit, const std::string& name, const std::function<std::pair<bool, std::string>()>& body,
               bool residual_row = false) {
        VerifyCheck c{crit, criteria().at(static_cast<size_t>(crit - 1)).tag, name, false, ""};
        try {
            auto [ok, detail] = body();
            c.passed = ok;
            c.detail = detail;
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("exception: ") + e.what();
        }
        if (residual_row && opts_.tol != kResidualTol)
            c.detail += (c.detail.empty() ? "" : "; ") + std::string("tol=") + sci(opts_.tol);
        out_.push_back(std::move(c));
    }

    std::vector<VerifyCheck> run() {
        const std::vector<std::function<void()>> steps = {
            [this] { conjugators(); }, [this] { bmatrix(); },       [this] { pfaffians(); },
            [this] { disk(); },        [this] { circle_sigma(); },  [this] { circle_zeta(); },
            [this] { calkin(); },      [this] { catalog_rows(); },  [this] { properties(); },
            [this] { qc(); },
        };
        for (size_t k = 0; k < steps.size(); ++k)
            if (enabled(criteria()[k])) steps[k]();
        return std::move(out_);
    }

private:
    VerifyOptions opts_;
    std::mt19937_64 rng_;
    std::vector<VerifyCheck> out_;
    std::map<std::string, KOClassRep> reps_;

    const KOClassRep& rep(const std::string& name) {
        auto it = reps_.find(name);
        if (it == reps_.end()) it = reps_.emplace(name, generator(name)).first;
        return it->second;
    }

    BoundaryResult bnd(const FnElement& u, int cls, const SESDescriptor& ses,
                       std::optional<LiftStrategy> strategy = std::nullopt,
                       const std::optional<FnElement>& lift = std::nullopt) {
        return boundary_map(make_rep(u, cls, opts_.tol), ses, strategy.value_or(ses.strategies.front()), lift, opts_.tol);
    }

    void conjugators() {
        auto sweep = [&](const std::string& name, const std::function<double(int)>& one) {
            check(1, name, [&] {
                double worst = 0;
                for (int rep = 0; rep < 200; ++rep) worst = std::max(worst, one(rep % 4 + 1));
                return std::pair{worst <= kIdentityTol, "max residual " + sci(worst) + " over 200 matrices"};
            });
        };
        sweep("W (x^tr~) W^* = (W x W^*)^tr", [&](int n) {
            const Matrix w = conjugator_W(n), x = random_matrix(rng_, 2 * n);
            return residual((w * x * w.adjoint()).transpose(), w * involute(x, InvolutionKind::TransposeTilde) * w.adjoint());
        });
        sweep("Q x^tr Q^* = (Q x Q^*)^(sharp~ (x) sharp)", [&](int n) {
            const Matrix q = conjugator_Q(n), x = random_matrix(rng_, 4 * n);
            return residual(q * x.transpose() * q.adjoint(), involute(q * x * q.adjoint(), InvolutionKind::SharpTildeSharp));
        });
        sweep("V x^(sharp~) V^* = (V x V^*)^(1 (x) sharp)", [&](int n) {
            const Matrix v = conjugator_V(n), x = random_matrix(rng_, 2 * n);
            return residual(v * involute(x, InvolutionKind::SharpTilde) * v.adjoint(),
                            involute(v * x * v.adjoint(), InvolutionKind::SharpTensorTranspose));
        });
    }

    void bmatrix() {
        const BasePtr pt = sample_space(SpaceKind::Point, 1, PointInvolution::Identity);
        for (int cls : all_classes()) {
            check(2, "B(a)^2 = 1 for class " + class_name(cls) + " contractions", [&] {
                const int sm = class_spec(cls).size_multiple;
                std::uniform_int_distribution<int> copies(1, 8 / sm);
                double worst = 0, herm = 0;
                for (int rep = 0; rep < 100; ++rep) {
                    const int n = sm * copies(rng_);
                    FnElement a{pt, n, {random_contraction(rng_, n)}};
                    a = retract_contraction(symmetrize(a, cls), is_odd_class(cls) ? RetractMode::Odd : RetractMode::Even,
                                            opts_.tol);
                    const Matrix b = B_matrix(a.at(0), opts_.tol);
                    worst = std::max(worst, residual(b * b, Matrix::Identity(2 * n, 2 * n)));
                    herm = std::max(herm, hermiticity_residual(b));
                }
                return std::pair{worst <= 1e-9 && herm <= 1e-9,
                                 "max |B^2 - 1| " + sci(worst) + ", max |B - B^*| " + sci(herm)};
            }, true);
        }
    }

    void pfaffians() {
        check(3, "Pf^2 = det on random skew matrices, even sizes 2..8", [&] {
            double worst = 0;
            for (int n = 2; n <= 8; n += 2)
                for (int rep = 0; rep < 50; ++rep) {
                    Matrix a = random_skew(rng_, n);
                    a /= Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
                    const cplx pf = pfaffian(a);
                    worst = std::max(worst, std::abs(pf * pf - a.determinant()));
                }
            return std::pair{worst <= 1e-9, "max |Pf^2 - det| " + sci(worst) + " (unit operator norm)"};
        });
        check(3, "pf_sign(I2) = +1 and pf_sign(-I2) = -1", [&] {
            const Matrix i2 = neutral(2, 1);
            const int p = pf_sign(i2), m = pf_sign(-i2);
            return std::pair{p == 1 && m == -1, "signs " + std::to_string(p) + ", " + std::to_string(m)};
        });
    }

    void disk() {
        for (int res : {32, 64})
            for (LiftStrategy s : {LiftStrategy::Radial, LiftStrategy::RadialSquare}) {
                check(4, "disk-id boundary of z, resolution " + std::to_string(res) + ", lift " + to_string(s), [&] {
                    const SESDescriptor ses = make_ses("disk-id", res);
                    const FnElement z = make_element(ses.quotient, 1, [](const GridPoint& p) {
                        return Matrix::Constant(1, 1, cplx(p.x[0], p.x[1]));
                    });
                    const BoundaryResult r = bnd(z, -1, ses, s);
                    const long c = chern_of_projection(r.rep.element);
                    return std::pair{r.rep.cls == 6 && std::abs(c) == 1,
                                     "class " + class_name(r.rep.cls) + ", chern " + std::to_string(c) +
                                         ", closed-set residual " + sci(r.closed_set_residual)};
                }, true);
            }
    }

    // v = conj(z)^2 on the upper half circle, z^2 on the lower half.
    static FnElement half_square(const BasePtr& base, int copies) {
        return make_element(base, copies, [copies](const GridPoint& p) {
            const cplx z(p.x[0], p.x[1]);
            const cplx v = p.x[1] >= 0 ? std::conj(z * z) : z * z;
            return Matrix(v * Matrix::Identity(copies, copies));
        });
    }

    void circle_sigma() {
        const SESDescriptor ses = make_ses("circle-sigma", 64);
        auto pair = [&](const Matrix& a, const Matrix& b) { return FnElement{ses.quotient, static_cast<int>(a.rows()), {a, b}}; };
        const Matrix one2 = Matrix::Identity(2, 2);
        check(5, "d0(1_2, 1_2) is trivial", [&] {
            const auto sig = signature(bnd(pair(one2, one2), 0, ses).rep);
            return std::pair{sig.is_zero(), sig.to_string()};
        }, true);
        for (int cls : {2, 6}) {
            check(5, "d" + std::to_string(cls) + "(1_2, -1_2) is twice a generator", [&] {
                const BoundaryResult r = bnd(pair(one2, -one2), cls, ses);
                const auto sig = signature(r.rep);
                const double dev = max_norm_residual(r.rep.element, rebase(half_square(ses.total, 2), ses.ideal));
                return std::pair{std::abs(first_component(sig)) == 2 && dev <= 1e-9,
                                 sig.to_string() + ", |E(a) - diag(v, v)| " + sci(dev)};
            }, true);
        }
        check(5, "d4 with lift diag(1_2, [[x, y], [y, -x]]) is trivial", [&] {
            const FnElement w = pair(diag_of({1, 1, 1, -1}), diag_of({1, 1, -1, 1}));
            const FnElement lift = make_element(ses.total, 4, [](const GridPoint& p) {
                Matrix m = Matrix::Identity(4, 4);
                m(2, 2) = p.x[0];
                m(2, 3) = m(3, 2) = p.x[1];
                m(3, 3) = -p.x[0];
                return m;
            });
            const auto sig = signature(bnd(w, 4, ses, std::nullopt, lift).rep);
            return std::pair{sig.is_zero(), sig.to_string()};
        }, true);
    }

    void circle_zeta() {
        const SESDescriptor ses = make_ses("circle-zeta", 64);
        auto pair = [&](const Matrix& a, const Matrix& b) { return FnElement{ses.quotient, static_cast<int>(a.rows()), {a, b}}; };
        long g = 0;
        check(6, "reference loop v has half-circle winding +-1", [&] {
            g = first_component(signature(rebase(half_square(ses.total, 1), ses.ideal), -1));
            return std::pair{std::abs(g) == 1, "g = " + std::to_string(g)};
        });
        if (g == 0) return;
        struct Case { int cls; Matrix one, neut; long scale; };
        const std::vector<Case> cases = {{0, Matrix::Identity(2, 2), neutral(0, 1), 1},
                                         {4, Matrix::Identity(4, 4), neutral(4, 1), 2}};
        for (const Case& c : cases) {
            const std::vector<std::pair<int, int>> rs = {{1, 0}, {0, 1}, {1, 1}};
            for (auto [r, s] : rs) {
                check(6, "d" + std::to_string(c.cls) + "(r, s) = " + std::to_string(c.scale) + "(r - s) g at (" +
                             std::to_string(r) + ", " + std::to_string(s) + ")",
                      [&, r = r, s = s] {
                          KOClassRep w = make_rep(pair(c.one, c.neut), c.cls, opts_.tol);
                          if (s == 1 && r == 0) w = make_rep(pair(c.neut, c.one), c.cls, opts_.tol);
                          if (r == 1 && s == 1) w = add(w, make_rep(pair(c.neut, c.one), c.cls, opts_.tol));
                          const BoundaryResult b = boundary_map(w, ses, LiftStrategy::ArcLinear, std::nullopt, opts_.tol);
                          const long got = first_component(signature(b.rep));
                          const long want = c.scale * (r - s) * g;
                          std::string detail = "winding_upper " + std::to_string(got) + ", expected " + std::to_string(want);
                          bool ok = got == want;
                          if (r == 1 && s == 0) {
                              // E(a) = diag(1, v) for class 0 and diag(1, 1, v, v) for class 4.
                              const int half = static_cast<int>(c.one.rows()) / 2;
                              const FnElement v = half_square(ses.total, half);
                              const FnElement expect = rebase(direct_sum(constant_element(ses.total, Matrix::Identity(half, half)), v), ses.ideal);
                              const double dev = max_norm_residual(b.rep.element, expect);
                              ok = ok && dev <= 1e-9;
                              detail += ", |E(a) - diag(1, v)| " + sci(dev);
                          }
                          return std::pair{ok, detail};
                      }, true);
            }
        }
    }

    void calkin() {
        using namespace toeplitz;
        const ShiftAlgElement one = identity(), e = rank_one_e();
        const ShiftAlgElement p = sub(one, scale(GaussRational(2), e));  // 1 - 2e
        const ShiftAlgElement m1 = scale(GaussRational(-1), one);
        check(7, "B(s) = diag(1 - 2e, -1)", [&] {
            const CalkinResult r = calkin_boundary(calkin_entry("calkin_v1").element, 1);
            return std::pair{equal(r.element, direct_sum(p, m1)), to_string(r.element)};
        });
        check(7, "d2(v2) = diag(1 - 2e, 1)", [&] {
            const CalkinResult r = calkin_boundary(calkin_entry("calkin_v2").element, 2);
            return std::pair{equal(r.element, direct_sum(p, one)), to_string(r.element)};
        });
        check(7, "d3(v3) has Pfaffian sign opposite to the neutral element", [&] {
            const CalkinResult r = calkin_boundary(calkin_entry("calkin_v3").element, 3);
            const long neut = compact_invariant(constant(ExactMatrix::from_complex(neutral(2, 2))), 2).value;
            return std::pair{r.invariant == -neut && neut == 1,
                             "pf_sign " + std::to_string(r.invariant) + ", neutral " + std::to_string(neut)};
        });
        check(7, "d5(v5) = diag(1 - 2e, 1 - 2e, -1, -1)", [&] {
            const CalkinResult r = calkin_boundary(calkin_entry("calkin_v5").element, 5);
            return std::pair{equal(r.element, direct_sum(direct_sum(p, p), direct_sum(m1, m1))), to_string(r.element)};
        });
    }

    void catalog_rows() {
        check(8, "catalog holds at least 24 named generators", [&] {
            const size_t n = catalog().size();
            return std::pair{n >= 24, std::to_string(n) + " function-algebra entries, " +
                                          std::to_string(calkin_catalog().size()) + " Toeplitz entries"};
        });
        for (const CatalogEntry& e : catalog()) {
            check(8, "generator " + e.name, [&] {
                const KOClassRep& r = rep(e.name);
                const auto& d = r.diagnostics;
                const double worst = std::max({d.unitarity, d.self_adjointness, d.symmetry, d.lambda_scalar, d.lambda_spread});
                std::string detail = signature(r).to_string() + ", residual " + sci(worst);
                bool ok = worst <= 1e-10;
                if (e.torsion) {
                    const auto twice = signature(add(r, r));
                    ok = ok && twice.is_zero();
                    detail += ", w + w " + twice.to_string();
                }
                return std::pair{ok, detail};
            });
        }
        for (const CalkinEntry& e : calkin_catalog()) {
            check(8, "Toeplitz entry " + e.name, [&] {
                const long got = e.over_compacts ? toeplitz::compact_invariant(e.element, e.cls).value
                                                 : toeplitz::calkin_boundary(e.element, e.cls).invariant;
                return std::pair{got == e.expected, e.invariant_name + " " + std::to_string(got)};
            });
        }
        check(8, "constant torus profile is trivial", [&] {
            const auto sig = signature(torus_bott(16, TorusProfile::Constant));
            return std::pair{sig.is_zero(), sig.to_string()};
        });
    }

    void properties() {
        const SESDescriptor disk_id = make_ses("disk-id", 32), disk_zeta = make_ses("disk-zeta", 32);
        // Direct sums reach size 16, so the circles are fine enough for the det phase to move by less than pi/2 per step.
        const SESDescriptor zeta = make_ses("circle-zeta", 256), sigma = make_ses("circle-sigma", 256);
        auto ses_for = [&](int cls) -> const SESDescriptor& {
            switch (cls) {
                case -1:
                case 3:
                case KU1: return disk_id;
                case 1:
                case 5: return disk_zeta;
                case 0:
                case 4: return zeta;
                default: return sigma;
            }
        };
        auto input = [&](int cls) {
            const SESDescriptor& s = ses_for(cls);
            return is_odd_class(cls) ? random_circle_input(rng_, cls, s.quotient) : random_two_point_input(rng_, cls, s.quotient);
        };

        for (int cls : {-1, 1, 3, 5}) {
            check(9, "lift independence, class " + class_name(cls), [&] {
                const SESDescriptor& s = ses_for(cls);
                int agree = 0;
                std::string first_bad;
                for (int k = 0; k < 20; ++k) {
                    const FnElement u = input(cls);
                    const auto a = signature(bnd(u, cls, s, s.strategies[0]).rep);
                    const auto b = signature(bnd(u, cls, s, s.strategies[1]).rep);
                    if (a == b) ++agree;
                    else if (first_bad.empty()) first_bad = a.to_string() + " vs " + b.to_string();
                }
                return std::pair{agree == 20, std::to_string(agree) + "/20 agree" + (first_bad.empty() ? "" : "; " + first_bad)};
            }, true);
        }
        for (int cls : {-1, 0, 1, 2, 3, 4, 5, 6}) {
            check(9, "additivity of the boundary, class " + class_name(cls), [&] {
                const SESDescriptor& s = ses_for(cls);
                int agree = 0;
                for (int k = 0; k < 20; ++k) {
                    const KOClassRep u = make_rep(input(cls), cls, opts_.tol), v = make_rep(input(cls), cls, opts_.tol);
                    auto d = [&](const KOClassRep& x) {
                        return signature(boundary_map(x, s, s.strategies.front(), std::nullopt, opts_.tol).rep);
                    };
                    if (d(add(u, v)) == d(u) + d(v)) ++agree;
                }
                return std::pair{agree == 20, std::to_string(agree) + "/20 pairs additive"};
            }, true);
        }
        check(9, "stabilization invariance over the catalog", [&] {
            int agree = 0;
            std::string bad;
            for (const CatalogEntry& e : catalog()) {
                const KOClassRep& r = rep(e.name);
                if (signature(stabilize(r)) == signature(r)) ++agree;
                else bad += " " + e.name;
            }
            return std::pair{bad.empty(), std::to_string(agree) + "/" + std::to_string(catalog().size()) + bad};
        });
        check(9, "inverse cancellation over the catalog", [&] {
            int agree = 0;
            std::string bad;
            for (const CatalogEntry& e : catalog()) {
                KOClassRep r = rep(e.name);
                if ((r.cls == 2 || r.cls == 6) && (r.element.outer_dim() / 2) % 2 != 0) r = stabilize(r);
                if (signature(add(r, inverse(r))).is_zero()) ++agree;
                else bad += " " + e.name;
            }
            return std::pair{bad.empty(), std::to_string(agree) + "/" + std::to_string(catalog().size()) + bad};
        });
        for (int cls : {-1, 0, 1, 2, 3, 4, 5, 6}) {
            check(9, "forgetful map commutes with the boundary, class " + class_name(cls), [&] {
                const SESDescriptor& s = ses_for(cls);
                int agree = 0;
                for (int k = 0; k < 5; ++k) {
                    const KOClassRep u = make_rep(input(cls), cls, opts_.tol);
                    const LiftStrategy st = s.strategies.front();
                    const auto a = signature(forget_to_KU(boundary_map(u, s, st, std::nullopt, opts_.tol).rep));
                    const auto b = signature(boundary_map(forget_to_KU(u), s, st, std::nullopt, opts_.tol).rep);
                    if (a == b) ++agree;
                }
                return std::pair{agree == 5, std::to_string(agree) + "/5 agree"};
            }, true);
        }
    }

    void qc() {
        check(10, "qC relations at 64 sample points", [&] {
            double worst = 0;
            for (int k = 1; k <= 64; ++k) {
                const double t = k / 64.0;
                Matrix h = Matrix::Zero(2, 2), x = Matrix::Zero(2, 2), kk = Matrix::Zero(2, 2);
                h(0, 0) = t;
                x(1, 0) = std::sqrt(t - t * t);
                kk(1, 1) = t;
                worst = std::max(worst, qc_relation_residual(h, x, kk));
            }
            return std::pair{worst <= kIdentityTol, "max residual " + sci(worst)};
        });
        check(10, "build_U is the class-0 generator with phi(u) = -1_2", [&] {
            const BasePtr b = sample_space(SpaceKind::Interval01, 64, PointInvolution::Identity, Fibre{2, InvolutionKind::Transpose});
            const FnElement u = make_element(b, 4, [](const GridPoint& p) {
                const double t = p.param[0];
                Matrix h = Matrix::Zero(2, 2), x = Matrix::Zero(2, 2), k = Matrix::Zero(2, 2);
                h(0, 0) = t;
                x(1, 0) = std::sqrt(std::max(0.0, t - t * t));
                k(1, 1) = t;
                return build_U(h, x, k);
            });
            const KOClassRep r = make_rep(u, 0, opts_.tol);
            const Matrix phi = compress_fibre(u.at(b->size() - 1), b->fibre, 0);
            const double dev = residual(phi, -Matrix::Identity(2, 2));
            const long ht = first_component(signature(r));
            return std::pair{ht == -1 && dev <= kIdentityTol, "half_trace@end " + std::to_string(ht) + ", |phi + 1_2| " + sci(dev)};
        }, true);
    }
};

}  // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "conjugators", "conjugator identities"},
        {2, "bmatrix", "B(a) is a self-adjoint unitary"},
        {3, "pfaffian", "Pfaffian identities and signs"},
        {4, "disk", "disk boundary of z"},
        {5, "circle-sigma", "circle with sigma boundary table"},
        {6, "circle-zeta", "circle with zeta boundary linearity"},
        {7, "calkin", "Toeplitz and Calkin boundaries"},
        {8, "catalog", "catalog generators"},
        {9, "properties", "property suite"},
        {10, "qc", "qC relations and the class-0 generator"},
    };
    return list;
}

FnElement random_circle_input(std::mt19937_64& rng, int cls, const BasePtr& circle) {
    std::uniform_int_distribution<int> power(-2, 2), small(1, 3), pairs(1, 2);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    std::bernoulli_distribution coin;
    std::vector<int> k;
    std::vector<cplx> c;
    Matrix frame;
    int block = 1;
    switch (cls) {
        case -1:
        case 1: {
            const int n = small(rng);
            for (int j = 0; j < n; ++j) {
                k.push_back(power(rng));
                c.push_back(cls == -1 ? std::polar(1.0, angle(rng)) : cplx(coin(rng) ? 1 : -1));
            }
            frame = random_real_orthogonal(rng, n);
            break;
        }
        case 3:
        case 5: {
            const int m = pairs(rng);
            block = 2;
            for (int j = 0; j < m; ++j) {
                k.push_back(power(rng));
                c.push_back(1);
            }
            frame = anti_invariant_unitary(rng, class_structure(cls, 2 * m));
            break;
        }
        case KU1: {
            const int n = small(rng);
            for (int j = 0; j < n; ++j) {
                k.push_back(power(rng));
                c.push_back(std::polar(1.0, angle(rng)));
            }
            frame = random_unitary(rng, n);
            break;
        }
        default: throw DomainError("random_circle_input takes an odd class");
    }
    const int n = static_cast<int>(k.size()) * block;
    const Matrix right = cls == -1 || cls == 1 ? Matrix(frame.transpose()) : Matrix(frame.adjoint());
    return make_element(circle, n, [&](const GridPoint& p) {
        const cplx z(p.x[0], p.x[1]);
        std::vector<cplx> d;
        for (size_t j = 0; j < k.size(); ++j)
            for (int b = 0; b < block; ++b) d.push_back(c[j] * std::pow(z, k[j]));
        return Matrix(frame * diag_of(d) * right);
    });
}

FnElement random_two_point_input(std::mt19937_64& rng, int cls, const BasePtr& two_points) {
    std::uniform_int_distribution<int> copies(1, 2);
    std::bernoulli_distribution coin;
    const int n = class_spec(cls).size_multiple * copies(rng);
    auto symmetric_orthogonal = [&] {
        const Matrix o = random_real_orthogonal(rng, n);
        std::vector<cplx> d;
        for (int j = 0; j < n; ++j) d.push_back(coin(rng) ? 1 : -1);
        return Matrix(o * diag_of(d) * o.transpose());
    };
    auto sharp_symmetry = [&] {
        const Matrix s = anti_invariant_unitary(rng, class_structure(4, n));
        std::vector<cplx> d;
        for (int j = 0; j < n / 2; ++j) {
            const double e = coin(rng) ? 1 : -1;
            d.push_back(e);
            d.push_back(e);
        }
        return Matrix(s * diag_of(d) * s.adjoint());
    };
    switch (cls) {
        case 0: return FnElement{two_points, n, {symmetric_orthogonal(), symmetric_orthogonal()}};
        case 4: return FnElement{two_points, n, {sharp_symmetry(), sharp_symmetry()}};
        case 2:
        case 6: {
            const Matrix h = random_symmetry(rng, n);
            return FnElement{two_points, n, {h, Matrix(-involute(h, class_structure(cls, n)))}};
        }
        case KU0: return FnElement{two_points, n, {random_symmetry(rng, n), random_symmetry(rng, n)}};
        default: throw DomainError("random_two_point_input takes an even class");
    }
}

std::vector<VerifyCheck> run_verification(const VerifyOptions& opts) { return Runner(opts).run(); }

}  // namespace kou
