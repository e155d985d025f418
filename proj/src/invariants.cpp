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

#include "kou/invariants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace kou {
namespace {

constexpr double kPi = std::numbers::pi;

long round_checked(double v, double tol, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > tol) {
        std::ostringstream os;
        os << what << " is not an integer (" << v << ")";
        throw DomainError(os.str());
    }
    return static_cast<long>(r);
}

long trace_fraction(const Matrix& u, int denom, double tol, const char* what) {
    const cplx t = u.trace();
    if (std::abs(t.imag()) > tol * denom) throw DomainError(std::string(what) + " has imaginary trace");
    return round_checked(t.real() / denom, tol, what);
}

InvariantComponent z(const std::string& name, long v) { return {name, v, 0}; }
InvariantComponent z2(const std::string& name, long v) { return {name, ((v % 2) + 2) % 2, 2}; }

long det_parity(const Matrix& m) { return det_sign(m) == 1 ? 0 : 1; }
long pf_parity(const Matrix& m) { return pf_sign(m) == 1 ? 0 : 1; }

std::vector<cplx> dets(const FnElement& u, int from, int to) {
    std::vector<cplx> out;
    const int n = u.base->size();
    for (int k = from; k <= to; ++k) out.push_back(u.at(k % n).determinant());
    return out;
}

double arc_phase(const FnElement& u, bool upper) {
    const int n = u.base->shape[0];
    return upper ? phase_sum(dets(u, 0, n / 2), false) : phase_sum(dets(u, n / 2, n), false);
}

std::vector<std::vector<int>> faces(const BaseSpace& b) {
    std::vector<std::vector<int>> out;
    switch (b.kind) {
        case SpaceKind::Disk: {
            const int R = b.shape[0], L = b.shape[1];
            for (int k = 0; k < L; ++k) out.push_back({0, b.disk_index(1, k), b.disk_index(1, (k + 1) % L)});
            for (int i = 1; i < R; ++i)
                for (int k = 0; k < L; ++k) {
                    const int k1 = (k + 1) % L;
                    out.push_back({b.disk_index(i, k), b.disk_index(i + 1, k), b.disk_index(i + 1, k1),
                                   b.disk_index(i, k1)});
                }
            break;
        }
        case SpaceKind::Sphere2: {
            const int M = b.shape[0], L = b.shape[1];
            const int south = b.size() - 1;
            for (int k = 0; k < L; ++k) out.push_back({0, b.sphere2_index(1, k), b.sphere2_index(1, (k + 1) % L)});
            for (int j = 1; j + 1 < M; ++j)
                for (int k = 0; k < L; ++k) {
                    const int k1 = (k + 1) % L;
                    out.push_back({b.sphere2_index(j, k), b.sphere2_index(j + 1, k), b.sphere2_index(j + 1, k1),
                                   b.sphere2_index(j, k1)});
                }
            for (int k = 0; k < L; ++k)
                out.push_back({b.sphere2_index(M - 1, k), south, b.sphere2_index(M - 1, (k + 1) % L)});
            break;
        }
        case SpaceKind::Torus2: {
            const int n = b.shape[0];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const int i1 = (i + 1) % n, j1 = (j + 1) % n;
                    out.push_back({b.torus_index(i, j), b.torus_index(i1, j), b.torus_index(i1, j1),
                                   b.torus_index(i, j1)});
                }
            break;
        }
        default: throw DomainError("Chern numbers need a closed surface grid");
    }
    return out;
}

std::string pair_key(const BaseSpace& b, int cls) {
    std::string key = to_string(b.kind) + ":" + to_string(b.involution) + ":" + class_name(cls);
    if (!b.basepoints.empty()) key += ":pointed";
    if (b.fibre.dim > 1) key += ":fibre-" + to_string(b.fibre.kind);
    return key;
}

bool pointed_at(const BaseSpace& b, std::initializer_list<int> pts) {
    return b.basepoints == std::vector<int>(pts);
}

struct Dispatch {
    bool ok = false;
    bool derived = false;
    std::vector<InvariantComponent> components;
};

Dispatch point_invariants(const Matrix& m, int cls, const std::string& suffix) {
    Dispatch d{true, false, {}};
    switch (cls) {
        case 0:
        case KU0: d.components.push_back(z("half_trace" + suffix, half_trace(m))); break;
        case 1: d.components.push_back(z2("det" + suffix, det_parity(m))); break;
        case 2: d.components.push_back(z2("pf" + suffix, pf_parity(m))); break;
        case 4: d.components.push_back(z("quarter_trace" + suffix, quarter_trace(m))); break;
        default: break;
    }
    return d;
}

Dispatch dispatch(const FnElement& u, int cls, bool compute) {
    const BaseSpace& b = *u.base;
    const bool unital = b.basepoints.empty();
    const bool plain = b.fibre.dim == 1;
    const bool odd = is_odd_class(cls);
    Dispatch d;
    auto yes = [&](auto&& fill) {
        d.ok = true;
        if (compute) fill();
        return d;
    };

    switch (b.kind) {
        case SpaceKind::Point:
            if (!plain) return d;
            if (!compute) return Dispatch{true, false, {}};
            return point_invariants(u.at(0), cls, "");
        case SpaceKind::TwoPoints:
            if (!plain) return d;
            if (b.involution == PointInvolution::Identity) {
                if (!compute) return Dispatch{true, false, {}};
                Dispatch a = point_invariants(u.at(0), cls, "@1");
                for (auto& c : point_invariants(u.at(1), cls, "@-1").components) a.components.push_back(c);
                return a;
            }
            if (cls == KU0)
                return yes([&] {
                    d.components = {z("half_trace@1", half_trace(u.at(0))), z("half_trace@-1", half_trace(u.at(1)))};
                });
            if (odd) return yes([] {});
            return yes([&] { d.components = {z("half_trace@1", half_trace(u.at(0)))}; });
        case SpaceKind::Interval01:
            if (unital || plain || !pointed_at(b, {0}) || odd) return d;
            return yes([&] {
                const Matrix phi = compress_fibre(u.at(b.size() - 1), b.fibre, 0);
                if (cls == 4)
                    d.components = {z("quarter_trace@end", quarter_trace(phi))};
                else
                    d.components = {z("half_trace@end", half_trace(phi))};
            });
        case SpaceKind::Circle: {
            const int n = b.shape[0];
            if (!unital) {
                if (pointed_at(b, {0}) && odd && b.involution != PointInvolution::Sigma)
                    return yes([&] { d.components = {z("winding", winding_det(u))}; });
                if (pointed_at(b, {0, n / 2}) && odd) {
                    if (cls == KU1)
                        return yes([&] {
                            d.components = {z("winding_upper", winding_half(u, true)),
                                            z("winding_lower", winding_half(u, false))};
                        });
                    return yes([&] { d.components = {z("winding_upper", winding_half(u, true))}; });
                }
                return d;
            }
            if (!plain) return d;
            auto at1 = [&]() -> const Matrix& { return u.at(0); };
            auto atm1 = [&]() -> const Matrix& { return u.at(n / 2); };
            if (cls == KU0) return yes([&] { d.components = {z("half_trace@1", half_trace(at1()))}; });
            if (cls == KU1) return yes([&] { d.components = {z("winding", winding_det(u))}; });
            switch (b.involution) {
                case PointInvolution::Identity:
                    if (cls == -1 || cls == 3) return yes([&] { d.components = {z("winding", winding_det(u))}; });
                    return d;
                case PointInvolution::Zeta:
                    switch (cls) {
                        case 0: return yes([&] { d.components = {z("half_trace@1", half_trace(at1()))}; });
                        case 1:
                            return yes([&] {
                                d.components = {z("winding", winding_det(u)), z2("det@1", det_parity(at1()))};
                            });
                        case 2:
                            return yes([&] {
                                d.components = {z2("pf@1", pf_parity(at1())), z2("pf@-1", pf_parity(atm1()))};
                            });
                        case 3:
                            return yes([&] {
                                const Matrix j = class_structure(3, u.outer_dim()).dense();
                                const double a1 = std::arg(pfaffian(at1() * j));
                                const double am1 = std::arg(pfaffian(atm1() * j));
                                const double v = (arc_phase(u, true) + 2 * a1 - 2 * am1) / (2 * kPi);
                                d.components = {z2("pf_winding", round_checked(v, kRoundTol, "Pfaffian winding"))};
                            });
                        case 4: return yes([&] { d.components = {z("quarter_trace@1", quarter_trace(at1()))}; });
                        case 5:
                            return yes([&] {
                                d.components = {z("winding_upper",
                                                  round_checked(arc_phase(u, true) / (2 * kPi), kRoundTol,
                                                                "half-circle winding"))};
                            });
                        default: return yes([] {});
                    }
                case PointInvolution::Sigma:
                    switch (cls) {
                        case 0:
                        case 4: return yes([&] { d.components = {z("half_trace@1", half_trace(at1()))}; });
                        case 1:
                        case 5:
                            return yes([&] {
                                const double v = (arc_phase(u, true) + 2 * std::arg(at1().determinant())) / (2 * kPi);
                                d.components = {z2("winding_upper", round_checked(v, kRoundTol, "half-circle winding"))};
                            });
                        case -1:
                        case 3:
                            return yes([&] {
                                d.components = {z("winding_upper",
                                                  round_checked(arc_phase(u, true) / (2 * kPi), kRoundTol,
                                                                "half-circle winding"))};
                            });
                        default: return yes([] {});
                    }
                default: return d;
            }
        }
        case SpaceKind::Disk: {
            if (unital || b.basepoints != b.disk_boundary()) return d;
            const bool id = b.involution == PointInvolution::Identity;
            if (cls == KU0 || (id && (cls == 6 || cls == 2)) || (!id && (cls == 0 || cls == 4)))
                return yes([&] { d.components = {z("chern", chern_of_projection(u))}; });
            return d;
        }
        case SpaceKind::Sphere2: {
            if (!unital || !plain) return d;
            const int bp = b.sphere2_equator_basepoint();
            if ((b.involution == PointInvolution::Zeta && cls == 0) || cls == KU0)
                return yes([&] {
                    d.components = {z("chern", chern_of_projection(u)), z("half_trace@base", half_trace(u.at(bp)))};
                });
            if (b.involution == PointInvolution::Identity && cls == 6)
                return yes([&] { d.components = {z("chern", chern_of_projection(u))}; });
            return d;
        }
        case SpaceKind::Sphere3:
            if (!pointed_at(b, {0}) || !(cls == 5 || cls == KU1)) return d;
            d.derived = true;
            return yes([&] { d.components = {z("degree", degree_s3(u))}; });
        case SpaceKind::Torus2:
            if (!unital || !(cls == 6 || cls == KU0)) return d;
            return yes([&] { d.components = {z("chern", chern_of_projection(u))}; });
    }
    return d;
}

}  // namespace

long half_trace(const Matrix& u, double tol) { return trace_fraction(u, 2, tol, "half trace"); }
long quarter_trace(const Matrix& u, double tol) { return trace_fraction(u, 4, tol, "quarter trace"); }

int det_sign(const Matrix& u, double tol) {
    const cplx d = u.determinant();
    if (std::abs(d.imag()) > tol || std::abs(std::abs(d) - 1) > tol)
        throw DomainError("determinant is not +-1");
    return d.real() > 0 ? 1 : -1;
}

int pf_sign(const Matrix& u, double tol) {
    if (u.rows() % 2 != 0) throw DimensionError("pf_sign needs an even size");
    if (residual(u, -u.transpose()) > tol) throw DomainError("pf_sign of a matrix that is not skew");
    const cplx ratio = pfaffian(u, tol) / pfaffian(neutral(2, static_cast<int>(u.rows()) / 2));
    if (std::abs(ratio.imag()) > tol || std::abs(std::abs(ratio) - 1) > tol)
        throw DomainError("Pfaffian ratio is not +-1");
    return ratio.real() > 0 ? 1 : -1;
}

double phase_sum(const std::vector<cplx>& values, bool closed) {
    double total = 0;
    const size_t n = values.size();
    const size_t steps = closed ? n : n - 1;
    for (size_t k = 0; k < steps; ++k) {
        const cplx a = values[k], b = values[(k + 1) % n];
        if (std::abs(a) < 1e-9 || std::abs(b) < 1e-9) throw DomainError("determinant vanishes on the grid");
        const double inc = std::arg(b / a);
        if (std::abs(inc) > kPi / 2) throw DomainError("phase step exceeds pi/2; resolution too coarse");
        total += inc;
    }
    return total;
}

long winding_det(const FnElement& u) {
    if (u.base->kind != SpaceKind::Circle) throw DomainError("winding_det needs a circle");
    const int n = u.base->shape[0];
    return round_checked(phase_sum(dets(u, 0, n - 1), true) / (2 * kPi), kRoundTol, "winding");
}

long winding_half(const FnElement& u, bool upper) {
    if (u.base->kind != SpaceKind::Circle) throw DomainError("winding_half needs a circle");
    const int n = u.base->shape[0];
    if (n % 2 != 0) throw DomainError("winding_half needs an even grid");
    const Matrix& a = u.at(0);
    const Matrix& b = u.at(n / 2);
    const auto isscalar = [](const Matrix& m) {
        return residual(m, m(0, 0) * Matrix::Identity(m.rows(), m.cols())) <= kResidualTol;
    };
    if (!isscalar(a) || !isscalar(b)) throw DomainError("endpoint values are not scalar");
    double corr = std::arg(b.determinant() / a.determinant());
    if (corr < -kPi + 1e-9) corr = kPi;  // ratio -1: keep the branch independent of rounding
    const double delta = arc_phase(u, upper) - (upper ? corr : -corr);
    return round_checked(delta / (2 * kPi), kRoundTol, "half-circle winding");
}

long chern_of_projection(const FnElement& u) {
    const BaseSpace& b = *u.base;
    if (b.kind == SpaceKind::Disk) {
        const auto bd = b.disk_boundary();
        for (int p : bd)
            if (residual(u.at(p), u.at(bd.front())) > kResidualTol)
                throw DomainError("disk element is not constant on the boundary");
    }
    const auto fs = faces(b);
    std::vector<Matrix> frames(u.values.size());
    Eigen::Index rank = -1;
    for (size_t p = 0; p < u.values.size(); ++p) {
        const auto e = herm_eig(u.values[p]);
        Eigen::Index first = 0;
        while (first < e.values.size() && e.values(first) <= 0) ++first;
        if (first < e.values.size() && e.values(first) < 0.5) throw DomainError("spectral gap closes");
        if (first > 0 && e.values(first - 1) > -0.5) throw DomainError("spectral gap closes");
        frames[p] = e.frame.rightCols(e.values.size() - first);
        if (rank >= 0 && frames[p].cols() != rank) throw DomainError("projection rank varies");
        rank = frames[p].cols();
    }
    if (rank == 0) return 0;
    double total = 0;
    for (const auto& f : fs) {
        cplx prod = 1;
        for (size_t k = 0; k < f.size(); ++k) {
            const auto a = static_cast<size_t>(f[k]), c = static_cast<size_t>(f[(k + 1) % f.size()]);
            const cplx link = (frames[a].adjoint() * frames[c]).determinant();
            if (std::abs(link) < 1e-8) throw DomainError("link variable vanishes; resolution too coarse");
            prod *= link / std::abs(link);
        }
        const double flux = std::arg(prod);
        if (std::abs(flux) >= kPi * (1 - 1e-9)) throw DomainError("plaquette flux reaches pi; resolution too coarse");
        total += flux;
    }
    return round_checked(total / (2 * kPi), kRoundTol, "Chern number");
}

long degree_s3(const FnElement& u) {
    const BaseSpace& b = *u.base;
    if (b.kind != SpaceKind::Sphere3) throw DomainError("degree_s3 needs the 3-sphere");
    const int nc = b.shape[0], nt = b.shape[1], np = b.shape[2];
    const double hc = kPi / nc, ht = kPi / nt, hp = 2 * kPi / np;
    auto at = [&](int i, int j, int k) -> const Matrix& { return u.at(b.sphere3_index(i, j, ((k % np) + np) % np)); };
    cplx total = 0;
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nt; ++j)
            for (int k = 0; k < np; ++k) {
                const int i0 = std::max(i - 1, 0), i1 = std::min(i + 1, nc - 1);
                const int j0 = std::max(j - 1, 0), j1 = std::min(j + 1, nt - 1);
                const Matrix uinv = at(i, j, k).inverse();
                const Matrix lc = uinv * (at(i1, j, k) - at(i0, j, k)) / ((i1 - i0) * hc);
                const Matrix lt = uinv * (at(i, j1, k) - at(i, j0, k)) / ((j1 - j0) * ht);
                const Matrix lp = uinv * (at(i, j, k + 1) - at(i, j, k - 1)) / (2 * hp);
                total += (lc * (lt * lp - lp * lt)).trace();
            }
    const cplx deg = total * hc * ht * hp / (8 * kPi * kPi);
    if (std::abs(deg.imag()) > 0.25) throw DomainError("degree integrand is not real");
    return round_checked(deg.real(), 0.25, "degree");
}

bool InvariantSignature::is_zero() const {
    for (const auto& c : components)
        if (c.value != 0) return false;
    return true;
}

std::string InvariantSignature::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < components.size(); ++k) {
        if (k) os << ", ";
        os << components[k].name << "=" << components[k].value;
        if (components[k].modulus) os << " mod " << components[k].modulus;
    }
    os << ")";
    return os.str();
}

InvariantSignature InvariantSignature::operator+(const InvariantSignature& o) const {
    if (pair != o.pair || components.size() != o.components.size())
        throw DomainError("adding signatures of different catalog pairs");
    InvariantSignature s = *this;
    for (size_t k = 0; k < components.size(); ++k) {
        auto& c = s.components[k];
        c.value += o.components[k].value;
        if (c.modulus) c.value %= c.modulus;
    }
    return s;
}

bool InvariantSignature::operator==(const InvariantSignature& o) const {
    return pair == o.pair && components == o.components;
}

bool has_signature(const BaseSpace& base, int cls) {
    FnElement probe{std::make_shared<BaseSpace>(base), 0, {}};
    return dispatch(probe, cls, false).ok;
}

InvariantSignature signature(const FnElement& u, int cls) {
    Dispatch d = dispatch(u, cls, true);
    if (!d.ok) throw DomainError("no invariant catalog entry for " + pair_key(*u.base, cls));
    return InvariantSignature{pair_key(*u.base, cls), std::move(d.components), d.derived};
}

InvariantSignature signature(const KOClassRep& rep) { return signature(rep.element, rep.cls); }

}  // namespace kou
