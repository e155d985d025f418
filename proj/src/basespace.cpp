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

#include "kou/basespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/SVD>

namespace kou {
namespace {

constexpr double kPi = std::numbers::pi;

template <class Enum, size_t N>
Enum lookup(const std::array<std::pair<const char*, Enum>, N>& table, const std::string& name, const char* what) {
    for (const auto& [key, value] : table)
        if (name == key) return value;
    throw DomainError(std::string("unknown ") + what + ": " + name);
}

template <class Enum, size_t N>
std::string reverse_lookup(const std::array<std::pair<const char*, Enum>, N>& table, Enum value) {
    for (const auto& [key, v] : table)
        if (v == value) return key;
    return "?";
}

constexpr std::array<std::pair<const char*, SpaceKind>, 8> kSpaceNames{{
    {"point", SpaceKind::Point},
    {"two-points", SpaceKind::TwoPoints},
    {"interval", SpaceKind::Interval01},
    {"circle", SpaceKind::Circle},
    {"disk", SpaceKind::Disk},
    {"sphere2", SpaceKind::Sphere2},
    {"sphere3", SpaceKind::Sphere3},
    {"torus2", SpaceKind::Torus2},
}};

constexpr std::array<std::pair<const char*, PointInvolution>, 4> kPointInvNames{{
    {"id", PointInvolution::Identity},
    {"zeta", PointInvolution::Zeta},
    {"sigma", PointInvolution::Sigma},
    {"swap", PointInvolution::Swap},
}};

constexpr std::array<std::pair<const char*, LiftStrategy>, 5> kLiftNames{{
    {"radial", LiftStrategy::Radial},
    {"radial-sq", LiftStrategy::RadialSquare},
    {"arc-linear", LiftStrategy::ArcLinear},
    {"arc-smooth", LiftStrategy::ArcSmooth},
    {"constant", LiftStrategy::Constant},
}};

bool realizable(SpaceKind kind, PointInvolution inv) {
    using P = PointInvolution;
    switch (kind) {
        case SpaceKind::TwoPoints: return inv == P::Identity || inv == P::Swap;
        case SpaceKind::Circle: return inv == P::Identity || inv == P::Zeta || inv == P::Sigma;
        case SpaceKind::Disk:
        case SpaceKind::Sphere2: return inv == P::Identity || inv == P::Zeta;
        default: return inv == P::Identity;
    }
}

// angle index k -> image under the involution on a uniform angular grid of size n
int angle_image(int k, int n, PointInvolution inv) {
    switch (inv) {
        case PointInvolution::Zeta: return (n - k) % n;
        case PointInvolution::Sigma: return (k + n / 2) % n;
        default: return k;
    }
}

void require_same_base(const FnElement& u, const FnElement& v) {
    if (!u.base->same_grid(*v.base) || u.dim != v.dim)
        throw DimensionError("elements live on different bases or sizes");
}

double operator_norm(const Matrix& m) {
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

}  // namespace

std::string to_string(SpaceKind kind) { return reverse_lookup(kSpaceNames, kind); }
std::string to_string(PointInvolution inv) { return reverse_lookup(kPointInvNames, inv); }
std::string to_string(LiftStrategy s) { return reverse_lookup(kLiftNames, s); }
SpaceKind space_from_string(const std::string& name) { return lookup(kSpaceNames, name, "base space"); }
PointInvolution point_involution_from_string(const std::string& name) {
    return lookup(kPointInvNames, name, "point involution");
}
LiftStrategy lift_from_string(const std::string& name) { return lookup(kLiftNames, name, "lift strategy"); }

int BaseSpace::disk_index(int ring, int angle) const { return 1 + (ring - 1) * shape[1] + angle; }
int BaseSpace::sphere2_index(int band, int angle) const { return 1 + (band - 1) * shape[1] + angle; }
int BaseSpace::sphere3_index(int i, int j, int k) const { return 1 + (i * shape[1] + j) * shape[2] + k; }
int BaseSpace::torus_index(int i, int j) const { return i * shape[1] + j; }

std::vector<int> BaseSpace::disk_boundary() const {
    if (kind != SpaceKind::Disk) throw DomainError("disk_boundary on a non-disk base");
    std::vector<int> out(static_cast<size_t>(shape[1]));
    for (int k = 0; k < shape[1]; ++k) out[static_cast<size_t>(k)] = disk_index(shape[0], k);
    return out;
}

int BaseSpace::sphere2_equator_basepoint() const {
    if (kind != SpaceKind::Sphere2) throw DomainError("equator basepoint on a non-sphere base");
    return sphere2_index(shape[0] / 2, 0);
}

BasePtr sample_space(SpaceKind kind, int resolution, PointInvolution inv, Fibre fibre) {
    if (!realizable(kind, inv))
        throw DomainError("involution " + to_string(inv) + " not realizable on " + to_string(kind));
    if (fibre.dim < 1) throw DimensionError("fibre dimension must be positive");
    (void)involution_structure(fibre.kind, fibre.dim);

    auto b = std::make_shared<BaseSpace>();
    b->kind = kind;
    b->involution = inv;
    b->fibre = fibre;
    const bool sampled = kind != SpaceKind::Point && kind != SpaceKind::TwoPoints;
    if (sampled) {
        if (resolution < 8) throw DomainError("resolution must be at least 8");
        if (resolution % 2 != 0 &&
            (inv != PointInvolution::Identity || kind == SpaceKind::Sphere2 || kind == SpaceKind::Sphere3))
            throw DomainError("this base needs an even resolution");
    }
    const int n = resolution;
    auto& pts = b->points;
    auto& pair = b->pairing;

    switch (kind) {
        case SpaceKind::Point:
            b->resolution = 1;
            pts.push_back({});
            pair = {0};
            break;
        case SpaceKind::TwoPoints:
            b->resolution = 2;
            pts.push_back({{1, 0, 0, 0}, {0, 0, 0}});
            pts.push_back({{-1, 0, 0, 0}, {kPi, 0, 0}});
            pair = inv == PointInvolution::Swap ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
            break;
        case SpaceKind::Interval01:
            b->resolution = n;
            b->shape = {n + 1, 0, 0};
            for (int k = 0; k <= n; ++k) {
                const double t = static_cast<double>(k) / n;
                pts.push_back({{t, 0, 0, 0}, {t, 0, 0}});
                pair.push_back(k);
            }
            b->basepoints = {0};
            break;
        case SpaceKind::Circle:
            b->resolution = n;
            b->shape = {n, 0, 0};
            for (int k = 0; k < n; ++k) {
                const double th = 2 * kPi * k / n;
                pts.push_back({{std::cos(th), std::sin(th), 0, 0}, {th, 0, 0}});
                pair.push_back(angle_image(k, n, inv));
            }
            break;
        case SpaceKind::Disk:
            b->resolution = n;
            b->shape = {n, n, 0};
            pts.push_back({});
            pair.push_back(0);
            for (int i = 1; i <= n; ++i)
                for (int k = 0; k < n; ++k) {
                    const double r = static_cast<double>(i) / n;
                    const double th = 2 * kPi * k / n;
                    pts.push_back({{r * std::cos(th), r * std::sin(th), 0, 0}, {r, th, 0}});
                    pair.push_back(b->disk_index(i, angle_image(k, n, inv)));
                }
            break;
        case SpaceKind::Sphere2:
            b->resolution = n;
            b->shape = {n, n, 0};
            pts.push_back({{0, 0, 1, 0}, {0, 0, 0}});
            pair.push_back(0);
            for (int j = 1; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const double th = kPi * j / n;
                    const double ph = 2 * kPi * k / n;
                    pts.push_back({{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th), 0},
                                   {th, ph, 0}});
                    pair.push_back(b->sphere2_index(j, angle_image(k, n, inv)));
                }
            pts.push_back({{0, 0, -1, 0}, {kPi, 0, 0}});
            pair.push_back(static_cast<int>(pts.size()) - 1);
            break;
        case SpaceKind::Sphere3: {
            b->resolution = n;
            const int nc = n / 2;
            b->shape = {nc, nc, n};
            pts.push_back({{1, 0, 0, 0}, {0, 0, 0}});
            for (int i = 0; i < nc; ++i)
                for (int j = 0; j < nc; ++j)
                    for (int k = 0; k < n; ++k) {
                        const double chi = kPi * (i + 0.5) / nc;
                        const double th = kPi * (j + 0.5) / nc;
                        const double ph = 2 * kPi * (k + 0.5) / n;
                        const double sc = std::sin(chi), st = std::sin(th);
                        pts.push_back({{std::cos(chi), sc * std::cos(th), sc * st * std::cos(ph), sc * st * std::sin(ph)},
                                       {chi, th, ph}});
                    }
            pair.resize(pts.size());
            for (size_t p = 0; p < pair.size(); ++p) pair[p] = static_cast<int>(p);
            b->basepoints = {0};
            break;
        }
        case SpaceKind::Torus2:
            b->resolution = n;
            b->shape = {n, n, 0};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double t1 = 2 * kPi * i / n, t2 = 2 * kPi * j / n;
                    pts.push_back({{std::cos(t1), std::sin(t1), std::cos(t2), std::sin(t2)}, {t1, t2, 0}});
                    pair.push_back(b->torus_index(i, j));
                }
            break;
    }
    return b;
}

BasePtr with_basepoints(const BasePtr& base, std::vector<int> basepoints) {
    std::sort(basepoints.begin(), basepoints.end());
    basepoints.erase(std::unique(basepoints.begin(), basepoints.end()), basepoints.end());
    for (int p : basepoints) {
        if (p < 0 || p >= base->size()) throw DomainError("basepoint index out of range");
        if (!std::binary_search(basepoints.begin(), basepoints.end(), base->pairing[static_cast<size_t>(p)]))
            throw DomainError("basepoint set is not stable under the involution");
    }
    auto b = std::make_shared<BaseSpace>(*base);
    b->basepoints = std::move(basepoints);
    return b;
}

BasePtr with_fibre(const BasePtr& base, Fibre fibre) {
    (void)involution_structure(fibre.kind, fibre.dim);
    auto b = std::make_shared<BaseSpace>(*base);
    b->fibre = fibre;
    return b;
}

FnElement make_element(const BasePtr& base, int dim, const std::function<Matrix(const GridPoint&)>& f) {
    if (dim < 1 || dim % base->fibre.dim != 0) throw DimensionError("element size incompatible with fibre");
    FnElement u{base, dim, {}};
    u.values.reserve(base->points.size());
    for (const auto& p : base->points) {
        Matrix m = f(p);
        if (m.rows() != dim || m.cols() != dim) throw DimensionError("constructor returned the wrong size");
        u.values.push_back(std::move(m));
    }
    return u;
}

FnElement constant_element(const BasePtr& base, const Matrix& outer) {
    const Matrix m = kron(outer, Matrix::Identity(base->fibre.dim, base->fibre.dim));
    return FnElement{base, static_cast<int>(m.rows()), std::vector<Matrix>(base->points.size(), m)};
}

FnElement rebase(const FnElement& u, const BasePtr& base) {
    if (!u.base->same_grid(*base)) throw DimensionError("rebase onto a different grid");
    FnElement v = u;
    v.base = base;
    return v;
}

FnElement pointwise(const FnElement& u, const std::function<Matrix(const Matrix&)>& f) {
    FnElement v{u.base, 0, {}};
    v.values.reserve(u.values.size());
    for (const auto& m : u.values) v.values.push_back(f(m));
    v.dim = v.values.empty() ? u.dim : static_cast<int>(v.values.front().rows());
    return v;
}

FnElement adjoint(const FnElement& u) {
    return pointwise(u, [](const Matrix& m) -> Matrix { return m.adjoint(); });
}

FnElement multiply(const FnElement& u, const FnElement& v) {
    require_same_base(u, v);
    FnElement w{u.base, u.dim, {}};
    w.values.reserve(u.values.size());
    for (size_t p = 0; p < u.values.size(); ++p) w.values.push_back(u.values[p] * v.values[p]);
    return w;
}

FnElement linear_combination(double a, const FnElement& u, double b, const FnElement& v) {
    require_same_base(u, v);
    FnElement w{u.base, u.dim, {}};
    w.values.reserve(u.values.size());
    for (size_t p = 0; p < u.values.size(); ++p) w.values.push_back(a * u.values[p] + b * v.values[p]);
    return w;
}

FnElement scaled(const FnElement& u, cplx s) {
    return pointwise(u, [s](const Matrix& m) -> Matrix { return s * m; });
}

FnElement direct_sum(const FnElement& u, const FnElement& v) {
    if (!u.base->same_grid(*v.base)) throw DimensionError("direct sum over different bases");
    FnElement w{u.base, u.dim + v.dim, {}};
    w.values.reserve(u.values.size());
    for (size_t p = 0; p < u.values.size(); ++p) w.values.push_back(block_diag(u.values[p], v.values[p]));
    return w;
}

FnElement conjugate_outer(const FnElement& u, const Matrix& x) {
    const int f = u.base->fibre.dim;
    if (x.rows() * f != u.dim) throw DimensionError("conjugator size mismatch");
    const Matrix y = f == 1 ? x : kron(x, Matrix::Identity(f, f));
    return pointwise(u, [&y](const Matrix& m) -> Matrix { return y * m * y.adjoint(); });
}

double max_norm_residual(const FnElement& u, const FnElement& v) {
    require_same_base(u, v);
    double r = 0;
    for (size_t p = 0; p < u.values.size(); ++p) r = std::max(r, residual(u.values[p], v.values[p]));
    return r;
}

FnElement apply_full_involution(const FnElement& u, const SignedPerm& outer) {
    const auto& fb = u.base->fibre;
    if (outer.dim() * fb.dim != u.dim) throw DimensionError("involution size mismatch");
    const SignedPerm j = fb.dim == 1 ? outer : kron(outer, involution_structure(fb.kind, fb.dim));
    FnElement w{u.base, u.dim, {}};
    w.values.reserve(u.values.size());
    for (size_t p = 0; p < u.values.size(); ++p)
        w.values.push_back(involute(u.values[static_cast<size_t>(u.base->pairing[p])], j));
    return w;
}

FnElement apply_full_involution(const FnElement& u, InvolutionKind outer) {
    return apply_full_involution(u, involution_structure(outer, u.outer_dim()));
}

Matrix compress_fibre(const Matrix& m, const Fibre& fibre, int component) {
    const int f = fibre.dim;
    const int n = static_cast<int>(m.rows()) / f;
    Matrix out(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out(a, b) = m(a * f + component, b * f + component);
    return out;
}

std::optional<LambdaValue> lambda_eval(const UnitizedElement& u) {
    const auto& bps = u.base->basepoints;
    if (bps.empty()) return std::nullopt;
    const Matrix& v0 = u.at(bps.front());
    LambdaValue out{compress_fibre(v0, u.base->fibre), 0.0, 0.0};
    const int f = u.base->fibre.dim;
    out.scalar_residual = residual(v0, f == 1 ? out.outer : kron(out.outer, Matrix::Identity(f, f)));
    for (int p : bps) out.spread_residual = std::max(out.spread_residual, residual(u.at(p), v0));
    return out;
}

std::vector<std::string> ses_names() {
    return {"disk-id", "disk-zeta", "circle-sigma", "circle-zeta", "circle-id", "toeplitz"};
}

SESDescriptor make_ses(const std::string& name, int resolution, Fibre fibre) {
    SESDescriptor s;
    s.name = name;
    if (name == "disk-id" || name == "disk-zeta") {
        const auto inv = name == "disk-id" ? PointInvolution::Identity : PointInvolution::Zeta;
        s.total = sample_space(SpaceKind::Disk, resolution, inv, fibre);
        s.quotient = sample_space(SpaceKind::Circle, resolution, inv, fibre);
        s.closed_set = s.total->disk_boundary();
        for (int k = 0; k < resolution; ++k) s.quotient_index.push_back(k);
        s.strategies = {LiftStrategy::Radial, LiftStrategy::RadialSquare};
    } else if (name == "circle-sigma" || name == "circle-zeta") {
        if (resolution % 2 != 0) throw DomainError("split at -1 needs an even resolution");
        const bool sigma = name == "circle-sigma";
        s.total = sample_space(SpaceKind::Circle, resolution, sigma ? PointInvolution::Sigma : PointInvolution::Zeta,
                               fibre);
        s.quotient = sample_space(SpaceKind::TwoPoints, 2, sigma ? PointInvolution::Swap : PointInvolution::Identity,
                                  fibre);
        s.closed_set = {0, resolution / 2};
        s.quotient_index = {0, 1};
        s.strategies = {LiftStrategy::ArcLinear, LiftStrategy::ArcSmooth};
    } else if (name == "circle-id") {
        s.total = sample_space(SpaceKind::Circle, resolution, PointInvolution::Identity, fibre);
        s.quotient = sample_space(SpaceKind::Point, 1, PointInvolution::Identity, fibre);
        s.closed_set = {0};
        s.quotient_index = {0};
        s.strategies = {LiftStrategy::Constant, LiftStrategy::ArcSmooth};
    } else if (name == "toeplitz") {
        throw DomainError("the toeplitz sequence is not a function-algebra sequence; use the exact shift model");
    } else {
        throw DomainError("unknown short exact sequence: " + name);
    }
    s.ideal = with_basepoints(s.total, s.closed_set);
    return s;
}

FnElement restrict(const FnElement& u, const SESDescriptor& ses) {
    if (!u.base->same_grid(*ses.total)) throw DimensionError("element does not live on the sequence's total space");
    FnElement b{ses.quotient, u.dim, std::vector<Matrix>(ses.quotient->points.size())};
    for (size_t j = 0; j < ses.closed_set.size(); ++j)
        b.values[static_cast<size_t>(ses.quotient_index[j])] = u.at(ses.closed_set[j]);
    return b;
}

FnElement extend_contraction(const FnElement& b, const SESDescriptor& ses, LiftStrategy strategy) {
    if (!b.base->same_grid(*ses.quotient)) throw DimensionError("element does not live on the sequence's quotient");
    if (std::find(ses.strategies.begin(), ses.strategies.end(), strategy) == ses.strategies.end())
        throw DomainError("lift strategy " + to_string(strategy) + " unsupported for " + ses.name);
    for (const auto& m : b.values)
        if (operator_norm(m) > 1 + kResidualTol) throw DomainError("quotient element is not a contraction");

    const auto& T = *ses.total;
    FnElement a{ses.total, b.dim, std::vector<Matrix>(T.points.size())};
    if (T.kind == SpaceKind::Disk) {
        const int R = T.shape[0], L = T.shape[1];
        a.values[0] = Matrix::Zero(b.dim, b.dim);
        for (int i = 1; i <= R; ++i) {
            const double r = static_cast<double>(i) / R;
            const double c = strategy == LiftStrategy::Radial ? r : r * r;
            for (int k = 0; k < L; ++k) a.values[static_cast<size_t>(T.disk_index(i, k))] = c * b.at(k);
        }
    } else if (ses.closed_set.size() == 2) {
        const int n = T.shape[0];
        for (int k = 0; k < n; ++k) {
            const int m = k <= n / 2 ? k : n - k;
            double s = 2.0 * m / n;
            if (strategy == LiftStrategy::ArcSmooth) s = m == 0 ? 0.0 : (2 * m == n ? 1.0 : (1 - std::cos(kPi * s)) / 2);
            a.values[static_cast<size_t>(k)] = (1 - s) * b.at(0) + s * b.at(1);
        }
    } else {
        for (int k = 0; k < T.size(); ++k) {
            const double c = strategy == LiftStrategy::Constant || k == 0
                                 ? 1.0
                                 : (1 + std::cos(T.points[static_cast<size_t>(k)].param[0])) / 2;
            a.values[static_cast<size_t>(k)] = c * b.at(0);
        }
    }
    return a;
}

}  // namespace kou
