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

#include "kou/symclass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "kou/invariants.hpp"

namespace kou {
namespace {

const cplx kI(0, 1);

Matrix m2(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Matrix diag_real(std::initializer_list<double> d) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
    Eigen::Index k = 0;
    for (double x : d) v(k++) = x;
    return v.asDiagonal();
}

const std::vector<ClassSpec>& spec_table() {
    using R = Relation;
    using T = RelationTarget;
    static const std::vector<ClassSpec> table = {
        {-1, 1, false, R::Tau, T::Self, 1, Matrix::Identity(1, 1)},
        {0, 2, true, R::Tau, T::Adjoint, 1, diag_real({1, -1})},
        {1, 1, false, R::Tau, T::Adjoint, 1, Matrix::Identity(1, 1)},
        {2, 2, true, R::Tau, T::Self, -1, m2(0, kI, -kI, 0)},
        {3, 2, false, R::Sharp, T::Self, 1, Matrix::Identity(2, 2)},
        {4, 4, true, R::Sharp, T::Adjoint, 1, diag_real({1, 1, -1, -1})},
        {5, 2, false, R::Sharp, T::Adjoint, 1, Matrix::Identity(2, 2)},
        {6, 2, true, R::Sharp, T::Self, -1, m2(0, kI, -kI, 0)},
        {KU0, 2, true, R::None, T::Self, 1, diag_real({1, -1})},
        {KU1, 1, false, R::None, T::Self, 1, Matrix::Identity(1, 1)},
    };
    return table;
}

Matrix expand(const Matrix& outer, int fibre_dim) {
    return fibre_dim == 1 ? outer : kron(outer, Matrix::Identity(fibre_dim, fibre_dim));
}

// Trivial class of the scalar part, checked through the complete point invariant.
bool lambda_class_trivial(const Matrix& lam, int cls) {
    try {
        switch (cls) {
            case 0:
            case KU0: return half_trace(lam) == 0;
            case 1: return det_sign(lam) == 1;
            case 2: return pf_sign(lam) == 1;
            case 4: return quarter_trace(lam) == 0;
            default: return true;
        }
    } catch (const DomainError&) {
        return false;
    }
}

// f applied to a unitary matrix, with the branch cut of arg placed in the
// widest gap of its spectrum.
Matrix unitary_function(const Matrix& u, const std::function<cplx(double)>& f_of_angle) {
    Eigen::ComplexSchur<Matrix> schur(u);
    const Matrix& t = schur.matrixT();
    const Matrix& z = schur.matrixU();
    const Eigen::Index n = t.rows();
    std::vector<double> args(static_cast<size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) args[static_cast<size_t>(k)] = std::arg(t(k, k));
    std::vector<double> sorted = args;
    std::sort(sorted.begin(), sorted.end());
    double cut = std::numbers::pi, gap = -1;
    for (size_t k = 0; k < sorted.size(); ++k) {
        const double a = sorted[k];
        const double b = k + 1 < sorted.size() ? sorted[k + 1] : sorted.front() + 2 * std::numbers::pi;
        if (b - a > gap) {
            gap = b - a;
            cut = (a + b) / 2;
        }
    }
    Eigen::VectorXcd d(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        double a = args[static_cast<size_t>(k)];
        while (a > cut) a -= 2 * std::numbers::pi;
        while (a <= cut - 2 * std::numbers::pi) a += 2 * std::numbers::pi;
        d(k) = f_of_angle(a);
    }
    return z * d.asDiagonal() * z.adjoint();
}

KOClassRep transformed(const KOClassRep& u, const Matrix& left, const Matrix& right) {
    const int f = u.element.base->fibre.dim;
    const Matrix l = expand(left, f), r = expand(right, f);
    FnElement w = pointwise(u.element, [&](const Matrix& m) -> Matrix { return l * m * r; });
    return make_rep(w, u.cls);
}

// Columns placed so that B * neutral * B^* reproduces the eigen-split of lam.
Matrix split_frame(const Matrix& plus, const Matrix& minus) {
    const Eigen::Index m = plus.cols();
    Matrix b(plus.rows(), 2 * m);
    for (Eigen::Index k = 0; k < m; ++k) {
        b.col(2 * k) = plus.col(k);
        b.col(2 * k + 1) = minus.col(k);
    }
    return b;
}

std::pair<Matrix, Matrix> eigen_split(const Matrix& lam) {
    const auto e = herm_eig(lam);
    std::vector<Eigen::Index> pos, neg;
    for (Eigen::Index k = 0; k < e.values.size(); ++k) (e.values(k) > 0 ? pos : neg).push_back(k);
    if (pos.size() != neg.size()) throw DomainError("scalar part has unbalanced spectrum");
    Matrix p(lam.rows(), static_cast<Eigen::Index>(pos.size())), q(lam.rows(), static_cast<Eigen::Index>(neg.size()));
    for (size_t k = 0; k < pos.size(); ++k) {
        p.col(static_cast<Eigen::Index>(k)) = e.frame.col(pos[k]);
        q.col(static_cast<Eigen::Index>(k)) = e.frame.col(neg[k]);
    }
    return {p, q};
}

// Orthonormal basis of span(e) closed under v -> -J conj(v), listed in pairs.
Matrix kramers_basis(const Matrix& e, const Matrix& j) {
    const Eigen::Index n = e.cols();
    Matrix basis(e.rows(), 0);
    while (basis.cols() < n) {
        Eigen::VectorXcd best;
        double best_norm = -1;
        for (Eigen::Index c = 0; c < n; ++c) {
            Eigen::VectorXcd w = e.col(c);
            if (basis.cols() > 0) w -= basis * (basis.adjoint() * w);
            if (w.norm() > best_norm) {
                best_norm = w.norm();
                best = w;
            }
        }
        if (best_norm < 1e-6) throw DomainError("eigenspace is not quaternionic");
        best /= best_norm;
        const Eigen::VectorXcd partner = -(j * best.conjugate());
        basis.conservativeResize(Eigen::NoChange, basis.cols() + 2);
        basis.col(basis.cols() - 2) = best;
        basis.col(basis.cols() - 1) = partner;
    }
    return basis;
}

}  // namespace

std::string class_name(int cls) {
    if (cls == KU0) return "KU0";
    if (cls == KU1) return "KU1";
    return std::to_string(cls);
}

int class_from_string(const std::string& name) {
    if (name == "KU0") return KU0;
    if (name == "KU1") return KU1;
    try {
        size_t pos = 0;
        const int v = std::stoi(name, &pos);
        if (pos == name.size() && v >= -1 && v <= 6) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("unknown class: " + name);
}

const std::vector<int>& all_classes() {
    static const std::vector<int> all = {-1, 0, 1, 2, 3, 4, 5, 6, KU0, KU1};
    return all;
}

bool is_complex_class(int cls) { return cls == KU0 || cls == KU1; }
bool is_odd_class(int cls) { return cls == KU1 || (cls != KU0 && (cls + 2) % 2 == 1); }

int boundary_target(int cls) {
    if (cls == KU0) return KU1;
    if (cls == KU1) return KU0;
    return cls == -1 ? 6 : cls - 1;
}

const ClassSpec& class_spec(int cls) {
    for (const auto& s : spec_table())
        if (s.index == cls) return s;
    throw DomainError("invalid class " + std::to_string(cls));
}

Matrix neutral(int cls, int copies) {
    if (copies < 1) throw DimensionError("neutral needs at least one copy");
    return kron(Matrix::Identity(copies, copies), class_spec(cls).neutral_block);
}

SignedPerm class_structure(int cls, int outer_dim) {
    const auto& s = class_spec(cls);
    if (s.relation == Relation::Sharp) return involution_structure(InvolutionKind::SharpTensorTranspose, outer_dim);
    return identity_perm(outer_dim);
}

FnElement class_involution(const FnElement& u, int cls) {
    return apply_full_involution(u, class_structure(cls, u.outer_dim()));
}

MembershipDiagnostics check_membership(const UnitizedElement& u, int cls, double tol) {
    const auto& s = class_spec(cls);
    if (u.outer_dim() % s.size_multiple != 0)
        throw DimensionError("size " + std::to_string(u.outer_dim()) + " is not a multiple of " +
                             std::to_string(s.size_multiple) + " for class " + class_name(cls));
    MembershipDiagnostics d;
    const Matrix one = Matrix::Identity(u.dim, u.dim);
    for (const auto& m : u.values) {
        d.unitarity = std::max(d.unitarity, residual(m.adjoint() * m, one));
        if (s.self_adjoint) d.self_adjointness = std::max(d.self_adjointness, hermiticity_residual(m));
    }
    if (s.relation != Relation::None) {
        const FnElement ut = class_involution(u, cls);
        for (size_t p = 0; p < u.values.size(); ++p) {
            const Matrix target =
                s.target == RelationTarget::Adjoint ? Matrix(u.values[p].adjoint()) : Matrix(s.sign * u.values[p]);
            d.symmetry = std::max(d.symmetry, residual(ut.values[p], target));
        }
    }
    if (auto lam = lambda_eval(u)) {
        d.lambda_scalar = lam->scalar_residual;
        d.lambda_spread = lam->spread_residual;
        d.lambda_trivial = lambda_class_trivial(lam->outer, cls);
    }
    if (d.unitarity > tol)
        d.failure = "unitarity";
    else if (d.self_adjointness > tol)
        d.failure = "self-adjointness";
    else if (d.symmetry > tol)
        d.failure = "symmetry";
    else if (d.lambda_scalar > tol)
        d.failure = "basepoint value is not scalar";
    else if (d.lambda_spread > tol)
        d.failure = "basepoints disagree";
    else if (!d.lambda_trivial)
        d.failure = "scalar part is not in the trivial class";
    d.passed = d.failure.empty();
    return d;
}

KOClassRep make_rep(const UnitizedElement& u, int cls, double tol) {
    auto d = check_membership(u, cls, tol);
    if (!d.passed) throw MembershipError("class " + class_name(cls) + " membership failed: " + d.failure, d);
    return KOClassRep{cls, u, d};
}

KOClassRep add(const KOClassRep& u, const KOClassRep& v) {
    if (u.cls != v.cls) throw DomainError("adding elements of different classes");
    if (*u.element.base != *v.element.base) throw DomainError("adding elements over different bases");
    return make_rep(direct_sum(u.element, v.element), u.cls);
}

KOClassRep inverse(const KOClassRep& u) {
    if (is_odd_class(u.cls)) return make_rep(adjoint(u.element), u.cls);
    if ((u.cls == 2 || u.cls == 6) && (u.element.outer_dim() / 2) % 2 != 0)
        throw DimensionError("inverse in class " + class_name(u.cls) + " needs an even number of copies");
    return make_rep(scaled(u.element, -1.0), u.cls);
}

KOClassRep stabilize(const KOClassRep& u) {
    return make_rep(direct_sum(u.element, constant_element(u.element.base, class_spec(u.cls).neutral_block)), u.cls);
}

KOClassRep normalize_lambda(const KOClassRep& u) {
    const auto lam_opt = lambda_eval(u.element);
    if (!lam_opt) return u;
    if (!lambda_class_trivial(lam_opt->outer, u.cls)) throw DomainError("scalar part is not in the trivial class");
    const Matrix lam = lam_opt->outer;
    const int n = static_cast<int>(lam.rows());
    const int copies = n / class_spec(u.cls).size_multiple;
    const Matrix one = Matrix::Identity(n, n);

    switch (u.cls) {
        case 1:
        case 5:
        case KU1: return transformed(u, one, lam.adjoint());
        case -1:
        case 3: {
            const Matrix v = unitary_function(lam, [](double a) { return std::exp(kI * (a / 2)); });
            return transformed(u, v.adjoint(), v.adjoint());
        }
        case 0: {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lam.real());
            Eigen::MatrixXd b(n, n);
            for (int k = 0; k < copies; ++k) {
                b.col(2 * k) = es.eigenvectors().col(copies + k);
                b.col(2 * k + 1) = es.eigenvectors().col(k);
            }
            if (b.determinant() < 0) b.col(0) = -b.col(0);
            const Matrix x = b.transpose().cast<cplx>();
            return transformed(u, x, x.adjoint());
        }
        case KU0: {
            const auto [p, q] = eigen_split(lam);
            const Matrix x = split_frame(p, q).adjoint();
            return transformed(u, x, x.adjoint());
        }
        case 2: {
            const Eigen::MatrixXd k = (-kI * lam).real();
            Eigen::MatrixXd b(n, 0);
            while (b.cols() < n) {
                Eigen::VectorXd best;
                double best_norm = -1;
                for (int c = 0; c < n; ++c) {
                    Eigen::VectorXd w = Eigen::VectorXd::Unit(n, c);
                    if (b.cols() > 0) w -= b * (b.transpose() * w);
                    if (w.norm() > best_norm) {
                        best_norm = w.norm();
                        best = w;
                    }
                }
                best /= best_norm;
                b.conservativeResize(Eigen::NoChange, b.cols() + 2);
                b.col(b.cols() - 2) = k * best;
                b.col(b.cols() - 1) = best;
            }
            const Matrix x = b.transpose().cast<cplx>();
            return transformed(u, x, x.adjoint());
        }
        case 4: {
            const Matrix j = class_structure(4, n).dense();
            const auto [p, q] = eigen_split(lam);
            const Matrix kp = kramers_basis(p, j), kq = kramers_basis(q, j);
            Matrix b(n, n);
            for (int k = 0; k < copies; ++k) {
                b.col(4 * k) = kp.col(2 * k);
                b.col(4 * k + 1) = kp.col(2 * k + 1);
                b.col(4 * k + 2) = kq.col(2 * k);
                b.col(4 * k + 3) = kq.col(2 * k + 1);
            }
            return transformed(u, b.adjoint(), b);
        }
        case 6: {
            const Matrix j = class_structure(6, n).dense();
            const auto [p, q] = eigen_split(lam);
            Matrix b(n, n);
            for (Eigen::Index k = 0; k < p.cols(); ++k) {
                const Eigen::VectorXcd v = p.col(k);
                const Eigen::VectorXcd b0 = (v - kI * (j * v.conjugate())) / std::sqrt(2.0);
                b.col(2 * k) = b0;
                b.col(2 * k + 1) = -(j * b0.conjugate());
            }
            return transformed(u, b.adjoint(), b);
        }
        default: throw DomainError("invalid class");
    }
}

FnElement to_projection(const FnElement& u, double tol) {
    const Matrix one = Matrix::Identity(u.dim, u.dim);
    return pointwise(u, [&](const Matrix& m) -> Matrix {
        if (hermiticity_residual(m) > tol) throw DomainError("projection of a non-self-adjoint element");
        return (m + one) / 2.0;
    });
}

KOClassRep forget_to_KU(const KOClassRep& rep) {
    return make_rep(rep.element, is_odd_class(rep.cls) ? KU1 : KU0);
}

KOClassRep gamma_double(const KOClassRep& x, int target_cls) {
    if (!is_complex_class(x.cls)) throw DomainError("gamma_double takes a complex class");
    if (is_complex_class(target_cls) || is_odd_class(target_cls) != is_odd_class(x.cls))
        throw DomainError("target class parity does not match");
    if (x.element.base->kind != SpaceKind::Point) throw DomainError("gamma_double is implemented over a point");
    const auto& base = *x.element.base;
    const BasePtr doubled = sample_space(SpaceKind::TwoPoints, 2, PointInvolution::Swap, base.fibre);
    const Matrix& v = x.element.at(0);
    const SignedPerm js = class_structure(target_cls, x.element.outer_dim());
    const SignedPerm j = base.fibre.dim == 1 ? js : kron(js, involution_structure(base.fibre.kind, base.fibre.dim));
    Matrix partner;
    switch (target_cls) {
        case 0:
        case 1:
        case 4:
        case 5: partner = involute(v.adjoint(), j); break;
        case -1:
        case 3: partner = involute(v, j); break;
        default: partner = -involute(v, j); break;
    }
    FnElement w{doubled, x.element.dim, {v, partner}};
    return make_rep(w, target_cls);
}

Matrix build_U(const Matrix& h, const Matrix& x, const Matrix& k) {
    const Eigen::Index n = h.rows();
    if (x.rows() != n || k.rows() != n) throw DimensionError("qC generators must have equal size");
    const Matrix one = Matrix::Identity(n, n);
    Matrix u(2 * n, 2 * n);
    u << one - 2 * h, 2 * x.adjoint(), 2 * x, 2 * k - one;
    return u;
}

double qc_relation_residual(const Matrix& h, const Matrix& x, const Matrix& k) {
    return std::max({residual(h.adjoint() * h + x.adjoint() * x, h), residual(k.adjoint() * k + x * x.adjoint(), k),
                     residual(k * x, x * h), residual(h * k, Matrix::Zero(h.rows(), h.cols()))});
}

bool check_qc_relations(const Matrix& h, const Matrix& x, const Matrix& k, double tol) {
    const Matrix u = build_U(h, x, k);
    return qc_relation_residual(h, x, k) <= tol && hermiticity_residual(u) <= tol &&
           unitarity_residual(u) <= tol;
}

}  // namespace kou
