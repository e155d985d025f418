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

#include "kou/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace kou {
namespace {

Matrix expand(const Matrix& outer, int fibre_dim) {
    return fibre_dim == 1 ? outer : kron(outer, Matrix::Identity(fibre_dim, fibre_dim));
}

// sqrt(1 - x) for 0 <= x <= 1. Eigenvalues of 1 - x below kClipTol are rounding
// residue of unit singular values and are set to zero; B(a)^2 = 1 only sees
// the square of this root, so the error stays O(kClipTol).
Matrix defect_sqrt(const Matrix& x, double tol) {
    const Matrix d = Matrix::Identity(x.rows(), x.cols()) - x;
    const auto e = herm_eig(d, tol);
    if (e.values.size() > 0 && e.values.minCoeff() < -tol) throw DomainError("B needs a contraction");
    return herm_apply(e, [](double l) { return l <= kClipTol ? 0.0 : std::sqrt(l); });
}

}  // namespace

FnElement symmetrize(const FnElement& a, int cls) {
    const auto& s = class_spec(cls);
    if (is_odd_class(cls)) {
        if (s.relation == Relation::None) return a;
        const FnElement at = class_involution(a, cls);
        return linear_combination(0.5, a, 0.5, s.target == RelationTarget::Adjoint ? adjoint(at) : at);
    }
    const FnElement h = linear_combination(0.5, a, 0.5, adjoint(a));
    if (s.relation == Relation::None) return h;
    return linear_combination(0.5, h, 0.5 * s.sign, class_involution(h, cls));
}

FnElement retract_contraction(const FnElement& y, RetractMode mode, double tol) {
    if (mode == RetractMode::Odd)
        return pointwise(y, [](const Matrix& m) -> Matrix {
            const auto e = herm_eig(m.adjoint() * m);
            return m * herm_apply(e, [](double l) { return l > 1 ? 1 / std::sqrt(l) : 1.0; });
        });
    return pointwise(y, [tol](const Matrix& m) -> Matrix {
        if (hermiticity_residual(m) > tol) throw DomainError("even retraction of a non-Hermitian element");
        const auto e = herm_eig(m, tol);
        return herm_apply(e, [](double l) { return std::clamp(l, -1.0, 1.0); });
    });
}

Matrix B_matrix(const Matrix& a, double tol) {
    const Eigen::Index n = a.rows();
    const Matrix one = Matrix::Identity(n, n);
    const Matrix aa = a * a.adjoint(), a_a = a.adjoint() * a;
    Matrix b(2 * n, 2 * n);
    b << 2 * aa - one, 2 * a * defect_sqrt(a_a, tol), 2 * a.adjoint() * defect_sqrt(aa, tol), one - 2 * a_a;
    return b;
}

Matrix E_matrix(const Matrix& a, double tol) {
    const auto e = herm_eig(a, tol);
    if (e.values.size() > 0 && (e.values.minCoeff() < -1 - tol || e.values.maxCoeff() > 1 + tol))
        throw DomainError("E needs spectrum in [-1, 1]");
    return neg_exp_pi_i(a, tol);
}

FnElement B_matrix(const FnElement& a, double tol) {
    FnElement b = pointwise(a, [tol](const Matrix& m) { return B_matrix(m, tol); });
    b.dim = 2 * a.dim;
    return b;
}

FnElement E_matrix(const FnElement& a, double tol) {
    return pointwise(a, [tol](const Matrix& m) { return E_matrix(m, tol); });
}

Matrix Y_conjugator(int cls, int n) {
    if (n < 1) throw DimensionError("Y needs n >= 1");
    switch (cls) {
        case 1:
        case KU1: return conjugator_V(n);
        case -1: return conjugator_V(n) * conjugator_W(n);
        case 5: return conjugator_X(n);
        case 3: return conjugator_V(2 * n) * conjugator_Q(n) * conjugator_W(2 * n);
        default: throw DomainError("Y is only defined for odd classes");
    }
}

BoundaryResult boundary_map(const KOClassRep& u, const SESDescriptor& ses, LiftStrategy strategy,
                            const std::optional<FnElement>& explicit_lift, double tol) {
    if (!u.element.base->same_grid(*ses.quotient))
        throw DimensionError("element does not live on the quotient of " + ses.name);
    const auto d = check_membership(u.element, u.cls, tol);
    if (!d.passed) throw MembershipError("boundary input fails class " + class_name(u.cls) + ": " + d.failure, d);

    FnElement a = explicit_lift ? *explicit_lift : extend_contraction(u.element, ses, strategy);
    if (!a.base->same_grid(*ses.total) || a.dim != u.element.dim) throw DimensionError("lift has the wrong shape");
    if (explicit_lift && max_norm_residual(restrict(a, ses), u.element) > tol)
        throw DomainError("explicit lift does not restrict to the input");

    const bool odd = is_odd_class(u.cls);
    a = retract_contraction(symmetrize(a, u.cls), odd ? RetractMode::Odd : RetractMode::Even, tol);

    FnElement out;
    if (odd) {
        const int outer = u.element.outer_dim();
        const int n = (u.cls == 3 || u.cls == 5) ? outer / 2 : outer;
        const Matrix y = expand(Y_conjugator(u.cls, n), ses.total->fibre.dim);
        out = pointwise(B_matrix(a, tol), [&y](const Matrix& m) -> Matrix { return y * m * y.adjoint(); });
    } else {
        out = E_matrix(a, tol);
    }
    out = rebase(out, ses.ideal);

    const int target = boundary_target(u.cls);
    const Matrix neut = expand(neutral(target, out.outer_dim() / class_spec(target).size_multiple),
                               ses.total->fibre.dim);
    double closed = 0;
    for (int p : ses.closed_set) closed = std::max(closed, residual(out.at(p), neut));

    // The closed set carries the exact neutral element up to rounding; pin it so
    // the result lies in the unitization with the strong scalar condition.
    for (int p : ses.closed_set) out.values[static_cast<size_t>(p)] = neut;
    if (closed > tol) throw DomainError("boundary result does not reduce to the neutral element on the closed set");
    return BoundaryResult{make_rep(out, target, tol), a, closed};
}

}  // namespace kou
