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

#include "kou/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "kou/boundary.hpp"

namespace kou::toeplitz {
namespace {

int span(const ShiftAlgElement& x) {
    int s = 0;
    for (const auto& [k, c] : x.symbol) s = std::max(s, std::abs(k));
    return s;
}

void require_same_d(const ShiftAlgElement& x, const ShiftAlgElement& y) {
    if (x.d != y.d) throw DimensionError("shift-algebra elements of different coefficient size");
}

ShiftAlgElement normalized(ShiftAlgElement x) {
    for (auto it = x.symbol.begin(); it != x.symbol.end();)
        it = it->second.is_zero() ? x.symbol.erase(it) : std::next(it);
    const int d = x.d;
    while (x.window > 0) {
        const int lo = (x.window - 1) * d, hi = x.window * d;
        bool zero = true;
        for (int a = lo; a < hi && zero; ++a)
            for (int b = 0; b < hi && zero; ++b)
                zero = x.correction(a, b).is_zero() && x.correction(b, a).is_zero();
        if (!zero) break;
        --x.window;
    }
    if (x.correction.rows() != x.window * d) {
        ExactMatrix c(x.window * d, x.window * d);
        for (int a = 0; a < c.rows(); ++a)
            for (int b = 0; b < c.cols(); ++b) c(a, b) = x.correction(a, b);
        x.correction = std::move(c);
    }
    return x;
}

ExactMatrix padded(const ExactMatrix& m, int n) {
    ExactMatrix out(n, n);
    for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b) out(a, b) = m(a, b);
    return out;
}

ShiftAlgElement from_symbol(int d, std::map<int, ExactMatrix> symbol) {
    ShiftAlgElement x;
    x.d = d;
    x.symbol = std::move(symbol);
    return normalized(x);
}


bool is_idempotent(const ShiftAlgElement& p) { return equal(mul(p, p), p); }

long rational_to_long(const Rational& r, const char* what) {
    if (r.denominator() != 1) throw DomainError(std::string(what) + " is not an integer");
    return r.numerator();
}

}  // namespace

cplx GaussRational::to_complex() const {
    return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
}

GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (equals(n, 0)) throw DomainError("division by zero in exact arithmetic");
    const GaussRational p = a * b.conj();
    return {p.re / n, p.im / n};
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_complex(const Matrix& m, double tol) {
    ExactMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int a = 0; a < out.rows(); ++a)
        for (int b = 0; b < out.cols(); ++b) {
            const cplx v = m(a, b);
            const double re = std::round(v.real()), im = std::round(v.imag());
            if (std::abs(v.real() - re) > tol || std::abs(v.imag() - im) > tol)
                throw DomainError("matrix entry is not a Gaussian integer");
            out(a, b) = GaussRational(Rational(static_cast<long long>(re)), Rational(static_cast<long long>(im)));
        }
    return out;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const GaussRational& g) { return g.is_zero(); });
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix out(cols_, rows_);
    for (int a = 0; a < rows_; ++a)
        for (int b = 0; b < cols_; ++b) out(b, a) = (*this)(a, b).conj();
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (int a = 0; a < rows_; ++a)
        for (int b = 0; b < cols_; ++b) out(b, a) = (*this)(a, b);
    return out;
}

Matrix ExactMatrix::to_complex() const {
    Matrix out(rows_, cols_);
    for (int a = 0; a < rows_; ++a)
        for (int b = 0; b < cols_; ++b) out(a, b) = (*this)(a, b).to_complex();
    return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("exact matrix size mismatch");
    ExactMatrix out = a;
    for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + GaussRational(-1) * b; }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("exact matrix size mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const GaussRational& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const GaussRational& y = b(k, j);
                if (!y.is_zero()) out(i, j) = out(i, j) + x * y;
            }
        }
    return out;
}

ExactMatrix operator*(const GaussRational& s, const ExactMatrix& a) {
    ExactMatrix out = a;
    for (auto& v : out.data_) v = s * v;
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

GaussRational determinant(ExactMatrix m) {
    const int n = m.rows();
    GaussRational det(1);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return GaussRational(0);
        if (p != k) {
            for (int c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
            det = -det;
        }
        det = det * m(k, k);
        for (int r = k + 1; r < n; ++r) {
            if (m(r, k).is_zero()) continue;
            const GaussRational f = m(r, k) / m(k, k);
            for (int c = k; c < n; ++c) m(r, c) = m(r, c) - f * m(k, c);
        }
    }
    return det;
}

GaussRational pfaffian(ExactMatrix m) {
    const int n = m.rows();
    if (n % 2 != 0) throw DimensionError("Pfaffian of an odd-size matrix");
    if (!(m.transpose() == GaussRational(-1) * m)) throw DomainError("Pfaffian of a non-skew matrix");
    GaussRational pf(1);
    auto swap_index = [&](int a, int b) {
        for (int c = 0; c < n; ++c) std::swap(m(a, c), m(b, c));
        for (int r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
    };
    auto add_multiple = [&](int target, int source, const GaussRational& f) {
        for (int c = 0; c < n; ++c) m(target, c) = m(target, c) - f * m(source, c);
        for (int r = 0; r < n; ++r) m(r, target) = m(r, target) - f * m(r, source);
    };
    for (int k = 0; k < n; k += 2) {
        int p = k + 1;
        while (p < n && m(k, p).is_zero()) ++p;
        if (p == n) return GaussRational(0);
        if (p != k + 1) {
            swap_index(k + 1, p);
            pf = -pf;
        }
        pf = pf * m(k, k + 1);
        for (int i = k + 2; i < n; ++i) {
            if (!m(k, i).is_zero()) add_multiple(i, k + 1, m(k, i) / m(k, k + 1));
            if (!m(k + 1, i).is_zero()) add_multiple(i, k, m(k + 1, i) / m(k + 1, k));
        }
    }
    return pf;
}

ExactMatrix involute(const ExactMatrix& m, const SignedPerm& j) {
    const int n = m.rows();
    if (j.dim() != n) throw DimensionError("involution size mismatch");
    ExactMatrix out(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const GaussRational& v = m(j.perm[static_cast<size_t>(b)], j.perm[static_cast<size_t>(a)]);
            out(a, b) = j.sign[static_cast<size_t>(a)] * j.sign[static_cast<size_t>(b)] == 1 ? v : -v;
        }
    return out;
}

ExactMatrix ShiftAlgElement::coefficient(int k) const {
    auto it = symbol.find(k);
    return it == symbol.end() ? ExactMatrix(d, d) : it->second;
}

ExactMatrix ShiftAlgElement::window_block(int n) const {
    ExactMatrix out(n * d, n * d);
    for (const auto& [k, c] : symbol)
        for (int j = 0; j < n; ++j) {
            const int i = j + k;
            if (i < 0 || i >= n) continue;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) out(i * d + a, j * d + b) = c(a, b);
        }
    const int w = std::min(n, window);
    for (int a = 0; a < w * d; ++a)
        for (int b = 0; b < w * d; ++b) out(a, b) = out(a, b) + correction(a, b);
    return out;
}

ShiftAlgElement scalar(const GaussRational& c, int d) { return constant(c * ExactMatrix::identity(d)); }
ShiftAlgElement identity(int d) { return scalar(GaussRational(1), d); }
ShiftAlgElement constant(const ExactMatrix& c) { return from_symbol(c.rows(), {{0, c}}); }

ShiftAlgElement shift() { return from_symbol(1, {{1, ExactMatrix::identity(1)}}); }

ShiftAlgElement rank_one_e() {
    ShiftAlgElement e;
    e.window = 1;
    e.correction = ExactMatrix::identity(1);
    return e;
}

ShiftAlgElement add(const ShiftAlgElement& x, const ShiftAlgElement& y) {
    require_same_d(x, y);
    ShiftAlgElement z = x;
    for (const auto& [k, c] : y.symbol) z.symbol[k] = z.coefficient(k) + c;
    z.window = std::max(x.window, y.window);
    z.correction = padded(x.correction, z.window * x.d) + padded(y.correction, z.window * x.d);
    return normalized(z);
}

ShiftAlgElement scale(const GaussRational& s, const ShiftAlgElement& x) {
    ShiftAlgElement z = x;
    for (auto& [k, c] : z.symbol) c = s * c;
    z.correction = s * z.correction;
    return normalized(z);
}

ShiftAlgElement sub(const ShiftAlgElement& x, const ShiftAlgElement& y) { return add(x, scale(GaussRational(-1), y)); }

ShiftAlgElement mul(const ShiftAlgElement& x, const ShiftAlgElement& y) {
    require_same_d(x, y);
    const int sx = span(x), sy = span(y);
    const int m = std::max(x.window, y.window) + sx + sy + 1;
    const int k = m + sx + sy;
    const ExactMatrix full = x.window_block(k) * y.window_block(k);

    std::map<int, ExactMatrix> fg;
    for (const auto& [k1, c1] : x.symbol)
        for (const auto& [k2, c2] : y.symbol) {
            auto it = fg.find(k1 + k2);
            if (it == fg.end())
                fg.emplace(k1 + k2, c1 * c2);
            else
                it->second = it->second + c1 * c2;
        }
    ShiftAlgElement z = from_symbol(x.d, fg);
    const ExactMatrix t = z.window_block(m);
    z.window = m;
    z.correction = ExactMatrix(m * x.d, m * x.d);
    for (int a = 0; a < m * x.d; ++a)
        for (int b = 0; b < m * x.d; ++b) z.correction(a, b) = full(a, b) - t(a, b);
    return normalized(z);
}

ShiftAlgElement adjoint(const ShiftAlgElement& x) {
    ShiftAlgElement z;
    z.d = x.d;
    for (const auto& [k, c] : x.symbol) z.symbol[-k] = c.adjoint();
    z.window = x.window;
    z.correction = x.correction.adjoint();
    return z;
}

ShiftAlgElement involute_tau(const ShiftAlgElement& x) { return involute_tau(x, identity_perm(x.d)); }

ShiftAlgElement involute_tau(const ShiftAlgElement& x, const SignedPerm& j) {
    if (j.dim() != x.d) throw DimensionError("structure size mismatch");
    ShiftAlgElement z;
    z.d = x.d;
    for (const auto& [k, c] : x.symbol) z.symbol[-k] = involute(c, j);
    z.window = x.window;
    z.correction = x.window == 0 ? x.correction : involute(x.correction, kron(identity_perm(x.window), j));
    return z;
}

ShiftAlgElement conjugate(const ExactMatrix& y, const ShiftAlgElement& x) {
    if (y.cols() != x.d) throw DimensionError("conjugator size mismatch");
    ShiftAlgElement z;
    z.d = y.rows();
    const ExactMatrix ya = y.adjoint();
    for (const auto& [k, c] : x.symbol) z.symbol[k] = y * c * ya;
    z.window = x.window;
    if (x.window > 0) {
        ExactMatrix big(x.window * z.d, x.window * x.d);
        for (int i = 0; i < x.window; ++i)
            for (int a = 0; a < z.d; ++a)
                for (int b = 0; b < x.d; ++b) big(i * z.d + a, i * x.d + b) = y(a, b);
        z.correction = big * x.correction * big.adjoint();
    } else {
        z.correction = ExactMatrix(0, 0);
    }
    return normalized(z);
}

bool equal(const ShiftAlgElement& x, const ShiftAlgElement& y) {
    if (x.d != y.d) return false;
    const ShiftAlgElement a = normalized(x), b = normalized(y);
    return a.window == b.window && a.correction == b.correction && a.symbol.size() == b.symbol.size() &&
           std::equal(a.symbol.begin(), a.symbol.end(), b.symbol.begin(),
                      [](const auto& p, const auto& q) { return p.first == q.first && p.second == q.second; });
}

ShiftAlgElement assemble(const std::vector<std::vector<ShiftAlgElement>>& blocks) {
    const int r = static_cast<int>(blocks.size());
    if (r == 0) throw DimensionError("empty block grid");
    const int e = blocks[0][0].d;
    int w = 0;
    std::set<int> powers;
    for (const auto& row : blocks) {
        if (static_cast<int>(row.size()) != r) throw DimensionError("block grid must be square");
        for (const auto& b : row) {
            if (b.d != e) throw DimensionError("blocks of different sizes");
            w = std::max(w, b.window);
            for (const auto& [k, c] : b.symbol) powers.insert(k);
        }
    }
    ShiftAlgElement z;
    z.d = r * e;
    for (int k : powers) {
        ExactMatrix c(z.d, z.d);
        for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q) {
                const ExactMatrix bc = blocks[static_cast<size_t>(p)][static_cast<size_t>(q)].coefficient(k);
                for (int a = 0; a < e; ++a)
                    for (int b = 0; b < e; ++b) c(p * e + a, q * e + b) = bc(a, b);
            }
        z.symbol[k] = c;
    }
    z.window = w;
    z.correction = ExactMatrix(w * z.d, w * z.d);
    for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) {
            const auto& b = blocks[static_cast<size_t>(p)][static_cast<size_t>(q)];
            for (int i = 0; i < b.window; ++i)
                for (int j = 0; j < b.window; ++j)
                    for (int a = 0; a < e; ++a)
                        for (int c = 0; c < e; ++c)
                            z.correction(i * z.d + p * e + a, j * z.d + q * e + c) = b.correction(i * e + a, j * e + c);
        }
    return normalized(z);
}

ShiftAlgElement direct_sum(const ShiftAlgElement& x, const ShiftAlgElement& y) {
    if (x.d == y.d) {
        ShiftAlgElement zero;
        zero.d = x.d;
        return assemble({{x, zero}, {zero, y}});
    }
    const int d = x.d + y.d;
    ShiftAlgElement z;
    z.d = d;
    std::set<int> powers;
    for (const auto& [k, c] : x.symbol) powers.insert(k);
    for (const auto& [k, c] : y.symbol) powers.insert(k);
    for (int k : powers) {
        ExactMatrix c(d, d);
        const ExactMatrix cx = x.coefficient(k), cy = y.coefficient(k);
        for (int a = 0; a < x.d; ++a)
            for (int b = 0; b < x.d; ++b) c(a, b) = cx(a, b);
        for (int a = 0; a < y.d; ++a)
            for (int b = 0; b < y.d; ++b) c(x.d + a, x.d + b) = cy(a, b);
        z.symbol[k] = c;
    }
    z.window = std::max(x.window, y.window);
    z.correction = ExactMatrix(z.window * d, z.window * d);
    for (int i = 0; i < x.window; ++i)
        for (int j = 0; j < x.window; ++j)
            for (int a = 0; a < x.d; ++a)
                for (int b = 0; b < x.d; ++b) z.correction(i * d + a, j * d + b) = x.correction(i * x.d + a, j * x.d + b);
    for (int i = 0; i < y.window; ++i)
        for (int j = 0; j < y.window; ++j)
            for (int a = 0; a < y.d; ++a)
                for (int b = 0; b < y.d; ++b)
                    z.correction(i * d + x.d + a, j * d + x.d + b) = y.correction(i * y.d + a, j * y.d + b);
    return normalized(z);
}

std::string to_string(const ShiftAlgElement& x) {
    std::ostringstream os;
    auto put_rational = [&os](const Rational& r) {
        os << r.numerator();
        if (r.denominator() != 1) os << "/" << r.denominator();
    };
    auto put = [&](const GaussRational& g) {
        if (equals(g.im, 0)) return put_rational(g.re);
        if (!equals(g.re, 0)) {
            put_rational(g.re);
            os << (g.im > Rational(0) ? "+" : "-");
        } else if (g.im < Rational(0)) {
            os << "-";
        }
        put_rational(abs(g.im));
        os << "i";
    };
    auto put_matrix = [&](const ExactMatrix& m) {
        os << "[";
        for (int a = 0; a < m.rows(); ++a) {
            os << (a ? ", [" : "[");
            for (int b = 0; b < m.cols(); ++b) {
                if (b) os << ", ";
                put(m(a, b));
            }
            os << "]";
        }
        os << "]";
    };
    os << "symbol{";
    bool first = true;
    for (const auto& [k, c] : x.symbol) {
        os << (first ? "" : ", ") << k << ": ";
        put_matrix(c);
        first = false;
    }
    os << "}";
    if (x.window > 0) {
        os << " + window " << x.window << " ";
        put_matrix(x.correction);
    }
    return os.str();
}

FnElement symbol_map(const ShiftAlgElement& x, const BasePtr& circle) {
    if (circle->kind != SpaceKind::Circle) throw DomainError("symbol_map needs a circle");
    std::vector<std::pair<int, Matrix>> coeffs;
    for (const auto& [k, c] : x.symbol) coeffs.emplace_back(k, c.to_complex());
    return make_element(circle, x.d, [&](const GridPoint& p) {
        const cplx z(p.x[0], p.x[1]);
        Matrix m = Matrix::Zero(x.d, x.d);
        for (const auto& [k, c] : coeffs) m += std::pow(z, k) * c;
        return m;
    });
}

CompactInvariant compact_invariant(const ShiftAlgElement& r, int cls) {
    const int copies = r.d / class_spec(cls).size_multiple;
    const ExactMatrix neut = ExactMatrix::from_complex(neutral(cls, copies));
    if (r.symbol.size() != 1 || !r.symbol.count(0) || !(r.symbol.at(0) == neut))
        throw DomainError("element is not a compact perturbation of the neutral element");

    CompactInvariant out;
    Rational tr(0);
    for (int a = 0; a < r.correction.rows(); ++a) {
        if (!equals(r.correction(a, a).im, 0)) throw DomainError("correction trace is not real");
        tr += r.correction(a, a).re;
    }
    switch (cls) {
        case 0:
            out.name = "defect";
            out.value = rational_to_long(-tr / 2, "defect");
            break;
        case 4:
            out.name = "defect";
            out.value = rational_to_long(-tr / 4, "defect");
            break;
        case 1: {
            const GaussRational det = determinant(r.window_block(std::max(r.window, 1)));
            if (!equals(det.im, 0) || (!equals(det.re, 1) && !equals(det.re, -1))) throw DomainError("window determinant is not +-1");
            out.name = "det_sign";
            out.value = equals(det.re, 1) ? 1 : -1;
            break;
        }
        case 2: {
            const int w = std::max(r.window, 1);
            const GaussRational ratio =
                pfaffian(r.window_block(w)) /
                pfaffian(ExactMatrix::from_complex(neutral(2, copies * w)));
            if (!equals(ratio.im, 0) || (!equals(ratio.re, 1) && !equals(ratio.re, -1))) throw DomainError("Pfaffian ratio is not +-1");
            out.name = "pf_sign";
            out.value = equals(ratio.re, 1) ? 1 : -1;
            break;
        }
        default: break;
    }
    return out;
}

CalkinResult calkin_boundary(const ShiftAlgElement& v, int cls) {
    const auto& spec = class_spec(cls);
    if (v.d % spec.size_multiple != 0) throw DimensionError("size is not a multiple of the class size");
    const BasePtr circle = sample_space(SpaceKind::Circle, 64, PointInvolution::Zeta);
    const auto diag = check_membership(symbol_map(v, circle), cls);
    if (!diag.passed) throw MembershipError("symbol fails class " + class_name(cls) + ": " + diag.failure, diag);

    const SignedPerm j = class_structure(cls, v.d);
    auto tau = [&](const ShiftAlgElement& x) { return involute_tau(x, j); };
    const GaussRational half = GaussRational(Rational(1, 2), Rational(0));
    const ShiftAlgElement one = identity(v.d);

    CalkinResult out;
    out.cls = boundary_target(cls);
    ShiftAlgElement a = v;
    if (is_odd_class(cls)) {
        if (spec.relation != Relation::None)
            a = scale(half, add(a, spec.target == RelationTarget::Adjoint ? adjoint(tau(a)) : tau(a)));
        const ShiftAlgElement p1 = sub(one, mul(adjoint(a), a)), p2 = sub(one, mul(a, adjoint(a)));
        if (!is_idempotent(p1) || !is_idempotent(p2))
            throw DomainError("1 - a*a is not a projection; the square root is not exactly computable");
        const ShiftAlgElement two(scalar(GaussRational(2), v.d));
        const ShiftAlgElement b = assemble({{sub(mul(two, mul(a, adjoint(a))), one), mul(two, mul(a, p1))},
                                            {mul(two, mul(adjoint(a), p2)), sub(one, mul(two, mul(adjoint(a), a)))}});
        const int n = (cls == 3 || cls == 5) ? v.d / 2 : v.d;
        const int k = cls == -1 ? 1 : cls == 3 ? 2 : 0;
        const ExactMatrix y = ExactMatrix::from_complex(Matrix(Y_conjugator(cls, n) * std::pow(std::sqrt(2.0), k)));
        out.element = scale(GaussRational(Rational(1, 1LL << k), Rational(0)), conjugate(y, b));
    } else {
        const ShiftAlgElement h = scale(half, add(a, adjoint(a)));
        a = spec.relation == Relation::None ? h : scale(half, add(h, scale(GaussRational(spec.sign), tau(h))));
        const ShiftAlgElement a2 = mul(a, a);
        if (!equal(mul(a2, a), a)) throw DomainError("a^3 != a; the exponential is not exactly computable");
        out.element = sub(scale(GaussRational(2), a2), one);
    }
    out.lift = a;

    const CompactInvariant inv = compact_invariant(out.element, out.cls);
    out.invariant_name = inv.name;
    out.invariant = inv.value;
    return out;
}

}  // namespace kou::toeplitz
