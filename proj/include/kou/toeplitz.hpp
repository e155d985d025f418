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

#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "kou/basespace.hpp"

namespace kou::toeplitz {

using Rational = boost::rational<long long>;

// Comparisons against plain integers go through this helper: under C++20
// rewritten comparison rules boost::rational's mixed operator== recurses.
inline bool equals(const Rational& r, long long v) { return r.denominator() == 1 && r.numerator() == v; }

struct GaussRational {
    Rational re{0}, im{0};

    GaussRational() = default;
    GaussRational(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational r, Rational i) : re(r), im(i) {}

    bool is_zero() const { return equals(re, 0) && equals(im, 0); }
    GaussRational conj() const { return {re, -im}; }
    cplx to_complex() const;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b);
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

inline const GaussRational kUnitI{Rational(0), Rational(1)};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}
    static ExactMatrix identity(int n);
    static ExactMatrix from_complex(const Matrix& m, double tol = kIdentityTol);  // entries must be Gaussian integers

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GaussRational& operator()(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
    const GaussRational& operator()(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

    bool is_zero() const;
    ExactMatrix adjoint() const;
    ExactMatrix transpose() const;
    Matrix to_complex() const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussRational& s, const ExactMatrix& a);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<GaussRational> data_;
};

GaussRational determinant(ExactMatrix m);
GaussRational pfaffian(ExactMatrix m);
ExactMatrix involute(const ExactMatrix& m, const SignedPerm& j);

// T(symbol) + correction on l^2(N) (x) C^d. symbol[k] is the coefficient of
// z^k, i.e. of s^k for k >= 0 and (s^*)^{-k} for k < 0. The correction acts on
// the first `window` basis vectors; its index is basis * d + component.
struct ShiftAlgElement {
    int d = 1;
    std::map<int, ExactMatrix> symbol;
    ExactMatrix correction{0, 0};
    int window = 0;

    ExactMatrix window_block(int n) const;  // compression to the first n basis vectors
    ExactMatrix coefficient(int k) const;
};

ShiftAlgElement scalar(const GaussRational& c, int d = 1);
ShiftAlgElement identity(int d = 1);
ShiftAlgElement shift();
ShiftAlgElement rank_one_e();
ShiftAlgElement constant(const ExactMatrix& c);

ShiftAlgElement add(const ShiftAlgElement& x, const ShiftAlgElement& y);
ShiftAlgElement sub(const ShiftAlgElement& x, const ShiftAlgElement& y);
ShiftAlgElement scale(const GaussRational& s, const ShiftAlgElement& x);
ShiftAlgElement mul(const ShiftAlgElement& x, const ShiftAlgElement& y);
ShiftAlgElement adjoint(const ShiftAlgElement& x);
ShiftAlgElement involute_tau(const ShiftAlgElement& x);                       // s^tau = s^*
ShiftAlgElement involute_tau(const ShiftAlgElement& x, const SignedPerm& j);  // with a structure on C^d
ShiftAlgElement conjugate(const ExactMatrix& y, const ShiftAlgElement& x);   // (y (x) 1) x (y (x) 1)^*
bool equal(const ShiftAlgElement& x, const ShiftAlgElement& y);

// d x d grid of elements with equal coefficient size -> one element.
ShiftAlgElement assemble(const std::vector<std::vector<ShiftAlgElement>>& blocks);
ShiftAlgElement direct_sum(const ShiftAlgElement& x, const ShiftAlgElement& y);

std::string to_string(const ShiftAlgElement& x);

FnElement symbol_map(const ShiftAlgElement& x, const BasePtr& circle);

struct CalkinResult {
    int cls;                       // class of the result over the compacts
    ShiftAlgElement lift;          // symmetrized lift
    ShiftAlgElement element;       // Y B(a) Y^* or E(a)
    std::string invariant_name;
    long invariant = 0;            // defect for classes 0, 4; sign for 1, 2; 0 otherwise
};

struct CompactInvariant {
    std::string name;  // empty for classes without a shipped invariant
    long value = 0;
};

// For a unitary in the unitized compacts: defect for classes 0 and 4, sign for 1 and 2.
CompactInvariant compact_invariant(const ShiftAlgElement& r, int cls);

CalkinResult calkin_boundary(const ShiftAlgElement& v, int cls);

}  // namespace kou::toeplitz
