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

#include <random>

#include "kou/randmat.hpp"

namespace kou::testing {

using kou::random_contraction;
using kou::random_hermitian;
using kou::random_matrix;
using kou::random_real_orthogonal;
using kou::random_skew;
using kou::random_symmetry;
using kou::random_unitary;

inline Matrix diag(std::initializer_list<cplx> entries) {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index k = 0;
    for (cplx e : entries) d(k++) = e;
    return d.asDiagonal();
}

inline Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace kou::testing
