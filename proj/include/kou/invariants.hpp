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

#include <string>
#include <vector>

#include "kou/symclass.hpp"

namespace kou {

inline constexpr double kRoundTol = 1e-6;

long half_trace(const Matrix& u, double tol = kRoundTol);
long quarter_trace(const Matrix& u, double tol = kRoundTol);
int det_sign(const Matrix& u, double tol = kRoundTol);
int pf_sign(const Matrix& u, double tol = kRoundTol);  // relative to the same-size neutral

// Phase-increment sums of det along grid indices; every step must rotate by
// at most pi/2.
double phase_sum(const std::vector<cplx>& values, bool closed);
long winding_det(const FnElement& u);
long winding_half(const FnElement& u, bool upper = true);
long chern_of_projection(const FnElement& u);
long degree_s3(const FnElement& u);

struct InvariantComponent {
    std::string name;
    long value = 0;
    int modulus = 0;  // 0 for Z, 2 for Z/2
    bool operator==(const InvariantComponent&) const = default;
};

struct InvariantSignature {
    std::string pair;  // catalog key of the (class, base) pair
    std::vector<InvariantComponent> components;
    bool derived = false;

    bool is_zero() const;
    std::string to_string() const;
    InvariantSignature operator+(const InvariantSignature& o) const;
    bool operator==(const InvariantSignature& o) const;
};

bool has_signature(const BaseSpace& base, int cls);
InvariantSignature signature(const FnElement& u, int cls);
InvariantSignature signature(const KOClassRep& rep);

}  // namespace kou
