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

#include "kou/basespace.hpp"

namespace kou {

// Real classes are -1..6; the complex classes use these codes.
inline constexpr int KU0 = 10;
inline constexpr int KU1 = 11;

std::string class_name(int cls);
int class_from_string(const std::string& name);
const std::vector<int>& all_classes();
bool is_complex_class(int cls);
bool is_odd_class(int cls);
int boundary_target(int cls);  // i -> i - 1 (mod 8 on the real side), KU_i -> KU_{i-1}

enum class Relation { None, Tau, Sharp };
enum class RelationTarget { Self, Adjoint };

struct ClassSpec {
    int index;
    int size_multiple;
    bool self_adjoint;
    Relation relation;
    RelationTarget target;
    int sign;
    Matrix neutral_block;
};

const ClassSpec& class_spec(int cls);

// n copies of the neutral element, block-diagonal.
Matrix neutral(int cls, int copies);

// Outer structure of the class relation on an outer_dim x outer_dim matrix:
// identity for tau-classes, 1 (x) sharp for sharp-classes.
SignedPerm class_structure(int cls, int outer_dim);
FnElement class_involution(const FnElement& u, int cls);

struct MembershipDiagnostics {
    double unitarity = 0;
    double self_adjointness = 0;
    double symmetry = 0;
    double lambda_scalar = 0;
    double lambda_spread = 0;
    bool lambda_trivial = true;
    bool passed = false;
    std::string failure;  // empty when passed
};

struct KOClassRep {
    int cls;
    FnElement element;
    MembershipDiagnostics diagnostics;
};

struct MembershipError : DomainError {
    MembershipDiagnostics diagnostics;
    MembershipError(const std::string& what, MembershipDiagnostics d) : DomainError(what), diagnostics(std::move(d)) {}
};

MembershipDiagnostics check_membership(const UnitizedElement& u, int cls, double tol = kResidualTol);

// Checked construction; throws MembershipError with the failing condition.
KOClassRep make_rep(const UnitizedElement& u, int cls, double tol = kResidualTol);

KOClassRep add(const KOClassRep& u, const KOClassRep& v);
KOClassRep inverse(const KOClassRep& u);
KOClassRep stabilize(const KOClassRep& u);

// Returns the element transformed by a constant so that lambda equals the
// neutral element. Conjugation for classes 0, 2, 4, 6 and KU0; for -1 and 3 the
// congruence u -> v^* u v^* with v^2 = lambda; for 1, 5 and KU1 right
// multiplication by lambda^*.
KOClassRep normalize_lambda(const KOClassRep& u);

FnElement to_projection(const FnElement& u, double tol = kResidualTol);

KOClassRep forget_to_KU(const KOClassRep& rep);

// (x, x^{*tau}) and its per-class variants, over the two-point space with
// the swap involution. Only point bases are supported.
KOClassRep gamma_double(const KOClassRep& x, int target_cls);

Matrix build_U(const Matrix& h, const Matrix& x, const Matrix& k);
double qc_relation_residual(const Matrix& h, const Matrix& x, const Matrix& k);
bool check_qc_relations(const Matrix& h, const Matrix& x, const Matrix& k, double tol = kIdentityTol);

}  // namespace kou
