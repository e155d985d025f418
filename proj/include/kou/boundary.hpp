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

#include <optional>

#include "kou/invariants.hpp"

namespace kou {

enum class RetractMode { Odd, Even };

// Projection onto the real-linear subspace of lifts allowed for class cls.
FnElement symmetrize(const FnElement& a, int cls);
FnElement retract_contraction(const FnElement& y, RetractMode mode, double tol = kResidualTol);

Matrix B_matrix(const Matrix& a, double tol = kResidualTol);
Matrix E_matrix(const Matrix& a, double tol = kResidualTol);
FnElement B_matrix(const FnElement& a, double tol = kResidualTol);
FnElement E_matrix(const FnElement& a, double tol = kResidualTol);

// Y_{2n} for cls = +-1 and KU1, Y_{4n} for cls = 3, 5.
Matrix Y_conjugator(int cls, int n);

struct BoundaryResult {
    KOClassRep rep;      // class boundary_target(cls) over the ideal
    FnElement lift;      // symmetrized contraction on the total space
    double closed_set_residual = 0;  // distance from the neutral element on the closed set
};

// explicit_lift, when given, replaces the extension step.
BoundaryResult boundary_map(const KOClassRep& u, const SESDescriptor& ses, LiftStrategy strategy,
                            const std::optional<FnElement>& explicit_lift = std::nullopt,
                            double tol = kResidualTol);

}  // namespace kou
