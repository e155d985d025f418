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

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kou/matcore.hpp"

namespace kou {

enum class SpaceKind { Point, TwoPoints, Interval01, Circle, Disk, Sphere2, Sphere3, Torus2 };
enum class PointInvolution { Identity, Zeta, Sigma, Swap };

std::string to_string(SpaceKind kind);
std::string to_string(PointInvolution inv);
SpaceKind space_from_string(const std::string& name);
PointInvolution point_involution_from_string(const std::string& name);

// Matrix-valued functions may take values in C(X) (x) M_k with the real
// structure acting on the M_k factor as well; k = 1 is the plain function algebra.
struct Fibre {
    int dim = 1;
    InvolutionKind kind = InvolutionKind::Transpose;
    bool operator==(const Fibre&) const = default;
};

struct GridPoint {
    std::array<double, 4> x{};      // embedding coordinates
    std::array<double, 3> param{};  // t | theta | (r, theta) | (theta, phi) | (chi, theta, phi) | (theta1, theta2)
};

struct BaseSpace {
    SpaceKind kind = SpaceKind::Point;
    int resolution = 1;
    PointInvolution involution = PointInvolution::Identity;
    Fibre fibre;
    // Points where every element must carry the same scalar value (the unitization
    // character). Empty means the algebra is unital.
    std::vector<int> basepoints;

    std::vector<GridPoint> points;
    std::vector<int> pairing;

    // structured-grid shape: Disk (rings, angles), Sphere2 (bands, angles),
    // Sphere3 (chi, theta, phi counts), Torus2 (n, n), Circle (n)
    std::array<int, 3> shape{};

    int size() const { return static_cast<int>(points.size()); }
    bool unital() const { return basepoints.empty(); }
    bool same_grid(const BaseSpace& o) const {
        return kind == o.kind && resolution == o.resolution && involution == o.involution && fibre == o.fibre;
    }
    bool operator==(const BaseSpace& o) const { return same_grid(o) && basepoints == o.basepoints; }

    int disk_index(int ring, int angle) const;       // ring >= 1
    int sphere2_index(int band, int angle) const;    // 1 <= band < bands
    int sphere3_index(int i, int j, int k) const;
    int torus_index(int i, int j) const;
    std::vector<int> disk_boundary() const;
    int sphere2_equator_basepoint() const;
};

using BasePtr = std::shared_ptr<const BaseSpace>;

// Basepoints default to none (unital) except Interval01 and Sphere3, which
// default to the distinguished point t = 0 and (1,0,0,0).
BasePtr sample_space(SpaceKind kind, int resolution, PointInvolution inv, Fibre fibre = {});
BasePtr with_basepoints(const BasePtr& base, std::vector<int> basepoints);
BasePtr with_fibre(const BasePtr& base, Fibre fibre);

struct FnElement {
    BasePtr base;
    int dim = 0;
    std::vector<Matrix> values;

    int outer_dim() const { return dim / base->fibre.dim; }
    const Matrix& at(int p) const { return values.at(static_cast<size_t>(p)); }
};

// UnitizedElement: a FnElement read together with its base's basepoints.
using UnitizedElement = FnElement;

FnElement make_element(const BasePtr& base, int dim, const std::function<Matrix(const GridPoint&)>& f);
FnElement constant_element(const BasePtr& base, const Matrix& outer);  // outer (x) 1_fibre
FnElement rebase(const FnElement& u, const BasePtr& base);             // same grid, new basepoints

FnElement adjoint(const FnElement& u);
FnElement multiply(const FnElement& u, const FnElement& v);
FnElement linear_combination(double a, const FnElement& u, double b, const FnElement& v);
FnElement scaled(const FnElement& u, cplx s);
FnElement direct_sum(const FnElement& u, const FnElement& v);
FnElement conjugate_outer(const FnElement& u, const Matrix& x);  // (x (x) 1) u (x (x) 1)^*
FnElement pointwise(const FnElement& u, const std::function<Matrix(const Matrix&)>& f);
double max_norm_residual(const FnElement& u, const FnElement& v);

// (u^tau)(p) = J u(inv p)^T J^T with J = outer (x) fibre structure.
FnElement apply_full_involution(const FnElement& u, const SignedPerm& outer);
FnElement apply_full_involution(const FnElement& u, InvolutionKind outer);

Matrix compress_fibre(const Matrix& m, const Fibre& fibre, int component = 0);

struct LambdaValue {
    Matrix outer;              // scalar part as an outer matrix
    double scalar_residual;    // distance of the basepoint value from outer (x) 1
    double spread_residual;    // disagreement between basepoints
};

std::optional<LambdaValue> lambda_eval(const UnitizedElement& u);

enum class LiftStrategy { Radial, RadialSquare, ArcLinear, ArcSmooth, Constant };
std::string to_string(LiftStrategy s);
LiftStrategy lift_from_string(const std::string& name);

struct SESDescriptor {
    std::string name;
    BasePtr total;
    BasePtr quotient;
    BasePtr ideal;                   // total grid with the closed set as basepoints
    std::vector<int> closed_set;     // indices in total
    std::vector<int> quotient_index; // matching index in quotient for each closed point
    std::vector<LiftStrategy> strategies;
};

std::vector<std::string> ses_names();
SESDescriptor make_ses(const std::string& name, int resolution = 64, Fibre fibre = {});

FnElement restrict(const FnElement& u, const SESDescriptor& ses);
FnElement extend_contraction(const FnElement& b, const SESDescriptor& ses, LiftStrategy strategy);

}  // namespace kou
