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

#include <random>

#include "kou/basespace.hpp"

namespace kou {

struct VerifyOptions {
    double tol = kResidualTol;  // membership and boundary tolerance
    std::string only;           // criterion tag or number; empty runs everything
    unsigned long long seed = 20260415;
};

struct VerifyCheck {
    int criterion = 0;
    std::string tag;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string tag;
    std::string title;
};

const std::vector<Criterion>& criteria();

// Random representatives used by the property checks.
// Odd classes (-1, 1, 3, 5, KU1) over a unital circle: conjugates of diagonal
// z^k loops by constants respecting the class relation.
FnElement random_circle_input(std::mt19937_64& rng, int cls, const BasePtr& circle);
// Even classes (0, 2, 4, 6, KU0) over a two-point space.
FnElement random_two_point_input(std::mt19937_64& rng, int cls, const BasePtr& two_points);
std::vector<VerifyCheck> run_verification(const VerifyOptions& opts = {});

}  // namespace kou
