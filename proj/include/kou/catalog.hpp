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

#include <functional>
#include <string>
#include <vector>

#include "kou/invariants.hpp"
#include "kou/toeplitz.hpp"

namespace kou {

struct CatalogEntry {
    std::string name;
    int cls = 0;
    std::string base;         // human-readable base description
    std::string anchor;       // the K-group the element generates or represents
    std::string note;         // construction choices, empty when literal
    std::vector<long> expected;  // component values of the expected signature
    bool torsion = false;     // order two: signature(w + w) = 0
    int default_resolution = 0;
    std::function<FnElement(int resolution)> build;
};

const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_names();
const CatalogEntry& catalog_entry(const std::string& name);

// Checked against membership (tolerance 1e-10) and the expected signature.
// resolution 0 selects the entry default.
KOClassRep generator(const std::string& name, int resolution = 0);

enum class TorusProfile { Bump, Constant };

// Class-6 element over (Torus2, id):
//   u = [[f, g + h conj(w)], [g + h w, -f]]
// with f = cos(t1), g = sin(t1) on [0, pi], h = -sin(t1) on [pi, 2 pi].
KOClassRep torus_bott(int resolution = 32, TorusProfile profile = TorusProfile::Bump);

// Unitaries over the Toeplitz extension: elements of the unitized compacts
// (cls 0, 1, 2, 4) and lifts of Calkin unitaries (cls 1, 2, 3, 5).
struct CalkinEntry {
    std::string name;
    int cls = 0;
    bool over_compacts = false;  // false: a Calkin unitary given by its Toeplitz lift
    std::string anchor;
    toeplitz::ShiftAlgElement element;
    std::string invariant_name;  // of the element itself, or of its boundary
    long expected = 0;
};

const std::vector<CalkinEntry>& calkin_catalog();
const CalkinEntry& calkin_entry(const std::string& name);

}  // namespace kou
