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

#include "json.hpp"

#include "kou/invariants.hpp"
#include "kou/toeplitz.hpp"

namespace kou {

using json = nlohmann::ordered_json;

// Malformed document structure, as opposed to well-formed but unsupported input.
struct SchemaError : DomainError {
    using DomainError::DomainError;
};

// {"base": {"kind", "resolution", "involution", "basepoint": [indices],
//           "fibre": {"dim", "involution"}},
//  "dim": n, "values": [[[re, im], ...row-major...], ...per grid point...]}
json base_to_json(const BaseSpace& base);
BasePtr base_from_json(const json& j);
json element_to_json(const FnElement& u);
FnElement element_from_json(const json& j);

// Class indices are integers -1..6 or the strings "KU0", "KU1".
json class_to_json(int cls);
int class_from_json(const json& j);

json signature_to_json(const InvariantSignature& sig);
json diagnostics_to_json(const MembershipDiagnostics& d);

// {"toeplitz": {"d", "window", "symbol": {"k": matrix}, "correction": matrix}}
// with exact entries [re, im], each an integer or a "p/q" string.
json toeplitz_to_json(const toeplitz::ShiftAlgElement& x);
toeplitz::ShiftAlgElement toeplitz_from_json(const json& j);
bool is_toeplitz_json(const json& j);

}  // namespace kou
