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


#include "kou/json_io.hpp"

#include <cmath>

namespace kou {

namespace {

json cplx_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx cplx_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw SchemaError("complex entries must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json rational_to_json(const toeplitz::Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

toeplitz::Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return toeplitz::Rational(j.get<long long>());
    if (!j.is_string()) throw SchemaError("exact entries must be integers or \"p/q\" strings");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return toeplitz::Rational(std::stoll(s));
    return toeplitz::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json exact_to_json(const toeplitz::ExactMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(json::array({rational_to_json(m(r, c).re), rational_to_json(m(r, c).im)}));
        rows.push_back(row);
    }
    return rows;
}

toeplitz::ExactMatrix exact_from_json(const json& j, int n) {
    toeplitz::ExactMatrix m(n, n);
    if (!j.is_array() || static_cast<int>(j.size()) != n) throw DimensionError("exact matrix has the wrong number of rows");
    for (int r = 0; r < n; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) throw DimensionError("exact matrix row has the wrong length");
        for (int c = 0; c < n; ++c) {
            const json& e = j[r][c];
            if (e.is_array() && e.size() == 2)
                m(r, c) = toeplitz::GaussRational(rational_from_json(e[0]), rational_from_json(e[1]));
            else
                m(r, c) = toeplitz::GaussRational(rational_from_json(e), toeplitz::Rational(0));
        }
    }
    return m;
}

}  // namespace

json base_to_json(const BaseSpace& base) {
    return json{{"kind", to_string(base.kind)},
                {"resolution", base.resolution},
                {"involution", to_string(base.involution)},
                {"basepoint", base.basepoints},
                {"fibre", json{{"dim", base.fibre.dim}, {"involution", to_string(base.fibre.kind)}}}};
}

BasePtr base_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw SchemaError("base needs a kind");
    const SpaceKind kind = space_from_string(j.at("kind").get<std::string>());
    const int res = j.value("resolution", 1);
    const PointInvolution inv = point_involution_from_string(j.value("involution", std::string("id")));
    Fibre fibre;
    if (j.contains("fibre")) {
        const json& f = j.at("fibre");
        fibre.dim = f.value("dim", 1);
        fibre.kind = involution_from_string(f.value("involution", to_string(InvolutionKind::Transpose)));
    }
    BasePtr base = sample_space(kind, res, inv, fibre);
    if (j.contains("basepoint")) {
        const json& bp = j.at("basepoint");
        std::vector<int> pts;
        if (bp.is_number_integer())
            pts.push_back(bp.get<int>());
        else if (bp.is_array())
            pts = bp.get<std::vector<int>>();
        else if (!bp.is_null())
            throw SchemaError("basepoint must be an index or a list of indices");
        for (int p : pts)
            if (p < 0 || p >= base->size()) throw DimensionError("basepoint index out of range");
        base = with_basepoints(base, pts);
    }
    return base;
}

json element_to_json(const FnElement& u) {
    json values = json::array();
    for (const Matrix& m : u.values) {
        json flat = json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(cplx_to_json(m(r, c)));
        values.push_back(flat);
    }
    return json{{"base", base_to_json(*u.base)}, {"dim", u.dim}, {"values", values}};
}

FnElement element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("dim") || !j.contains("values"))
        throw SchemaError("element JSON needs base, dim and values");
    FnElement u;
    u.base = base_from_json(j.at("base"));
    u.dim = j.at("dim").get<int>();
    if (u.dim <= 0 || u.dim % u.base->fibre.dim != 0) throw DimensionError("dim is not a positive multiple of the fibre");
    const json& vals = j.at("values");
    if (!vals.is_array() || static_cast<int>(vals.size()) != u.base->size())
        throw DimensionError("values must have one entry per grid point (" + std::to_string(u.base->size()) + ")");
    for (const json& flat : vals) {
        if (!flat.is_array() || static_cast<int>(flat.size()) != u.dim * u.dim)
            throw DimensionError("each value must hold dim * dim entries");
        Matrix m(u.dim, u.dim);
        for (int r = 0; r < u.dim; ++r)
            for (int c = 0; c < u.dim; ++c) m(r, c) = cplx_from_json(flat[static_cast<size_t>(r * u.dim + c)]);
        u.values.push_back(std::move(m));
    }
    return u;
}

json class_to_json(int cls) {
    if (is_complex_class(cls)) return class_name(cls);
    return cls;
}

int class_from_json(const json& j) {
    if (j.is_number_integer()) {
        const int c = j.get<int>();
        if (c < -1 || c > 6) throw DomainError("real class index must be in -1..6");
        return c;
    }
    if (j.is_string()) return class_from_string(j.get<std::string>());
    throw SchemaError("class must be an integer or a string");
}

json signature_to_json(const InvariantSignature& sig) {
    json comps = json::object();
    for (const auto& c : sig.components) comps[c.name] = c.value;
    json moduli = json::object();
    for (const auto& c : sig.components)
        if (c.modulus != 0) moduli[c.name] = c.modulus;
    json out{{"pair", sig.pair}, {"invariants", comps}};
    if (!moduli.empty()) out["moduli"] = moduli;
    if (sig.derived) out["derived"] = true;
    return out;
}

json diagnostics_to_json(const MembershipDiagnostics& d) {
    json out{{"passed", d.passed},
             {"unitarity", d.unitarity},
             {"self_adjointness", d.self_adjointness},
             {"symmetry", d.symmetry},
             {"lambda_scalar", d.lambda_scalar},
             {"lambda_spread", d.lambda_spread},
             {"lambda_trivial", d.lambda_trivial}};
    if (!d.passed) out["failure"] = d.failure;
    return out;
}

json toeplitz_to_json(const toeplitz::ShiftAlgElement& x) {
    json symbol = json::object();
    for (const auto& [k, m] : x.symbol) symbol[std::to_string(k)] = exact_to_json(m);
    return json{{"toeplitz", json{{"d", x.d}, {"window", x.window}, {"symbol", symbol}, {"correction", exact_to_json(x.correction)}}}};
}

bool is_toeplitz_json(const json& j) { return j.is_object() && j.contains("toeplitz"); }

toeplitz::ShiftAlgElement toeplitz_from_json(const json& j) {
    if (!is_toeplitz_json(j)) throw SchemaError("expected a toeplitz element");
    const json& t = j.at("toeplitz");
    toeplitz::ShiftAlgElement x;
    x.d = t.at("d").get<int>();
    if (x.d <= 0) throw DimensionError("d must be positive");
    x.window = t.value("window", 0);
    if (x.window < 0) throw DimensionError("window must be non-negative");
    for (const auto& [k, m] : t.at("symbol").items()) x.symbol[std::stoi(k)] = exact_from_json(m, x.d);
    x.correction = t.contains("correction") && x.window > 0 ? exact_from_json(t.at("correction"), x.window * x.d)
                                                            : toeplitz::ExactMatrix(0, 0);
    return toeplitz::add(x, toeplitz::scalar(toeplitz::GaussRational(0), x.d));
}

}  // namespace kou
