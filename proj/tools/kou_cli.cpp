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


#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "kou/boundary.hpp"
#include "kou/catalog.hpp"
#include "kou/json_io.hpp"
#include "kou/verify.hpp"

namespace {

using namespace kou;

enum Exit { kOk = 0, kFailure = 1, kMembership = 2, kUnsupported = 3, kIo = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_input(const std::string& src) {
    std::string text;
    if (!src.empty() && (src.front() == '{' || src.front() == '[')) {
        text = src;
    } else if (src == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(src);
        if (!in) throw IoError("cannot open " + src);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed JSON: ") + e.what());
    }
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text << '\n';
}

FnElement parse_element(const json& j) {
    try {
        return element_from_json(j);
    } catch (const json::exception& e) {
        throw IoError(std::string("bad element JSON: ") + e.what());
    } catch (const DimensionError& e) {
        throw IoError(std::string("bad element JSON: ") + e.what());
    } catch (const SchemaError& e) {
        throw IoError(std::string("bad element JSON: ") + e.what());
    }
}

toeplitz::ShiftAlgElement parse_toeplitz(const json& j) {
    try {
        return toeplitz_from_json(j);
    } catch (const json::exception& e) {
        throw IoError(std::string("bad toeplitz JSON: ") + e.what());
    } catch (const DimensionError& e) {
        throw IoError(std::string("bad toeplitz JSON: ") + e.what());
    } catch (const SchemaError& e) {
        throw IoError(std::string("bad toeplitz JSON: ") + e.what());
    }
}

json classify_report(const FnElement& u, const std::vector<int>& classes, double tol, bool& all_member) {
    json rows = json::array();
    json member_of = json::array();
    all_member = true;
    for (int cls : classes) {
        json row{{"class", class_to_json(cls)}};
        MembershipDiagnostics d;
        try {
            d = check_membership(u, cls, tol);
        } catch (const DimensionError& e) {
            d.failure = e.what();
        }
        row["member"] = d.passed;
        row["diagnostics"] = diagnostics_to_json(d);
        if (d.passed) {
            member_of.push_back(class_to_json(cls));
            if (has_signature(*u.base, cls)) {
                try {
                    row["signature"] = signature_to_json(signature(u, cls));
                } catch (const DomainError& e) {
                    row["signature_error"] = e.what();
                }
            }
        } else {
            all_member = false;
        }
        rows.push_back(row);
    }
    return json{{"base", base_to_json(*u.base)}, {"dim", u.dim}, {"member_of", member_of}, {"classes", rows}};
}

int cmd_classify(const std::string& input, const std::string& cls, double tol, const std::string& out) {
    const json j = read_input(input);
    if (is_toeplitz_json(j)) {
        std::cerr << "classify takes function-algebra elements; use boundary --ses toeplitz for Toeplitz elements\n";
        return kUnsupported;
    }
    const FnElement u = parse_element(j);
    std::vector<int> classes = all_classes();
    if (!cls.empty()) classes = {class_from_string(cls)};
    bool all = false;
    const json report = classify_report(u, classes, tol, all);
    write_output(report.dump(), out);
    return cls.empty() || all ? kOk : kMembership;
}

int cmd_boundary(const std::string& input, const std::string& ses_name, const std::string& cls_name,
                 const std::string& lift, int resolution, double tol, const std::string& out) {
    const json j = read_input(input);
    const int cls = class_from_string(cls_name);
    if (ses_name == "toeplitz") {
        if (!is_toeplitz_json(j)) throw IoError("the toeplitz sequence takes a Toeplitz element");
        const toeplitz::ShiftAlgElement v = parse_toeplitz(j);
        const toeplitz::CalkinResult r = toeplitz::calkin_boundary(v, cls);
        json report{{"ses", ses_name}, {"input_class", class_to_json(cls)}, {"class", class_to_json(r.cls)}};
        if (!r.invariant_name.empty()) report["invariant"] = json{{r.invariant_name, r.invariant}};
        report["lift"] = toeplitz_to_json(r.lift);
        report["element"] = toeplitz_to_json(r.element);
        write_output(report.dump(), out);
        return kOk;
    }
    const FnElement u = parse_element(j);
    const bool disk = ses_name.rfind("disk-", 0) == 0;
    const int res = disk ? u.base->resolution : resolution;
    const SESDescriptor ses = make_ses(ses_name, res, u.base->fibre);
    const LiftStrategy strategy = lift.empty() ? ses.strategies.front() : lift_from_string(lift);
    const FnElement input_el = u.base->same_grid(*ses.quotient) ? rebase(u, ses.quotient) : u;
    const BoundaryResult r = boundary_map(make_rep(input_el, cls, tol), ses, strategy, std::nullopt, tol);
    json report{{"ses", ses_name},
                {"lift", to_string(strategy)},
                {"input_class", class_to_json(cls)},
                {"class", class_to_json(r.rep.cls)},
                {"closed_set_residual", r.closed_set_residual},
                {"diagnostics", diagnostics_to_json(r.rep.diagnostics)}};
    if (has_signature(*r.rep.element.base, r.rep.cls)) report["signature"] = signature_to_json(signature(r.rep));
    report["element"] = element_to_json(r.rep.element);
    write_output(report.dump(), out);
    return kOk;
}

int cmd_catalog(const std::string& emit, int resolution, const std::string& out) {
    if (!emit.empty()) {
        for (const CalkinEntry& e : calkin_catalog())
            if (e.name == emit) {
                json j = toeplitz_to_json(e.element);
                j["catalog"] = json{{"name", e.name}, {"class", class_to_json(e.cls)}, {"anchor", e.anchor}};
                write_output(j.dump(), out);
                return kOk;
            }
        const CatalogEntry& e = catalog_entry(emit);
        const KOClassRep r = generator(emit, resolution);
        json j = element_to_json(r.element);
        j["catalog"] = json{{"name", e.name}, {"class", class_to_json(e.cls)}, {"anchor", e.anchor},
                            {"signature", signature_to_json(signature(r))}};
        if (!e.note.empty()) j["catalog"]["note"] = e.note;
        write_output(j.dump(), out);
        return kOk;
    }
    std::ostringstream s;
    for (const CatalogEntry& e : catalog()) {
        const KOClassRep r = generator(e.name, resolution);
        s << e.name << "\tclass " << class_name(e.cls) << "\t" << e.base << "\t" << signature(r).to_string()
          << (e.torsion ? "\ttorsion" : "") << '\n';
    }
    for (const CalkinEntry& e : calkin_catalog())
        s << e.name << "\tclass " << class_name(e.cls) << "\t" << (e.over_compacts ? "unitized compacts" : "Calkin, Toeplitz lift")
          << "\t(" << e.invariant_name << (e.over_compacts ? "" : " of the boundary") << "=" << e.expected << ")\n";
    std::string text = s.str();
    text.pop_back();
    write_output(text, out);
    return kOk;
}

int cmd_verify(const std::string& only, double tol) {
    VerifyOptions o;
    o.only = only;
    o.tol = tol;
    if (!only.empty()) {
        bool known = false;
        for (const Criterion& c : criteria()) known = known || c.tag == only || std::to_string(c.number) == only;
        if (!known) {
            std::cerr << "unknown check group: " << only << '\n';
            return kUnsupported;
        }
    }
    const auto rows = run_verification(o);
    std::cout << "1.." << rows.size() << '\n';
    bool all = true;
    for (size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        all = all && r.passed;
        std::cout << (r.passed ? "ok " : "not ok ") << k + 1 << " - [" << r.criterion << " " << r.tag << "] " << r.name;
        if (!r.detail.empty()) std::cout << " # " << r.detail;
        std::cout << '\n';
    }
    return all ? kOk : kFailure;
}

int cmd_selftest() {
    int failures = 0;
    for (const CatalogEntry& e : catalog()) {
        const KOClassRep r = generator(e.name);
        const FnElement back = element_from_json(json::parse(element_to_json(r.element).dump()));
        bool a = false, b = false;
        const std::string one = classify_report(r.element, all_classes(), kResidualTol, a).dump();
        const std::string two = classify_report(back, all_classes(), kResidualTol, b).dump();
        const bool ok = one == two && max_norm_residual(back, r.element) == 0.0;
        if (!ok) ++failures;
        std::cout << (ok ? "ok " : "not ok ") << e.name << '\n';
    }
    std::cout << (failures == 0 ? "selftest passed" : "selftest failed") << '\n';
    return failures == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unitary KO-theory: classification, boundary maps and generators"};
    app.require_subcommand(1);

    std::string input, cls, ses, lift, out, emit, only;
    int resolution = 64, cat_resolution = 0;
    double tol = kResidualTol;

    auto* classify = app.add_subcommand("classify", "report the classes an element belongs to, with signatures");
    classify->add_option("input", input, "element JSON: path, inline object, or - for stdin")->required();
    classify->add_option("--class", cls, "restrict to one class (-1..6, KU0, KU1)");
    classify->add_option("--tol", tol, "membership tolerance")->check(CLI::PositiveNumber);
    classify->add_option("--out", out, "output path");

    auto* boundary = app.add_subcommand("boundary", "apply a boundary map");
    boundary->add_option("input", input, "element JSON: path, inline object, or - for stdin")->required();
    boundary->add_option("--ses", ses, "short exact sequence")->required()->check(CLI::IsMember(ses_names()));
    boundary->add_option("--class", cls, "class of the input (-1..6, KU0, KU1)")->required();
    boundary->add_option("--lift", lift, "lift strategy");
    boundary->add_option("--resolution", resolution, "grid resolution of the total circle")->check(CLI::Range(8, 1 << 16));
    boundary->add_option("--tol", tol, "membership tolerance")->check(CLI::PositiveNumber);
    boundary->add_option("--out", out, "output path");

    auto* catalog_cmd = app.add_subcommand("catalog", "list catalog generators or emit one as JSON");
    catalog_cmd->add_option("--emit", emit, "entry to write as JSON");
    catalog_cmd->add_option("--resolution", cat_resolution, "grid resolution (entry default when omitted)")
        ->check(CLI::Range(8, 1 << 12));
    catalog_cmd->add_option("--out", out, "output path");

    auto* verify = app.add_subcommand("verify", "run the acceptance checks, one TAP line per check");
    verify->add_option("--only", only, "criterion number or group tag");
    verify->add_option("--tol", tol, "membership and boundary tolerance")->check(CLI::PositiveNumber);

    auto* selftest = app.add_subcommand("selftest", "round-trip every catalog entry through JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(input, cls, tol, out);
        if (boundary->parsed()) return cmd_boundary(input, ses, cls, lift, resolution, tol, out);
        if (catalog_cmd->parsed()) return cmd_catalog(emit, cat_resolution, out);
        if (verify->parsed()) return cmd_verify(only, tol);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const MembershipError& e) {
        std::cerr << "membership failure: " << e.what() << '\n';
        return kMembership;
    } catch (const DomainError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const DimensionError& e) {
        std::cerr << "dimension mismatch: " << e.what() << '\n';
        return kMembership;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
