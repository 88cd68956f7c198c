/*
   Copyright 2026 The lagengel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command line driver: verify-families, classify, obstructions,
// lattice-sl2z, normal-form-check, report.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lagengel/lagengel.hpp"
#include "lagengel/report.hpp"

namespace {

using namespace lagengel;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Parameter value such as "a", "0" or "-1/4".
Poly parse_value(const std::string& text) {
    auto doc = parse_document("params: a b\ndw1 = (" + text + ")*w1^w2\ndw2 = 0\ndw3 = 0\ndw4 = 0\n");
    return doc.algebra.coefficient(1, 1, 2);
}

ReportFormat format_of(const std::string& s) { return s == "json" ? ReportFormat::Json : ReportFormat::Table; }

void print(const Report& r, const std::string& format) {
    std::string text = emit_report(r, format_of(format));
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

/// The six families at symbolic parameters, with the Family 4 spot checks.
int verify_families(const std::string& format) {
    Report r;
    for (auto id : all_families()) r.families.push_back(family_entry(id));
    print(r, format);

    bool ok = true;
    for (const auto& f : r.families)
        if (f.id.index() != 4) ok = ok && f.verification.all_pass();
    const auto f4 = build_family(FamilyId(4));
    const auto origin = f4.substitute(std::map<std::string, Rational>{{"a", 0}, {"b", 0}});
    const auto axis = f4.substitute(std::map<std::string, Poly>{{"b", Poly()}});
    const bool at_origin = jacobi_holds(origin), on_axis = jacobi_holds(axis);
    if (format == "table") {
        std::cout << "\nFamily 4 Jacobi at (0, 0): " << (at_origin ? "ok" : "FAIL") << "\n";
        std::cout << "Family 4 Jacobi along b = 0: " << (on_axis ? "ok" : "FAIL") << "\n";
        for (const auto& res : jacobi_residuals(axis))
            if (!res.is_zero()) std::cout << "  " << res.str() << "\n";
    }
    return ok && at_origin && on_axis ? 0 : 1;
}

int classify(const std::string& path, const std::string& format) {
    Report r;
    r.documents.push_back(document_entry(path, parse_document(read_file(path))));
    for (const auto& w : r.documents.back().warnings) std::cerr << "warning: " << w << "\n";
    print(r, format);
    return report_passes(r) ? 0 : 1;
}

int obstructions(const std::string& path, const std::string& format) {
    auto doc = parse_document(read_file(path));
    auto o = stokes_obstructions(doc.algebra);
    auto locus = vanishing_locus(o);
    if (format == "json") {
        Json out{{"document", path}, {"obstructions", report_detail::obstructions_json(o)},
                 {"locus", report_detail::locus_json(locus)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (unsigned j = 1; j <= kDim; ++j)
            std::cout << "d(" << index_str(omitted_three_form(j).components().begin()->first)
                      << ") = " << o.lambda[j - 1].str() << " vol\n";
        if (locus.empty)
            std::cout << "no compact quotient: a nonzero constant multiple of vol is exact\n";
        else if (o.all_zero())
            std::cout << "all obstructions vanish\n";
        else
            for (const auto& c : locus.conditions()) std::cout << "vanish iff " << c << "\n";
    }
    return 0;
}

int lattice_sl2z(const std::string& matrix, const std::string& format) {
    std::vector<Integer> e;
    std::stringstream ss(matrix);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            e.emplace_back(item);
        } catch (const std::exception&) {
            throw Error("matrix entries must be integers, got '" + item + "'");
        }
    }
    if (e.size() != 4) throw Error("--matrix expects four comma separated integers a,b,c,d");
    Report r;
    r.sl2z = sl2z_lattice({{{e[0], e[1]}, {e[2], e[3]}}});
    print(r, format);
    return report_passes(r) ? 0 : 1;
}

int normal_form(const std::string& format) {
    Report r;
    r.normal_form = normal_form_check();
    print(r, format);
    return report_passes(r) ? 0 : 1;
}

int report(const std::string& format, int family, const std::string& a, const std::string& b,
           const std::vector<std::string>& files) {
    Report r;
    if (family) {
        r.families.push_back(family_entry(FamilyId(family), parse_value(a), parse_value(b)));
    } else if (files.empty()) {
        for (auto id : all_families()) r.families.push_back(family_entry(id));
    }
    for (const auto& f : files) r.documents.push_back(document_entry(f, parse_document(read_file(f))));
    print(r, format);
    return report_passes(r) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangian Engel structures: structure equations, invariants and compact quotients"};
    app.require_subcommand(1);
    std::string format = "table";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    };

    auto* verify = app.add_subcommand("verify-families", "check the six families at symbolic parameters");
    add_format(verify);

    std::string path;
    auto* cls = app.add_subcommand("classify", "verify and classify a coframe document");
    cls->add_option("file", path, "coframe document")->required();
    add_format(cls);

    auto* obs = app.add_subcommand("obstructions", "Stokes obstructions of a coframe document");
    obs->add_option("file", path, "coframe document")->required();
    add_format(obs);

    std::string matrix;
    auto* sl2 = app.add_subcommand("lattice-sl2z", "lattice data from a hyperbolic SL2(Z) matrix");
    sl2->add_option("--matrix", matrix, "entries a,b,c,d of [[a,b],[c,d]]")->required();
    add_format(sl2);

    auto* nf = app.add_subcommand("normal-form-check", "Engel normal form and the Family 1 coordinate models");
    add_format(nf);

    int family = 0;
    std::string a = "a", b = "b";
    std::vector<std::string> files;
    auto* rep = app.add_subcommand("report", "full report for the families or for documents");
    add_format(rep);
    rep->add_option("--family", family, "single family 1..6")->check(CLI::Range(1, 6));
    rep->add_option("--a", a, "value of a");
    rep->add_option("--b", b, "value of b");
    rep->add_option("files", files, "coframe documents");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*verify) return verify_families(format);
        if (*cls) return classify(path, format);
        if (*obs) return obstructions(path, format);
        if (*sl2) return lattice_sl2z(matrix, format);
        if (*nf) return normal_form(format);
        if (*rep) return report(format, family, a, b, files);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
