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

#ifndef LAGENGEL_REPORT_HPP
#define LAGENGEL_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coframe_parser.hpp"
#include "compactness.hpp"
#include "families.hpp"
#include "lattices.hpp"
#include "models.hpp"

namespace lagengel {

using Json = nlohmann::ordered_json;

/// Lattice data attached to a Family 1 survivor.
struct LatticeBlock {
    std::optional<MalcevReport> malcev;                  // b = 0
    std::vector<NilGroupElement> nil_generators;         // b = 0
    std::optional<SolLatticeDescription> sl2z;           // b < 0
    std::optional<BracketTable> brackets;                // b != 0, in the reference basis
    std::optional<BracketTable> reference;
    std::optional<TableRelation> relation;
};

struct FamilyEntry {
    FamilyId id{1};
    Poly a, b;
    VerificationReport verification;
    CompactVerdict compact;
    std::optional<LatticeBlock> lattice;
};

struct DocumentEntry {
    std::string name;
    CoframedAlgebra algebra;
    std::vector<std::string> warnings;
    VerificationReport verification;
    ObstructionReport obstructions;
    VanishingLocus locus;
    std::optional<RealizationReport> realization;
};

struct Report {
    std::vector<FamilyEntry> families;
    std::vector<DocumentEntry> documents;
    std::optional<SolLatticeDescription> sl2z;
    std::optional<NormalFormReport> normal_form;
    bool empty() const { return families.empty() && documents.empty() && !sl2z && !normal_form; }
};

/// Lattice construction for Family 1(0, b) with rational b; empty for
/// parametric b.
inline std::optional<LatticeBlock> family1_lattice(const Poly& b) {
    if (!b.is_constant()) return std::nullopt;
    const Rational bv = b.constant_value();
    const CoframedAlgebra alg = build_family(FamilyId(1), Poly(), b);
    LatticeBlock block;
    if (bv == 0) {
        block.malcev = malcev_check(coframe_to_brackets(alg));
        block.nil_generators = nil_lattice_generators();
        return block;
    }
    // Rescaling by beta needs a rational square root of |b|.
    const Rational mag = bv < 0 ? Rational(-bv) : bv;
    const Integer num = numerator_of(mag), den = denominator_of(mag);
    const Integer rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
    if (rn * rn == num && rd * rd == den) {
        auto unit = change_coframe(alg, family1_rescaling(Rational(rn, rd)));
        if (bv < 0) {
            auto rebased = change_coframe(unit, sol_rebase_matrix());
            block.brackets = change_of_basis(coframe_to_brackets(rebased), sol_bracket_basis());
            block.reference = sol_reference_brackets();
        } else {
            block.brackets = change_of_basis(coframe_to_brackets(unit), osc_bracket_basis());
            block.reference = osc_reference_brackets_x();
        }
        block.relation = compare_tables(*block.brackets, *block.reference);
    }
    if (bv < 0) block.sl2z = sl2z_lattice({{{2, 1}, {1, 1}}});
    return block;
}

inline FamilyEntry family_entry(FamilyId id, const Poly& a, const Poly& b) {
    FamilyEntry e{id, a, id.takes_b() ? b : Poly(), verify_family(id, a, b), compact_quotient_verdict(id, a, b),
                  std::nullopt};
    if (e.compact.survivor && e.compact.survivor->a.is_zero())
        e.lattice = family1_lattice(e.compact.survivor->b);
    return e;
}

inline FamilyEntry family_entry(FamilyId id) { return family_entry(id, Poly::symbol("a"), Poly::symbol("b")); }

inline DocumentEntry document_entry(const std::string& name, const CoframeDocument& doc) {
    DocumentEntry e{name, doc.algebra, doc.warnings, verify_algebra(doc.algebra), stokes_obstructions(doc.algebra),
                    {}, std::nullopt};
    e.locus = vanishing_locus(e.obstructions);
    if (doc.realization) e.realization = check_realization(*doc.realization, doc.algebra);
    return e;
}

/// Every in-scope check of the report passes.
inline bool report_passes(const Report& r) {
    for (const auto& f : r.families)
        if (!f.verification.all_pass()) return false;
    for (const auto& d : r.documents) {
        if (!d.verification.all_pass()) return false;
        if (d.realization && !d.realization->holds) return false;
    }
    if (r.sl2z && !r.sl2z->certificate_holds) return false;
    if (r.normal_form && !r.normal_form->all()) return false;
    return true;
}

namespace report_detail {

inline Json rational_json(const Rational& q) { return to_string(q); }
inline Json poly_json(const Poly& p) { return p.str(); }

inline Json quad_json(const QuadExt& q) {
    return Json{{"value", q.str()}, {"x", to_string(q.x())}, {"y", to_string(q.y())}, {"D", q.field().str()}};
}

inline Json form_json(const CoframeForm& f) {
    Json out = Json::object();
    for (const auto& [s, c] : f.components()) out[index_str(s)] = c.str();
    return out;
}

template <class S>
inline Json generic_form_json(const Form<S>& f) {
    Json out = Json::object();
    for (const auto& [s, c] : f.components()) out[index_str(s)] = c.str();
    return out;
}

inline Json residuals_json(const std::array<CoframeForm, kDim>& r) {
    Json out = Json::object();
    for (unsigned i = 0; i < kDim; ++i) out["d(dw" + std::to_string(i + 1) + ")"] = form_json(r[i]);
    return out;
}

inline Json verdict_json(const ClassificationVerdict& v) {
    Json out{{"kind", to_string(v.kind)}, {"p3", poly_json(v.p3)}, {"p4", poly_json(v.p4)}};
    if (v.sign) out["sign"] = *v.sign;
    if (v.a2) out["A2"] = poly_json(*v.a2);
    if (v.a3) out["A3"] = poly_json(*v.a3);
    if (v.a4) out["A4"] = poly_json(*v.a4);
    if (v.q3) out["q3"] = poly_json(*v.q3);
    if (v.subcase) out["subcase"] = to_string(*v.subcase);
    return out;
}

inline Json verification_json(const VerificationReport& r) {
    Json out;
    out["jacobi"] = {{"zero", r.jacobi_zero}, {"residuals", residuals_json(r.jacobi)}};
    out["flag_ranks"] = r.flag_ranks;
    out["engel"] = r.engel;
    out["symplectic"] = {{"closed", r.symplectic.closed},
                         {"nondegenerate", r.symplectic.nondegenerate},
                         {"lagrangian", r.symplectic.lagrangian},
                         {"d_omega", form_json(r.symplectic.d_omega)},
                         {"omega_squared_top", poly_json(r.symplectic.omega_squared_top)}};
    if (r.verdict) out["verdict"] = verdict_json(*r.verdict);
    if (r.verdict_error) out["verdict_error"] = *r.verdict_error;
    out["warnings"] = r.warnings;
    return out;
}

inline Json obstructions_json(const ObstructionReport& o) {
    Json out = Json::object();
    for (unsigned j = 1; j <= kDim; ++j)
        out[index_str(omitted_three_form(j).components().begin()->first)] = poly_json(o.lambda[j - 1]);
    return out;
}

inline Json locus_json(const VanishingLocus& l) {
    return Json{{"empty", l.empty}, {"conditions", l.empty ? std::vector<std::string>{} : l.conditions()}};
}

inline Json compact_json(const CompactVerdict& v) {
    Json out{{"status", to_string(v.status)}, {"locus", locus_json(v.locus)}};
    if (v.survivor) out["survivor"] = v.survivor->str();
    if (v.reduces_to) out["reduces_to"] = v.reduces_to->str();
    if (v.construction) out["construction"] = to_string(*v.construction);
    out["justification"] = v.justification;
    return out;
}

inline Json brackets_json(const BracketTable& t, const std::string& name) { return t.lines(name); }

inline Json int_matrix_json(const IntMatrix2& m) {
    return Json::array({Json::array({m[0][0].str(), m[0][1].str()}), Json::array({m[1][0].str(), m[1][1].str()})});
}

inline Json quad_matrix_json(const QuadMatrix2& m) {
    return Json::array({Json::array({quad_json(m[0][0]), quad_json(m[0][1])}),
                        Json::array({quad_json(m[1][0]), quad_json(m[1][1])})});
}

inline Json sl2z_json(const SolLatticeDescription& d) {
    return Json{{"S", int_matrix_json(d.s)},
                {"trace", d.trace.str()},
                {"square_part", d.square_part.str()},
                {"D", d.discriminant.str()},
                {"c", quad_json(d.c)},
                {"c_inverse", quad_json(d.c_inverse)},
                {"v", Json::array({quad_json(d.v[0]), quad_json(d.v[1])})},
                {"w", Json::array({quad_json(d.w[0]), quad_json(d.w[1])})},
                {"v1_v2", quad_matrix_json(d.basis)},
                {"generators", quad_matrix_json(d.generators)},
                {"certificate", int_matrix_json(d.certificate)},
                {"certificate_holds", d.certificate_holds}};
}

inline Json lattice_json(const LatticeBlock& b) {
    Json out = Json::object();
    if (b.malcev) {
        out["malcev"] = {{"nilpotent", b.malcev->nilpotent},
                         {"rational", b.malcev->rational},
                         {"lattice_exists", b.malcev->lattice_exists},
                         {"lower_central_series", b.malcev->series}};
        Json gens = Json::array();
        for (const auto& g : b.nil_generators)
            gens.push_back({{"c", rational_json(g.c)}, {"d", rational_json(g.d)}, {"e", rational_json(g.e)},
                            {"f", rational_json(g.f)}});
        out["gamma"] = {{"parameters", "c, d, e, f integers"}, {"generators", gens}};
    }
    if (b.brackets) {
        out["brackets"] = brackets_json(*b.brackets, "X");
        out["reference_brackets"] = brackets_json(*b.reference, "X");
        out["relation_to_reference"] = to_string(*b.relation);
    }
    if (b.sl2z) out["sl2z"] = sl2z_json(*b.sl2z);
    return out;
}

inline Json realization_json(const RealizationReport& r) {
    Json res = Json::object();
    for (unsigned i = 0; i < kDim; ++i) res["w" + std::to_string(i + 1)] = generic_form_json(r.residual[i]);
    return Json{{"holds", r.holds}, {"independent", r.independent}, {"volume", r.volume.str()}, {"residuals", res}};
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string obstruction_cell(const ObstructionReport& o) {
    std::string out;
    for (unsigned j : o.nonzero()) {
        if (!out.empty()) out += "; ";
        out += index_str(omitted_three_form(j).components().begin()->first) + ": " + o.lambda[j - 1].str();
    }
    return out.empty() ? "none" : out;
}

inline std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string line;
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            line += c + 1 == rows[i].size() ? rows[i][c] : pad(rows[i][c], width[c]) + " | ";
        }
        out += line + "\n";
        if (i == 0) {
            std::string rule;
            for (std::size_t c = 0; c < width.size(); ++c) rule += std::string(width[c], '-') + (c + 1 == width.size() ? "" : "-+-");
            out += rule + "\n";
        }
    }
    return out;
}

inline std::string params_label(const FamilyEntry& f) {
    return f.id.takes_b() ? "(" + f.a.str() + ", " + f.b.str() + ")" : "(" + f.a.str() + ")";
}

inline std::string compact_cell(const CompactVerdict& v) {
    if (v.status == CompactStatus::DoesNotAdmit) return "no";
    std::string out = v.status == CompactStatus::Admits ? "yes" : "yes if";
    if (v.status == CompactStatus::AdmitsOnLocus) {
        const auto conds = v.locus.conditions();
        for (std::size_t i = 0; i < conds.size(); ++i) out += (i ? ", " : " ") + conds[i];
    }
    if (v.reduces_to) out += " -> " + v.reduces_to->str();
    return out;
}

}  // namespace report_detail

inline Json report_json(const Report& r) {
    using namespace report_detail;
    Json out = Json::object();
    if (!r.families.empty()) {
        Json fams = Json::array();
        for (const auto& f : r.families) {
            Json e{{"family", f.id.index()}, {"parameters", Json::object()}};
            e["parameters"]["a"] = poly_json(f.a);
            if (f.id.takes_b()) e["parameters"]["b"] = poly_json(f.b);
            e.update(verification_json(f.verification));
            e["obstructions"] = obstructions_json(f.compact.obstructions);
            e["compact"] = compact_json(f.compact);
            if (f.lattice) e["lattice"] = lattice_json(*f.lattice);
            fams.push_back(e);
        }
        out["families"] = fams;
    }
    if (!r.documents.empty()) {
        Json docs = Json::array();
        for (const auto& d : r.documents) {
            Json e{{"document", d.name}};
            e["structure"] = Json::object();
            for (unsigned i = 1; i <= kDim; ++i) e["structure"]["dw" + std::to_string(i)] = form_json(d.algebra.d(i));
            e["parse_warnings"] = d.warnings;
            e.update(verification_json(d.verification));
            e["obstructions"] = obstructions_json(d.obstructions);
            e["obstruction_locus"] = locus_json(d.locus);
            if (d.realization) e["realization"] = realization_json(*d.realization);
            docs.push_back(e);
        }
        out["documents"] = docs;
    }
    if (r.sl2z) out["sl2z"] = sl2z_json(*r.sl2z);
    if (r.normal_form) {
        const auto& n = *r.normal_form;
        out["normal_form"] = {{"engel_flag", n.engel_flag},
                              {"engel", n.engel},
                              {"nil_model", realization_json(n.nil)},
                              {"sol_model", realization_json(n.sol)},
                              {"osc_model", realization_json(n.osc)}};
    }
    return out;
}

enum class ReportFormat { Json, Table };

/// Deterministic text; "{}" or "" for an empty report.
inline std::string emit_report(const Report& r, ReportFormat format) {
    using namespace report_detail;
    if (format == ReportFormat::Json) {
        if (r.empty()) return "{}";
        return report_json(r).dump(2);
    }
    std::string out;
    if (!r.families.empty()) {
        std::vector<std::vector<std::string>> rows{{"Family", "Parameters", "Jacobi", "Engel", "Generic?", "Obstructions", "Compact?"}};
        for (const auto& f : r.families) {
            const auto& v = f.verification;
            std::string generic = v.verdict ? (v.verdict->kind == VerdictKind::Generic ? "yes" : "no") : "error";
            rows.push_back({std::to_string(f.id.index()), params_label(f), v.jacobi_zero ? "ok" : "FAIL",
                            yes_no(v.engel), generic, obstruction_cell(f.compact.obstructions), compact_cell(f.compact)});
        }
        out += render_table(rows);
    }
    if (!r.documents.empty()) {
        if (!out.empty()) out += "\n";
        std::vector<std::vector<std::string>> rows{{"Document", "Jacobi", "Engel", "Symplectic", "Generic?", "Obstructions", "Chart"}};
        for (const auto& d : r.documents) {
            const auto& v = d.verification;
            std::string generic = v.verdict ? (v.verdict->kind == VerdictKind::Generic ? "yes" : "no") : "error";
            rows.push_back({d.name, v.jacobi_zero ? "ok" : "FAIL", yes_no(v.engel), yes_no(v.symplectic.all()), generic,
                            obstruction_cell(d.obstructions),
                            d.realization ? (d.realization->holds ? "ok" : "FAIL") : "-"});
        }
        out += render_table(rows);
    }
    if (r.sl2z) {
        if (!out.empty()) out += "\n";
        const auto& d = *r.sl2z;
        std::vector<std::vector<std::string>> rows{{"SL2(Z) lattice", "value"}};
        rows.push_back({"S", "[[" + d.s[0][0].str() + "," + d.s[0][1].str() + "],[" + d.s[1][0].str() + "," + d.s[1][1].str() + "]]"});
        rows.push_back({"c", d.c.str()});
        rows.push_back({"v1", "(" + d.basis[0][0].str() + ", " + d.basis[1][0].str() + ")"});
        rows.push_back({"v2", "(" + d.basis[0][1].str() + ", " + d.basis[1][1].str() + ")"});
        rows.push_back({"certificate", "[[" + d.certificate[0][0].str() + "," + d.certificate[0][1].str() + "],[" +
                                           d.certificate[1][0].str() + "," + d.certificate[1][1].str() + "]]"});
        rows.push_back({"certificate holds", yes_no(d.certificate_holds)});
        out += render_table(rows);
    }
    if (r.normal_form) {
        if (!out.empty()) out += "\n";
        const auto& n = *r.normal_form;
        std::string flag;
        for (auto x : n.engel_flag) flag += (flag.empty() ? "" : ",") + std::to_string(x);
        std::vector<std::vector<std::string>> rows{{"Normal form check", "result"}};
        rows.push_back({"Engel flag of <dy0 - y1 dx, dy1 - y2 dx>", "[" + flag + "]"});
        rows.push_back({"nilpotent model, Family 1(0, 0)", n.nil.holds ? "ok" : "FAIL"});
        rows.push_back({"exp model, Family 1(0, -beta^2)", n.sol.holds ? "ok" : "FAIL"});
        rows.push_back({"cos/sin model, Family 1(0, beta^2)", n.osc.holds ? "ok" : "FAIL"});
        out += render_table(rows);
    }
    return out;
}

}  // namespace lagengel

#endif  // LAGENGEL_REPORT_HPP
