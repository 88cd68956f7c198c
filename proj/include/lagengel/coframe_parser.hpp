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

#ifndef LAGENGEL_COFRAME_PARSER_HPP
#define LAGENGEL_COFRAME_PARSER_HPP

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coframed_algebra.hpp"
#include "errors.hpp"
#include "models.hpp"

namespace lagengel {

/// Identifier used but never declared.
class UndeclaredSymbolError : public ParseError {
public:
    UndeclaredSymbolError(const std::string& symbol, std::size_t line, std::size_t column)
        : ParseError("undeclared symbol '" + symbol + "'", line, column), symbol_(symbol) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

struct CoframeDocument {
    CoframedAlgebra algebra;
    std::optional<ChartRealization> realization;
    std::vector<std::string> warnings;
};

namespace parser_detail {

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eq, Assign, Colon, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

inline std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char ch = static_cast<unsigned char>(line[i]);
        const std::size_t col = i + 1;
        if (std::isspace(ch)) {
            ++i;
        } else if (ch == '#') {
            break;
        } else if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
            out.push_back({Tok::Ident, line.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            out.push_back({Tok::Number, line.substr(i, j - i), col});
            i = j;
        } else if (line.compare(i, 3, "\xE2\x88\x92") == 0) {  // U+2212 minus sign
            out.push_back({Tok::Minus, "-", col});
            i += 3;
        } else if (line.compare(i, 2, ":=") == 0) {
            out.push_back({Tok::Assign, ":=", col});
            i += 2;
        } else {
            Tok k;
            switch (ch) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '/': k = Tok::Slash; break;
                case '^': k = Tok::Caret; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '=': k = Tok::Eq; break;
                case ':': k = Tok::Colon; break;
                default: throw ParseError(std::string("unexpected character '") + line[i] + "'", line_no, col);
            }
            out.push_back({k, std::string(1, line[i]), col});
            ++i;
        }
    }
    out.push_back({Tok::End, "", line.size() + 1});
    return out;
}

inline std::optional<unsigned> basis_index(const std::string& ident, char prefix) {
    if (ident.size() == 2 && ident[0] == prefix && ident[1] >= '1' && ident[1] <= '4')
        return static_cast<unsigned>(ident[1] - '0');
    return std::nullopt;
}

/// Scalar symbols in scope and how the basis 1-forms are spelled.
struct Scope {
    std::set<std::string> scalars;
    bool chart = false;                   // forms are d<coordinate>
    std::vector<std::string> coordinates;  // chart mode only
};

/// Recursive descent over one line; forms of any degree over Poly scalars.
class ExprParser {
public:
    using F = Form<Poly>;

    ExprParser(const std::vector<Token>& toks, std::size_t pos, std::size_t line, const Scope& scope,
               std::vector<std::string>& warnings)
        : t_(toks), p_(pos), line_(line), scope_(scope), warnings_(warnings) {}

    F parse_sum() {
        F acc;
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                sign = next().kind == Tok::Minus ? -1 : 1;
            } else if (!first) {
                break;
            }
            F term = parse_product();
            acc += sign == 1 ? term : -term;
            first = false;
        }
        return acc;
    }

    Poly parse_scalar() {
        const std::size_t col = peek().column;
        F f = parse_sum();
        if (!f.has_degree(0) && !f.is_zero()) fail("expected a scalar expression", col);
        return f.component(0);
    }

    void expect_end() {
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek().column);
    }
    std::size_t position() const { return p_; }

private:
    F parse_product() {
        F acc = parse_power();
        while (true) {
            if (peek().kind == Tok::Star) {
                next();
                F rhs = parse_power();
                acc = combine(acc, rhs);
            } else if (peek().kind == Tok::Slash) {
                const std::size_t col = next().column;
                F rhs = parse_power();
                if (!rhs.has_degree(0) || !rhs.component(0).is_constant() || rhs.component(0).is_zero())
                    fail("division only by nonzero rational constants", col);
                acc = Poly(1 / rhs.component(0).constant_value()) * acc;
            } else {
                break;
            }
        }
        return acc;
    }

    F parse_power() {
        F base = parse_atom();
        while (peek().kind == Tok::Caret) {
            const std::size_t col = next().column;
            if (peek().kind == Tok::Number) {
                if (!base.has_degree(0) && !base.is_zero()) fail("powers apply to scalars only", col);
                unsigned e = static_cast<unsigned>(std::stoul(next().text));
                base = F::scalar(base.component(0).pow(e));
            } else {
                F rhs = parse_atom();
                if (base.has_degree(0) || rhs.has_degree(0)) fail("'^' between forms needs two forms", col);
                base = combine(base, rhs);
            }
        }
        return base;
    }

    F parse_atom() {
        const Token tok = next();
        switch (tok.kind) {
            case Tok::Number: {
                Rational r{Integer(tok.text)};
                return F::scalar(Poly(r));
            }
            case Tok::LParen: {
                F inner = parse_sum();
                if (next().kind != Tok::RParen) fail("expected ')'", tok.column);
                return inner;
            }
            case Tok::Ident: return ident(tok);
            default: fail(tok.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + tok.text + "'",
                          tok.column);
        }
        return F();
    }

    F ident(const Token& tok) {
        if (!scope_.chart) {
            if (auto i = basis_index(tok.text, 'w')) return F::basis(*i);
        } else if (tok.text.size() > 1 && tok.text[0] == 'd') {
            const std::string c = tok.text.substr(1);
            for (unsigned i = 1; i <= kDim; ++i)
                if (scope_.coordinates[i - 1] == c) return F::basis(i);
        }
        if (!scope_.scalars.contains(tok.text)) throw UndeclaredSymbolError(tok.text, line_, tok.column);
        return F::scalar(Poly::symbol(tok.text));
    }

    F combine(const F& x, const F& y) {
        F out = wedge(x, y);
        if (out.is_zero() && !x.is_zero() && !y.is_zero() && !x.has_degree(0) && !y.has_degree(0))
            warnings_.push_back("line " + std::to_string(line_) + ": " + x.str() + " ^ " + y.str() +
                                " vanishes by alternation");
        return out;
    }

    const Token& peek() const { return t_[p_]; }
    const Token& next() { return t_[p_ < t_.size() - 1 ? p_++ : p_]; }
    [[noreturn]] void fail(const std::string& msg, std::size_t col) const { throw ParseError(msg, line_, col); }

    const std::vector<Token>& t_;
    std::size_t p_;
    std::size_t line_;
    const Scope& scope_;
    std::vector<std::string>& warnings_;
};

inline std::vector<std::string> ident_list(const std::vector<Token>& toks, std::size_t from, std::size_t line) {
    std::vector<std::string> out;
    for (std::size_t i = from; toks[i].kind != Tok::End; ++i) {
        if (toks[i].kind != Tok::Ident) throw ParseError("expected an identifier", line, toks[i].column);
        out.push_back(toks[i].text);
    }
    return out;
}

}  // namespace parser_detail

/// Parses a coframe document:
///
///   params: a b
///   dw1 = w2^w3 + a*w1^w3
///   dw2 = w3^w4
///   dw3 = 0
///   dw4 = b*w2^w3
///
/// Optional chart lines realize the coframe in coordinates:
///
///   chart: x y u v
///   const: beta ibeta      gen: E F
///   inverse: beta ibeta    trig: C S
///   dE/dy = beta*E
///   let b = -beta^2
///   w1 := u*dy + dv
inline CoframeDocument parse_document(const std::string& text) {
    using namespace parser_detail;
    CoframeDocument doc;
    Scope params;
    bool have_params = false;
    std::array<std::optional<CoframeForm>, kDim> dlines;
    std::array<std::size_t, kDim> dline_at{};

    DiffRing ring;
    bool have_chart = false;
    Scope chart_scope;
    chart_scope.chart = true;
    std::map<std::string, Poly> lets;
    std::array<std::optional<Form<Poly>>, kDim> realize;
    struct Pending {
        std::vector<Token> toks;
        std::size_t line;
    };
    std::vector<Pending> derivs, let_lines, realize_lines;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = tokenize(raw, line_no);
        if (toks.front().kind == Tok::End) continue;
        const Token& head = toks[0];
        const bool keyword = head.kind == Tok::Ident && toks[1].kind == Tok::Colon;
        if (keyword) {
            auto names = ident_list(toks, 2, line_no);
            try {
                if (head.text == "params") {
                    if (have_params) throw ParseError("duplicate params line", line_no, head.column);
                    have_params = true;
                    for (const auto& n : names) {
                        if (basis_index(n, 'w')) throw ParseError("'" + n + "' is reserved", line_no, head.column);
                        params.scalars.insert(n);
                    }
                } else if (head.text == "chart") {
                    if (have_chart) throw ParseError("duplicate chart line", line_no, head.column);
                    if (names.size() != kDim) throw ParseError("chart needs four coordinates", line_no, head.column);
                    have_chart = true;
                    for (const auto& n : names) ring.add_coordinate(n);
                    chart_scope.coordinates = names;
                } else if (head.text == "const") {
                    for (const auto& n : names) ring.add_constant(n);
                } else if (head.text == "gen") {
                    for (const auto& n : names) ring.add_generator(n);
                } else if (head.text == "trig" || head.text == "inverse") {
                    if (names.size() != 2) throw ParseError(head.text + " takes two symbols", line_no, head.column);
                    if (head.text == "trig") ring.add_trig_pair(names[0], names[1]);
                    else ring.add_inverse_pair(names[0], names[1]);
                } else {
                    throw ParseError("unknown keyword '" + head.text + "'", line_no, head.column);
                }
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no, head.column);
            }
            continue;
        }
        if (head.kind == Tok::Ident && head.text == "let") {
            let_lines.push_back({toks, line_no});
            continue;
        }
        if (head.kind == Tok::Ident && toks[1].kind == Tok::Assign) {
            realize_lines.push_back({toks, line_no});
            continue;
        }
        if (head.kind == Tok::Ident && toks[1].kind == Tok::Slash) {
            derivs.push_back({toks, line_no});
            continue;
        }
        if (head.kind == Tok::Ident && basis_index(head.text.size() == 3 ? head.text.substr(1) : "", 'w') &&
            head.text[0] == 'd') {
            if (toks[1].kind != Tok::Eq) throw ParseError("expected '='", line_no, toks[1].column);
            unsigned i = *basis_index(head.text.substr(1), 'w');
            if (dlines[i - 1])
                throw ParseError("duplicate line for dw" + std::to_string(i) + " (first on line " +
                                     std::to_string(dline_at[i - 1]) + ")",
                                 line_no, head.column);
            ExprParser p(toks, 2, line_no, params, doc.warnings);
            CoframeForm rhs = p.parse_sum();
            p.expect_end();
            if (!rhs.is_zero() && !rhs.has_degree(2))
                throw ParseError("dw" + std::to_string(i) + " must be a 2-form, got " + rhs.str(), line_no,
                                 toks[2].column);
            dlines[i - 1] = rhs;
            dline_at[i - 1] = line_no;
            continue;
        }
        throw ParseError("unrecognized line", line_no, head.column);
    }
    for (unsigned i = 0; i < kDim; ++i)
        if (!dlines[i]) throw ParseError("missing line for dw" + std::to_string(i + 1), line_no + 1, 1);

    std::vector<std::string> names(params.scalars.begin(), params.scalars.end());
    doc.algebra = CoframedAlgebra(names, {*dlines[0], *dlines[1], *dlines[2], *dlines[3]});

    if (!have_chart) {
        if (!derivs.empty() || !realize_lines.empty() || !let_lines.empty()) {
            const auto& p = !derivs.empty() ? derivs[0] : !realize_lines.empty() ? realize_lines[0] : let_lines[0];
            throw ParseError("chart lines need a 'chart:' declaration", p.line, 1);
        }
        return doc;
    }

    for (const auto& c : ring.coordinates()) chart_scope.scalars.insert(c);
    for (const auto& c : ring.constants()) chart_scope.scalars.insert(c);
    for (const auto& g : ring.generators()) chart_scope.scalars.insert(g);
    Scope ring_scope = chart_scope;
    ring_scope.chart = false;
    ring_scope.coordinates.clear();

    for (const auto& d : derivs) {
        // dG/dx = expr
        const auto& t = d.toks;
        if (t[0].text.size() < 2 || t[0].text[0] != 'd' || t[2].kind != Tok::Ident || t[2].text.size() < 2 ||
            t[2].text[0] != 'd' || t[3].kind != Tok::Eq)
            throw ParseError("expected 'dG/dx = expression'", d.line, t[0].column);
        const std::string g = t[0].text.substr(1), x = t[2].text.substr(1);
        ExprParser p(t, 4, d.line, ring_scope, doc.warnings);
        Poly value = p.parse_scalar();
        p.expect_end();
        try {
            ring.set_derivative(g, x, value);
        } catch (const Error& e) {
            throw ParseError(e.what(), d.line, t[0].column);
        }
    }
    for (const auto& l : let_lines) {
        const auto& t = l.toks;
        if (t[1].kind != Tok::Ident || t[2].kind != Tok::Eq)
            throw ParseError("expected 'let name = expression'", l.line, t[0].column);
        if (!params.scalars.contains(t[1].text)) throw UndeclaredSymbolError(t[1].text, l.line, t[1].column);
        ExprParser p(t, 3, l.line, ring_scope, doc.warnings);
        lets[t[1].text] = p.parse_scalar();
        p.expect_end();
    }
    for (const auto& r : realize_lines) {
        const auto& t = r.toks;
        auto i = basis_index(t[0].text, 'w');
        if (!i) throw ParseError("expected 'wN := 1-form'", r.line, t[0].column);
        if (realize[*i - 1]) throw ParseError("duplicate realization of " + t[0].text, r.line, t[0].column);
        ExprParser p(t, 2, r.line, chart_scope, doc.warnings);
        auto f = p.parse_sum();
        p.expect_end();
        if (!f.has_degree(1)) throw ParseError(t[0].text + " must be a nonzero 1-form", r.line, t[2].column);
        realize[*i - 1] = f;
    }
    for (unsigned i = 0; i < kDim; ++i)
        if (!realize[i]) throw ParseError("chart given but w" + std::to_string(i + 1) + " not realized", line_no + 1, 1);
    for (const auto& n : names)
        if (!lets.contains(n)) lets[n] = Poly::symbol(n);

    CoordChart chart(ring);
    std::array<ChartForm, kDim> coframe;
    for (unsigned i = 0; i < kDim; ++i) coframe[i] = realize[i]->map([&](const Poly& c) { return chart.scalar(c); });
    doc.realization = ChartRealization{chart, coframe, lets};
    return doc;
}

inline CoframedAlgebra parse_coframe(const std::string& text) { return parse_document(text).algebra; }

namespace parser_detail {

inline std::string coefficient_text(const Poly& c) {
    if (c.is_monomial()) return c.str();
    return "(" + c.str() + ")";
}

}  // namespace parser_detail

/// Structure lines in the document syntax; parse_coframe(emit_coframe(A)) == A.
inline std::string emit_coframe(const CoframedAlgebra& a) {
    std::string out;
    if (!a.parameters().empty()) {
        out += "params:";
        for (const auto& p : a.parameters()) out += " " + p;
        out += "\n";
    }
    for (unsigned i = 1; i <= kDim; ++i) {
        out += "dw" + std::to_string(i) + " =";
        const auto& f = a.d(i);
        if (f.is_zero()) out += " 0";
        bool first = true;
        for (const auto& [s, c] : f.components()) {
            auto idx = indices_of(s);
            std::string mono = "w" + std::to_string(idx[0]) + "^w" + std::to_string(idx[1]);
            Poly coef = c;
            bool negative = c.is_monomial() && c.leading_term().second < 0;
            if (negative) coef = -c;
            out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
            if (coef != Poly(1)) out += parser_detail::coefficient_text(coef) + "*";
            out += mono;
            first = false;
        }
        out += "\n";
    }
    return out;
}

}  // namespace lagengel

#endif  // LAGENGEL_COFRAME_PARSER_HPP
