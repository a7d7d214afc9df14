#pragma once

// Text formats shared by the fixtures, the tests, and the command-line tool:
//   * complexes: one `S v0 v1 ... [@stage]` line per simplex, `#` comment
//     lines, `STAB v0 ... vk n` star-stability declarations; `@` annotations
//     give the stage at which a simplex enters the exhaustion
//   * group presentations: `GEN a b` and `REL a b A c` lines, uppercase (or a
//     `^-1` suffix) marking the inverse of a generator
//   * stage schemas: `STAGE n: (-n, -1/n) U (1/n, n)` with an `eps` literal
//     and an optional `FROM k` line for the first stage; witness sets use the
//     same interval syntax with constant endpoints, `-inf`/`+inf`, and `{}`
//     for the empty set
//   * planar schemas: a `STEP (2, 0)` line plus `SEG (0, 0)-(1, -1)` lines
// Writers are deterministic and round-trip through the parsers.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exhaustion.hpp"
#include "presentation.hpp"
#include "schema.hpp"
#include "schema2d.hpp"

namespace limtop {
namespace detail {

struct SourceLine {
    int number = 0;
    std::string text;
};

inline std::vector<SourceLine> split_source(const std::string& text) {
    std::vector<SourceLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        out.push_back({number, line.substr(first, last - first + 1)});
    }
    return out;
}

inline std::vector<std::string> line_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline int parse_small_int(const std::string& tok, int line) {
    std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i == tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line);
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("expected an integer, got '" + tok + "'", line);
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw ParseError("integer '" + tok + "' is out of range", line);
    }
}

// ---------------------------------------------------------------------------
// Expression cursor: terms over Q(eps) with an optional stage variable.
// A parsed expression is kept as a map from the power of the stage variable
// to its coefficient, so `(1 - 2*eps)*n + 1/n` is {1: 1 - 2*eps, -1: 1}.

struct ExprCursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' " + what + ", got '" +
                                 rest_snippet() + "'",
                             line);
    }

    std::string rest_snippet() {
        skip_ws();
        std::string r = text.substr(pos, 12);
        return r.empty() ? "end of line" : r;
    }

    std::optional<std::string> try_ident() {
        skip_ws();
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::optional<Int> try_integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return Int(text.substr(start, pos - start));
    }
};

using VarTerm = std::map<int, FieldElem>;

inline VarTerm var_term_scale(const VarTerm& t, const FieldElem& c, int power_shift) {
    VarTerm out;
    if (c.is_zero()) return out;
    for (const auto& [p, coef] : t) out[p + power_shift] = coef * c;
    return out;
}

inline VarTerm parse_var_expr(ExprCursor& cur, const std::string& var, bool allow_var);

inline VarTerm parse_var_factor(ExprCursor& cur, const std::string& var, bool allow_var) {
    if (cur.accept('-')) {
        VarTerm t = parse_var_factor(cur, var, allow_var);
        for (auto& [p, coef] : t) coef = -coef;
        return t;
    }
    if (cur.accept('+')) return parse_var_factor(cur, var, allow_var);
    if (cur.accept('(')) {
        VarTerm t = parse_var_expr(cur, var, allow_var);
        cur.expect(')', "to close the factor");
        return t;
    }
    if (auto n = cur.try_integer()) return {{0, FieldElem(Rat(*n))}};
    if (auto id = cur.try_ident()) {
        if (*id == "eps") return {{0, FieldElem::eps()}};
        if (*id == var) {
            if (!allow_var)
                throw ParseError("the stage variable '" + var + "' is not allowed here",
                                 cur.line);
            return {{1, FieldElem(Rat(1))}};
        }
        throw ParseError("unknown symbol '" + *id + "'", cur.line);
    }
    throw ParseError("expected a number, 'eps', a variable, or '(', got '" +
                         cur.rest_snippet() + "'",
                     cur.line);
}

inline VarTerm parse_var_term(ExprCursor& cur, const std::string& var, bool allow_var) {
    VarTerm acc = parse_var_factor(cur, var, allow_var);
    for (;;) {
        char op = cur.peek();
        if (op != '*' && op != '/') return acc;
        ++cur.pos;
        VarTerm rhs = parse_var_factor(cur, var, allow_var);
        if (op == '*') {
            VarTerm out;
            for (const auto& [p, coef] : rhs)
                for (const auto& [q, c2] : var_term_scale(acc, coef, p)) {
                    auto [it, fresh] = out.try_emplace(q, c2);
                    if (!fresh) it->second = it->second + c2;
                }
            acc = std::move(out);
        } else {
            if (rhs.size() != 1)
                throw ParseError("can only divide by a single term", cur.line);
            const auto& [p, coef] = *rhs.begin();
            if (coef.is_zero()) throw ParseError("division by zero", cur.line);
            acc = var_term_scale(acc, FieldElem(Rat(1)) / coef, -p);
        }
    }
}

inline VarTerm parse_var_expr(ExprCursor& cur, const std::string& var, bool allow_var) {
    VarTerm acc = parse_var_term(cur, var, allow_var);
    for (;;) {
        char op = cur.peek();
        if (op != '+' && op != '-') return acc;
        ++cur.pos;
        VarTerm rhs = parse_var_term(cur, var, allow_var);
        if (op == '-')
            for (auto& [p, coef] : rhs) coef = -coef;
        for (const auto& [p, coef] : rhs) {
            auto [it, fresh] = acc.try_emplace(p, coef);
            if (!fresh) it->second = it->second + coef;
        }
    }
}

inline StageTerm to_stage_term(const VarTerm& t, int line) {
    StageTerm out{FieldElem(Rat(0)), FieldElem(Rat(0)), FieldElem(Rat(0))};
    for (const auto& [p, coef] : t) {
        if (coef.is_zero()) continue;
        if (p == 1)
            out.a = coef;
        else if (p == 0)
            out.b = coef;
        else if (p == -1)
            out.c = coef;
        else
            throw ParseError("stage terms allow only c, c*n, and c/n pieces", line);
    }
    return out;
}

inline FieldElem to_constant(const VarTerm& t, int line) {
    StageTerm st = to_stage_term(t, line);
    if (!st.a.is_zero() || !st.c.is_zero())
        throw ParseError("expected a constant endpoint", line);
    return st.b;
}

inline Piece1D parse_stage_interval(ExprCursor& cur, const std::string& var) {
    Piece1D p;
    if (cur.accept('['))
        p.lo_closed = true;
    else
        cur.expect('(', "to open an interval");
    p.lo = to_stage_term(parse_var_expr(cur, var, true), cur.line);
    cur.expect(',', "between the endpoints");
    p.hi = to_stage_term(parse_var_expr(cur, var, true), cur.line);
    if (cur.accept(']'))
        p.hi_closed = true;
    else
        cur.expect(')', "to close the interval");
    return p;
}

/// Endpoint of a witness interval: a constant, or one of -inf / +inf.
inline std::optional<bool> try_parse_infinity(ExprCursor& cur) {
    std::size_t mark = cur.pos;
    bool negative = false;
    if (cur.accept('-'))
        negative = true;
    else
        cur.accept('+');
    if (auto id = cur.try_ident()) {
        if (*id == "inf") return !negative;
    }
    cur.pos = mark;
    return std::nullopt;
}

inline Interval parse_const_interval(ExprCursor& cur) {
    Interval r;
    bool lo_bracket = false;
    if (cur.accept('['))
        lo_bracket = true;
    else
        cur.expect('(', "to open an interval");
    if (auto inf = try_parse_infinity(cur)) {
        if (*inf) throw ParseError("a lower endpoint cannot be +inf", cur.line);
        if (lo_bracket) throw ParseError("an unbounded end must be open", cur.line);
        r.lo_unbounded = true;
    } else {
        r.lo = to_constant(parse_var_expr(cur, "n", false), cur.line);
        r.lo_closed = lo_bracket;
    }
    cur.expect(',', "between the endpoints");
    if (auto inf = try_parse_infinity(cur)) {
        if (!*inf) throw ParseError("an upper endpoint cannot be -inf", cur.line);
        r.hi_unbounded = true;
        if (cur.accept(']')) throw ParseError("an unbounded end must be open", cur.line);
        cur.expect(')', "to close the interval");
    } else {
        r.hi = to_constant(parse_var_expr(cur, "n", false), cur.line);
        if (cur.accept(']'))
            r.hi_closed = true;
        else
            cur.expect(')', "to close the interval");
    }
    return r;
}

inline Vec2 parse_point(ExprCursor& cur) {
    cur.expect('(', "to open a point");
    FieldElem x = to_constant(parse_var_expr(cur, "n", false), cur.line);
    cur.expect(',', "between the coordinates");
    FieldElem y = to_constant(parse_var_expr(cur, "n", false), cur.line);
    cur.expect(')', "to close the point");
    return Vec2{std::move(x), std::move(y)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Complexes and exhaustions

/// A parsed complex file: the full complex, plus the stage at which each
/// simplex enters (when the file carried `@` annotations) and any declared
/// star stability.
struct ComplexDocument {
    FiniteComplex complex;
    std::map<Simplex, int> entry;
    std::map<Simplex, int> stability;
    bool staged = false;
    int max_stage = 0;
};

inline ComplexDocument parse_complex_document(const std::string& text) {
    ComplexDocument doc;
    std::vector<std::pair<Simplex, int>> declared;
    for (const auto& line : detail::split_source(text)) {
        auto f = detail::line_fields(line.text);
        auto simplex_of = [&](std::size_t first, std::size_t last) {
            std::vector<VertexId> vs;
            for (std::size_t i = first; i < last; ++i)
                vs.push_back(detail::parse_small_int(f[i], line.number));
            try {
                return Simplex(std::move(vs));
            } catch (const Error& e) {
                throw ParseError(e.what(), line.number);
            }
        };
        if (f[0] == "S") {
            if (f.size() < 2)
                throw ParseError("'S' needs at least one vertex", line.number);
            int stage = 0;
            std::size_t last = f.size();
            if (f.back().size() > 1 && f.back()[0] == '@') {
                stage = detail::parse_small_int(f.back().substr(1), line.number);
                if (stage < 0) throw ParseError("stage annotations are nonnegative", line.number);
                doc.staged = true;
                --last;
            }
            if (last < 2) throw ParseError("'S' needs at least one vertex", line.number);
            declared.emplace_back(simplex_of(1, last), stage);
        } else if (f[0] == "STAB") {
            if (f.size() < 3)
                throw ParseError("'STAB' needs a simplex and a stage", line.number);
            int stage = detail::parse_small_int(f.back(), line.number);
            if (stage < 0) throw ParseError("stability stages are nonnegative", line.number);
            doc.stability[simplex_of(1, f.size() - 1)] = stage;
        } else {
            throw ParseError("unknown directive '" + f[0] + "'", line.number);
        }
    }
    for (const auto& [s, stage] : declared) {
        doc.complex.insert_closed(s);
        auto [it, fresh] = doc.entry.try_emplace(s, stage);
        if (!fresh) it->second = std::min(it->second, stage);
    }
    // every face enters no later than the simplices it bounds
    std::vector<Simplex> order(doc.complex.simplices().begin(), doc.complex.simplices().end());
    std::sort(order.begin(), order.end(),
              [](const Simplex& a, const Simplex& b) { return a.dim() > b.dim(); });
    for (const Simplex& s : order) {
        auto [it, fresh] = doc.entry.try_emplace(s, 0);
        int stage = it->second;
        for (const Simplex& facet : s.facets()) {
            auto [fit, ffresh] = doc.entry.try_emplace(facet, stage);
            if (!ffresh) fit->second = std::min(fit->second, stage);
        }
        doc.max_stage = std::max(doc.max_stage, stage);
    }
    return doc;
}

/// Materialize the staged prefix described by the document and validate it.
inline Exhaustion to_exhaustion(const ComplexDocument& doc) {
    std::vector<FiniteComplex> stages(static_cast<std::size_t>(doc.max_stage) + 1);
    for (const auto& [s, stage] : doc.entry)
        for (int i = stage; i <= doc.max_stage; ++i)
            stages[static_cast<std::size_t>(i)].insert_raw(s);
    return build_exhaustion(std::move(stages), doc.stability);
}

/// One `S` line per maximal simplex, in canonical vertex order.
inline std::string write_complex(const FiniteComplex& k) {
    std::string out;
    for (const auto& s : k.simplices()) {
        bool maximal = true;
        for (const auto& t : k.simplices())
            if (!(t == s) && s.is_face_of(t)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        out += "S";
        for (VertexId v : s.vertices()) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

/// Every simplex of the final stage with its entry stage, then the declared
/// star stability; lossless for the materialized prefix.
inline std::string write_exhaustion(const Exhaustion& x) {
    if (x.prefix_length() == 0)
        throw PreconditionViolatedError("cannot serialize an exhaustion with an empty prefix");
    std::string out;
    const FiniteComplex& last = x.stage(x.prefix_length() - 1);
    for (const auto& s : last.simplices()) {
        int entry = 0;
        while (!x.stage(entry).contains(s)) ++entry;
        out += "S";
        for (VertexId v : s.vertices()) out += " " + std::to_string(v);
        out += " @" + std::to_string(entry) + "\n";
    }
    for (const auto& [s, stage] : x.stability) {
        out += "STAB";
        for (VertexId v : s.vertices()) out += " " + std::to_string(v);
        out += " " + std::to_string(stage) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Words and presentations

/// `a b A c` with uppercase (or a trailing ^-1) marking inverses.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names,
                       int line = -1) {
    std::map<std::string, int> letter;
    for (std::size_t g = 0; g < names.size(); ++g) {
        const std::string& n = names[g];
        letter[n] = static_cast<int>(g) + 1;
        if (n.size() == 1 && n[0] >= 'a' && n[0] <= 'z')
            letter[std::string(1, static_cast<char>(n[0] - 'a' + 'A'))] =
                -(static_cast<int>(g) + 1);
        letter[n + "^-1"] = -(static_cast<int>(g) + 1);
    }
    Word w;
    for (const std::string& tok : detail::line_fields(text)) {
        auto it = letter.find(tok);
        if (it == letter.end())
            throw ParseError("unknown generator '" + tok + "'", line);
        w.push_back(it->second);
    }
    return w;
}

inline Presentation parse_presentation(const std::string& text) {
    Presentation p;
    for (const auto& line : detail::split_source(text)) {
        auto f = detail::line_fields(line.text);
        if (f[0] == "GEN") {
            for (std::size_t i = 1; i < f.size(); ++i) {
                if (std::find(p.names.begin(), p.names.end(), f[i]) != p.names.end())
                    throw ParseError("generator '" + f[i] + "' declared twice", line.number);
                p.names.push_back(f[i]);
            }
            p.ngens = static_cast<int>(p.names.size());
        } else if (f[0] == "REL") {
            p.relators.push_back(
                parse_word(line.text.substr(3), p.names, line.number));
        } else {
            throw ParseError("unknown directive '" + f[0] + "'", line.number);
        }
    }
    return p;
}

inline std::string write_presentation(const Presentation& p) {
    Presentation q = p;
    if (q.names.empty() && q.ngens > 0) q.names = default_generator_names(q.ngens);
    std::string out = "GEN";
    for (const std::string& n : q.names) out += " " + n;
    out += "\n";
    for (const Word& r : q.relators) {
        out += "REL";
        if (!r.empty()) out += " " + q.word_to_string(r);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stage schemas and witness sets

inline Schema1D parse_schema1d(const std::string& text) {
    std::optional<Int> from;
    std::optional<std::vector<Piece1D>> pieces;
    for (const auto& line : detail::split_source(text)) {
        auto f = detail::line_fields(line.text);
        if (f[0] == "FROM") {
            if (f.size() != 2) throw ParseError("'FROM' takes one stage index", line.number);
            from = Int(detail::parse_small_int(f[1], line.number));
        } else if (f[0] == "STAGE") {
            if (pieces) throw ParseError("a schema has a single 'STAGE' line", line.number);
            detail::ExprCursor cur{line.text, 5, line.number};
            auto var = cur.try_ident();
            if (!var) throw ParseError("'STAGE' needs a variable name", line.number);
            cur.expect(':', "after the stage variable");
            std::vector<Piece1D> ps;
            ps.push_back(detail::parse_stage_interval(cur, *var));
            while (!cur.at_end()) {
                auto u = cur.try_ident();
                if (!u || *u != "U")
                    throw ParseError("expected 'U' between intervals, got '" +
                                         cur.rest_snippet() + "'",
                                     line.number);
                ps.push_back(detail::parse_stage_interval(cur, *var));
            }
            pieces = std::move(ps);
        } else {
            throw ParseError("unknown directive '" + f[0] + "'", line.number);
        }
    }
    if (!pieces) throw ParseError("schema needs a 'STAGE' line");
    return Schema1D(std::move(*pieces), from.value_or(Int(1)));
}

inline std::string write_schema1d(const Schema1D& s) {
    std::string out;
    if (s.n0() != 1) out += "FROM " + s.n0().str() + "\n";
    out += "STAGE n: ";
    for (std::size_t i = 0; i < s.pieces().size(); ++i) {
        if (i) out += " U ";
        out += s.pieces()[i].to_string();
    }
    out += "\n";
    return out;
}

/// `(0, +inf)`, `[1/2, 1] U (2, 3)`, or `{}` for the empty set.
inline SemilinearSet parse_semilinear(const std::string& text, int line = -1) {
    detail::ExprCursor cur{text, 0, line};
    if (cur.accept('{')) {
        cur.expect('}', "to close the empty set");
        if (!cur.at_end()) throw ParseError("trailing input after '{}'", line);
        return SemilinearSet(std::vector<Interval>{});
    }
    std::vector<Interval> parts;
    parts.push_back(detail::parse_const_interval(cur));
    while (!cur.at_end()) {
        auto u = cur.try_ident();
        if (!u || *u != "U")
            throw ParseError("expected 'U' between intervals, got '" + cur.rest_snippet() + "'",
                             line);
        parts.push_back(detail::parse_const_interval(cur));
    }
    return SemilinearSet(std::move(parts));
}

/// Compact form drops the space after interval commas: `(0,+inf)`.
inline std::string semilinear_to_string(const SemilinearSet& u, bool compact = false) {
    if (u.is_empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < u.parts().size(); ++i) {
        if (i) out += " U ";
        std::string part = u.parts()[i].to_string();
        if (compact) {
            std::string squeezed;
            for (char c : part)
                if (c != ' ') squeezed += c;
            part = std::move(squeezed);
        }
        out += part;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Planar schemas

inline Schema2D parse_schema2d(const std::string& text) {
    std::optional<Vec2> step;
    std::vector<Segment2> base;
    for (const auto& line : detail::split_source(text)) {
        auto f = detail::line_fields(line.text);
        if (f[0] == "STEP") {
            if (step) throw ParseError("a schema has a single 'STEP' line", line.number);
            detail::ExprCursor cur{line.text, 4, line.number};
            step = detail::parse_point(cur);
            if (!cur.at_end())
                throw ParseError("trailing input after the step", line.number);
        } else if (f[0] == "SEG") {
            detail::ExprCursor cur{line.text, 3, line.number};
            Vec2 a = detail::parse_point(cur);
            cur.expect('-', "between the segment endpoints");
            Vec2 b = detail::parse_point(cur);
            if (!cur.at_end())
                throw ParseError("trailing input after the segment", line.number);
            base.push_back(Segment2{std::move(a), std::move(b)});
        } else {
            throw ParseError("unknown directive '" + f[0] + "'", line.number);
        }
    }
    if (!step) throw ParseError("planar schema needs a 'STEP' line");
    if (base.empty()) throw ParseError("planar schema needs at least one 'SEG' line");
    return Schema2D(std::move(base), std::move(*step));
}

inline std::string write_schema2d(const Schema2D& s) {
    std::string out = "STEP " + s.step().to_string() + "\n";
    for (const Segment2& seg : s.base()) out += "SEG " + seg.to_string() + "\n";
    return out;
}

} // namespace limtop
