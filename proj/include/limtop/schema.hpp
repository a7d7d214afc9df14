#pragma once

// Stage schemas: directed families X_{n0} <= X_{n0+1} <= ... of semilinear
// subsets of Q(eps), where each piece is an interval whose endpoints move
// with the stage as a*n + b + c/n (a, b, c in Q(eps)).  The module answers
// questions about the colimit X = U_n X_n exactly:
//
//   * connectivity of X in the direct-limit topology (a subset of X is
//     clopen iff its trace on every stage is clopen, so the components of X
//     are the "clusters" of pieces that eventually overlap or touch);
//   * whether the stages can be re-chosen connected without changing X;
//   * clopen separation witnesses U, either arbitrary semilinear U (traced
//     against X) or U lying inside X, and bounded-grammar search for them;
//   * whether X itself is semilinear, with the obstruction named when not.
//
// Everything reduces to the eventual sign of alpha*n^2 + beta*n + gamma with
// coefficients in Q(eps): expand by eps-level after clearing denominators;
// the first level that is not identically zero decides, with an explicit
// threshold past every root, and the finite prefix is scanned exactly.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "semilinear.hpp"
#include "union_find.hpp"

namespace limtop {

// ---------------------------------------------------------------------------
// Eventual signs of quadratic stage expressions

/// alpha*n^2 + beta*n + gamma as a function of the stage n.
struct QuadTerm {
    FieldElem a, b, c;
};

/// Verdict of an eventual-sign computation: sign(q(n)) == sign for every
/// integer n >= from.
struct EventualSign {
    int sign = 0;
    Int from = 0;
};

inline Int rat_ceil(const Rat& r) { return -rat_floor(Rat(-r)); }

namespace detail {
inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
}

/// Exact eventual sign of a quadratic stage expression.  Clearing the
/// (positive) denominators leaves polynomials A, B, C in eps; grouping by
/// eps-level, the lowest level where (A_k, B_k, C_k) is not identically zero
/// dominates every higher level at every stage, and within that level the
/// usual root bound gives a threshold past which the sign is constant.
inline EventualSign eventual_sign(const QuadTerm& q) {
    Poly A = q.a.num() * q.b.den() * q.c.den();
    Poly B = q.b.num() * q.a.den() * q.c.den();
    Poly C = q.c.num() * q.a.den() * q.b.den();
    int top = std::max({A.degree(), B.degree(), C.degree()});
    for (int k = 0; k <= top; ++k) {
        Rat ak = A.coeff(k), bk = B.coeff(k), ck = C.coeff(k);
        if (ak == 0 && bk == 0 && ck == 0) continue;
        if (ak != 0) {
            Rat bound = std::max(detail::rat_abs(bk), detail::rat_abs(ck)) / detail::rat_abs(ak);
            return {ak < 0 ? -1 : 1, rat_ceil(bound) + 2};
        }
        if (bk != 0)
            return {bk < 0 ? -1 : 1, rat_ceil(detail::rat_abs(ck) / detail::rat_abs(bk)) + 1};
        return {ck < 0 ? -1 : 1, Int(0)};
    }
    return {0, Int(0)};
}

/// Exact sign of q at one concrete stage.
inline int quad_sign_at(const QuadTerm& q, const Int& n) {
    FieldElem fn{Rat(n)};
    return (q.a * fn * fn + q.b * fn + q.c).sign();
}

/// A constraint "the sign of this expression stays within the allowed set".
struct SignCond {
    QuadTerm term;
    bool allow_neg = false, allow_zero = false, allow_pos = false;

    bool allows(int s) const { return s < 0 ? allow_neg : s > 0 ? allow_pos : allow_zero; }
    bool holds_at(const Int& n) const { return allows(quad_sign_at(term, n)); }
};

struct CondVerdict {
    bool holds = true;
    Int from = 0; ///< all signs involved are constant for n >= from
};

/// Do all conditions hold for every sufficiently large stage?
inline CondVerdict conds_eventual(const std::vector<SignCond>& conds) {
    CondVerdict v;
    for (const SignCond& c : conds) {
        EventualSign es = eventual_sign(c.term);
        v.from = std::max(v.from, es.from);
        if (!c.allows(es.sign)) v.holds = false;
    }
    return v;
}

inline bool conds_hold_at(const std::vector<SignCond>& conds, const Int& n) {
    for (const SignCond& c : conds)
        if (!c.holds_at(n)) return false;
    return true;
}

/// Cap on how many concrete stages a prefix scan may visit before the
/// decision procedure gives up.
inline const Int kStageScanBudget = 100000;

namespace detail {
inline void check_scan_budget(const Int& lo, const Int& hi) {
    if (hi - lo > kStageScanBudget)
        throw BudgetExceededError("deciding a stage condition needs a scan of " +
                                  Int(hi - lo).str() + " stages (budget " +
                                  kStageScanBudget.str() + ")");
}
}

/// Do all conditions hold at every stage n >= n0?  Exact: the eventual
/// verdict covers the tail, and the finite prefix is scanned stage by stage.
inline bool conds_hold_for_all_stages(const std::vector<SignCond>& conds, const Int& n0) {
    CondVerdict v = conds_eventual(conds);
    if (!v.holds) return false;
    if (v.from > n0) {
        detail::check_scan_budget(n0, v.from);
        for (Int n = n0; n < v.from; ++n)
            if (!conds_hold_at(conds, n)) return false;
    }
    return true;
}

/// Earliest stage n >= n0 where all conditions hold simultaneously, if any.
inline std::optional<Int> conds_first_stage(const std::vector<SignCond>& conds, const Int& n0) {
    CondVerdict v = conds_eventual(conds);
    Int hi = std::max(n0, v.from);
    detail::check_scan_budget(n0, hi);
    for (Int n = n0; n < hi; ++n)
        if (conds_hold_at(conds, n)) return n;
    if (v.holds) return hi;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Schemas

/// One moving endpoint: value at stage n is a*n + b + c/n.
struct StageTerm {
    FieldElem a, b, c;

    StageTerm() = default;
    StageTerm(FieldElem a_, FieldElem b_, FieldElem c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    FieldElem eval(const Int& n) const {
        FieldElem fn{Rat(n)};
        return a * fn + b + c / fn;
    }

    /// For n > 0 the sign of a*n + b + c/n equals the sign of a*n^2 + b*n + c.
    QuadTerm quad() const { return {a, b, c}; }

    bool constant() const { return a.is_zero() && c.is_zero(); }

    StageTerm operator-(const StageTerm& o) const { return {a - o.a, b - o.b, c - o.c}; }
    StageTerm operator-() const { return {-a, -b, -c}; }
    bool operator==(const StageTerm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const StageTerm& o) const { return !(*this == o); }

    std::string to_string() const;
};

namespace detail {
/// Coefficient rendering for term strings: wrap sums so "1 - 2*eps" becomes
/// a legible factor "(1 - 2*eps)*n".
inline std::string factor_string(const FieldElem& x) {
    std::string s = x.to_string();
    if (s.find(' ') != std::string::npos && s.front() != '(') return "(" + s + ")";
    return s;
}

inline void append_term(std::string& out, const std::string& piece) {
    if (out.empty()) {
        out = piece;
    } else if (piece.front() == '-') {
        out += " - " + piece.substr(1);
    } else {
        out += " + " + piece;
    }
}
}

inline std::string StageTerm::to_string() const {
    std::string out;
    if (!a.is_zero()) {
        if (a == FieldElem(1))
            detail::append_term(out, "n");
        else if (a == FieldElem(-1))
            detail::append_term(out, "-n");
        else
            detail::append_term(out, detail::factor_string(a) + "*n");
    }
    if (!b.is_zero()) detail::append_term(out, b.to_string());
    if (!c.is_zero()) {
        if (c == FieldElem(1))
            detail::append_term(out, "1/n");
        else if (c == FieldElem(-1))
            detail::append_term(out, "-1/n");
        else
            detail::append_term(out, detail::factor_string(c) + "/n");
    }
    return out.empty() ? "0" : out;
}

namespace detail {
inline std::string span_string(const StageTerm& lo, const StageTerm& hi,
                               bool lo_closed, bool hi_closed) {
    return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
           (hi_closed ? "]" : ")");
}
}

/// One moving interval of a schema.  Both endpoints are finite at every
/// stage; the colimit may still be unbounded when an endpoint grows with n.
struct Piece1D {
    StageTerm lo, hi;
    bool lo_closed = false, hi_closed = false;

    Interval at(const Int& n) const {
        return Interval{lo.eval(n), hi.eval(n), lo_closed, hi_closed, false, false};
    }

    std::string to_string() const {
        return detail::span_string(lo, hi, lo_closed, hi_closed);
    }
};

/// A directed family of semilinear sets X_n, n >= n0, each a finite union of
/// moving intervals.  Stage terms divide by n, so schemas start at n0 >= 1.
class Schema1D {
public:
    Schema1D(std::vector<Piece1D> pieces, Int n0)
        : pieces_(std::move(pieces)), n0_(std::move(n0)) {
        if (n0_ < 1)
            throw PreconditionViolatedError("schema stages start at n0 >= 1, got n0 = " + n0_.str());
    }

    const std::vector<Piece1D>& pieces() const { return pieces_; }
    const Int& n0() const { return n0_; }

private:
    std::vector<Piece1D> pieces_;
    Int n0_;
};

/// The concrete stage X_n as a canonical semilinear set.
inline SemilinearSet stage_set(const Schema1D& s, const Int& n) {
    if (n < s.n0())
        throw PreconditionViolatedError("stage " + n.str() + " is below the schema's first stage " +
                                        s.n0().str());
    std::vector<Interval> parts;
    parts.reserve(s.pieces().size());
    for (const Piece1D& p : s.pieces()) parts.push_back(p.at(n));
    return SemilinearSet(std::move(parts));
}

// ---------------------------------------------------------------------------
// Monotonicity

struct MonotoneReport {
    bool monotone = true;
    std::size_t piece = 0;               ///< offending piece when not monotone
    std::optional<Int> failure_stage;    ///< stage n with X_n not contained in X_{n+1}
    std::string detail;
};

namespace detail {
inline SignCond nonempty_cond(const Piece1D& p) {
    // hi - lo > 0, or = 0 when the single point is actually included.
    return SignCond{(p.hi - p.lo).quad(), false, p.lo_closed && p.hi_closed, true};
}

/// Sign of t(n+1) - t(n) = a - c/(n(n+1)) matches a*n^2 + a*n - c for n >= 1.
inline QuadTerm step_delta(const StageTerm& t) { return QuadTerm{t.a, t.a, -t.c}; }
}

/// Verify that each piece grows with the stage: piece(n) is contained in
/// piece(n+1) for every n >= n0 (empty stages are fine).  This is the
/// directedness hypothesis every colimit-level question below relies on.
inline MonotoneReport monotone_verify(const Schema1D& s) {
    for (std::size_t i = 0; i < s.pieces().size(); ++i) {
        const Piece1D& p = s.pieces()[i];
        QuadTerm width = (p.hi - p.lo).quad();
        bool width_zero_empty = !(p.lo_closed && p.hi_closed);
        QuadTerm lo_delta = detail::step_delta(p.lo);
        QuadTerm hi_delta = detail::step_delta(p.hi);

        EventualSign we = eventual_sign(width);
        EventualSign le = eventual_sign(lo_delta);
        EventualSign he = eventual_sign(hi_delta);

        auto empty_sign = [&](int sgn) { return sgn < 0 || (sgn == 0 && width_zero_empty); };
        auto ok_at = [&](const Int& n) {
            if (empty_sign(quad_sign_at(width, n))) return true;
            return quad_sign_at(lo_delta, n) <= 0 && quad_sign_at(hi_delta, n) >= 0;
        };

        bool tail_ok = empty_sign(we.sign) || (le.sign <= 0 && he.sign >= 0);
        Int settle = std::max({we.from, le.from, he.from, s.n0()});
        detail::check_scan_budget(s.n0(), settle);

        std::optional<Int> bad;
        for (Int n = s.n0(); n < settle; ++n) {
            if (!ok_at(n)) {
                bad = n;
                break;
            }
        }
        if (!bad && !tail_ok) bad = settle;
        if (bad) {
            MonotoneReport r;
            r.monotone = false;
            r.piece = i;
            r.failure_stage = bad;
            r.detail = "piece " + p.to_string() + " at stage " + bad->str() +
                       " is not contained in its successor";
            return r;
        }
    }
    return {};
}

inline void require_monotone(const Schema1D& s) {
    MonotoneReport r = monotone_verify(s);
    if (!r.monotone) throw NonMonotoneError(r.detail);
}

// ---------------------------------------------------------------------------
// Colimit components

/// One component of the colimit: the eventual convex hull of a maximal
/// family of pieces that eventually overlap or touch.
struct Hull {
    StageTerm lo, hi;
    bool lo_closed = false, hi_closed = false;
    std::vector<std::size_t> pieces; ///< indices into the schema's piece list

    std::string describe() const {
        return detail::span_string(lo, hi, lo_closed, hi_closed);
    }
};

struct SchemaAnalysis {
    std::vector<Hull> clusters; ///< components, in eventual left-to-right order
    Int settled_from = 1;       ///< every sign the analysis used is constant from here on
};

namespace detail {
/// hi of p reaches lo of q: the gap sign is positive, or zero with one of
/// the facing endpoints closed (so the union has no puncture there).
inline SignCond reach_cond(const Piece1D& p, const Piece1D& q) {
    return SignCond{(p.hi - q.lo).quad(), false, p.hi_closed || q.lo_closed, true};
}
}

/// Group the pieces into colimit components.  A piece joins a component when
/// it is eventually nonempty and eventually overlaps or touches the others;
/// for growing pieces "eventually" and "at some stage" agree, and a clopen
/// subset of the colimit is exactly a union of these components.
inline SchemaAnalysis analyze_schema(const Schema1D& s) {
    SchemaAnalysis an;
    an.settled_from = s.n0();
    const auto& pieces = s.pieces();

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::vector<SignCond> ne{detail::nonempty_cond(pieces[i])};
        CondVerdict v = conds_eventual(ne);
        an.settled_from = std::max(an.settled_from, v.from);
        if (v.holds) live.push_back(i);
    }

    UnionFind uf(live.size());
    for (std::size_t x = 0; x < live.size(); ++x) {
        for (std::size_t y = x + 1; y < live.size(); ++y) {
            const Piece1D& p = pieces[live[x]];
            const Piece1D& q = pieces[live[y]];
            std::vector<SignCond> joined{detail::reach_cond(p, q), detail::reach_cond(q, p)};
            CondVerdict v = conds_eventual(joined);
            an.settled_from = std::max(an.settled_from, v.from);
            if (v.holds) uf.unite(x, y);
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t x = 0; x < live.size(); ++x) groups[uf.find(x)].push_back(x);

    for (const auto& [root, members] : groups) {
        Hull h;
        bool first = true;
        for (std::size_t x : members) {
            const Piece1D& p = pieces[live[x]];
            h.pieces.push_back(live[x]);
            if (first) {
                h.lo = p.lo;
                h.hi = p.hi;
                h.lo_closed = p.lo_closed;
                h.hi_closed = p.hi_closed;
                first = false;
                continue;
            }
            EventualSign dlo = eventual_sign((p.lo - h.lo).quad());
            an.settled_from = std::max(an.settled_from, dlo.from);
            if (dlo.sign < 0) {
                h.lo = p.lo;
                h.lo_closed = p.lo_closed;
            } else if (dlo.sign == 0) { // identical endpoint terms
                h.lo_closed = h.lo_closed || p.lo_closed;
            }
            EventualSign dhi = eventual_sign((p.hi - h.hi).quad());
            an.settled_from = std::max(an.settled_from, dhi.from);
            if (dhi.sign > 0) {
                h.hi = p.hi;
                h.hi_closed = p.hi_closed;
            } else if (dhi.sign == 0) {
                h.hi_closed = h.hi_closed || p.hi_closed;
            }
        }
        std::sort(h.pieces.begin(), h.pieces.end());
        an.clusters.push_back(std::move(h));
    }

    // Distinct components have eventually distinct left endpoints, so this
    // order is the eventual left-to-right order on the line.
    std::stable_sort(an.clusters.begin(), an.clusters.end(), [&](const Hull& a, const Hull& b) {
        EventualSign d = eventual_sign((a.lo - b.lo).quad());
        if (d.sign != 0) return d.sign < 0;
        return eventual_sign((a.hi - b.hi).quad()).sign < 0;
    });
    return an;
}

// ---------------------------------------------------------------------------
// Connectivity verdicts

struct ConnectivityReport {
    bool connected = true;
    std::size_t component_count = 0;
    std::vector<std::string> components; ///< eventual hull of each component
    Int settled_from = 1;
};

/// Connectivity of the colimit in the direct-limit topology.  Throws
/// NonMonotoneError when the schema is not a directed family.
inline ConnectivityReport ld_connected(const Schema1D& s) {
    require_monotone(s);
    SchemaAnalysis an = analyze_schema(s);
    ConnectivityReport r;
    r.component_count = an.clusters.size();
    r.connected = r.component_count <= 1;
    r.settled_from = an.settled_from;
    for (const Hull& h : an.clusters) r.components.push_back(h.describe());
    return r;
}

struct OpConnectedReport {
    bool op_connected = true;
    Int verified_at_stage = 1;
    std::size_t stage_components = 0;
};

/// Can the stages be re-chosen connected with the same colimit?  For a
/// directed schema this holds exactly when the colimit is connected, and the
/// check is deliberately independent of analyze_schema: it finds one stage N
/// where every relevant sign has settled and counts the components of the
/// concrete set X_N by interval normalization.
inline OpConnectedReport op_connected(const Schema1D& s) {
    require_monotone(s);
    Int N = s.n0();
    const auto& pieces = s.pieces();
    for (const Piece1D& p : pieces)
        N = std::max(N, eventual_sign((p.hi - p.lo).quad()).from);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            N = std::max(N, eventual_sign((pieces[i].hi - pieces[j].lo).quad()).from);
            N = std::max(N, eventual_sign((pieces[j].hi - pieces[i].lo).quad()).from);
        }
    }
    SemilinearSet at_n = stage_set(s, N);
    OpConnectedReport r;
    r.stage_components = at_n.component_count();
    r.op_connected = r.stage_components <= 1;
    r.verified_at_stage = N;
    return r;
}

// ---------------------------------------------------------------------------
// Clopen witnesses

enum class WitnessMode { PS, E };

struct WitnessReport {
    bool is_witness = false;
    std::string reason;
};

namespace detail {
/// Does the piece eventually sit inside the fixed interval J?  For growing
/// pieces that is equivalent to sitting inside J at every stage, i.e. to the
/// whole colimit trace of the piece lying in J.
inline bool piece_inside_eventually(const Piece1D& p, const Interval& J) {
    std::vector<SignCond> conds;
    if (!J.lo_unbounded) {
        StageTerm d{p.lo.a, p.lo.b - J.lo, p.lo.c}; // lo_p(n) - J.lo
        conds.push_back(SignCond{d.quad(), false, J.lo_closed || !p.lo_closed, true});
    }
    if (!J.hi_unbounded) {
        StageTerm d{-p.hi.a, J.hi - p.hi.b, -p.hi.c}; // J.hi - hi_p(n)
        conds.push_back(SignCond{d.quad(), false, J.hi_closed || !p.hi_closed, true});
    }
    return conds_eventual(conds).holds;
}

/// First stage at which the piece meets the fixed interval J, if any.
inline std::optional<Int> piece_meets_interval(const Piece1D& p, const Interval& J, const Int& n0) {
    std::vector<SignCond> conds{nonempty_cond(p)};
    if (!J.lo_unbounded) {
        StageTerm d{p.hi.a, p.hi.b - J.lo, p.hi.c}; // hi_p(n) - J.lo
        conds.push_back(SignCond{d.quad(), false, p.hi_closed && J.lo_closed, true});
    }
    if (!J.hi_unbounded) {
        StageTerm d{-p.lo.a, J.hi - p.lo.b, -p.lo.c}; // J.hi - lo_p(n)
        conds.push_back(SignCond{d.quad(), false, p.lo_closed && J.hi_closed, true});
    }
    return conds_first_stage(conds, n0);
}

/// Is the fixed interval J contained in this component's hull at some stage
/// >= from?  Only called with from past the analysis settling point, where
/// the hull interval is the component's actual stage trace.
inline bool interval_inside_hull(const Interval& J, const Hull& h, const Int& from) {
    if (J.lo_unbounded || J.hi_unbounded) return false; // stages are bounded
    std::vector<SignCond> conds;
    StageTerm dlo{-h.lo.a, J.lo - h.lo.b, -h.lo.c}; // J.lo - lo_h(n)
    conds.push_back(SignCond{dlo.quad(), false, h.lo_closed || !J.lo_closed, true});
    StageTerm dhi{h.hi.a, h.hi.b - J.hi, h.hi.c}; // hi_h(n) - J.hi
    conds.push_back(SignCond{dhi.quad(), false, h.hi_closed || !J.hi_closed, true});
    return conds_first_stage(conds, from).has_value();
}

/// Shared core of the PS- and E-mode witness checks.  U is a semilinear set;
/// the trace of U on the colimit is clopen iff every component lies entirely
/// inside or entirely outside U, because the components are finitely many,
/// connected, and each clopen.
inline WitnessReport check_witness(const Schema1D& s, const SchemaAnalysis& an,
                                   const SemilinearSet& U, WitnessMode mode) {
    if (mode == WitnessMode::E) {
        for (const Interval& J : U.parts())
            if (J.lo_unbounded || J.hi_unbounded)
                return {false, "part " + J.to_string() +
                                   " of U is unbounded, so it never fits inside a stage"};
    }
    std::size_t in_count = 0, out_count = 0;
    for (const Hull& h : an.clusters) {
        bool all_in = true;
        for (std::size_t pi : h.pieces) {
            bool inside = false;
            for (const Interval& J : U.parts())
                if (piece_inside_eventually(s.pieces()[pi], J)) {
                    inside = true;
                    break;
                }
            if (!inside) {
                all_in = false;
                break;
            }
        }
        if (all_in) {
            ++in_count;
            continue;
        }
        bool all_out = true;
        for (std::size_t pi : h.pieces) {
            for (const Interval& J : U.parts()) {
                if (piece_meets_interval(s.pieces()[pi], J, s.n0())) {
                    all_out = false;
                    break;
                }
            }
            if (!all_out) break;
        }
        if (all_out) {
            ++out_count;
            continue;
        }
        return {false, "the trace of U is not clopen: component " + h.describe() +
                           " meets U without lying inside it"};
    }
    if (in_count == 0) return {false, "the trace of U on the space is empty"};
    if (out_count == 0) return {false, "the trace of U is the whole space"};
    if (mode == WitnessMode::E) {
        Int from = std::max(s.n0(), an.settled_from);
        for (const Interval& J : U.parts()) {
            bool inside = false;
            for (const Hull& h : an.clusters)
                if (interval_inside_hull(J, h, from)) {
                    inside = true;
                    break;
                }
            if (!inside)
                return {false, "part " + J.to_string() + " of U is not contained in the space"};
        }
    }
    return {true, mode == WitnessMode::PS
                      ? "U traces a nonempty proper clopen subset"
                      : "U is a nonempty proper clopen subset lying inside the space"};
}
}

/// Does U witness a disconnection by tracing?  U may be any semilinear set;
/// the witness condition is that U ^ X is clopen in X, nonempty, and proper.
inline WitnessReport ps_witness_check(const Schema1D& s, const SemilinearSet& U) {
    return detail::check_witness(s, analyze_schema(s), U, WitnessMode::PS);
}

/// Does U witness a disconnection from inside?  Additionally requires U to
/// be a subset of the colimit, which is the strictly harder thing to be.
inline WitnessReport e_witness_check(const Schema1D& s, const SemilinearSet& U) {
    return detail::check_witness(s, analyze_schema(s), U, WitnessMode::E);
}

// ---------------------------------------------------------------------------
// Definability of the union

/// Why a colimit fails to be semilinear at one hull endpoint.
enum class Obstruction {
    None,
    EpsilonLimit,    ///< endpoint converges but is never attained: any semilinear
                     ///< cover picks up points infinitesimally past the limit
    InfiniteElement, ///< endpoint grows without bound: any semilinear cover
                     ///< contains infinite elements the stages never reach
};

inline const char* obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::EpsilonLimit: return "epsilon-limit";
        case Obstruction::InfiniteElement: return "infinite-element";
        default: return "none";
    }
}

struct EndpointObstruction {
    std::size_t component = 0;
    bool upper = false; ///< false: lower endpoint, true: upper endpoint
    Obstruction kind = Obstruction::None;
};

struct DefinabilityReport {
    bool definable = false;
    std::optional<SemilinearSet> value; ///< the colimit, when semilinear
    std::vector<EndpointObstruction> obstructions;
    std::string detail;
};

namespace detail {
inline Obstruction endpoint_obstruction(const StageTerm& t) {
    if (!t.a.is_zero()) return Obstruction::InfiniteElement;
    if (!t.c.is_zero()) return Obstruction::EpsilonLimit;
    return Obstruction::None;
}
}

/// Is the colimit (or one chosen component of it) itself a semilinear set?
/// component = -1 asks about the whole union.  A component is semilinear
/// exactly when both hull endpoints stabilize to constants; a moving
/// endpoint leaves a gap no semilinear set can match, and the report names
/// which kind of gap.
inline DefinabilityReport definability_of_union(const Schema1D& s, int component = -1) {
    SchemaAnalysis an = analyze_schema(s);
    if (component < -1 || component >= static_cast<int>(an.clusters.size()))
        throw PreconditionViolatedError("component index " + std::to_string(component) +
                                        " out of range: the colimit has " +
                                        std::to_string(an.clusters.size()) + " component(s)");
    std::vector<std::size_t> targets;
    if (component >= 0) {
        targets.push_back(static_cast<std::size_t>(component));
    } else {
        for (std::size_t i = 0; i < an.clusters.size(); ++i) targets.push_back(i);
    }

    DefinabilityReport r;
    std::vector<Interval> value;
    for (std::size_t ci : targets) {
        const Hull& h = an.clusters[ci];
        Obstruction olo = detail::endpoint_obstruction(h.lo);
        Obstruction ohi = detail::endpoint_obstruction(h.hi);
        if (olo != Obstruction::None) r.obstructions.push_back({ci, false, olo});
        if (ohi != Obstruction::None) r.obstructions.push_back({ci, true, ohi});
        if (olo == Obstruction::None && ohi == Obstruction::None)
            value.push_back(Interval{h.lo.b, h.hi.b, h.lo_closed, h.hi_closed, false, false});
    }
    r.definable = r.obstructions.empty();
    if (r.definable) {
        r.value = SemilinearSet(std::move(value));
        r.detail = "the union stabilizes to " + r.value->to_string();
    } else {
        std::string what;
        for (const EndpointObstruction& o : r.obstructions) {
            if (!what.empty()) what += "; ";
            what += std::string(o.upper ? "upper" : "lower") + " endpoint of component " +
                    an.clusters[o.component].describe() + ": " + obstruction_name(o.kind);
        }
        r.detail = "the union is not semilinear (" + what + ")";
    }
    return r;
}

// ---------------------------------------------------------------------------
// Witness search

inline constexpr int kDefaultGrammarBound = 3;

/// Cap on how many interval combinations one search call may enumerate.
inline const Int kWitnessSearchBudget = 500000;

struct WitnessSearchResult {
    bool found = false;
    std::optional<SemilinearSet> witness;
    std::size_t candidates_checked = 0;
    int bound = kDefaultGrammarBound;
};

namespace detail {
/// Canonical order on normalized candidates: fewer parts first, then by part
/// keys, where bounded endpoints precede unbounded ones and open endpoints
/// precede closed ones.  The order is what makes search results stable and
/// puts the natural half-line cuts ahead of their complements.
inline bool candidate_less(const SemilinearSet& x, const SemilinearSet& y) {
    if (x.parts().size() != y.parts().size()) return x.parts().size() < y.parts().size();
    for (std::size_t i = 0; i < x.parts().size(); ++i) {
        const Interval& a = x.parts()[i];
        const Interval& b = y.parts()[i];
        if (a.lo_unbounded != b.lo_unbounded) return b.lo_unbounded;
        if (!a.lo_unbounded) {
            int c = field_compare(a.lo, b.lo);
            if (c != 0) return c < 0;
        }
        if (a.lo_closed != b.lo_closed) return b.lo_closed;
        if (a.hi_unbounded != b.hi_unbounded) return b.hi_unbounded;
        if (!a.hi_unbounded) {
            int c = field_compare(a.hi, b.hi);
            if (c != 0) return c < 0;
        }
        if (a.hi_closed != b.hi_closed) return b.hi_closed;
    }
    return false;
}

inline std::vector<Interval> grammar_atoms(const std::vector<FieldElem>& menu) {
    std::vector<Interval> atoms;
    for (const FieldElem& m : menu) {
        atoms.push_back(Interval::below(m, false));
        atoms.push_back(Interval::below(m, true));
        atoms.push_back(Interval::above(m, false));
        atoms.push_back(Interval::above(m, true));
        atoms.push_back(Interval::point(m));
    }
    for (std::size_t i = 0; i < menu.size(); ++i) {
        for (std::size_t j = i + 1; j < menu.size(); ++j) {
            atoms.push_back(Interval::open(menu[i], menu[j]));
            atoms.push_back(Interval::closed(menu[i], menu[j]));
            atoms.push_back(Interval{menu[i], menu[j], false, true, false, false});
            atoms.push_back(Interval{menu[i], menu[j], true, false, false, false});
        }
    }
    atoms.push_back(Interval::line());
    return atoms;
}
}

/// Search for a clopen witness built from at most k intervals.  Cut values
/// are harvested from the stabilized hull endpoints (tier 0), then relaxed
/// by infinitesimal shifts and scalings (tier 1).  Candidates are tried in
/// the canonical order, so the result is deterministic and minimal for it.
inline WitnessSearchResult witness_search(const Schema1D& s, WitnessMode mode,
                                          int k = kDefaultGrammarBound) {
    if (k < 1)
        throw PreconditionViolatedError("witness grammar bound must be at least 1, got " +
                                        std::to_string(k));
    SchemaAnalysis an = analyze_schema(s);

    std::vector<FieldElem> base{FieldElem(0)};
    for (const Hull& h : an.clusters) {
        if (h.lo.a.is_zero()) base.push_back(h.lo.b);
        if (h.hi.a.is_zero()) base.push_back(h.hi.b);
    }

    auto canonical_menu = [](std::vector<FieldElem> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };

    std::vector<FieldElem> tier1 = base;
    for (const FieldElem& m : base) {
        tier1.push_back(m + FieldElem::eps());
        tier1.push_back(m - FieldElem::eps());
        tier1.push_back(m * FieldElem::eps());
    }
    std::vector<std::vector<FieldElem>> tiers{canonical_menu(base), canonical_menu(tier1)};

    WitnessSearchResult res;
    res.bound = k;
    std::set<std::string> seen;
    Int combos = 0;

    for (const auto& menu : tiers) {
        std::vector<Interval> atoms = detail::grammar_atoms(menu);
        std::vector<SemilinearSet> batch;
        for (int j = 1; j <= k; ++j) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(j));
            // iterate over j-subsets of the atom list
            for (int t = 0; t < j; ++t) idx[static_cast<std::size_t>(t)] = static_cast<std::size_t>(t);
            if (atoms.size() < static_cast<std::size_t>(j)) continue;
            while (true) {
                combos += 1;
                if (combos > kWitnessSearchBudget)
                    throw BudgetExceededError("witness search enumerated more than " +
                                              kWitnessSearchBudget.str() +
                                              " interval combinations; tighten the grammar bound");
                std::vector<Interval> parts;
                parts.reserve(idx.size());
                for (std::size_t t : idx) parts.push_back(atoms[t]);
                SemilinearSet cand(std::move(parts));
                if (cand.parts().size() == static_cast<std::size_t>(j)) {
                    std::string key = cand.to_string();
                    if (seen.insert(std::move(key)).second) batch.push_back(std::move(cand));
                }
                // next combination
                int t = j - 1;
                while (t >= 0 && idx[static_cast<std::size_t>(t)] ==
                                     atoms.size() - static_cast<std::size_t>(j - t))
                    --t;
                if (t < 0) break;
                ++idx[static_cast<std::size_t>(t)];
                for (int u = t + 1; u < j; ++u)
                    idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
            }
        }
        std::sort(batch.begin(), batch.end(), detail::candidate_less);
        for (const SemilinearSet& cand : batch) {
            ++res.candidates_checked;
            if (detail::check_witness(s, an, cand, mode).is_witness) {
                res.found = true;
                res.witness = cand;
                return res;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Stock schemas

/// Two branches fleeing both zero and infinity: X_n = (-n, -1/n) u (1/n, n),
/// n >= 2.  The colimit has two components, the half-line cut x > 0 traces a
/// clopen witness, but no semilinear subset of the colimit witnesses the
/// split, and neither branch is itself semilinear.
inline Schema1D example_5_4() {
    FieldElem z(0), one(1);
    Piece1D neg{StageTerm(-one, z, z), StageTerm(z, z, -one), false, false};
    Piece1D pos{StageTerm(z, z, one), StageTerm(one, z, z), false, false};
    return Schema1D({neg, pos}, Int(2));
}

} // namespace limtop
