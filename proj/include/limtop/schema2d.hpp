#pragma once

/// Planar spaces assembled from a finite family of closed segments repeated
/// along an integer ladder of translates.  A schema lists base segments and a
/// single nonzero step vector; stage n is the union of all translates by
/// i*step with |i| <= n.  Stages grow by construction, so the limit space is
/// the union over every integer translate.
///
/// Components of the limit are computed exactly.  Translate copies form a
/// periodic contact graph over the integers: copy (u, i) touches copy
/// (v, i + d) for every i whenever segment u meets segment v shifted by
/// d*step.  A union-find weighted by integer shifts reduces each connected
/// class of base segments to a period: a class of period p >= 1 contributes
/// exactly p components to the limit (its copies chain up in arithmetic
/// progressions of translates), and a class of period 0 never chains, so it
/// contributes one component per integer.  Witness checks test convex regions
/// cut by half-planes against this component structure; every test is exact
/// over the ordered coefficient field.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "schema.hpp"
#include "union_find.hpp"

namespace limtop {

struct Vec2 {
    FieldElem x, y;

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }

    std::string to_string() const {
        return "(" + x.to_string() + ", " + y.to_string() + ")";
    }
};

inline Vec2 scale(const Vec2& v, const FieldElem& c) { return {v.x * c, v.y * c}; }
inline Vec2 scale(const Vec2& v, const Int& c) { return scale(v, FieldElem(Rat(c))); }
inline FieldElem dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline FieldElem cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Closed segment between two distinct points.
struct Segment2 {
    Vec2 a, b;

    bool operator==(const Segment2& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Segment2& o) const { return !(*this == o); }

    std::string to_string() const { return a.to_string() + "-" + b.to_string(); }
};

inline Segment2 translate(const Segment2& s, const Vec2& v) { return {s.a + v, s.b + v}; }

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
inline int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

namespace detail {

inline bool point_in_bbox(const Segment2& s, const Vec2& p) {
    return !(p.x < field_min(s.a.x, s.b.x)) && !(field_max(s.a.x, s.b.x) < p.x) &&
           !(p.y < field_min(s.a.y, s.b.y)) && !(field_max(s.a.y, s.b.y) < p.y);
}

} // namespace detail

/// Exact intersection test for closed segments; touching endpoints and
/// collinear overlaps count.
inline bool segments_intersect(const Segment2& s, const Segment2& t) {
    int o1 = orientation(s.a, s.b, t.a);
    int o2 = orientation(s.a, s.b, t.b);
    int o3 = orientation(t.a, t.b, s.a);
    int o4 = orientation(t.a, t.b, s.b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && detail::point_in_bbox(s, t.a)) return true;
    if (o2 == 0 && detail::point_in_bbox(s, t.b)) return true;
    if (o3 == 0 && detail::point_in_bbox(t, s.a)) return true;
    if (o4 == 0 && detail::point_in_bbox(t, s.b)) return true;
    return false;
}

/// Base segments plus a step vector; stage n holds every translate by i*step
/// with |i| <= n.
class Schema2D {
  public:
    Schema2D(std::vector<Segment2> base, Vec2 step)
        : base_(std::move(base)), step_(std::move(step)) {
        if (step_.is_zero())
            throw PreconditionViolatedError("schema step must be a nonzero vector");
        for (std::size_t i = 0; i < base_.size(); ++i)
            if (base_[i].a == base_[i].b)
                throw PreconditionViolatedError("base segment " + std::to_string(i) +
                                                " is degenerate");
    }

    const std::vector<Segment2>& base() const { return base_; }
    const Vec2& step() const { return step_; }

  private:
    std::vector<Segment2> base_;
    Vec2 step_;
};

/// The segments of stage n, ordered by translate index, then by base order.
inline std::vector<Segment2> stage_segments(const Schema2D& s, const Int& n) {
    if (n < 0)
        throw PreconditionViolatedError("stage index must be nonnegative, got " + n.str());
    std::vector<Segment2> out;
    for (Int i = -n; i <= n; ++i) {
        Vec2 shift = scale(s.step(), i);
        for (const auto& seg : s.base()) out.push_back(translate(seg, shift));
    }
    return out;
}

inline const Int kTranslateScanBudget = 100000;

namespace detail {

/// Copy (u, i) touches copy (v, i + d) for every integer i.
struct ContactEdge {
    std::size_t u, v;
    Int d;
};

/// Integer translates d for which the bounding boxes of u and v + d*step can
/// overlap.  The step is nonzero, so the window is always finite.
inline std::optional<std::pair<Int, Int>> translate_window(const Segment2& u,
                                                           const Segment2& v,
                                                           const Vec2& step) {
    bool have = false;
    Int lo(0), hi(0);
    bool possible = true;
    auto axis = [&](const FieldElem& ulo, const FieldElem& uhi, const FieldElem& vlo,
                    const FieldElem& vhi, const FieldElem& sc) {
        if (!possible) return;
        if (sc.is_zero()) {
            if (uhi < vlo || vhi < ulo) possible = false;
            return;
        }
        FieldElem qlo = (ulo - vhi) / sc;
        FieldElem qhi = (uhi - vlo) / sc;
        if (sc.sign() < 0) std::swap(qlo, qhi);
        Int axlo = -field_floor(-qlo);
        Int axhi = field_floor(qhi);
        if (!have) {
            lo = axlo;
            hi = axhi;
            have = true;
        } else {
            if (lo < axlo) lo = axlo;
            if (axhi < hi) hi = axhi;
        }
    };
    axis(field_min(u.a.x, u.b.x), field_max(u.a.x, u.b.x), field_min(v.a.x, v.b.x),
         field_max(v.a.x, v.b.x), step.x);
    axis(field_min(u.a.y, u.b.y), field_max(u.a.y, u.b.y), field_min(v.a.y, v.b.y),
         field_max(v.a.y, v.b.y), step.y);
    if (!possible || !have || hi < lo) return std::nullopt;
    return std::make_pair(lo, hi);
}

/// All contact edges between translate copies, with u <= v and d >= 1 when
/// u == v; the relation is symmetric, so one orientation per pair suffices.
inline std::vector<ContactEdge> contact_edges(const Schema2D& s) {
    std::vector<ContactEdge> edges;
    const auto& base = s.base();
    for (std::size_t u = 0; u < base.size(); ++u) {
        for (std::size_t v = u; v < base.size(); ++v) {
            auto win = translate_window(base[u], base[v], s.step());
            if (!win) continue;
            Int lo = win->first, hi = win->second;
            if (u == v && lo < 1) lo = 1;
            if (hi < lo) continue;
            if (hi - lo + 1 > kTranslateScanBudget)
                throw BudgetExceededError("contact enumeration for segments " +
                                          std::to_string(u) + " and " + std::to_string(v) +
                                          " spans " + Int(hi - lo + 1).str() +
                                          " translates (budget " +
                                          kTranslateScanBudget.str() + ")");
            for (Int d = lo; d <= hi; ++d)
                if (segments_intersect(base[u], translate(base[v], scale(s.step(), d))))
                    edges.push_back({u, v, d});
        }
    }
    return edges;
}

/// Union-find over base segments where each element carries an integer shift
/// relative to its root.  relate(u, v, d) records that copy (u, i) and copy
/// (v, i + d) always land in the same limit component; a relation that closes
/// a cycle contributes the absolute mismatch to the period of the class.
class OffsetUnionFind {
  public:
    explicit OffsetUnionFind(std::size_t n) : parent_(n), shift_(n, Int(0)), period_(n, Int(0)) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t x) {
        std::vector<std::size_t> chain;
        std::size_t r = x;
        while (parent_[r] != r) {
            chain.push_back(r);
            r = parent_[r];
        }
        Int acc(0);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            acc += shift_[*it];
            shift_[*it] = acc;
            parent_[*it] = r;
        }
        return r;
    }

    /// Shift of x relative to its root: copy (x, i) pairs with copy
    /// (root, i + shift).
    const Int& shift_to_root(std::size_t x) {
        find(x);
        return shift_[x];
    }

    void relate(std::size_t u, std::size_t v, const Int& d) {
        std::size_t ru = find(u), rv = find(v);
        Int delta = d + shift_[v] - shift_[u];
        if (ru == rv) {
            if (delta != 0) period_[ru] = gcd_int(period_[ru], abs_int(delta));
            return;
        }
        parent_[rv] = ru;
        shift_[rv] = -delta;
        period_[ru] = gcd_int(period_[ru], period_[rv]);
    }

    const Int& period_of_root(std::size_t r) const { return period_[r]; }

  private:
    std::vector<std::size_t> parent_;
    std::vector<Int> shift_;
    std::vector<Int> period_;
};

} // namespace detail

/// A connected class of base segments together with its period: the number
/// of limit components its copies fall into (0 when the copies never chain,
/// giving one component per integer translate).
struct ComponentClass2D {
    std::vector<std::size_t> segments;
    Int period = 0;
};

struct Analysis2D {
    std::vector<ComponentClass2D> classes;
    std::vector<std::size_t> class_of;
    /// Copy (u, i) lies in residue (i + shift[u]) mod period of its class.
    std::vector<Int> shift;
    bool finite = true;
    Int component_count = 0;
};

namespace detail {

/// Components of the periodic graph given by the contact edges alone.
inline Analysis2D analyze_from_edges(std::size_t m, const std::vector<ContactEdge>& edges) {
    detail::OffsetUnionFind uf(m);
    for (const auto& e : edges) uf.relate(e.u, e.v, e.d);
    Analysis2D an;
    an.class_of.resize(m, 0);
    an.shift.resize(m, Int(0));
    std::map<std::size_t, std::size_t> index_of_root;
    for (std::size_t u = 0; u < m; ++u) {
        std::size_t r = uf.find(u);
        auto [it, fresh] = index_of_root.try_emplace(r, an.classes.size());
        if (fresh) {
            an.classes.emplace_back();
            an.classes.back().period = uf.period_of_root(r);
        }
        an.class_of[u] = it->second;
        an.shift[u] = uf.shift_to_root(u);
        an.classes[it->second].segments.push_back(u);
    }
    for (const auto& c : an.classes) {
        if (c.period == 0)
            an.finite = false;
        else
            an.component_count += c.period;
    }
    return an;
}

} // namespace detail

inline Analysis2D analyze_schema_2d(const Schema2D& s) {
    return detail::analyze_from_edges(s.base().size(), detail::contact_edges(s));
}

struct Connectivity2D {
    bool connected = false;
    bool finite_count = true;
    /// Meaningful only when finite_count holds.
    Int component_count = 0;
    std::vector<ComponentClass2D> classes;
};

/// Components of the limit space via the shift-weighted union-find.
inline Connectivity2D ld_connected_2d(const Schema2D& s) {
    Analysis2D an = analyze_schema_2d(s);
    Connectivity2D r;
    r.finite_count = an.finite;
    r.component_count = an.finite ? an.component_count : Int(0);
    r.connected = an.finite && an.component_count <= 1;
    r.classes = std::move(an.classes);
    return r;
}

struct Op2DReport {
    bool op_connected = false;
    bool finite_count = true;
    Int component_count = 0;
};

inline const std::size_t kShiftBfsBudget = 100000;

namespace detail {

/// Independent route to the component count: walk (segment, phase) states
/// breadth-first along the contact edges.  A segment reached with two
/// distinct phases forces a period; the walk restarts with phases reduced
/// modulo the refined period until no new relation appears.  Returns
/// {finite, total component count when finite}.
inline std::pair<bool, Int> phase_component_total(std::size_t m,
                                                  const std::vector<ContactEdge>& edges) {
    std::vector<std::vector<std::pair<std::size_t, Int>>> adj(m);
    UnionFind quotient(m);
    for (const auto& e : edges) {
        adj[e.u].push_back({e.v, e.d});
        adj[e.v].push_back({e.u, -e.d});
        quotient.unite(e.u, e.v);
    }
    std::vector<char> done(m, 0);
    Int total(0);
    bool finite = true;
    for (std::size_t seed = 0; seed < m; ++seed) {
        std::size_t root = quotient.find(seed);
        if (done[root]) continue;
        done[root] = 1;
        Int period(0);
        for (;;) {
            bool refined = false;
            std::map<std::size_t, Int> phase;
            std::deque<std::size_t> queue;
            phase.emplace(seed, Int(0));
            queue.push_back(seed);
            std::size_t states = 0;
            while (!queue.empty() && !refined) {
                std::size_t x = queue.front();
                queue.pop_front();
                if (++states > kShiftBfsBudget)
                    throw BudgetExceededError("the phase walk visited more than " +
                                              std::to_string(kShiftBfsBudget) + " states");
                for (const auto& [y, d] : adj[x]) {
                    Int ph = phase.at(x) + d;
                    if (period > 0) ph = ((ph % period) + period) % period;
                    auto it = phase.find(y);
                    if (it == phase.end()) {
                        phase.emplace(y, ph);
                        queue.push_back(y);
                        continue;
                    }
                    if (it->second == ph) continue;
                    period = gcd_int(period, abs_int(ph - it->second));
                    refined = true;
                    break;
                }
            }
            if (!refined) break;
        }
        if (period == 0)
            finite = false;
        else
            total += period;
    }
    return {finite, total};
}

} // namespace detail

inline Op2DReport op_connected_2d(const Schema2D& s) {
    auto [finite, total] =
        detail::phase_component_total(s.base().size(), detail::contact_edges(s));
    Op2DReport rep;
    rep.finite_count = finite;
    rep.component_count = finite ? total : Int(0);
    rep.op_connected = finite && total <= 1;
    return rep;
}

/// Half-plane { p : normal.p <= bound }, or the open variant with <.
struct HalfplaneConstraint {
    Vec2 normal;
    FieldElem bound;
    bool closed = true;

    bool admits(const Vec2& p) const {
        FieldElem v = dot(normal, p);
        return closed ? !(bound < v) : v < bound;
    }

    std::string to_string() const {
        auto term = [](const FieldElem& c, const char* var) {
            if (c == FieldElem(Rat(1))) return std::string(var);
            if (c == FieldElem(Rat(-1))) return "-" + std::string(var);
            std::string cs = c.to_string();
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            return cs + "*" + var;
        };
        std::string lhs;
        if (!normal.x.is_zero()) lhs = term(normal.x, "x");
        if (!normal.y.is_zero()) {
            std::string t = term(normal.y, "y");
            if (lhs.empty())
                lhs = t;
            else if (t[0] == '-')
                lhs += " - " + t.substr(1);
            else
                lhs += " + " + t;
        }
        if (lhs.empty()) lhs = "0";
        return lhs + (closed ? " <= " : " < ") + bound.to_string();
    }
};

/// Intersection of finitely many half-planes; empty list means the plane.
using ConvexRegion = std::vector<HalfplaneConstraint>;

inline std::string region_to_string(const ConvexRegion& r) {
    if (r.empty()) return "plane";
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += " and ";
        out += r[i].to_string();
    }
    return out;
}

namespace detail {

/// Does the segment a..b, shifted by off, meet the region?  Reduces to an
/// exact interval test on the segment parameter.
inline bool segment_meets_region(const Vec2& a, const Vec2& b, const Vec2& off,
                                 const ConvexRegion& region) {
    FieldElem lo(Rat(0)), hi(Rat(1));
    bool lo_closed = true, hi_closed = true;
    Vec2 dir = b - a;
    for (const auto& c : region) {
        FieldElem alpha = dot(c.normal, dir);
        FieldElem rhs = c.bound - dot(c.normal, a + off);
        if (alpha.is_zero()) {
            int sg = rhs.sign();
            if (sg < 0 || (sg == 0 && !c.closed)) return false;
            continue;
        }
        FieldElem q = rhs / alpha;
        if (alpha.sign() > 0) {
            if (q < hi) {
                hi = q;
                hi_closed = c.closed;
            } else if (q == hi) {
                hi_closed = hi_closed && c.closed;
            }
        } else {
            if (lo < q) {
                lo = q;
                lo_closed = c.closed;
            } else if (q == lo) {
                lo_closed = lo_closed && c.closed;
            }
        }
    }
    if (hi < lo) return false;
    if (lo == hi) return lo_closed && hi_closed;
    return true;
}

/// Does any integer translate of the segment by t*delta meet the region?
/// Constraints constant along delta restrict every translate alike; the
/// others bound the translate index from one side, and the finite middle
/// window is scanned exactly.
inline bool segment_hits_region_translates(const Segment2& seg, const Vec2& delta,
                                           const ConvexRegion& region) {
    ConvexRegion constant;
    std::optional<Int> t_lo, t_hi;
    for (const auto& c : region) {
        FieldElem s = dot(c.normal, delta);
        if (s.is_zero()) {
            constant.push_back(c);
            continue;
        }
        FieldElem loose = field_min(dot(c.normal, seg.a), dot(c.normal, seg.b));
        FieldElem q = (c.bound - loose) / s;
        if (s.sign() > 0) {
            // even the loosest point needs t <= q
            if (!q.is_finite()) {
                if (q.sign() > 0) continue;
                return false;
            }
            Int f = field_floor(q);
            t_hi = t_hi ? std::min(*t_hi, f) : f;
        } else {
            // even the loosest point needs t >= q
            if (!q.is_finite()) {
                if (q.sign() < 0) continue;
                return false;
            }
            Int c2 = -field_floor(-q);
            t_lo = t_lo ? std::max(*t_lo, c2) : c2;
        }
    }
    Vec2 zero{FieldElem(Rat(0)), FieldElem(Rat(0))};
    if (!segment_meets_region(seg.a, seg.b, zero, constant)) return false;
    // with one side unbounded, far translates satisfy every varying
    // constraint, and the constant ones were just checked
    if (!t_hi || !t_lo) return true;
    if (*t_hi < *t_lo) return false;
    if (*t_hi - *t_lo + 1 > kTranslateScanBudget)
        throw BudgetExceededError("translate scan spans " + Int(*t_hi - *t_lo + 1).str() +
                                  " steps (budget " + kTranslateScanBudget.str() + ")");
    for (Int t = *t_lo; t <= *t_hi; ++t)
        if (segment_meets_region(seg.a, seg.b, scale(delta, t), region)) return true;
    return false;
}

inline WitnessReport check_ps_2d(const Schema2D& s, const Analysis2D& an,
                                 const ConvexRegion& region) {
    WitnessReport rep;
    bool step_invariant = true;
    for (const auto& c : region)
        if (!dot(c.normal, s.step()).is_zero()) {
            step_invariant = false;
            break;
        }
    Int in_count(0), out_count(0), comp_base(0);
    for (const auto& cls : an.classes) {
        // containment is residue independent: it needs every constraint to be
        // constant along the step, and then every base endpoint inside
        bool contained = step_invariant;
        if (contained) {
            for (std::size_t u : cls.segments) {
                const Segment2& seg = s.base()[u];
                for (const auto& c : region)
                    if (!c.admits(seg.a) || !c.admits(seg.b)) {
                        contained = false;
                        break;
                    }
                if (!contained) break;
            }
        }
        if (contained) {
            in_count += cls.period;
            comp_base += cls.period;
            continue;
        }
        for (Int r(0); r < cls.period; ++r) {
            for (std::size_t u : cls.segments) {
                Int m = ((r - an.shift[u]) % cls.period + cls.period) % cls.period;
                Segment2 rebased = translate(s.base()[u], scale(s.step(), m));
                if (segment_hits_region_translates(rebased, scale(s.step(), cls.period),
                                                   region)) {
                    rep.is_witness = false;
                    rep.reason = "the trace of U is not clopen: component " +
                                 Int(comp_base + r).str() +
                                 " meets U without lying inside it";
                    return rep;
                }
            }
        }
        out_count += cls.period;
        comp_base += cls.period;
    }
    if (in_count == 0) {
        rep.is_witness = false;
        rep.reason = "the trace of U on the space is empty";
        return rep;
    }
    if (out_count == 0) {
        rep.is_witness = false;
        rep.reason = "the trace of U is the whole space";
        return rep;
    }
    rep.is_witness = true;
    rep.reason = "U traces a nonempty proper clopen subset";
    return rep;
}

} // namespace detail

/// Does the region trace a nonempty proper clopen subset of the limit space?
/// Needs a space with finitely many components: clopen subsets are exactly
/// the unions of components then.
inline WitnessReport ps_witness_check_2d(const Schema2D& s, const ConvexRegion& region) {
    Analysis2D an = analyze_schema_2d(s);
    if (!an.finite)
        throw PreconditionViolatedError(
            "witness checks need a space with finitely many components");
    return detail::check_ps_2d(s, an, region);
}

/// Can the region itself be a nonempty proper clopen subset lying inside the
/// space?  With at most 3 half-planes the region is empty, pins a single
/// point, contains a ray, or contains a disk; none of these is such a subset
/// of a locally finite union of nondegenerate segments, so the verdict is
/// always negative.  Containment with more faces is not decided here.
inline WitnessReport e_witness_check_2d(const Schema2D&, const ConvexRegion& region) {
    if (region.size() > 3)
        throw PreconditionViolatedError("inside-witness checks handle at most 3 half-planes, got " +
                                        std::to_string(region.size()));
    WitnessReport rep;
    rep.is_witness = false;
    rep.reason = "a region cut by at most 3 half-planes is empty, pins a single point, "
                 "contains a ray, or contains a disk; none of these is a nonempty proper "
                 "clopen subset of a locally finite union of segments";
    return rep;
}

struct WitnessSearch2DResult {
    bool found = false;
    ConvexRegion witness;
    std::size_t candidates_checked = 0;
    int bound = 0;
};

/// Search regions cut by up to k half-planes for a witness.  The grammar
/// takes the eight axis and diagonal normals, cut at the projections of the
/// base endpoints, open and closed, and tries combinations in a fixed order:
/// fewer half-planes first, then normal order, then cut value, open before
/// closed.
inline WitnessSearch2DResult witness_search_2d(const Schema2D& s, WitnessMode mode, int k = 2) {
    if (k < 1)
        throw PreconditionViolatedError("witness search needs a grammar bound of at least 1, got " +
                                        std::to_string(k));
    if (mode == WitnessMode::E && k > 3)
        throw PreconditionViolatedError("inside-witness checks handle at most 3 half-planes, got bound " +
                                        std::to_string(k));
    WitnessSearch2DResult res;
    res.bound = k;
    std::optional<Analysis2D> an;
    if (mode == WitnessMode::PS) {
        an = analyze_schema_2d(s);
        if (!an->finite)
            throw PreconditionViolatedError(
                "witness checks need a space with finitely many components");
    }
    static const int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                   {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    std::vector<HalfplaneConstraint> atoms;
    for (const auto& dxy : dirs) {
        Vec2 nu{FieldElem(Rat(dxy[0])), FieldElem(Rat(dxy[1]))};
        std::vector<FieldElem> cuts;
        for (const auto& seg : s.base()) {
            cuts.push_back(dot(nu, seg.a));
            cuts.push_back(dot(nu, seg.b));
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (const auto& c : cuts) {
            atoms.push_back({nu, c, false});
            atoms.push_back({nu, c, true});
        }
    }
    Int combos(0);
    for (int j = 1; j <= k; ++j) {
        if (static_cast<std::size_t>(j) > atoms.size()) break;
        std::vector<std::size_t> idx(static_cast<std::size_t>(j));
        for (int t = 0; t < j; ++t) idx[static_cast<std::size_t>(t)] = static_cast<std::size_t>(t);
        for (;;) {
            if (++combos > kWitnessSearchBudget)
                throw BudgetExceededError("witness search enumerated more than " +
                                          kWitnessSearchBudget.str() +
                                          " half-plane combinations; tighten the grammar bound");
            ConvexRegion candidate;
            for (int t = 0; t < j; ++t) candidate.push_back(atoms[idx[static_cast<std::size_t>(t)]]);
            ++res.candidates_checked;
            WitnessReport rep = mode == WitnessMode::PS
                                    ? detail::check_ps_2d(s, *an, candidate)
                                    : e_witness_check_2d(s, candidate);
            if (rep.is_witness) {
                res.found = true;
                res.witness = candidate;
                return res;
            }
            int t = j - 1;
            while (t >= 0 &&
                   idx[static_cast<std::size_t>(t)] ==
                       atoms.size() - static_cast<std::size_t>(j - t))
                --t;
            if (t < 0) break;
            ++idx[static_cast<std::size_t>(t)];
            for (int w = t + 1; w < j; ++w)
                idx[static_cast<std::size_t>(w)] = idx[static_cast<std::size_t>(w - 1)] + 1;
        }
    }
    return res;
}

/// Two interleaved zigzag chains: a wave through (0,0), (1,-1), (2,0) tiled
/// by step (2,0), and the same wave lowered by 1/2.  The chains never touch,
/// so the limit space has exactly two components, yet their vertical ranges
/// overlap and no region from the half-plane grammar separates them.
inline Schema2D example_5_3() {
    auto fe = [](long n, long d) { return FieldElem(Rat(n, d)); };
    Vec2 v0{fe(0, 1), fe(0, 1)}, v1{fe(1, 1), fe(-1, 1)}, v2{fe(2, 1), fe(0, 1)};
    Vec2 w0{fe(0, 1), fe(-1, 2)}, w1{fe(1, 1), fe(-3, 2)}, w2{fe(2, 1), fe(-1, 2)};
    std::vector<Segment2> base = {Segment2{v0, v1}, Segment2{v1, v2}, Segment2{w0, w1},
                                  Segment2{w1, w2}};
    return Schema2D(std::move(base), Vec2{fe(2, 1), fe(0, 1)});
}

} // namespace limtop
