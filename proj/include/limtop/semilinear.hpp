#pragma once

// One-dimensional semilinear sets over Q(eps): finite unions of intervals
// with endpoints in the field or at +-infinity.  Sets are kept in a unique
// canonical form (sorted, pairwise disjoint, non-adjacent), so structural
// equality is set equality.

#include <algorithm>
#include <string>
#include <vector>

#include "limtop/errors.hpp"
#include "limtop/field.hpp"

namespace limtop {

/// Interval over Q(eps).  Unbounded sides are flagged; the corresponding
/// endpoint value is ignored and normalized to 0 so that structural equality
/// is meaningful.
struct Interval {
    FieldElem lo, hi;
    bool lo_closed = false, hi_closed = false;
    bool lo_unbounded = false, hi_unbounded = false;

    static Interval open(FieldElem a, FieldElem b) {
        return {std::move(a), std::move(b), false, false, false, false};
    }
    static Interval closed(FieldElem a, FieldElem b) {
        return {std::move(a), std::move(b), true, true, false, false};
    }
    static Interval point(FieldElem a) {
        Interval r;
        r.lo = a;
        r.hi = std::move(a);
        r.lo_closed = r.hi_closed = true;
        return r;
    }
    static Interval below(FieldElem b, bool closed) {
        Interval r;
        r.hi = std::move(b);
        r.hi_closed = closed;
        r.lo_unbounded = true;
        return r;
    }
    static Interval above(FieldElem a, bool closed) {
        Interval r;
        r.lo = std::move(a);
        r.lo_closed = closed;
        r.hi_unbounded = true;
        return r;
    }
    static Interval line() {
        Interval r;
        r.lo_unbounded = r.hi_unbounded = true;
        return r;
    }

    bool empty() const {
        if (lo_unbounded || hi_unbounded) return false;
        int c = field_compare(lo, hi);
        if (c > 0) return true;
        if (c == 0) return !(lo_closed && hi_closed);
        return false;
    }

    bool contains(const FieldElem& x) const {
        if (!lo_unbounded) {
            int c = field_compare(x, lo);
            if (c < 0 || (c == 0 && !lo_closed)) return false;
        }
        if (!hi_unbounded) {
            int c = field_compare(x, hi);
            if (c > 0 || (c == 0 && !hi_closed)) return false;
        }
        return true;
    }

    bool operator==(const Interval& o) const {
        return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed &&
               hi_closed == o.hi_closed && lo_unbounded == o.lo_unbounded &&
               hi_unbounded == o.hi_unbounded;
    }
    bool operator!=(const Interval& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s;
        s += lo_closed && !lo_unbounded ? '[' : '(';
        s += lo_unbounded ? "-inf" : lo.to_string();
        s += ", ";
        s += hi_unbounded ? "+inf" : hi.to_string();
        s += hi_closed && !hi_unbounded ? ']' : ')';
        return s;
    }
};

namespace detail {

// a's lower end is at or before b's; ties broken so closed comes first
// (a closed end reaches further down).
inline bool lower_before(const Interval& a, const Interval& b) {
    if (a.lo_unbounded != b.lo_unbounded) return a.lo_unbounded;
    if (a.lo_unbounded) return false;
    int c = field_compare(a.lo, b.lo);
    if (c != 0) return c < 0;
    return a.lo_closed && !b.lo_closed;
}

// union of a and b is a single interval, given that a's lower end comes
// first: b starts before (or exactly where, with a shared point) a stops
inline bool joined(const Interval& a, const Interval& b) {
    if (a.hi_unbounded || b.lo_unbounded) return true;
    int c = field_compare(b.lo, a.hi);
    if (c < 0) return true;
    if (c == 0) return a.hi_closed || b.lo_closed;
    return false;
}

// a's upper end reaches at least as far as b's
inline bool upper_covers(const Interval& a, const Interval& b) {
    if (a.hi_unbounded) return true;
    if (b.hi_unbounded) return false;
    int c = field_compare(a.hi, b.hi);
    if (c != 0) return c > 0;
    return a.hi_closed || !b.hi_closed;
}

} // namespace detail

/// Canonical finite union of intervals.  The constructor normalizes: empty
/// pieces are dropped, pieces are sorted, and overlapping or touching pieces
/// are merged, so parts() is the list of connected components of the set.
class SemilinearSet {
public:
    SemilinearSet() = default;

    explicit SemilinearSet(std::vector<Interval> parts) {
        for (auto& p : parts) {
            if (p.empty()) continue;
            if (p.lo_unbounded) {
                p.lo = FieldElem(0);
                p.lo_closed = false;
            }
            if (p.hi_unbounded) {
                p.hi = FieldElem(0);
                p.hi_closed = false;
            }
            parts_.push_back(std::move(p));
        }
        std::sort(parts_.begin(), parts_.end(),
                  [](const Interval& a, const Interval& b) { return detail::lower_before(a, b); });
        std::vector<Interval> merged;
        for (auto& p : parts_) {
            if (!merged.empty() && detail::joined(merged.back(), p)) {
                Interval& cur = merged.back();
                if (!detail::upper_covers(cur, p)) {
                    cur.hi = p.hi;
                    cur.hi_closed = p.hi_closed;
                    cur.hi_unbounded = p.hi_unbounded;
                } else if (!cur.hi_unbounded && !p.hi_unbounded &&
                           field_compare(cur.hi, p.hi) == 0) {
                    cur.hi_closed = cur.hi_closed || p.hi_closed;
                }
            } else {
                merged.push_back(std::move(p));
            }
        }
        parts_ = std::move(merged);
    }

    static SemilinearSet empty_set() { return SemilinearSet(); }
    static SemilinearSet whole_line() { return SemilinearSet({Interval::line()}); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    int component_count() const { return static_cast<int>(parts_.size()); }

    bool contains(const FieldElem& x) const {
        for (const auto& p : parts_)
            if (p.contains(x)) return true;
        return false;
    }

    SemilinearSet union_with(const SemilinearSet& o) const {
        std::vector<Interval> all = parts_;
        all.insert(all.end(), o.parts_.begin(), o.parts_.end());
        return SemilinearSet(std::move(all));
    }

    SemilinearSet complement() const {
        std::vector<Interval> out;
        // walk the gaps: before the first part, between parts, after the last
        bool cursor_open_ended = true; // current gap extends to -inf
        FieldElem cursor;
        bool cursor_closed = false; // gap includes its left endpoint
        for (const auto& p : parts_) {
            if (!p.lo_unbounded) {
                Interval gap;
                gap.lo_unbounded = cursor_open_ended;
                if (!cursor_open_ended) {
                    gap.lo = cursor;
                    gap.lo_closed = cursor_closed;
                }
                gap.hi = p.lo;
                gap.hi_closed = !p.lo_closed;
                if (!gap.empty()) out.push_back(std::move(gap));
            }
            if (p.hi_unbounded) return SemilinearSet(std::move(out));
            cursor = p.hi;
            cursor_closed = !p.hi_closed;
            cursor_open_ended = false;
        }
        Interval tail;
        tail.lo_unbounded = cursor_open_ended;
        if (!cursor_open_ended) {
            tail.lo = cursor;
            tail.lo_closed = cursor_closed;
        }
        tail.hi_unbounded = true;
        out.push_back(std::move(tail));
        return SemilinearSet(std::move(out));
    }

    SemilinearSet intersect(const SemilinearSet& o) const {
        std::vector<Interval> out;
        for (const auto& a : parts_) {
            for (const auto& b : o.parts_) {
                Interval r;
                // lower end: the later of the two (never the unbounded one
                // unless both are), upper end: the earlier of the two
                const Interval& lo_src = detail::lower_before(a, b) ? b : a;
                r.lo = lo_src.lo;
                r.lo_closed = lo_src.lo_closed;
                r.lo_unbounded = a.lo_unbounded && b.lo_unbounded;
                const Interval& hi_src = detail::upper_covers(a, b) ? b : a;
                r.hi = hi_src.hi;
                r.hi_closed = hi_src.hi_closed;
                r.hi_unbounded = a.hi_unbounded && b.hi_unbounded;
                if (!r.empty()) out.push_back(std::move(r));
            }
        }
        return SemilinearSet(std::move(out));
    }

    bool contains_set(const SemilinearSet& o) const { return intersect(o) == o; }

    bool operator==(const SemilinearSet& o) const { return parts_ == o.parts_; }
    bool operator!=(const SemilinearSet& o) const { return !(*this == o); }

    std::string to_string() const {
        if (parts_.empty()) return "{}";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += " U ";
            s += parts_[i].to_string();
        }
        return s;
    }

private:
    std::vector<Interval> parts_;
};

} // namespace limtop
