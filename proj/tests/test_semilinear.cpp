#include <catch2/catch_amalgamated.hpp>

#include <limtop/semilinear.hpp>

#include <random>

using namespace limtop;

namespace {

FieldElem fe(int num, int den = 1) { return FieldElem(Rat(num, den)); }

SemilinearSet rand_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 4), val(-6, 6), flag(0, 1), kind(0, 9);
    std::vector<Interval> parts;
    int n = count(rng);
    FieldElem eps = FieldElem::eps();
    for (int i = 0; i < n; ++i) {
        int k = kind(rng);
        auto endpoint = [&] {
            FieldElem v = fe(val(rng));
            if (flag(rng) && flag(rng)) v = v + eps; // occasional infinitesimal shift
            return v;
        };
        if (k == 0) {
            parts.push_back(Interval::below(endpoint(), flag(rng)));
        } else if (k == 1) {
            parts.push_back(Interval::above(endpoint(), flag(rng)));
        } else if (k == 2) {
            parts.push_back(Interval::point(endpoint()));
        } else {
            Interval p;
            p.lo = endpoint();
            p.hi = endpoint();
            p.lo_closed = flag(rng);
            p.hi_closed = flag(rng);
            parts.push_back(p);
        }
    }
    return SemilinearSet(std::move(parts));
}

FieldElem rand_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> val(-7, 7), den(1, 3), flag(0, 2);
    FieldElem v = FieldElem(Rat(val(rng), den(rng)));
    int f = flag(rng);
    if (f == 1) v = v + FieldElem::eps();
    if (f == 2) v = v - FieldElem::eps();
    return v;
}

} // namespace

TEST_CASE("interval basics", "[semilinear]") {
    Interval i = Interval::open(fe(0), fe(1));
    REQUIRE_FALSE(i.empty());
    REQUIRE(i.contains(fe(1, 2)));
    REQUIRE_FALSE(i.contains(fe(0)));
    REQUIRE_FALSE(i.contains(fe(1)));
    REQUIRE(i.contains(FieldElem::eps())); // eps is strictly inside (0, 1)

    REQUIRE(Interval::closed(fe(0), fe(1)).contains(fe(0)));
    REQUIRE(Interval::point(fe(3)).contains(fe(3)));
    REQUIRE_FALSE(Interval::point(fe(3)).empty());
    REQUIRE(Interval::open(fe(1), fe(1)).empty());
    REQUIRE(Interval::open(fe(2), fe(1)).empty());
    REQUIRE(Interval::below(fe(0), false).contains(fe(-100)));
    REQUIRE(Interval::above(fe(0), false).contains(FieldElem(1) / FieldElem::eps()));
    REQUIRE(Interval::line().contains(fe(0)));

    REQUIRE(Interval::open(fe(0), fe(1)).to_string() == "(0, 1)");
    REQUIRE(Interval::closed(fe(-1, 2), fe(1)).to_string() == "[-1/2, 1]");
    REQUIRE(Interval::above(fe(0), false).to_string() == "(0, +inf)");
    REQUIRE(Interval::below(fe(2), true).to_string() == "(-inf, 2]");
}

TEST_CASE("normalization merges overlapping and touching parts", "[semilinear]") {
    // overlapping
    SemilinearSet s({Interval::open(fe(0), fe(2)), Interval::open(fe(1), fe(3))});
    REQUIRE(s.component_count() == 1);
    REQUIRE(s.parts()[0] == Interval::open(fe(0), fe(3)));

    // touching with a shared point merges
    SemilinearSet t({Interval::open(fe(0), fe(1)), Interval::closed(fe(1), fe(2))});
    REQUIRE(t.component_count() == 1);
    REQUIRE(t.parts()[0].contains(fe(1)));

    // touching with both ends open stays split: 1 is in neither piece
    SemilinearSet u({Interval::open(fe(0), fe(1)), Interval::open(fe(1), fe(2))});
    REQUIRE(u.component_count() == 2);

    // a point plugs the hole
    SemilinearSet v = u.union_with(SemilinearSet({Interval::point(fe(1))}));
    REQUIRE(v.component_count() == 1);
    REQUIRE(v.parts()[0] == Interval::open(fe(0), fe(2)));

    // contained pieces vanish
    SemilinearSet w({Interval::open(fe(0), fe(10)), Interval::closed(fe(2), fe(3))});
    REQUIRE(w.component_count() == 1);

    // empty pieces are dropped
    REQUIRE(SemilinearSet({Interval::open(fe(1), fe(1))}).is_empty());

    // infinitesimally separated pieces stay apart
    SemilinearSet x({Interval::open(fe(0), FieldElem::eps()),
                     Interval::open(FieldElem::eps() * 2, fe(1))});
    REQUIRE(x.component_count() == 2);

    REQUIRE(SemilinearSet({Interval::open(fe(1, 3), fe(3)), Interval::open(fe(-3), fe(-1, 3))})
                .to_string() == "(-3, -1/3) U (1/3, 3)");
    REQUIRE(SemilinearSet().to_string() == "{}");
}

TEST_CASE("normalization is idempotent and canonical", "[semilinear][fuzz]") {
    std::mt19937 rng(501);
    for (int trial = 0; trial < 200; ++trial) {
        SemilinearSet s = rand_set(rng);
        REQUIRE(SemilinearSet(s.parts()) == s);
        // canonical: parts are sorted, disjoint, non-adjacent
        for (std::size_t i = 0; i + 1 < s.parts().size(); ++i) {
            const Interval& a = s.parts()[i];
            const Interval& b = s.parts()[i + 1];
            REQUIRE(detail::lower_before(a, b));
            REQUIRE_FALSE(detail::joined(a, b));
        }
        // union with itself is itself
        REQUIRE(s.union_with(s) == s);
    }
}

TEST_CASE("complement and intersection", "[semilinear]") {
    SemilinearSet s({Interval::open(fe(0), fe(1)), Interval::closed(fe(2), fe(3))});
    SemilinearSet c = s.complement();
    REQUIRE(c.component_count() == 3);
    REQUIRE(c.parts()[0] == Interval::below(fe(0), true));
    REQUIRE(c.parts()[1] == Interval{fe(1), fe(2), true, false, false, false});
    REQUIRE(c.parts()[2] == Interval::above(fe(3), false));

    REQUIRE(SemilinearSet().complement() == SemilinearSet::whole_line());
    REQUIRE(SemilinearSet::whole_line().complement().is_empty());

    SemilinearSet t({Interval::closed(fe(0), fe(5))});
    SemilinearSet i = s.intersect(t);
    REQUIRE(i == s);
    REQUIRE(t.contains_set(s));
    REQUIRE_FALSE(s.contains_set(t));

    REQUIRE(s.intersect(SemilinearSet({Interval::open(fe(1), fe(2))})).is_empty());
    REQUIRE(s.intersect(SemilinearSet({Interval::closed(fe(1), fe(2))})).component_count() == 1);
}

TEST_CASE("set algebra laws", "[semilinear][fuzz]") {
    std::mt19937 rng(733);
    for (int trial = 0; trial < 150; ++trial) {
        SemilinearSet a = rand_set(rng), b = rand_set(rng);
        SemilinearSet ca = a.complement();

        REQUIRE(ca.complement() == a);
        REQUIRE(a.union_with(ca) == SemilinearSet::whole_line());
        REQUIRE(a.intersect(ca).is_empty());
        REQUIRE(a.intersect(b) == b.intersect(a));
        REQUIRE(a.union_with(b) == b.union_with(a));
        // De Morgan
        REQUIRE(a.union_with(b).complement() == ca.intersect(b.complement()));

        // membership agrees with the algebra at sample points
        for (int k = 0; k < 8; ++k) {
            FieldElem x = rand_point(rng);
            REQUIRE(a.contains(x) != ca.contains(x));
            REQUIRE(a.intersect(b).contains(x) == (a.contains(x) && b.contains(x)));
            REQUIRE(a.union_with(b).contains(x) == (a.contains(x) || b.contains(x)));
        }
    }
}
