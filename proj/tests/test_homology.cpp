#include <catch2/catch_amalgamated.hpp>

#include <limtop/homology.hpp>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace limtop;

namespace {

FgAbGroup grp(const FiniteComplex& k, int n) { return homology(k, n).group(); }

FiniteComplex random_complex(std::mt19937& rng, int max_vertices, int max_maximal,
                             int max_dim = 3) {
    std::vector<Simplex> maximal;
    int nm = 1 + static_cast<int>(rng() % max_maximal);
    for (int i = 0; i < nm; ++i) {
        std::set<VertexId> vs;
        int s = 1 + static_cast<int>(rng() % (max_dim + 1));
        while (static_cast<int>(vs.size()) < s)
            vs.insert(static_cast<VertexId>(rng() % max_vertices));
        maximal.emplace_back(std::vector<VertexId>(vs.begin(), vs.end()));
    }
    return FiniteComplex::from_maximal(maximal);
}

} // namespace

TEST_CASE("dimension axiom") {
    FiniteComplex pt = fixtures::point();
    REQUIRE(grp(pt, 0) == free_abelian(1));
    for (int n = 1; n <= 3; ++n) REQUIRE(grp(pt, n).trivial());
}

TEST_CASE("boundary matrix of the solid triangle") {
    IntegerMatrix d2 = boundary_matrix(fixtures::disc(), 2);
    REQUIRE(d2.rows() == 3);
    REQUIRE(d2.cols() == 1);
    // Sorted edge basis {0,1}, {0,2}, {1,2}.
    REQUIRE(d2.at(0, 0) == 1);
    REQUIRE(d2.at(1, 0) == -1);
    REQUIRE(d2.at(2, 0) == 1);
}

TEST_CASE("boundary of boundary vanishes") {
    std::mt19937 rng(88111);
    for (int trial = 0; trial < 30; ++trial) {
        FiniteComplex k = random_complex(rng, 10, 8);
        for (int n = 1; n <= k.dim(); ++n) {
            IntegerMatrix prod = boundary_matrix(k, n) * boundary_matrix(k, n + 1);
            REQUIRE(prod.is_zero());
        }
    }
}

TEST_CASE("homology of the standard surfaces") {
    REQUIRE(grp(fixtures::circle(3), 0) == free_abelian(1));
    REQUIRE(grp(fixtures::circle(3), 1) == free_abelian(1));
    REQUIRE(grp(fixtures::circle(7), 1) == free_abelian(1));

    REQUIRE(grp(fixtures::disc(), 1).trivial());
    REQUIRE(grp(fixtures::disc(), 2).trivial());

    REQUIRE(grp(fixtures::sphere(), 1).trivial());
    REQUIRE(grp(fixtures::sphere(), 2) == free_abelian(1));

    REQUIRE(grp(fixtures::torus7(), 0) == free_abelian(1));
    REQUIRE(grp(fixtures::torus7(), 1) == free_abelian(2));
    REQUIRE(grp(fixtures::torus7(), 2) == free_abelian(1));

    REQUIRE(grp(fixtures::rp2_6(), 1) == FgAbGroup{0, {2}});
    REQUIRE(grp(fixtures::rp2_6(), 2).trivial());

    REQUIRE(grp(fixtures::klein(), 1) == FgAbGroup{1, {2}});
    REQUIRE(grp(fixtures::klein(), 2).trivial());

    REQUIRE(grp(fixtures::cylinder(), 1) == free_abelian(1));
    REQUIRE(grp(fixtures::wedge(2), 1) == free_abelian(2));
    REQUIRE(grp(fixtures::wedge(5), 1) == free_abelian(5));
}

TEST_CASE("fixture homology agrees with the brute-force oracle") {
    for (const FiniteComplex& k :
         {fixtures::circle(3), fixtures::disc(), fixtures::sphere(),
          fixtures::torus7(), fixtures::rp2_6(), fixtures::klein(),
          fixtures::cylinder(), fixtures::wedge(3), fixtures::disc_collar()}) {
        for (int n = 0; n <= k.dim() + 1; ++n)
            REQUIRE(grp(k, n) == oracle::homology(k, n));
    }
}

TEST_CASE("fuzzed homology agrees with the brute-force oracle") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        FiniteComplex k = random_complex(rng, 9, 7);
        for (int n = 0; n <= k.dim(); ++n)
            REQUIRE(grp(k, n) == oracle::homology(k, n));
    }
}

TEST_CASE("generator chains are cycles with unit coordinates") {
    for (const FiniteComplex& k :
         {fixtures::circle(5), fixtures::torus7(), fixtures::rp2_6(),
          fixtures::klein()}) {
        for (int n = 0; n <= 2; ++n) {
            HomologyResult h(k, FiniteComplex(), n);
            for (int g = 0; g < h.ncoords(); ++g) {
                REQUIRE(h.is_cycle(h.generators()[g]));
                auto coords = h.class_coordinates(h.generators()[g]);
                for (int i = 0; i < h.ncoords(); ++i)
                    REQUIRE(coords[i] == (i == g ? 1 : 0));
            }
        }
    }
}

TEST_CASE("euler characteristic equals alternating betti sum") {
    std::mt19937 rng(140920);
    for (int trial = 0; trial < 25; ++trial) {
        FiniteComplex k = random_complex(rng, 9, 6);
        long long chi = 0;
        for (int n = 0; n <= k.dim(); ++n) {
            int b = grp(k, n).rank;
            chi += (n % 2 == 0) ? b : -b;
        }
        REQUIRE(chi == k.euler_characteristic());
    }
}

TEST_CASE("homology is invariant under vertex relabeling") {
    std::mt19937 rng(5150);
    FiniteComplex k = fixtures::torus7();
    std::vector<VertexId> perm{12, 3, 44, 0, 9, 27, 5};
    FiniteComplex relabeled;
    for (const auto& s : k.simplices()) {
        std::vector<VertexId> vs;
        for (VertexId v : s.vertices()) vs.push_back(perm[v]);
        relabeled.insert_raw(Simplex(vs));
    }
    relabeled.validate();
    for (int n = 0; n <= 2; ++n) REQUIRE(grp(relabeled, n) == grp(k, n));
}

TEST_CASE("relative homology of standard pairs") {
    // (disc, boundary circle): relative classes appear one dimension up.
    FiniteComplex d = fixtures::disc();
    FiniteComplex s1 = fixtures::circle(3);
    REQUIRE(relative_homology(d, s1, 2).group() == free_abelian(1));
    REQUIRE(relative_homology(d, s1, 1).group().trivial());
    REQUIRE(relative_homology(d, s1, 0).group().trivial());

    // (K, K) vanishes identically.
    FiniteComplex t = fixtures::torus7();
    for (int n = 0; n <= 2; ++n)
        REQUIRE(relative_homology(t, t, n).group().trivial());

    // (circle plus far point, that point): H_1 survives, H_0 counts the
    // circle component.
    FiniteComplex k = fixtures::circle(3);
    k.insert_closed(Simplex{9});
    FiniteComplex pt;
    pt.insert_closed(Simplex{9});
    REQUIRE(relative_homology(k, pt, 1).group() == free_abelian(1));
    REQUIRE(relative_homology(k, pt, 0).group() == free_abelian(1));

    FiniteComplex not_sub;
    not_sub.insert_closed(Simplex{77});
    REQUIRE_THROWS_AS(relative_homology(k, not_sub, 0), NotSubcomplexError);
}

TEST_CASE("induced map of the identity is the identity") {
    FiniteComplex t = fixtures::torus7();
    for (int n = 0; n <= 2; ++n) {
        GroupHom h = induced_map(identity_map(t), t, t, n);
        REQUIRE(is_isomorphism(h));
        REQUIRE(h.matrix == IntegerMatrix::identity(h.matrix.rows()));
    }
}

TEST_CASE("degree two circle map multiplies H_1 by two") {
    FiniteComplex hexagon = fixtures::circle(6);
    FiniteComplex triangle = fixtures::circle(3);
    SimplicialMap f;
    for (int i = 0; i < 6; ++i) f.vertex_map[i] = i % 3;
    GroupHom h = induced_map(f, hexagon, triangle, 1);
    REQUIRE(h.matrix.rows() == 1);
    REQUIRE(h.matrix.cols() == 1);
    REQUIRE(oracle::oabs(h.matrix.at(0, 0)) == 2);
    REQUIRE(is_injective(h));
    REQUIRE_FALSE(is_surjective(h));
}

TEST_CASE("wedge summand inclusion is injective on H_1") {
    FiniteComplex w = fixtures::wedge(2);
    FiniteComplex c = fixtures::circle(3); // vertices 0,1,2
    SimplicialMap inc;
    inc.vertex_map[0] = 0;
    inc.vertex_map[1] = 1;
    inc.vertex_map[2] = 2;
    GroupHom h = induced_map(inc, c, w, 1);
    REQUIRE(is_injective(h));
    REQUIRE_FALSE(is_surjective(h));
}

TEST_CASE("collapse to a point kills positive homology") {
    FiniteComplex t = fixtures::torus7();
    FiniteComplex pt = fixtures::point();
    SimplicialMap f;
    for (VertexId v : t.vertices()) f.vertex_map[v] = 0;
    GroupHom h1 = induced_map(f, t, pt, 1);
    REQUIRE(h1.matrix.is_zero());
    GroupHom h0 = induced_map(f, t, pt, 0);
    REQUIRE(is_isomorphism(h0));
}
