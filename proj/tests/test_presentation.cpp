#include <catch2/catch_amalgamated.hpp>

#include <limtop/presentation.hpp>

#include <random>

#include "fixtures.hpp"
#include "fuzz.hpp"

using namespace limtop;

TEST_CASE("word helpers") {
    Word w = {1, 2, -1};
    REQUIRE(word_inverse(w) == Word{1, -2, -1});
    REQUIRE(free_reduce(word_concat(w, word_inverse(w))).empty());
    REQUIRE(free_reduce(Word{1, -2, 2, -1, 3}) == Word{3});

    Presentation p;
    p.ngens = 3;
    p.names = default_generator_names(3);
    REQUIRE(p.word_to_string({1, 2, -1, 3}) == "a b A c");
    REQUIRE(p.word_to_string({}) == "1");
}

TEST_CASE("edge-path group of a circle is free of rank one") {
    EdgePathGroup g = edge_path_group(fixtures::circle(5), 0);
    REQUIRE(g.pres.ngens == 1);
    REQUIRE(g.pres.relators.empty());
    REQUIRE(g.tree.size() == 4);
    REQUIRE(abelianization(g.pres) == free_abelian(1));
}

TEST_CASE("edge-path group of a wedge is free on one generator per circle") {
    for (int m : {1, 2, 4}) {
        EdgePathGroup g = edge_path_group(fixtures::wedge(m), 0);
        REQUIRE(g.pres.ngens == m);
        REQUIRE(g.pres.relators.empty());
        REQUIRE(abelianization(g.pres) == free_abelian(m));
    }
}

TEST_CASE("edge-path group of simply connected fixtures abelianizes to zero") {
    for (const auto& k : {fixtures::disc(), fixtures::sphere(), fixtures::path(5),
                          fixtures::disc_collar()}) {
        EdgePathGroup g = edge_path_group(k, k.vertices().front());
        REQUIRE(abelianization(g.pres).trivial());
    }
}

TEST_CASE("surface edge-path groups abelianize to first homology") {
    REQUIRE(abelianization(edge_path_group(fixtures::torus7(), 0).pres) ==
            free_abelian(2));
    REQUIRE(abelianization(edge_path_group(fixtures::rp2_6(), 1).pres) ==
            FgAbGroup{0, {2}});
    REQUIRE(abelianization(edge_path_group(fixtures::klein(), 0).pres) ==
            FgAbGroup{1, {2}});
}

TEST_CASE("spanning tree is deterministic and generator count is euler-exact") {
    EdgePathGroup g = edge_path_group(fixtures::torus7(), 0);
    // 7 vertices, 21 edges: 6 tree edges, 15 generators, 14 triangles.
    REQUIRE(g.tree.size() == 6);
    REQUIRE(g.pres.ngens == 15);
    REQUIRE(g.pres.relators.size() == 14);

    EdgePathGroup again = edge_path_group(fixtures::torus7(), 0);
    REQUIRE(again.generator_of == g.generator_of);
    REQUIRE(again.tree == g.tree);
}

TEST_CASE("letters orient generators and vanish on the tree") {
    EdgePathGroup g = edge_path_group(fixtures::circle(4), 0);
    Simplex nontree = g.generator_of.begin()->first;
    auto vs = nontree.vertices();
    REQUIRE(g.letter(vs[0], vs[1]) == 1);
    REQUIRE(g.letter(vs[1], vs[0]) == -1);
    REQUIRE(g.letter(0, 0) == 0);
    for (const auto& e : g.tree) {
        auto tv = e.vertices();
        REQUIRE(g.letter(tv[0], tv[1]) == 0);
    }
    // Walking the full cycle spells the single generator once.
    Word loop = g.path_word({0, 1, 2, 3, 0});
    REQUIRE(free_reduce(loop).size() == 1);
}

TEST_CASE("base vertex and connectivity preconditions") {
    REQUIRE_THROWS_AS(edge_path_group(fixtures::circle(3), 9),
                      SimplexNotFoundError);
    FiniteComplex two = FiniteComplex::from_maximal({Simplex{0}, Simplex{1}});
    REQUIRE_THROWS_AS(edge_path_group(two, 0), DisconnectedError);
}

TEST_CASE("number of generators matches the euler count on fuzzed complexes") {
    std::mt19937 rng(240817);
    int done = 0;
    for (int trial = 0; done < 60; ++trial) {
        FiniteComplex k = fuzz::random_complex(rng, 8, 6);
        if (!k.is_connected()) continue;
        ++done;
        EdgePathGroup g = edge_path_group(k, k.vertices().front());
        int v = static_cast<int>(k.vertices().size());
        int e = static_cast<int>(k.simplices_of_dim(1).size());
        REQUIRE(static_cast<int>(g.tree.size()) == v - 1);
        REQUIRE(g.pres.ngens == e - (v - 1));
        REQUIRE(static_cast<int>(g.pres.relators.size()) <=
                static_cast<int>(k.simplices_of_dim(2).size()));
    }
}
