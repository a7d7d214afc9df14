#include <catch2/catch_amalgamated.hpp>

#include <limtop/exhaustion.hpp>

#include <random>

#include "fixtures.hpp"
#include "fuzz.hpp"

using namespace limtop;

TEST_CASE("H0 of the line colimit stabilizes immediately") {
    Exhaustion x = fixtures::line_exhaustion(8);
    ColimitHomology r = colimit_homology(x, 0, 8);
    REQUIRE(r.colimit == free_abelian(1));
    for (const auto& g : r.stage_groups) REQUIRE(g == free_abelian(1));
    for (bool iso : r.map_is_iso) REQUIRE(iso);
    REQUIRE(r.stable_from == 0);
    REQUIRE(r.stable_from <= 2);

    ColimitHomology h1 = colimit_homology(x, 1, 8);
    REQUIRE(h1.colimit.trivial());
    REQUIRE(h1.stable_from == 0);
}

TEST_CASE("H1 of the growing wedge never stabilizes in the prefix") {
    Exhaustion x = fixtures::wedge_exhaustion(6);
    ColimitHomology r = colimit_homology(x, 1, 6);
    for (int i = 0; i < 6; ++i) REQUIRE(r.stage_groups[i] == free_abelian(i));
    for (std::size_t i = 0; i < r.map_is_iso.size(); ++i) {
        REQUIRE(r.map_is_injective[i]);
        REQUIRE(!r.map_is_iso[i]);
    }
    REQUIRE(r.stable_from == -1);
    REQUIRE(r.colimit == free_abelian(5));

    // A longer prefix keeps growing: no spurious stabilization.
    x.materialize(9);
    ColimitHomology longer = colimit_homology(x, 1, 10);
    REQUIRE(longer.colimit == free_abelian(9));
    REQUIRE(longer.stable_from == -1);
}

TEST_CASE("a stage that kills a cycle shows up as a non-injective map") {
    std::vector<FiniteComplex> stages = {fixtures::circle(3), fixtures::disc()};
    Exhaustion x = build_exhaustion(stages, {});
    ColimitHomology r = colimit_homology(x, 1, 2);
    REQUIRE(r.stage_groups[0] == free_abelian(1));
    REQUIRE(r.stage_groups[1].trivial());
    REQUIRE(!r.map_is_injective[0]);
    REQUIRE(r.colimit.trivial());
    REQUIRE(r.stable_from == -1);
}

TEST_CASE("constant exhaustions keep torsion") {
    std::vector<FiniteComplex> stages(3, fixtures::rp2_6());
    ColimitHomology r = colimit_homology(build_exhaustion(stages, {}), 1, 3);
    REQUIRE(r.colimit == FgAbGroup{0, {2}});
    REQUIRE(r.stable_from == 0);
}

TEST_CASE("stage budget truncates the prefix") {
    Exhaustion x = fixtures::wedge_exhaustion(6);
    ColimitHomology r = colimit_homology(x, 1, 3);
    REQUIRE(r.stage_groups.size() == 3);
    REQUIRE(r.colimit == free_abelian(2));
}

TEST_CASE("colimit over a finite prefix equals the last stage group") {
    std::mt19937 rng(660708);
    for (int trial = 0; trial < 40; ++trial) {
        Exhaustion x = fuzz::random_exhaustion(rng, 2 + trial % 4);
        for (int n = 0; n <= 2; ++n) {
            ColimitHomology r = colimit_homology(x, n, x.prefix_length());
            REQUIRE(r.colimit == r.stage_groups.back());
        }
    }
}
