#include <catch2/catch_amalgamated.hpp>

#include <limtop/abelian.hpp>
#include <limtop/matrix.hpp>

#include <random>

#include "oracle.hpp"

using namespace limtop;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

oracle::Mat to_oracle(const IntegerMatrix& m) {
    oracle::Mat out(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    return out;
}

void check_smith(const IntegerMatrix& a) {
    SmithForm s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    REQUIRE(s.u * s.uinv == IntegerMatrix::identity(a.rows()));
    REQUIRE(s.v * s.vinv == IntegerMatrix::identity(a.cols()));
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) REQUIRE(s.d.at(i, j) == 0);
    for (std::size_t i = 0; i < s.invariants.size(); ++i) {
        REQUIRE(s.invariants[i] > 0);
        if (i + 1 < s.invariants.size())
            REQUIRE(s.invariants[i + 1] % s.invariants[i] == 0);
    }
    REQUIRE(s.invariants == oracle::invariant_factors(to_oracle(a)));
}

} // namespace

TEST_CASE("smith normal form of small examples") {
    SmithForm s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    REQUIRE(s.invariants == std::vector<Int>{2, 4});

    s = smith_normal_form(from_rows({{1, 0}, {0, 1}}));
    REQUIRE(s.invariants == std::vector<Int>{1, 1});

    s = smith_normal_form(IntegerMatrix(3, 2));
    REQUIRE(s.invariants.empty());

    s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(s.invariants == std::vector<Int>{1, 6});

    s = smith_normal_form(from_rows({{6}, {10}, {15}}));
    REQUIRE(s.invariants == std::vector<Int>{1});
}

TEST_CASE("smith transforms are unimodular and reproduce the form") {
    check_smith(from_rows({{2, 4}, {6, 8}}));
    check_smith(from_rows({{0, 0, 0}, {0, 5, 0}}));
    check_smith(from_rows({{-3}}));
    check_smith(from_rows({{4, -2, 7}, {0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));
}

TEST_CASE("smith fuzz against the naive oracle") {
    std::mt19937 rng(424201);
    for (int trial = 0; trial < 120; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 7);
        IntegerMatrix a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                a.at(i, j) = static_cast<int>(rng() % 19) - 9;
        check_smith(a);
        if (r == c) {
            Int det = oracle::determinant(to_oracle(a));
            SmithForm s = smith_normal_form(a);
            Int prod = 1;
            for (const auto& d : s.invariants) prod *= d;
            if (s.rank() == r)
                REQUIRE(prod == oracle::oabs(det));
            else
                REQUIRE(det == 0);
        }
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 rng(52111);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 6);
        IntegerMatrix a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                a.at(i, j) = static_cast<int>(rng() % 11) - 5;
        SmithForm s = smith_normal_form(a);
        IntegerMatrix k = kernel_basis(s);
        REQUIRE(k.cols() == c - s.rank());
        REQUIRE((a * k).is_zero());
    }
}

TEST_CASE("integer linear solve") {
    IntegerMatrix a = from_rows({{2}});
    REQUIRE_FALSE(solve_integer(a, {Int(3)}).has_value());
    auto x = solve_integer(a, {Int(4)});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] == 2);

    std::mt19937 rng(900314);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        IntegerMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m.at(i, j) = static_cast<int>(rng() % 9) - 4;
        std::vector<Int> x0(c);
        for (int j = 0; j < c; ++j) x0[j] = static_cast<int>(rng() % 7) - 3;
        std::vector<Int> b = m.apply(x0);
        auto sol = solve_integer(m, b);
        REQUIRE(sol.has_value());
        REQUIRE(m.apply(*sol) == b);
    }
}

TEST_CASE("presented groups expose rank, torsion, and coordinates") {
    // Z^3 / <(2,0,0)> = Z/2 + Z^2
    IntegerMatrix rel(3, 1);
    rel.at(0, 0) = 2;
    PresentedGroup g(3, rel);
    REQUIRE(g.group().rank == 2);
    REQUIRE(g.group().torsion == std::vector<Int>{2});
    REQUIRE(g.ncoords() == 3);

    // The class of (1,0,0) has order two; doubling it is the zero class.
    auto c1 = g.coords_of({Int(1), Int(0), Int(0)});
    REQUIRE_FALSE(g.is_zero_class(c1));
    std::vector<Int> twice = c1;
    for (auto& z : twice) z *= 2;
    REQUIRE(g.is_zero_class(twice));

    // Generators map back to nonzero classes with the right orders.
    for (int k = 0; k < g.ncoords(); ++k) {
        auto gen = g.generator(k);
        auto coords = g.coords_of(gen);
        REQUIRE_FALSE(g.is_zero_class(coords));
        if (g.orders()[k] != 0) {
            std::vector<Int> mult = coords;
            for (auto& z : mult) z *= g.orders()[k];
            REQUIRE(g.is_zero_class(mult));
        }
    }
}

TEST_CASE("group homomorphism predicates") {
    // x2 : Z -> Z is injective, not surjective.
    GroupHom twice{free_abelian(1), free_abelian(1), {Int(0)}, {Int(0)},
                   from_rows({{2}})};
    REQUIRE(is_injective(twice));
    REQUIRE_FALSE(is_surjective(twice));
    REQUIRE_FALSE(is_isomorphism(twice));

    GroupHom neg{free_abelian(1), free_abelian(1), {Int(0)}, {Int(0)},
                 from_rows({{-1}})};
    REQUIRE(is_isomorphism(neg));

    // Z -> Z/2, 1 -> 1 is surjective, not injective.
    GroupHom onto{free_abelian(1), FgAbGroup{0, {2}}, {Int(0)}, {Int(2)},
                  from_rows({{1}})};
    REQUIRE(is_surjective(onto));
    REQUIRE_FALSE(is_injective(onto));

    // Z/2 -> Z/4, 1 -> 2 is injective, not surjective.
    GroupHom dbl{FgAbGroup{0, {2}}, FgAbGroup{0, {4}}, {Int(2)}, {Int(4)},
                 from_rows({{2}})};
    REQUIRE(is_injective(dbl));
    REQUIRE_FALSE(is_surjective(dbl));

    // Shear automorphism of Z^2.
    GroupHom shear{free_abelian(2), free_abelian(2), {Int(0), Int(0)},
                   {Int(0), Int(0)}, from_rows({{1, 1}, {0, 1}})};
    REQUIRE(is_isomorphism(shear));
}

TEST_CASE("subgroup comparison") {
    std::vector<Int> orders{Int(0), Int(0)};
    IntegerMatrix a = from_rows({{2, 0}, {0, 1}});
    IntegerMatrix b = from_rows({{2, 0}, {0, 3}});
    REQUIRE(subgroup_contains(orders, a, b));
    REQUIRE_FALSE(subgroup_contains(orders, b, a));
    REQUIRE(subgroups_equal(orders, a, a));

    // Inside Z/6: <2> contains <4> and conversely.
    std::vector<Int> z6{Int(6)};
    REQUIRE(subgroups_equal(z6, from_rows({{2}}), from_rows({{4}})));
    REQUIRE_FALSE(subgroups_equal(z6, from_rows({{2}}), from_rows({{3}})));
}
