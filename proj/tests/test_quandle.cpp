#include <doctest.h>

#include <qring/errors.hpp>
#include <qring/quandle.hpp>

#include <vector>

using namespace qring;

namespace {
using Table = std::vector<std::vector<std::uint32_t>>;
using Row = std::vector<std::uint32_t>;
}

TEST_CASE("dihedral table entries follow 2j - i mod n") {
    const auto q = Quandle::dihedral(4);
    CHECK(q->order() == 4);
    CHECK(q->op(0, 1) == 2);
    CHECK(q->op(3, 3) == 3);
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j)
            CHECK(q->op(i, j) == (2 * j + 4 - i) % 4);
    CHECK(q->is_dihedral());
    CHECK_THROWS_AS(Quandle::dihedral(0), RangeError);
}

TEST_CASE("trivial quandle fixes everything") {
    const auto q = Quandle::trivial(2);
    CHECK(q->op(0, 1) == 0);
    CHECK(q->op(1, 0) == 1);
    const auto od = q->orbits();
    CHECK(od.orbits == std::vector<Row>{{0}, {1}});
    CHECK_FALSE(od.connected);
    CHECK(q->inner_group()->order() == 1);
    // 2j - i mod 2 = i, so the order-2 dihedral and trivial tables coincide.
    CHECK(q->is_dihedral());
    CHECK_FALSE(Quandle::trivial(3)->is_dihedral());
}

TEST_CASE("validate reports the failed axiom with a witness") {
    // Axiom 1 (idempotence): 0 |> 0 = 1.
    try {
        Quandle::validate(Table{{1, 0}, {1, 0}});
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(e.axiom == 1);
        CHECK(e.witness == Row{0});
    }
    // Axiom 2 (right invertibility): column y = 0 is not a bijection.
    try {
        Quandle::validate(Table{{0, 0}, {0, 1}});
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(e.axiom == 2);
        CHECK(e.witness == Row{0});
    }
    // Axiom 3 (right self-distributivity): idempotent, every column a
    // bijection, but (0 |> 1) |> 0 = 0 while (0 |> 0) |> (1 |> 0) = 1.
    const Table t3{{0, 0, 1}, {2, 1, 0}, {1, 2, 2}};
    try {
        Quandle::validate(t3);
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(e.axiom == 3);
        REQUIRE(e.witness.size() == 3);
        const auto x = e.witness[0], y = e.witness[1], z = e.witness[2];
        // replay: (x |> y) |> z != (x |> z) |> (y |> z)
        CHECK(t3[t3[x][y]][z] != t3[t3[x][z]][t3[y][z]]);
    }
    // Malformed shapes are rejected before axiom checks.
    CHECK_THROWS_AS(Quandle::validate(Table{}), RangeError);
    CHECK_THROWS_AS(Quandle::validate(Table{{0, 1}}), RangeError);
    CHECK_THROWS_AS(Quandle::validate(Table{{0, 5}, {1, 1}}), RangeError);
}

TEST_CASE("validate accepts dihedral tables round-tripped through raw data") {
    for (std::uint32_t n : {1u, 2u, 3u, 5u, 8u}) {
        const auto q = Quandle::dihedral(n);
        const auto v = Quandle::validate(q->table());
        CHECK(*v == *q);
    }
}

TEST_CASE("right translations of dihedral quandles") {
    const auto q8 = Quandle::dihedral(8);
    CHECK(q8->right_translation(0).str() == "(1 7)(2 6)(3 5)");
    CHECK(Quandle::dihedral(6)->right_translation(0).str() == "(1 5)(2 4)");
    // R_j is the product of the transpositions (i, 2j - i).
    for (std::uint32_t j = 0; j < 8; ++j) {
        std::vector<std::vector<std::uint32_t>> cycles;
        for (std::uint32_t i = 0; i < 8; ++i) {
            const std::uint32_t image = (2 * j + 16 - i) % 8;
            if (i < image) cycles.push_back({i, image});
        }
        CHECK(q8->right_translation(j) == Permutation::from_cycles(8, cycles));
    }
    // R_x(y) = y |> x: the translation reads the table column-wise.
    for (std::uint32_t x = 0; x < 8; ++x)
        for (std::uint32_t y = 0; y < 8; ++y)
            CHECK(q8->right_translation(x)(y) == q8->op(y, x));
}

TEST_CASE("inner automorphism groups of dihedral quandles") {
    CHECK(Quandle::dihedral(8)->inner_group()->order() == 8);
    CHECK(Quandle::dihedral(6)->inner_group()->order() == 6);
    // Generators are deduplicated in index order: R_0 first.
    const auto g = Quandle::dihedral(8)->inner_group();
    CHECK(g->generators()[0] == Quandle::dihedral(8)->right_translation(0));
}

TEST_CASE("orbit decompositions") {
    const auto od8 = Quandle::dihedral(8)->orbits();
    CHECK(od8.orbits == std::vector<Row>{{0, 2, 4, 6}, {1, 3, 5, 7}});
    CHECK_FALSE(od8.connected);
    const auto od5 = Quandle::dihedral(5)->orbits();
    CHECK(od5.orbits.size() == 1);
    CHECK(od5.connected);
}

TEST_CASE("orbit restrictions re-index by sorted orbit position") {
    const auto q = Quandle::dihedral(8);
    const Row evens{0, 2, 4, 6};
    // R_0 : k -> -k fixes 0 and 4 and swaps 2 <-> 6, i.e. positions 1 and 3.
    CHECK(q->restrict_translation(0, evens) ==
          Permutation::from_cycles(4, {{1, 3}}));
    // S_1 S_0 is the 4-cycle on positions.
    const Permutation s0 = q->restrict_translation(0, evens);
    const Permutation s1 = q->restrict_translation(1, evens);
    CHECK(compose(s1, s0) == Permutation::from_cycles(4, {{0, 1, 2, 3}}));
    // A non-invariant subset is rejected.
    CHECK_THROWS_AS(q->restrict_translation(0, Row{0, 1}), NotInvariant);
}

TEST_CASE("restricted inner groups of the order-8 dihedral quandle are D_4") {
    const auto q = Quandle::dihedral(8);
    for (const auto& orbit : q->orbits().orbits) {
        const auto g = q->restricted_inner_group(orbit);
        CHECK(g->degree() == 4);
        CHECK(g->order() == 8);
        CHECK_FALSE(g->is_abelian());
    }
}

TEST_CASE("order-4 anomaly: orbit restrictions collapse to order 2") {
    // In the dihedral quandle of order 4 each orbit has two elements and
    // half the translations restrict to the identity, so the restricted
    // inner group is C_2, not a dihedral group.
    const auto q = Quandle::dihedral(4);
    for (const auto& orbit : q->orbits().orbits) {
        const auto g = q->restricted_inner_group(orbit);
        CHECK(g->order() == 2);
        CHECK_FALSE(dihedral_witness(*g).has_value());
    }
}

TEST_CASE("is_dihedral distinguishes tables of equal order") {
    CHECK(Quandle::dihedral(3)->is_dihedral());
    CHECK_FALSE(Quandle::trivial(3)->is_dihedral());
}
