#include <doctest.h>

#include <qring/errors.hpp>
#include <qring/linalg.hpp>

#include <vector>

using namespace qring;

namespace {

Cyclotomic cyc(long v) { return Cyclotomic(Rational(v)); }

CycVec vec(std::vector<long> entries) {
    CycVec out;
    for (long e : entries) out.push_back(cyc(e));
    return out;
}

}  // namespace

TEST_CASE("vector helpers") {
    CHECK(vec_is_zero(vec({0, 0, 0})));
    CHECK_FALSE(vec_is_zero(vec({0, 1, 0})));
    CHECK(vec_conductor(vec({1, 2})) == 1);
    CycVec mixed{root_of_unity(3, 1), root_of_unity(4, 1)};
    CHECK(vec_conductor(mixed) == 12);
    const CycVec lifted = lift_vec(mixed, 12);
    CHECK(lifted[0].conductor() == 12);
    CHECK(lifted[0] == root_of_unity(12, 4));
    CHECK(lifted[1] == root_of_unity(12, 3));
    CHECK_THROWS_AS(lift_vec(mixed, 6), ConductorMismatch);
}

TEST_CASE("permute moves the i-th coordinate to position g(i)") {
    const Permutation g = Permutation::from_cycles(3, {{0, 1, 2}});
    const CycVec v = vec({5, 7, 9});
    const CycVec out = permute(g, v);
    CHECK(out == vec({9, 5, 7}));  // out[g(i)] = v[i]
}

TEST_CASE("echelon insertion reduces, normalizes and back-substitutes") {
    EchelonBasis basis(3);
    CHECK(basis.rank() == 0);
    CHECK(basis.add(vec({2, 2, 0})));
    // normalized: pivot is 1
    CHECK(basis.rows()[0] == vec({1, 1, 0}));
    CHECK(basis.pivots() == std::vector<std::size_t>{0});
    // dependent vector does not grow the rank
    CHECK_FALSE(basis.add(vec({-3, -3, 0})));
    CHECK(basis.rank() == 1);
    // new pivot at column 1; back-substitution clears it from row 0
    CHECK(basis.add(vec({0, 5, 5})));
    CHECK(basis.rows()[0] == vec({1, 0, -1}));
    CHECK(basis.rows()[1] == vec({0, 1, 1}));
    CHECK(basis.pivots() == std::vector<std::size_t>{0, 1});
    CHECK(basis.contains(vec({1, 1, 0})));
    CHECK(basis.contains(vec({0, 0, 0})));
    CHECK_FALSE(basis.contains(vec({0, 0, 1})));
}

TEST_CASE("canonical form is insertion-order independent") {
    const std::vector<CycVec> gens = {vec({1, 2, 3}), vec({4, 5, 6}), vec({5, 7, 9})};
    EchelonBasis fwd(3), rev(3);
    for (const auto& v : gens) fwd.add(v);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) rev.add(*it);
    CHECK(fwd.rank() == 2);  // third generator is the sum of the first two
    CHECK(rev.rank() == 2);
    CHECK(fwd.rows() == rev.rows());
    CHECK(span_equal(fwd, rev));
}

TEST_CASE("span_equal distinguishes genuinely different subspaces") {
    EchelonBasis a(2), b(2), c(2);
    a.add(vec({1, 0}));
    b.add(vec({1, 1}));
    c.add(vec({2, 0}));
    CHECK_FALSE(span_equal(a, b));
    CHECK(span_equal(a, c));  // scaling does not change the span
}

TEST_CASE("conductor grows to absorb cyclotomic entries") {
    EchelonBasis basis(2);
    basis.add(vec({1, 1}));
    CHECK(basis.conductor() == 1);
    CycVec v{root_of_unity(4, 1), cyc(0)};
    CHECK(basis.add(v));
    CHECK(basis.conductor() == 4);
    // earlier rows were re-lifted: both now sit at conductor 4
    for (const auto& row : basis.rows())
        for (const auto& entry : row) CHECK(entry.conductor() == 4);
    // reduction works across conductors: zeta_4 * (1,1) is in the span
    CycVec w{root_of_unity(4, 1), root_of_unity(4, 1)};
    CHECK(basis.contains(w));
    // pivot of the second row was normalized to 1 despite the zeta_4 seed
    CHECK(basis.rows()[0] == CycVec{cyc(1).lifted(4), cyc(0).lifted(4)});
    CHECK(basis.rows()[1] == CycVec{cyc(0).lifted(4), cyc(1).lifted(4)});
}

TEST_CASE("invariant_closure grows seeds into stable subspaces") {
    // The 3-cycle action on coordinates: a single basis vector generates all
    // of Q^3; the all-ones vector is already invariant.
    const Permutation rot = Permutation::from_cycles(3, {{0, 1, 2}});
    const EchelonBasis full = invariant_closure(3, {vec({1, 0, 0})}, {rot});
    CHECK(full.rank() == 3);
    const EchelonBasis line = invariant_closure(3, {vec({1, 1, 1})}, {rot});
    CHECK(line.rank() == 1);
    // difference vectors span the 2-dim complement, stable under the rotation
    const EchelonBasis diff = invariant_closure(3, {vec({1, -1, 0})}, {rot});
    CHECK(diff.rank() == 2);
    CHECK(diff.contains(vec({0, 1, -1})));
    CHECK_FALSE(diff.contains(vec({1, 1, 1})));
}

TEST_CASE("dimension mismatches are rejected") {
    EchelonBasis basis(3);
    CHECK_THROWS_AS(basis.add(vec({1, 0})), DegreeMismatch);
    basis.add(vec({1, 0, 0}));
    CHECK_THROWS_AS(basis.contains(vec({1, 0})), DegreeMismatch);
}
