#include "latcone/coxeter.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace latcone;
using fixtures::m2;

namespace {

// 2x2 restriction of r_{E1} r_{E2} to span{E1, E2} in the (E1, E2) basis.
RatMat restricted_product(const Int& beta, const Int& alpha) {
    Rat q = Rat(alpha) / Rat(beta);
    RatMat m(2, 2);
    m.at(0, 0) = Rat(-1) + 4 * q * q;
    m.at(0, 1) = 2 * q;
    m.at(1, 0) = -2 * q;
    m.at(1, 1) = Rat(-1);
    return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    RatMat r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
}

bool is_identity(const RatMat& m) {
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

} // namespace

TEST_CASE("pair order dichotomy against the matrix oracle") {
    for (Int beta : {Int(-2), Int(-4), Int(-6)}) {
        for (Int alpha = -3; alpha <= 3; ++alpha) {
            int order = pair_order(beta, alpha);
            int expected = alpha == 0 ? 2 : (beta == -2 * int_abs(alpha) ? 3 : kInfiniteOrder);
            CHECK(order == expected);
            // oracle: exact powers of the restricted product
            RatMat m = restricted_product(beta, alpha);
            if (order != kInfiniteOrder) {
                RatMat acc = m;
                for (int k = 1; k < order; ++k) acc = rat_mul(acc, m);
                CHECK(is_identity(acc));
                RatMat smaller = m;
                for (int k = 1; k < order; ++k) {
                    CHECK_FALSE(is_identity(smaller));
                    smaller = rat_mul(smaller, m);
                }
            } else {
                RatMat acc = m;
                bool any_identity = false;
                for (int k = 1; k <= 12; ++k) {
                    if (is_identity(acc)) any_identity = true;
                    acc = rat_mul(acc, m);
                }
                CHECK_FALSE(any_identity);
            }
        }
    }
}

TEST_CASE("pair order on root objects") {
    Lattice a2(m2(-2, 1, 1, -2));
    CHECK(pair_order(a2, Root(a2, {1, 0}), Root(a2, {0, 1})) == 3);
    Lattice a11(m2(-2, 0, 0, -2));
    CHECK(pair_order(a11, Root(a11, {1, 0}), Root(a11, {0, 1})) == 2);
    Lattice far(m2(-2, 3, 3, -2));
    CHECK(pair_order(far, Root(far, {1, 0}), Root(far, {0, 1})) == kInfiniteOrder);
    CHECK_THROWS_WITH_AS(pair_order(a2, Root(a2, {1, 0}), Root(a2, {1, 0})),
                         doctest::Contains("EqualRoots"), Error);
    Lattice mixed(fixtures::m2(-2, 0, 0, -8));
    CHECK_THROWS_WITH_AS(pair_order(mixed, Root(mixed, {1, 0}), Root(mixed, {0, 1})),
                         doctest::Contains("UnequalNorms"), Error);
}

TEST_CASE("root orbits under a swap action") {
    Lattice a11(m2(-2, 0, 0, -2));
    auto swap = LatticeAction::from_generators(a11, {m2(0, 1, 1, 0)});
    auto orbits = root_orbits(a11, {IntVec{1, 0}, IntVec{0, 1}}, swap);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].roots.size() == 2);

    auto trivial = LatticeAction::from_generators(a11, {});
    CHECK(root_orbits(a11, {IntVec{1, 0}, IntVec{0, 1}}, trivial).size() == 2);

    Lattice u(fixtures::hyperbolic_u());
    auto uswap = LatticeAction::from_generators(u, {m2(0, 1, 1, 0)});
    auto fixed = root_orbits(u, {IntVec{1, -1}}, uswap);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0].roots.size() == 1);
}

TEST_CASE("root orbits reject unpreserved root sets") {
    Lattice a11(m2(-2, 0, 0, -2));
    auto swap = LatticeAction::from_generators(a11, {m2(0, 1, 1, 0)});
    CHECK_THROWS_WITH_AS(root_orbits(a11, {IntVec{1, 0}}, swap),
                         doctest::Contains("ActionDoesNotPreserveRoots"), Error);
}

TEST_CASE("orbit analysis: case A") {
    Lattice a11(m2(-2, 0, 0, -2));
    auto swap = LatticeAction::from_generators(a11, {m2(0, 1, 1, 0)});
    auto orbits = root_orbits(a11, {IntVec{1, 0}, IntVec{0, 1}}, swap);
    OrbitReport r = analyze_orbit(a11, orbits[0]);
    CHECK(r.finite);
    CHECK(r.kase == OrbitCase::A);
    CHECK(*r.composite_root == IntVec{1, 1});
    CHECK(a11.norm(*r.composite_root) == -4);
    // the longest element is the commuting product of the two reflections
    IntMat expect = mat_mul(reflection_matrix(a11, orbits[0].roots[0]),
                            reflection_matrix(a11, orbits[0].roots[1]));
    CHECK(*r.longest_element == expect);
    CHECK(mat_mul(*r.longest_element, *r.longest_element) == IntMat::identity(2));
    // invariance of both outputs under the action
    for (std::size_t e = 0; e < swap.order(); ++e) {
        const IntMat& m = swap.matrix(e);
        CHECK(mat_apply(m, *r.composite_root) == *r.composite_root);
        CHECK(mat_mul(mat_mul(m, *r.longest_element), unimodular_inverse(m)) ==
              *r.longest_element);
    }
    // on the fixed sublattice of the action, the longest element agrees with
    // the rational reflection in the composite root
    auto fixed = fixed_sublattice(a11, swap);
    const IntVec& c = *r.composite_root;
    for (const IntVec& x : fixed) {
        Rat factor = Rat(2 * a11.inner(x, c)) / Rat(a11.norm(c));
        RatVec expect_rx = to_rat(x);
        for (std::size_t i = 0; i < 2; ++i) expect_rx[i] -= factor * Rat(c[i]);
        RatVec got = to_rat(mat_apply(*r.longest_element, x));
        CHECK(got == expect_rx);
    }
}

TEST_CASE("orbit analysis: case B with the A2 longest element identity") {
    Lattice a2(m2(-2, 1, 1, -2));
    auto swap = LatticeAction::from_generators(a2, {m2(0, 1, 1, 0)});
    auto orbits = root_orbits(a2, {IntVec{1, 0}, IntVec{0, 1}}, swap);
    OrbitReport r = analyze_orbit(a2, orbits[0]);
    CHECK(r.finite);
    CHECK(r.kase == OrbitCase::B);
    CHECK(*r.composite_root == IntVec{1, 1});
    CHECK(a2.norm(*r.composite_root) == -2);
    // r1 r2 r1 equals the reflection in E1 + E2 as integer matrices
    IntMat r1 = reflection_matrix(a2, orbits[0].roots[0]);
    IntMat r2 = reflection_matrix(a2, orbits[0].roots[1]);
    IntMat triple = mat_mul(mat_mul(r1, r2), r1);
    CHECK(triple == reflection_matrix(a2, Root(a2, *r.composite_root)));
    CHECK(*r.longest_element == triple);
    CHECK(mat_mul(triple, triple) == IntMat::identity(2));
    for (std::size_t e = 0; e < swap.order(); ++e) {
        const IntMat& m = swap.matrix(e);
        CHECK(mat_apply(m, *r.composite_root) == *r.composite_root);
        CHECK(mat_mul(mat_mul(m, *r.longest_element), unimodular_inverse(m)) ==
              *r.longest_element);
    }
}

TEST_CASE("case B identity across admissible beta") {
    // beta = -2 alpha with alpha = 1, 2, 3
    for (long long alpha = 1; alpha <= 3; ++alpha) {
        Lattice l(m2(-2 * alpha, alpha, alpha, -2 * alpha));
        IntMat r1 = reflection_matrix(l, Root(l, {1, 0}));
        IntMat r2 = reflection_matrix(l, Root(l, {0, 1}));
        IntMat triple = mat_mul(mat_mul(r1, r2), r1);
        CHECK(triple == reflection_matrix(l, Root(l, {1, 1})));
    }
}

TEST_CASE("singleton orbit") {
    Lattice u(fixtures::hyperbolic_u());
    auto trivial = LatticeAction::from_generators(u, {});
    auto orbits = root_orbits(u, {IntVec{1, -1}}, trivial);
    OrbitReport r = analyze_orbit(u, orbits[0]);
    CHECK(r.finite);
    CHECK(r.kase == OrbitCase::A);
    CHECK(*r.composite_root == IntVec{1, -1});
    CHECK(*r.longest_element == reflection_matrix(u, orbits[0].roots[0]));
}

TEST_CASE("infinite orbit") {
    Lattice far(m2(-2, 3, 3, -2));
    auto swap = LatticeAction::from_generators(far, {m2(0, 1, 1, 0)});
    auto orbits = root_orbits(far, {IntVec{1, 0}, IntVec{0, 1}}, swap);
    OrbitReport r = analyze_orbit(far, orbits[0]);
    CHECK_FALSE(r.finite);
    CHECK(r.kase == OrbitCase::Infinite);
    CHECK(invariant_generators(far, orbits).empty());
}

TEST_CASE("invariant generators collect the finite longest elements") {
    Lattice a11(m2(-2, 0, 0, -2));
    auto swap = LatticeAction::from_generators(a11, {m2(0, 1, 1, 0)});
    auto orbits = root_orbits(a11, {IntVec{1, 0}, IntVec{0, 1}}, swap);
    auto gens = invariant_generators(a11, orbits);
    REQUIRE(gens.size() == 1);
    for (std::size_t e = 0; e < swap.order(); ++e)
        CHECK(mat_mul(mat_mul(swap.matrix(e), gens[0]), unimodular_inverse(swap.matrix(e))) ==
              gens[0]);
}

TEST_CASE("invariant chamber test") {
    Lattice u(fixtures::hyperbolic_u());
    PositiveConeRef p(u, {1, 1});
    auto trivial = LatticeAction::from_generators(u, {});
    auto orbits = root_orbits(u, {IntVec{1, -1}}, trivial);
    CHECK(invariant_chamber_test(p, {1, 1}, orbits));
    CHECK_FALSE(invariant_chamber_test(p, {2, 1}, orbits));
    CHECK(invariant_chamber_test(p, {2, 3}, {}));
    CHECK_THROWS_WITH_AS(invariant_chamber_test(p, {1, -1}, orbits),
                         doctest::Contains("NotInPositiveCone"), Error);
}
