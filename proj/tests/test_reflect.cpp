#include "latcone/reflect.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <random>

using namespace latcone;
using fixtures::m2;

TEST_CASE("reflection in a (-2)-root of U") {
    Lattice u(fixtures::hyperbolic_u());
    Root r(u, {1, -1});
    IntMat m = reflection_matrix(u, r);
    CHECK(mat_apply(m, IntVec{1, 0}) == IntVec{0, 1});
    CHECK(mat_apply(m, IntVec{1, -1}) == IntVec{-1, 1});
    CHECK(mat_mul(m, m) == IntMat::identity(2));
    CHECK(u.is_isometry(m));
}

TEST_CASE("root validation") {
    Lattice u(fixtures::hyperbolic_u());
    // positive square is rejected
    CHECK_THROWS_WITH_AS(Root(u, {1, 1}), doctest::Contains("NonIntegralReflection"), Error);
    // norm -4 with an odd pairing against the basis fails integrality
    CHECK_THROWS_WITH_AS(Root(u, {1, -2}), doctest::Contains("NonIntegralReflection"), Error);
}

TEST_CASE("randomized reflections are involutive isometries") {
    auto gen = oracle::rng(23);
    std::uniform_int_distribution<int> coord(-3, 3);
    int produced = 0;
    while (produced < 120) {
        std::size_t rank = 2 + gen() % 3;
        Lattice l(oracle::block_hyperbolic_lattice(gen, rank));
        IntVec v(rank);
        for (Int& x : v) x = coord(gen);
        if (is_zero(v)) continue;
        if (l.norm(v) >= 0) continue;
        bool integral = true;
        IntVec gv = l.pairing_functional(v);
        for (const Int& c : gv)
            if ((2 * c) % l.norm(v) != 0) integral = false;
        if (!integral) continue;
        Root r(l, v);
        IntMat m = reflection_matrix(l, r);
        CHECK(mat_mul(m, m) == IntMat::identity(rank));
        CHECK(l.is_isometry(m));
        CHECK(mat_apply(m, r.vector()) == vec_neg(r.vector()));
        ++produced;
    }
}

TEST_CASE("wall system normalization") {
    Lattice u(fixtures::hyperbolic_u());
    WallSystem ws(u, {IntVec{2, -2}});
    CHECK(ws.roots()[0].vector() == IntVec{1, -1});
    CHECK_THROWS_WITH_AS(WallSystem(u, {IntVec{1, -1}, IntVec{2, -2}}),
                         doctest::Contains("EqualRoots"), Error);
}

TEST_CASE("chamber walk on the worked example") {
    Lattice u(fixtures::hyperbolic_u());
    PositiveConeRef p(u, {1, 1});
    WallSystem ws(u, {IntVec{1, -1}});

    WalkResult r = chamber_walk(p, {2, 1}, ws);
    CHECK(r.image == IntVec{1, 2});
    CHECK(r.word == std::vector<std::size_t>{0});

    WalkResult fixed = chamber_walk(p, {1, 2}, ws);
    CHECK(fixed.image == IntVec{1, 2});
    CHECK(fixed.word.empty());

    // boundary: pairing zero counts as satisfied
    WalkResult boundary = chamber_walk(p, {1, 1}, ws);
    CHECK(boundary.image == IntVec{1, 1});
    CHECK(boundary.word.empty());
}

TEST_CASE("walk errors") {
    Lattice u(fixtures::hyperbolic_u());
    PositiveConeRef p(u, {1, 1});
    WallSystem ws(u, {IntVec{1, -1}});
    CHECK_THROWS_WITH_AS(chamber_walk(p, {1, -1}, ws), doctest::Contains("NotInPositiveCone"),
                         Error);
    // a +- pair of roots admits no chamber off the wall: the walk must cap out
    WallSystem bad(u, {IntVec{1, -1}, IntVec{-1, 1}});
    CHECK_THROWS_WITH_AS(chamber_walk(p, {2, 1}, bad, 50), doctest::Contains("WalkDiverged"),
                         Error);
}

TEST_CASE("is_in_chamber") {
    Lattice u(fixtures::hyperbolic_u());
    WallSystem ws(u, {IntVec{1, -1}});
    CHECK(is_in_chamber(u, {1, 1}, ws));
    CHECK_FALSE(is_in_chamber(u, {1, 0}, ws));
    WallSystem empty(u, {});
    CHECK(is_in_chamber(u, {5, -7}, empty));
}

namespace {

// Valid randomized wall systems: roots oriented positively against an interior
// anchor, so the walk strictly decreases (x, anchor).
struct RandomWalkCase {
    Lattice lattice;
    IntVec anchor;
    std::vector<IntVec> roots;
};

std::optional<RandomWalkCase> random_case(std::mt19937_64& gen, std::size_t max_walls) {
    std::uniform_int_distribution<int> coord(-3, 3);
    std::size_t rank = 2 + gen() % 3;
    Lattice l(oracle::block_hyperbolic_lattice(gen, rank));
    IntVec anchor(rank, Int(0));
    anchor[0] = 1;
    anchor[1] = 1; // norm 2 interior vector of the U block
    std::vector<IntVec> roots;
    std::set<IntVec> seen;
    for (int attempts = 0; attempts < 200 && roots.size() < max_walls; ++attempts) {
        IntVec v(rank);
        for (Int& x : v) x = coord(gen);
        if (is_zero(v)) continue;
        if (l.norm(v) >= 0) continue;
        IntVec gv = l.pairing_functional(v);
        bool integral = true;
        for (const Int& c : gv)
            if ((2 * c) % l.norm(v) != 0) integral = false;
        if (!integral) continue;
        Int pr = l.inner(anchor, v);
        if (pr == 0) continue;
        if (pr < 0) v = vec_neg(v);
        v = primitive(v);
        if (!seen.insert(v).second) continue;
        if (seen.count(vec_neg(v))) continue;
        roots.push_back(v);
    }
    if (roots.empty()) return std::nullopt;
    return RandomWalkCase{std::move(l), std::move(anchor), std::move(roots)};
}

} // namespace

TEST_CASE("randomized walks terminate in the chamber with exact reconstruction") {
    auto gen = oracle::rng(31);
    std::uniform_int_distribution<int> coord(-6, 6);
    int walks = 0;
    while (walks < 120) {
        auto rc = random_case(gen, 12);
        if (!rc) continue;
        PositiveConeRef p(rc->lattice, rc->anchor);
        WallSystem ws(rc->lattice, rc->roots);
        // random starting vector in the positive cone
        IntVec x(rc->lattice.rank());
        for (Int& c : x) c = coord(gen);
        if (rc->lattice.norm(x) <= 0) continue;
        if (rc->lattice.inner(x, rc->anchor) < 0) x = vec_neg(x);
        if (rc->lattice.inner(x, rc->anchor) <= 0) continue;

        WalkResult r = chamber_walk(p, x, ws);
        CHECK(is_in_chamber(rc->lattice, r.image, ws));
        CHECK(rc->lattice.norm(r.image) == rc->lattice.norm(x));
        // word reconstruction
        IntVec y = x;
        for (std::size_t idx : r.word)
            y = mat_apply(reflection_matrix(rc->lattice, ws.roots()[idx]), y);
        CHECK(y == r.image);
        // idempotence
        WalkResult again = chamber_walk(p, r.image, ws);
        CHECK(again.word.empty());
        CHECK(again.image == r.image);
        ++walks;
    }
}

TEST_CASE("equivariance under a symmetry of the wall system") {
    Lattice u(fixtures::hyperbolic_u());
    PositiveConeRef p(u, {1, 1});
    WallSystem ws(u, {IntVec{1, -1}});
    IntMat swap = m2(0, 1, 1, 0); // maps the wall to its negative: same line
    auto gen = oracle::rng(3);
    std::uniform_int_distribution<int> coord(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
        IntVec x{coord(gen), coord(gen)};
        if (u.norm(x) <= 0) continue;
        WalkResult a = chamber_walk(p, x, ws);
        WalkResult b = chamber_walk(p, mat_apply(swap, x), ws);
        CHECK(is_in_chamber(u, a.image, ws));
        CHECK(is_in_chamber(u, b.image, ws));
        // the W-orbit of x meets the chamber in one point here
        CHECK(a.image == b.image);
    }
}
