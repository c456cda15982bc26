#include "latcone/enumerate.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace latcone;
using fixtures::m2;

namespace {
RationalCone quadrant() {
    return RationalCone::from_generators(2, std::vector<IntVec>{{1, 0}, {0, 1}});
}
RationalCone pell_domain() {
    return RationalCone::from_generators(2, std::vector<IntVec>{{3, 1}, {3, -1}});
}
} // namespace

TEST_CASE("fixed square vectors in the U quadrant") {
    Lattice u(fixtures::hyperbolic_u());
    RationalCone q = quadrant();
    CHECK(vectors_of_square_in_cone(q, 2, u) == std::vector<IntVec>{{1, 1}});
    CHECK(vectors_of_square_in_cone(q, 4, u) == std::vector<IntVec>{{1, 2}, {2, 1}});
    CHECK(vectors_of_square_in_cone(q, 3, u).empty()); // odd square has no solutions in U
}

TEST_CASE("enumeration budget carries the coefficient bound") {
    Lattice u(fixtures::hyperbolic_u());
    EnumerationBudget b = enumeration_budget(u, quadrant(), 2);
    CHECK(b.coefficient_bound == 4); // d*n*M = 2*2*1
    CHECK(b.box_lo == IntVec{0, 0});
    CHECK(b.box_hi == IntVec{4, 4});
}

TEST_CASE("enumeration preconditions") {
    Lattice u(fixtures::hyperbolic_u());
    Lattice posdef(m2(2, 0, 0, 2));
    CHECK_THROWS_WITH_AS(vectors_of_square_in_cone(quadrant(), 2, posdef),
                         doctest::Contains("WrongSignature"), Error);
    // cone leaving the closed positive cone
    RationalCone bad = RationalCone::from_generators(2, std::vector<IntVec>{{1, 0}, {1, -1}});
    CHECK_THROWS_WITH_AS(vectors_of_square_in_cone(bad, 2, u),
                         doctest::Contains("NotInPositiveCone"), Error);
}

TEST_CASE("enumeration matches the naive oracle and respects the bound") {
    Lattice u(fixtures::hyperbolic_u());
    Lattice pell(fixtures::pell_gram());
    struct Case {
        const Lattice* l;
        RationalCone cone;
    };
    std::vector<Case> cases{{&u, quadrant()}, {&pell, pell_domain()}};
    for (const Case& c : cases) {
        for (Int d = 1; d <= 8; ++d) {
            EnumerationBudget budget = enumeration_budget(*c.l, c.cone, d);
            auto got = vectors_of_square_in_cone(c.cone, d, *c.l);
            auto expect = oracle::box_scan_norm_vectors(*c.l, c.cone.facets().inequalities,
                                                        c.cone.facets().equalities,
                                                        budget.box_lo, budget.box_hi, d);
            CHECK(got == expect);
            // coefficient bound: both cones are simplicial, so generator
            // coordinates are unique and can be checked exactly
            const auto& gens = c.cone.generators();
            RatMat gm(2, gens.size());
            for (std::size_t j = 0; j < gens.size(); ++j)
                for (std::size_t i = 0; i < 2; ++i) gm.at(i, j) = Rat(gens[j][i]);
            for (const IntVec& v : got) {
                auto coords = rat_solve(gm, to_rat(v));
                REQUIRE(coords.has_value());
                for (const Rat& a : *coords) {
                    CHECK(a >= 0);
                    CHECK(a <= Rat(budget.coefficient_bound));
                }
            }
        }
    }
}

TEST_CASE("enumeration matches the oracle in ranks 3 and 4") {
    // U (+) <-2>, cone with one null and one positive generator
    IntMat g3(3, 3);
    g3.at(0, 1) = 1;
    g3.at(1, 0) = 1;
    g3.at(2, 2) = -2;
    Lattice l3(g3);
    auto c3 = RationalCone::from_generators(3, std::vector<IntVec>{{1, 1, 0}, {1, 1, 1}});

    IntMat g4(4, 4);
    g4.at(0, 1) = 1;
    g4.at(1, 0) = 1;
    g4.at(2, 2) = -2;
    g4.at(3, 3) = -2;
    Lattice l4(g4);
    auto c4 = RationalCone::from_generators(4, std::vector<IntVec>{{1, 1, 0, 0}, {2, 1, 1, 1}});

    struct Case {
        const Lattice* l;
        const RationalCone* cone;
        Int dmax;
    } cases[] = {{&l3, &c3, 6}, {&l4, &c4, 3}};
    for (const auto& c : cases) {
        for (Int d = 1; d <= c.dmax; ++d) {
            EnumerationBudget budget = enumeration_budget(*c.l, *c.cone, d);
            auto got = vectors_of_square_in_cone(*c.cone, d, *c.l);
            auto expect = oracle::box_scan_norm_vectors(*c.l, c.cone->facets().inequalities,
                                                        c.cone->facets().equalities,
                                                        budget.box_lo, budget.box_hi, d);
            CHECK(got == expect);
            for (const IntVec& v : got) {
                CHECK(c.l->norm(v) == d);
                CHECK(c.cone->contains(v));
            }
        }
    }
}

TEST_CASE("orbit partition: representatives are pairwise inequivalent") {
    Lattice pell(fixtures::pell_gram());
    PositiveConeRef p(pell, {1, 0});
    GeneratedGroup g(pell, {fixtures::pell_automorph()}, 4);
    // norm 26 has two genuinely distinct orbits; norm 12 has two boundary
    // vectors identified by the automorph
    auto reps26 = orbit_representatives(26, g, {1, 0}, p);
    CHECK(reps26 == std::vector<IntVec>{{4, -1}, {4, 1}});
    auto reps12 = orbit_representatives(12, g, {1, 0}, p);
    CHECK(reps12 == std::vector<IntVec>{{3, -1}});
    auto ball = g.word_ball(g.word_radius());
    for (std::size_t i = 0; i < reps26.size(); ++i)
        for (std::size_t j = 0; j < reps26.size(); ++j) {
            if (i == j) continue;
            for (const IntMat& m : ball) CHECK(mat_apply(m, reps26[i]) != reps26[j]);
        }
}

TEST_CASE("partitioned scans agree with the serial scan") {
    Lattice pell(fixtures::pell_gram());
    RationalCone dom = pell_domain();
    auto serial = vectors_of_square_in_cone(dom, 6, pell, 1);
    CHECK(vectors_of_square_in_cone(dom, 6, pell, 2) == serial);
    CHECK(vectors_of_square_in_cone(dom, 6, pell, 3) == serial);
    CHECK(vectors_of_square_in_cone(dom, 6, pell, 8) == serial);
}

TEST_CASE("generated group closes under inverses") {
    Lattice pell(fixtures::pell_gram());
    GeneratedGroup g(pell, {fixtures::pell_automorph()}, 3);
    CHECK(g.generators().size() == 2);
    auto ball1 = g.word_ball(1);
    CHECK(ball1.size() == 3); // id, gamma, gamma^-1
    auto ball2 = g.word_ball(2);
    CHECK(ball2.size() == 5);
}

TEST_CASE("Dirichlet domain of the Pell automorph") {
    Lattice pell(fixtures::pell_gram());
    PositiveConeRef p(pell, {1, 0});
    GeneratedGroup g(pell, {fixtures::pell_automorph()}, 4);
    DirichletDomain dom = dirichlet_domain(g, {1, 0}, p);
    CHECK(dom.cone.generators() == std::vector<IntVec>{{3, -1}, {3, 1}});
    CHECK(dom.certified_radius <= 3);
}

TEST_CASE("Dirichlet domain for the trivial group is the exact closed cone") {
    Lattice u(fixtures::hyperbolic_u());
    PositiveConeRef p(u, {1, 1});
    GeneratedGroup trivial(u, {}, 4);
    DirichletDomain dom = dirichlet_domain(trivial, {1, 1}, p);
    CHECK(dom.cone.generators() == std::vector<IntVec>{{0, 1}, {1, 0}});
}

TEST_CASE("Dirichlet domain rejects component-breaking generators") {
    Lattice u(fixtures::hyperbolic_u());
    PositiveConeRef p(u, {1, 1});
    GeneratedGroup neg(u, {m2(-1, 0, 0, -1)}, 4);
    CHECK_THROWS_WITH_AS(dirichlet_domain(neg, {1, 1}, p),
                         doctest::Contains("NotInPositiveCone"), Error);
    GeneratedGroup ok(u, {}, 4);
    CHECK_THROWS_WITH_AS(dirichlet_domain(ok, {1, -1}, p),
                         doctest::Contains("NotInPositiveCone"), Error);
}

TEST_CASE("a zero word radius cannot certify a domain") {
    Lattice pell(fixtures::pell_gram());
    PositiveConeRef p(pell, {1, 0});
    GeneratedGroup g(pell, {fixtures::pell_automorph()}, 0);
    CHECK_THROWS_WITH_AS(dirichlet_domain(g, {1, 0}, p), doctest::Contains("NotStabilized"),
                         Error);
}

TEST_CASE("orbit representatives") {
    Lattice pell(fixtures::pell_gram());
    PositiveConeRef p(pell, {1, 0});
    GeneratedGroup g(pell, {fixtures::pell_automorph()}, 4);
    CHECK(orbit_representatives(2, g, {1, 0}, p) == std::vector<IntVec>{{1, 0}});
    CHECK(orbit_representatives(5, g, {1, 0}, p).empty());

    Lattice u(fixtures::hyperbolic_u());
    PositiveConeRef pu(u, {1, 1});
    GeneratedGroup trivial(u, {}, 4);
    CHECK(orbit_representatives(4, trivial, {1, 1}, pu) == std::vector<IntVec>{{1, 2}, {2, 1}});
}

TEST_CASE("orbit representatives satisfy the Dirichlet inequality") {
    Lattice pell(fixtures::pell_gram());
    PositiveConeRef p(pell, {1, 0});
    GeneratedGroup g(pell, {fixtures::pell_automorph()}, 4);
    IntVec y{1, 0};
    for (Int d : {Int(2), Int(8), Int(18)}) {
        for (const IntVec& x : orbit_representatives(d, g, y, p))
            for (const IntMat& m : g.generators())
                CHECK(pell.inner(mat_apply(m, x), y) >= pell.inner(x, y));
    }
}

TEST_CASE("walls meeting a compact cone") {
    Lattice u(fixtures::hyperbolic_u());
    RationalCone p = RationalCone::from_generators(2, std::vector<IntVec>{{2, 1}, {1, 2}});
    CHECK(walls_meeting_cone(p, 3, u) == std::vector<IntVec>{{1, -1}});
    // N = 1 in an even lattice: no v with -1 < (v,v) < 0
    CHECK(walls_meeting_cone(p, 1, u).empty());
    // generic interior ray misses all short walls
    RationalCone ray = RationalCone::from_generators(2, std::vector<IntVec>{{2, 1}});
    CHECK(walls_meeting_cone(ray, 3, u).empty());
    // the same ray is hit once the bound admits norm -4 walls
    CHECK(walls_meeting_cone(ray, 5, u) == std::vector<IntVec>{{2, -1}});
    // null-cone generators are rejected
    RationalCone quad = RationalCone::from_generators(2, std::vector<IntVec>{{1, 0}, {0, 1}});
    CHECK_THROWS_WITH_AS(walls_meeting_cone(quad, 3, u), doctest::Contains("UnboundedRegion"),
                         Error);
}

TEST_CASE("walls of larger norm, one per sign pair") {
    Lattice u(fixtures::hyperbolic_u());
    RationalCone p = RationalCone::from_generators(2, std::vector<IntVec>{{2, 1}, {1, 2}});
    // norms -2 through -8 are admitted; hyperplanes touching only a boundary
    // ray (pairing zero with one generator) count as meeting
    auto walls = walls_meeting_cone(p, 9, u);
    CHECK(walls == std::vector<IntVec>{{1, -2}, {1, -1}, {2, -1}});
}

TEST_CASE("wall search box is complete against a wide independent scan") {
    // The derived coordinate box comes from a positive-definite majorant;
    // compare with a plain scan over a much larger box.
    Lattice u(fixtures::hyperbolic_u());
    std::vector<std::pair<std::vector<IntVec>, Int>> cases{
        {{{3, 1}, {2, 3}}, Int(9)},
        {{{2, 1}, {1, 2}}, Int(9)},
        {{{5, 2}, {1, 1}}, Int(7)},
    };
    for (const auto& [gens, bound] : cases) {
        RationalCone p = RationalCone::from_generators(2, gens);
        auto got = walls_meeting_cone(p, bound, u);
        std::vector<IntVec> expect;
        long long wide = 25;
        for (long long a = -wide; a <= wide; ++a) {
            for (long long b = -wide; b <= wide; ++b) {
                if (a == 0 && b == 0) continue;
                IntVec v{a, b};
                // first nonzero coordinate positive
                if (a < 0 || (a == 0 && b < 0)) continue;
                Int nn = u.norm(v);
                if (!(nn < 0 && nn > -bound)) continue;
                if (primitive(v) != v) continue;
                bool pos = false, neg = false, zero = false;
                for (const IntVec& g : p.generators()) {
                    Int s = u.inner(v, g);
                    if (s > 0) pos = true;
                    else if (s < 0) neg = true;
                    else zero = true;
                }
                if (zero || (pos && neg)) expect.push_back(v);
            }
        }
        std::sort(expect.begin(), expect.end(), lex_less);
        CHECK(got == expect);
    }
}

TEST_CASE("rank-3 subdivision covers the cone") {
    IntMat g3(3, 3);
    g3.at(0, 1) = 1;
    g3.at(1, 0) = 1;
    g3.at(2, 2) = -2;
    Lattice l3(g3);
    auto cone = RationalCone::from_generators(
        3, std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 1, -1}});
    std::vector<IntVec> walls{{0, 0, 1}, {1, -1, 0}};
    auto cells = subdivide(l3, cone, walls);
    CHECK(cells.size() == 4);
    auto gen = oracle::rng(9);
    std::uniform_int_distribution<int> c(0, 5);
    for (int trial = 0; trial < 150; ++trial) {
        RatVec x(3);
        IntVec acc(3, Int(0));
        for (const IntVec& g : cone.generators())
            acc = vec_add(acc, vec_scale(Int(c(gen)), g));
        for (int i = 0; i < 3; ++i) x[i] = Rat(acc[i]);
        bool covered = false;
        for (const auto& cell : cells) covered = covered || cell.contains(x);
        CHECK(covered);
    }
}

TEST_CASE("null generators with a positive bound still enumerate (U quadrant)") {
    // The quadrant generators are isotropic but pair positively, so the
    // coefficient bound d n M stays meaningful.
    Lattice u(fixtures::hyperbolic_u());
    CHECK(vectors_of_square_in_cone(quadrant(), 2, u) == std::vector<IntVec>{{1, 1}});
}

TEST_CASE("degenerate bound with a null generator is rejected") {
    Lattice u(fixtures::hyperbolic_u());
    RationalCone nullray = RationalCone::from_generators(2, std::vector<IntVec>{{1, 0}});
    CHECK_THROWS_WITH_AS(vectors_of_square_in_cone(nullray, 2, u),
                         doctest::Contains("UnboundedRegion"), Error);
}
