#include "latcone/cohomology.hpp"
#include "latcone/cone.hpp"
#include "latcone/enumerate.hpp"
#include "latcone/lattice.hpp"
#include "latcone/reflect.hpp"

#include <benchmark/benchmark.h>

using namespace latcone;

namespace {

IntMat m2(long long a, long long b, long long c, long long d) {
    IntMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

void ChamberWalk(benchmark::State& state) {
    Lattice u(m2(0, 1, 1, 0));
    PositiveConeRef p(u, {1, 1});
    WallSystem ws(u, {IntVec{1, -1}});
    IntVec x{50, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(chamber_walk(p, x, ws));
    }
}
BENCHMARK(ChamberWalk);

void FixedSquareEnumeration(benchmark::State& state) {
    Lattice pell(m2(2, 0, 0, -6));
    auto cone = RationalCone::from_generators(2, std::vector<IntVec>{{3, 1}, {3, -1}});
    Int d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vectors_of_square_in_cone(cone, d, pell));
    }
}
BENCHMARK(FixedSquareEnumeration)->Arg(2)->Arg(8)->Arg(18);

void DirichletDomainPell(benchmark::State& state) {
    Lattice pell(m2(2, 0, 0, -6));
    PositiveConeRef p(pell, {1, 0});
    GeneratedGroup g(pell, {m2(2, 3, 1, 2)}, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dirichlet_domain(g, {1, 0}, p));
    }
}
BENCHMARK(DirichletDomainPell);

void H1FiniteS3(benchmark::State& state) {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FiniteGroup s3 = FiniteGroup::symmetric3();
    FiniteAction a = FiniteAction::trivial(c2, s3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h1_finite(a));
    }
}
BENCHMARK(H1FiniteS3);

void ConeSubdivision(benchmark::State& state) {
    Lattice u(m2(0, 1, 1, 0));
    auto quad = RationalCone::from_generators(2, std::vector<IntVec>{{1, 0}, {0, 1}});
    std::vector<IntVec> walls{{1, -1}, {2, -1}, {3, -1}, {3, -2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(subdivide(u, quad, walls));
    }
}
BENCHMARK(ConeSubdivision);

} // namespace

BENCHMARK_MAIN();
