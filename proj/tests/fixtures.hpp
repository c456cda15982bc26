#ifndef LATCONE_TESTS_FIXTURES_HPP
#define LATCONE_TESTS_FIXTURES_HPP

#include "latcone/lattice.hpp"

namespace fixtures {

using latcone::Int;
using latcone::IntMat;
using latcone::IntVec;

inline IntMat m2(long long a, long long b, long long c, long long d) {
    IntMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

inline IntMat m3(std::initializer_list<long long> entries) {
    IntMat m(3, 3);
    std::size_t i = 0;
    for (long long e : entries) {
        m.a[i++] = e;
    }
    return m;
}

inline IntMat hyperbolic_u() { return m2(0, 1, 1, 0); }
inline IntMat pell_gram() { return m2(2, 0, 0, -6); }
inline IntMat pell_automorph() { return m2(2, 3, 1, 2); }

} // namespace fixtures

#endif
