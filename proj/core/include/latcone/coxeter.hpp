#ifndef LATCONE_COXETER_HPP
#define LATCONE_COXETER_HPP

#include "latcone/cone.hpp"
#include "latcone/lattice.hpp"
#include "latcone/reflect.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace latcone {

// One orbit of a finite isometric action on a root set. Roots are stored as
// the supplied primitive representatives; bookkeeping matches images up to
// sign, since a reflection only sees the line.
struct RootOrbit {
    std::vector<Root> roots;
    Int beta; // common self-pairing
};

inline constexpr int kInfiniteOrder = 0;

// Order of reflection(E1) * reflection(E2) restricted to span{E1, E2}:
// 2 iff the pairing vanishes, 3 iff beta = -2|alpha|, infinite otherwise
// (the pairing enters through |alpha| because +-E2 define the same
// reflection). Returns kInfiniteOrder for the infinite case.
int pair_order(const Lattice& lattice, const Root& e1, const Root& e2);

// Same dichotomy on the raw pairing data (beta < 0 the common self-pairing,
// alpha the cross pairing).
int pair_order(const Int& beta, const Int& alpha);

enum class OrbitCase { A, B, Infinite };

struct OrbitReport {
    bool finite = false;
    OrbitCase kase = OrbitCase::Infinite;
    // Sum of the orbit roots (case-B pairs sign-normalized so each matched
    // pairing is positive); present when the orbit Weyl group is finite.
    std::optional<IntVec> composite_root;
    // Longest element of the orbit Coxeter system, as the explicit reflection
    // product (case A: r_1...r_m; case B: (r_1 r_1' r_1)...). Always integral
    // and an involution.
    std::optional<IntMat> longest_element;
    // Matched index pairs in case B.
    std::vector<std::pair<std::size_t, std::size_t>> matching;
};

// Partition roots into orbits of the action; errors if some image is not a
// listed root up to sign.
std::vector<RootOrbit> root_orbits(const Lattice& lattice, const std::vector<IntVec>& roots,
                                   const LatticeAction& action);

OrbitReport analyze_orbit(const Lattice& lattice, const RootOrbit& orbit);

// Longest elements of the finite orbits; infinite orbits contribute nothing.
std::vector<IntMat> invariant_generators(const Lattice& lattice,
                                         const std::vector<RootOrbit>& orbits);

// lambda lies in the invariant chamber iff it pairs >= 0 with every root of
// every finite orbit.
bool invariant_chamber_test(const PositiveConeRef& p, const IntVec& lambda,
                            const std::vector<RootOrbit>& orbits);

} // namespace latcone

#endif
