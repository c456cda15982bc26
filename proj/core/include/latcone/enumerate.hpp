#ifndef LATCONE_ENUMERATE_HPP
#define LATCONE_ENUMERATE_HPP

#include "latcone/cone.hpp"
#include "latcone/lattice.hpp"

#include <vector>

namespace latcone {

// Finite search region derived from the coefficient bound a_i <= d n M
// (n generators, M the largest pairwise generator pairing), converted to an
// ambient coordinate box. iteration_cap is the box volume, the exact number
// of candidate points a full scan visits.
struct EnumerationBudget {
    Int coefficient_bound; // d * n * M
    IntVec box_lo;
    IntVec box_hi;
    Int iteration_cap;
};

EnumerationBudget enumeration_budget(const Lattice& lattice, const RationalCone& cone,
                                     const Int& d);

// All integral vectors v in the closed cone with (v,v) = d, complete within
// the budget box, duplicate-free and lexicographically sorted. The box scan
// may be partitioned across jobs; the result does not depend on the
// partitioning.
std::vector<IntVec> vectors_of_square_in_cone(const RationalCone& cone, const Int& d,
                                              const Lattice& lattice, unsigned jobs = 1);

// A finitely generated isometry group given by generators; the generator set
// is closed under inverses on construction.
class GeneratedGroup {
  public:
    GeneratedGroup(const Lattice& lattice, const std::vector<IntMat>& generators,
                   std::size_t word_radius = 4);

    const std::vector<IntMat>& generators() const { return generators_; }
    std::size_t word_radius() const { return word_radius_; }

    // All products of at most `radius` generators (including the identity),
    // deduplicated.
    std::vector<IntMat> word_ball(std::size_t radius, std::size_t element_cap = 200000) const;

  private:
    std::size_t rank_;
    std::vector<IntMat> generators_;
    std::size_t word_radius_;
};

struct DirichletDomain {
    RationalCone cone;
    // Smallest radius r with domain(r) == domain(r+1); the certificate that
    // the word-ball construction has stabilized.
    std::size_t certified_radius = 0;
    std::size_t ball_size = 0;
};

// The cone { x : (gamma x, y) >= (x, y) for gamma in the word ball }
// intersected with a polyhedral inner approximation of the closed positive
// cone (the exact closure for rank-2 forms with rational null rays, otherwise
// the cone spanned by the orbit of y). Errors with NotStabilized if no radius
// up to the group's word radius is certified.
DirichletDomain dirichlet_domain(const GeneratedGroup& group, const IntVec& y,
                                 const PositiveConeRef& p);

// Enumerate norm-d vectors in the Dirichlet domain and keep one lexicographic
// representative per word-ball equivalence class.
std::vector<IntVec> orbit_representatives(const Int& d, const GeneratedGroup& group,
                                          const IntVec& y, const PositiveConeRef& p,
                                          unsigned jobs = 1);

// All primitive integral v with -N < (v,v) < 0 whose hyperplane v-perp meets
// the cone P (all of whose generators must have positive square); one vector
// per +- pair, first nonzero coordinate positive.
std::vector<IntVec> walls_meeting_cone(const RationalCone& P, const Int& N,
                                       const Lattice& lattice);

} // namespace latcone

#endif
