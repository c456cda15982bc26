#ifndef LATCONE_REFLECT_HPP
#define LATCONE_REFLECT_HPP

#include "latcone/cone.hpp"
#include "latcone/lattice.hpp"

#include <vector>

namespace latcone {

// A negative-norm lattice vector defining an integral reflection:
// r(x) = x - (2 (x,v) / (v,v)) v. Integrality of the reflection (2 (e_i, v)
// divisible by (v,v) for every basis vector) is validated on construction.
class Root {
  public:
    Root(const Lattice& lattice, IntVec vector);

    const IntVec& vector() const { return vector_; }
    const Int& norm() const { return norm_; }

  private:
    IntVec vector_;
    Int norm_;
};

// The reflection defined by a root, as a validated isometry.
Isometry reflection(const Lattice& lattice, const Root& r);
IntMat reflection_matrix(const Lattice& lattice, const Root& r);

// Finite list of root walls with the closed chamber convention
// { x : inner(x, r) >= 0 for all r }. Roots are normalized to primitive
// vectors and must be pairwise distinct after normalization.
class WallSystem {
  public:
    WallSystem(const Lattice& lattice, const std::vector<IntVec>& roots);

    const std::vector<Root>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }

  private:
    std::vector<Root> roots_;
};

bool is_in_chamber(const Lattice& lattice, const IntVec& x, const WallSystem& walls);

struct WalkResult {
    IntVec image;
    // Indices into the wall system, in application order: image equals the
    // composition (r_{word.back()} o ... o r_{word.front()})(x).
    std::vector<std::size_t> word;
};

// Reflect x across violated walls until every pairing is nonnegative. Among
// violated walls the smallest index is chosen, so the walk is deterministic;
// pairings equal to zero count as satisfied. The iteration cap guards against
// wall systems that do not admit a chamber.
WalkResult chamber_walk(const PositiveConeRef& p, const IntVec& x, const WallSystem& walls,
                        std::size_t iteration_cap = 10000);

} // namespace latcone

#endif
