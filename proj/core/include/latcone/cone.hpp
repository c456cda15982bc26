#ifndef LATCONE_CONE_HPP
#define LATCONE_CONE_HPP

#include "latcone/lattice.hpp"
#include "latcone/linalg.hpp"

#include <optional>
#include <vector>

namespace latcone {

// Half-space description of a cone: { x : f.x >= 0 for f in inequalities,
// e.x = 0 for e in equalities }. Functionals are plain coordinate vectors
// (already through the pairing where one was involved), primitive integer,
// canonically ordered.
struct FacetData {
    std::vector<IntVec> inequalities;
    std::vector<IntVec> equalities;
};

// Finitely generated convex cone over Q. Generators are normalized on
// construction: primitive integer vectors, redundant generators removed,
// lexicographically sorted. The half-space form is computed on demand by
// exact double description.
class RationalCone {
  public:
    // The zero cone in the given ambient dimension.
    explicit RationalCone(std::size_t ambient_dim);

    static RationalCone from_generators(std::size_t ambient_dim, const std::vector<RatVec>& gens);
    static RationalCone from_generators(std::size_t ambient_dim, const std::vector<IntVec>& gens);
    // Reconstructs the generator form from a half-space description (the
    // reverse direction of the duality round-trip).
    static RationalCone from_halfspaces(std::size_t ambient_dim, const FacetData& facets);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<IntVec>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    std::size_t dim() const;

    // Exact membership in the closed cone, decided by nonnegative-combination
    // feasibility (Fourier-Motzkin). strict asks for the relative interior
    // (interior within the cone's linear span), decided on the facet form.
    bool contains(const RatVec& v, bool strict = false) const;
    bool contains(const IntVec& v, bool strict = false) const;
    // Same predicate decided on the half-space form; kept separate so the two
    // routes can be cross-checked.
    bool contains_by_halfspaces(const RatVec& v) const;

    const FacetData& facets() const;

    // Intersection with { x : f.x >= 0 } (one double-description step).
    RationalCone intersect_halfspace(const IntVec& functional) const;

    bool is_subset_of(const RationalCone& other) const;
    // Set equality of the underlying cones (mutual containment).
    bool same_cone_as(const RationalCone& other) const;
    bool operator==(const RationalCone& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }

  private:
    std::size_t dim_;
    std::vector<IntVec> gens_;
    mutable std::optional<FacetData> facets_;
};

// Reference choice of a positive-cone component in a hyperbolic lattice:
// signature (1, rank-1) and a vector of positive square selecting the
// component.
class PositiveConeRef {
  public:
    PositiveConeRef(Lattice lattice, IntVec reference);

    const Lattice& lattice() const { return lattice_; }
    const IntVec& reference() const { return reference_; }

  private:
    Lattice lattice_;
    IntVec reference_;
};

// v lies in the open positive cone component: (v,v) > 0 and (v, ref) > 0.
bool in_positive_cone(const PositiveConeRef& p, const IntVec& v);
bool in_positive_cone(const PositiveConeRef& p, const RatVec& v);

// Closed subcones obtained by refining c along the sign chambers of the wall
// functionals x -> inner(x, w); cells contained in another cell are dropped.
std::vector<RationalCone> subdivide(const Lattice& lattice, const RationalCone& c,
                                    const std::vector<IntVec>& walls);

// Closures of the connected components of c minus the union of wall
// hyperplanes: the subdivision cells of full dimension relative to c.
std::vector<RationalCone> chamber_components(const Lattice& lattice, const RationalCone& c,
                                             const std::vector<IntVec>& walls);

// Arithmetic mean of a nonempty list of vectors. Averaging one orbit of an
// isometric group action lands in the fixed subspace.
RatVec galois_average(const std::vector<IntVec>& vectors);
RatVec galois_average(const std::vector<RatVec>& vectors);

// Exact feasibility of { lambda >= 0 : sum lambda_i g_i = v } by equality
// substitution followed by Fourier-Motzkin elimination. Exposed for tests.
bool nonneg_combination_exists(const std::vector<IntVec>& gens, const RatVec& v);

} // namespace latcone

#endif
