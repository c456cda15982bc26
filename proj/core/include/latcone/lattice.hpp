#ifndef LATCONE_LATTICE_HPP
#define LATCONE_LATTICE_HPP

#include "latcone/group.hpp"
#include "latcone/linalg.hpp"

#include <vector>

namespace latcone {

// A finite-rank free abelian group with a nondegenerate integral symmetric
// bilinear form, given by its Gram matrix on the standard basis. Immutable
// after construction; signature and determinant are computed exactly up front.
class Lattice {
  public:
    // Validates symmetry and nondegeneracy; computes signature by exact
    // congruence diagonalization (never eigenvalues).
    explicit Lattice(IntMat gram);

    std::size_t rank() const { return gram_.rows; }
    const IntMat& gram() const { return gram_; }
    const Int& discriminant() const { return det_; }
    std::size_t positive_index() const { return pos_; }
    std::size_t negative_index() const { return neg_; }

    bool is_hyperbolic() const { return pos_ == 1 && neg_ + 1 == rank(); }

    // The bilinear pairing v^T G w.
    Int inner(const IntVec& v, const IntVec& w) const;
    Rat inner(const RatVec& v, const RatVec& w) const;
    Rat inner(const IntVec& v, const RatVec& w) const;
    Int norm(const IntVec& v) const { return inner(v, v); }

    // The functional x -> inner(x, w) as a plain coordinate vector (G w).
    IntVec pairing_functional(const IntVec& w) const;

    bool is_isometry(const IntMat& m) const;

  private:
    IntMat gram_;
    Int det_;
    std::size_t pos_ = 0;
    std::size_t neg_ = 0;
};

// An integral automorphism of a lattice preserving the form. Construction
// validates the Gram identity m^T G m = G (which forces det = +-1).
class Isometry {
  public:
    Isometry(const Lattice& lattice, IntMat matrix);

    const IntMat& matrix() const { return matrix_; }
    IntVec apply(const IntVec& v) const { return mat_apply(matrix_, v); }
    Isometry inverse(const Lattice& lattice) const;

    bool operator==(const Isometry& o) const { return matrix_ == o.matrix_; }

  private:
    IntMat matrix_;
};

// A finite group acting on a lattice by isometries: one matrix per group
// element, validated to be a homomorphism into O(Lambda).
class LatticeAction {
  public:
    LatticeAction(const Lattice& lattice, FiniteGroup group, std::vector<IntMat> matrices);

    // Closes a generator list into a finite matrix group (errors past
    // max_order) and builds the action with the induced multiplication table.
    static LatticeAction from_generators(const Lattice& lattice, const std::vector<IntMat>& gens,
                                         std::size_t max_order = 10000);

    const FiniteGroup& group() const { return group_; }
    const IntMat& matrix(std::size_t element) const { return matrices_[element]; }
    std::size_t order() const { return group_.order(); }

  private:
    FiniteGroup group_;
    std::vector<IntMat> matrices_;
};

Lattice make_lattice(const IntMat& gram);

// Integral basis of {v : gamma v = v for all gamma}. The returned sublattice
// is saturated (computed as an integer kernel through the Smith form).
std::vector<IntVec> fixed_sublattice(const Lattice& lattice, const LatticeAction& action);

} // namespace latcone

#endif
