#ifndef LATCONE_LINALG_HPP
#define LATCONE_LINALG_HPP

#include "latcone/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace latcone {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense matrix over the integers, row-major.
struct IntMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static IntMat identity(std::size_t n);
    bool operator==(const IntMat& o) const = default;
};

struct RatMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
IntMat mat_transpose(const IntMat& x);
IntVec mat_apply(const IntMat& m, const IntVec& v);
RatVec mat_apply(const IntMat& m, const RatVec& v);

Int dot(const IntVec& x, const IntVec& y);
Rat dot(const RatVec& x, const RatVec& y);
Rat dot(const IntVec& x, const RatVec& y);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

IntVec vec_add(const IntVec& x, const IntVec& y);
IntVec vec_sub(const IntVec& x, const IntVec& y);
IntVec vec_neg(const IntVec& v);
IntVec vec_scale(const Int& c, const IntVec& v);
RatVec vec_add(const RatVec& x, const RatVec& y);
RatVec vec_scale(const Rat& c, const RatVec& v);

RatVec to_rat(const IntVec& v);
// Exact conversion; errors if any entry has denominator != 1.
IntVec to_int(const RatVec& v);
bool is_integral(const RatVec& v);

// Scale a nonzero rational vector to a primitive integer vector (gcd 1),
// preserving direction. Errors on the zero vector.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

// Lexicographic order on coordinate sequences.
bool lex_less(const IntVec& x, const IntVec& y);

// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

// Rank over the rationals.
std::size_t rat_rank(const RatMat& m);
std::size_t rat_rank_int(const IntMat& m);

// Solve m * x = b over the rationals; nullopt if inconsistent. When the
// solution is not unique an arbitrary particular solution is returned.
std::optional<RatVec> rat_solve(const RatMat& m, const RatVec& b);

// Basis of the rational null space {x : m x = 0}, as primitive integer vectors.
std::vector<IntVec> rat_nullspace(const RatMat& m);
std::vector<IntVec> rat_nullspace_int(const IntMat& m);

// Inverse of a square rational matrix; errors if singular.
RatMat rat_inverse(const RatMat& m);
RatMat rat_inverse_int(const IntMat& m);

// Inverse of a unimodular integer matrix (det +-1); errors otherwise.
IntMat unimodular_inverse(const IntMat& m);

// Exact congruence diagonalization of a symmetric rational matrix: returns the
// inertia (positives, negatives, zeros) of the form. This is basis-change by
// rational row/column operations, never eigenvalues.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};
Inertia symmetric_inertia(const IntMat& gram);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal with
// d_1 | d_2 | ... (nonnegative). Sizes: U rows x rows, V cols x cols.
struct SmithForm {
    IntMat u;
    IntMat d;
    IntMat v;
};
SmithForm smith_normal_form(const IntMat& a);

// Diagonal of the Smith form, nonzero entries only (the invariant factors).
std::vector<Int> invariant_factors(const IntMat& a);

// Basis of {x in Z^cols : a x = 0}. The result spans a saturated sublattice
// (it is the full integer kernel, being cut out by the columns of a unimodular
// transform).
std::vector<IntVec> integer_kernel(const IntMat& a);

// Solve a x = b over the integers; nullopt if no integral solution exists.
std::optional<IntVec> integer_solve(const IntMat& a, const IntVec& b);

} // namespace latcone

#endif
