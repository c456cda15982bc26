#ifndef LATCONE_NUMERIC_HPP
#define LATCONE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace latcone {

// All arithmetic in this library is exact. Integers are arbitrary-precision
// and rationals are reduced fractions of those; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Errc {
    NotSymmetric,
    Degenerate,
    DimensionMismatch,
    NotAnIsometry,
    ZeroGenerator,
    WrongSignature,
    EmptyInput,
    NonIntegralReflection,
    NotInPositiveCone,
    WalkDiverged,
    UnboundedRegion,
    NotStabilized,
    ActionDoesNotPreserveRoots,
    EqualRoots,
    UnequalNorms,
    InvalidAction,
    NotACocycle,
    InvalidExtensionDatum,
    LiftSearchExhausted,
    InvalidGroupTable,
    MalformedInput,
};

const char* errc_name(Errc c);

// Every invariant violation surfaces as an Error carrying the name of the
// violated invariant; callers (and the CLI) can report it structurally.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

  private:
    Errc code_;
};

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor square root; exact, errors on negative input.
inline Int isqrt(const Int& x) {
    if (x < 0) throw Error(Errc::Degenerate, "isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

inline bool is_perfect_square(const Int& x, Int& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

// x^e by repeated squaring.
Int int_pow(const Int& base, const Int& exp);

// x^e by a plain product loop; second arithmetic route used to cross-check
// int_pow bit-for-bit.
Int int_pow_naive(const Int& base, const Int& exp);

Int factorial(unsigned n);

} // namespace latcone

#endif
