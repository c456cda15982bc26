#include "latcone/numeric.hpp"

namespace latcone {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::Degenerate: return "Degenerate";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotAnIsometry: return "NotAnIsometry";
        case Errc::ZeroGenerator: return "ZeroGenerator";
        case Errc::WrongSignature: return "WrongSignature";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::NonIntegralReflection: return "NonIntegralReflection";
        case Errc::NotInPositiveCone: return "NotInPositiveCone";
        case Errc::WalkDiverged: return "WalkDiverged";
        case Errc::UnboundedRegion: return "UnboundedRegion";
        case Errc::NotStabilized: return "NotStabilized";
        case Errc::ActionDoesNotPreserveRoots: return "ActionDoesNotPreserveRoots";
        case Errc::EqualRoots: return "EqualRoots";
        case Errc::UnequalNorms: return "UnequalNorms";
        case Errc::InvalidAction: return "InvalidAction";
        case Errc::NotACocycle: return "NotACocycle";
        case Errc::InvalidExtensionDatum: return "InvalidExtensionDatum";
        case Errc::LiftSearchExhausted: return "LiftSearchExhausted";
        case Errc::InvalidGroupTable: return "InvalidGroupTable";
        case Errc::MalformedInput: return "MalformedInput";
    }
    return "UnknownError";
}

Int int_pow(const Int& base, const Int& exp) {
    if (exp < 0) throw Error(Errc::Degenerate, "negative exponent");
    Int result = 1;
    Int b = base;
    Int e = exp;
    while (e > 0) {
        if ((e & 1) != 0) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

Int int_pow_naive(const Int& base, const Int& exp) {
    if (exp < 0) throw Error(Errc::Degenerate, "negative exponent");
    Int result = 1;
    for (Int i = 0; i < exp; ++i) result *= base;
    return result;
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace latcone
