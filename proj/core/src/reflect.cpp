#include "latcone/reflect.hpp"

#include <algorithm>
#include <set>

namespace latcone {

Root::Root(const Lattice& lattice, IntVec vector) : vector_(std::move(vector)) {
    if (vector_.size() != lattice.rank())
        throw Error(Errc::DimensionMismatch, "root length does not match rank");
    norm_ = lattice.norm(vector_);
    if (norm_ >= 0) throw Error(Errc::NonIntegralReflection, "root must have negative square");
    IntVec gv = lattice.pairing_functional(vector_);
    for (const Int& c : gv)
        if ((2 * c) % norm_ != 0)
            throw Error(Errc::NonIntegralReflection,
                        "2(x,v) is not divisible by (v,v) on the basis");
}

IntMat reflection_matrix(const Lattice& lattice, const Root& r) {
    std::size_t n = lattice.rank();
    IntVec gv = lattice.pairing_functional(r.vector());
    IntMat m = IntMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) -= r.vector()[i] * (2 * gv[j] / r.norm());
    return m;
}

Isometry reflection(const Lattice& lattice, const Root& r) {
    return Isometry(lattice, reflection_matrix(lattice, r));
}

WallSystem::WallSystem(const Lattice& lattice, const std::vector<IntVec>& roots) {
    std::set<IntVec> seen;
    for (const IntVec& v : roots) {
        IntVec p = primitive(v);
        if (!seen.insert(p).second)
            throw Error(Errc::EqualRoots, "wall system has duplicate roots after normalization");
        roots_.emplace_back(lattice, p);
    }
    // Canonical order makes the walk's smallest-index rule deterministic
    // regardless of input order.
    std::sort(roots_.begin(), roots_.end(),
              [](const Root& a, const Root& b) { return lex_less(a.vector(), b.vector()); });
}

bool is_in_chamber(const Lattice& lattice, const IntVec& x, const WallSystem& walls) {
    for (const Root& r : walls.roots())
        if (lattice.inner(x, r.vector()) < 0) return false;
    return true;
}

WalkResult chamber_walk(const PositiveConeRef& p, const IntVec& x, const WallSystem& walls,
                        std::size_t iteration_cap) {
    const Lattice& lattice = p.lattice();
    if (!in_positive_cone(p, x))
        throw Error(Errc::NotInPositiveCone, "walk start is not in the positive cone");
    WalkResult result;
    result.image = x;
    for (std::size_t step = 0; step < iteration_cap; ++step) {
        std::size_t violated = walls.size();
        for (std::size_t i = 0; i < walls.size(); ++i) {
            if (lattice.inner(result.image, walls.roots()[i].vector()) < 0) {
                violated = i;
                break;
            }
        }
        if (violated == walls.size()) return result;
        const Root& r = walls.roots()[violated];
        // x - (2 (x,v)/(v,v)) v, exact: the quotient is integral for a root.
        Int pairing = lattice.inner(result.image, r.vector());
        Int factor = 2 * pairing / r.norm();
        result.image = vec_sub(result.image, vec_scale(factor, r.vector()));
        result.word.push_back(violated);
    }
    throw Error(Errc::WalkDiverged, "iteration cap exceeded; wall system admits no chamber walk");
}

} // namespace latcone
