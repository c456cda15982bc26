#include "latcone/lattice.hpp"

#include <algorithm>
#include <map>

namespace latcone {

Lattice::Lattice(IntMat gram) : gram_(std::move(gram)) {
    if (gram_.rows != gram_.cols)
        throw Error(Errc::DimensionMismatch, "Gram matrix must be square");
    if (gram_.rows == 0) throw Error(Errc::Degenerate, "rank must be positive");
    for (std::size_t i = 0; i < gram_.rows; ++i)
        for (std::size_t j = i + 1; j < gram_.cols; ++j)
            if (gram_.at(i, j) != gram_.at(j, i))
                throw Error(Errc::NotSymmetric, "Gram matrix is not symmetric");
    det_ = det(gram_);
    if (det_ == 0) throw Error(Errc::Degenerate, "Gram matrix is degenerate");
    Inertia in = symmetric_inertia(gram_);
    pos_ = in.positive;
    neg_ = in.negative;
}

Int Lattice::inner(const IntVec& v, const IntVec& w) const {
    if (v.size() != rank() || w.size() != rank())
        throw Error(Errc::DimensionMismatch, "vector length does not match rank");
    return dot(v, mat_apply(gram_, w));
}

Rat Lattice::inner(const RatVec& v, const RatVec& w) const {
    if (v.size() != rank() || w.size() != rank())
        throw Error(Errc::DimensionMismatch, "vector length does not match rank");
    return dot(v, mat_apply(gram_, w));
}

Rat Lattice::inner(const IntVec& v, const RatVec& w) const {
    if (v.size() != rank() || w.size() != rank())
        throw Error(Errc::DimensionMismatch, "vector length does not match rank");
    return dot(v, mat_apply(gram_, w));
}

IntVec Lattice::pairing_functional(const IntVec& w) const {
    if (w.size() != rank())
        throw Error(Errc::DimensionMismatch, "vector length does not match rank");
    return mat_apply(gram_, w);
}

bool Lattice::is_isometry(const IntMat& m) const {
    if (m.rows != rank() || m.cols != rank())
        throw Error(Errc::DimensionMismatch, "matrix size does not match rank");
    return mat_mul(mat_mul(mat_transpose(m), gram_), m) == gram_;
}

Isometry::Isometry(const Lattice& lattice, IntMat matrix) : matrix_(std::move(matrix)) {
    if (!lattice.is_isometry(matrix_))
        throw Error(Errc::NotAnIsometry, "matrix does not preserve the form");
}

Isometry Isometry::inverse(const Lattice& lattice) const {
    return Isometry(lattice, unimodular_inverse(matrix_));
}

LatticeAction::LatticeAction(const Lattice& lattice, FiniteGroup group,
                             std::vector<IntMat> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
    if (matrices_.size() != group_.order())
        throw Error(Errc::InvalidAction, "one matrix per group element required");
    for (const IntMat& m : matrices_)
        if (!lattice.is_isometry(m))
            throw Error(Errc::NotAnIsometry, "action matrix does not preserve the form");
    if (matrices_[group_.identity()] != IntMat::identity(lattice.rank()))
        throw Error(Errc::InvalidAction, "identity element must act trivially");
    for (std::size_t a = 0; a < group_.order(); ++a)
        for (std::size_t b = 0; b < group_.order(); ++b)
            if (mat_mul(matrices_[a], matrices_[b]) != matrices_[group_.mul(a, b)])
                throw Error(Errc::InvalidAction, "matrices do not respect the group table");
}

LatticeAction LatticeAction::from_generators(const Lattice& lattice,
                                             const std::vector<IntMat>& gens,
                                             std::size_t max_order) {
    std::vector<IntMat> elements{IntMat::identity(lattice.rank())};
    std::map<std::vector<Int>, std::size_t> index{{elements[0].a, 0}};
    for (const IntMat& g : gens) {
        if (!lattice.is_isometry(g))
            throw Error(Errc::NotAnIsometry, "generator does not preserve the form");
    }
    // Orbit closure of the generator set under multiplication.
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const IntMat& g : gens) {
            IntMat prod = mat_mul(elements[i], g);
            if (index.emplace(prod.a, elements.size()).second) {
                elements.push_back(prod);
                if (elements.size() > max_order)
                    throw Error(Errc::InvalidAction,
                                "generators do not close into a finite group within the cap");
            }
        }
    }
    std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = index.at(mat_mul(elements[a], elements[b]).a);
    return LatticeAction(lattice, FiniteGroup(std::move(table)), std::move(elements));
}

Lattice make_lattice(const IntMat& gram) { return Lattice(gram); }

std::vector<IntVec> fixed_sublattice(const Lattice& lattice, const LatticeAction& action) {
    std::size_t n = lattice.rank();
    std::vector<std::size_t> nontrivial;
    for (std::size_t e = 0; e < action.order(); ++e)
        if (e != action.group().identity()) nontrivial.push_back(e);
    if (nontrivial.empty()) {
        std::vector<IntVec> basis;
        for (std::size_t i = 0; i < n; ++i) {
            IntVec v(n, Int(0));
            v[i] = 1;
            basis.push_back(std::move(v));
        }
        std::sort(basis.begin(), basis.end(), lex_less);
        return basis;
    }
    // Stack (gamma - id) over all nontrivial elements; the fixed sublattice is
    // the integer kernel, saturated by construction.
    IntMat stacked(nontrivial.size() * n, n);
    for (std::size_t k = 0; k < nontrivial.size(); ++k) {
        const IntMat& m = action.matrix(nontrivial[k]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                stacked.at(k * n + i, j) = m.at(i, j) - (i == j ? 1 : 0);
    }
    std::vector<IntVec> basis = integer_kernel(stacked);
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

} // namespace latcone
