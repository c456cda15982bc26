#include "latcone/cone.hpp"

#include <algorithm>
#include <set>

namespace latcone {

namespace {

// Inequality or equality row over variables lambda_0..lambda_{m-1}:
// sum coeff_i lambda_i + constant (>= or ==) 0.
struct Row {
    RatVec coeff;
    Rat constant;
};

IntVec normalize_row_key(const Row& r) {
    // Scale to a primitive integer vector (coeffs then constant) for dedup.
    RatVec full = r.coeff;
    full.push_back(r.constant);
    if (is_zero(full)) return IntVec(full.size(), Int(0));
    return primitive(full);
}

// Substitute an equality into a row: eliminate variable p.
void substitute(Row& r, const Row& eq, std::size_t p) {
    if (r.coeff[p] == 0) return;
    Rat f = r.coeff[p] / eq.coeff[p];
    for (std::size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] -= f * eq.coeff[i];
    r.constant -= f * eq.constant;
    r.coeff[p] = 0;
}

constexpr std::size_t kFourierMotzkinRowCap = 200000;

bool feasible_nonneg_system(std::vector<Row> equalities, std::vector<Row> inequalities,
                            std::size_t nvars) {
    // Eliminate variables through the equalities first.
    std::vector<bool> eliminated(nvars, false);
    for (std::size_t e = 0; e < equalities.size(); ++e) {
        Row& eq = equalities[e];
        std::size_t p = nvars;
        for (std::size_t i = 0; i < nvars; ++i)
            if (!eliminated[i] && eq.coeff[i] != 0) { p = i; break; }
        if (p == nvars) {
            if (eq.constant != 0) return false;
            continue;
        }
        eliminated[p] = true;
        for (std::size_t k = e + 1; k < equalities.size(); ++k) substitute(equalities[k], eq, p);
        for (Row& r : inequalities) substitute(r, eq, p);
    }

    // Fourier-Motzkin on the remaining variables.
    for (std::size_t p = 0; p < nvars; ++p) {
        if (eliminated[p]) continue;
        std::vector<Row> zero, pos, neg;
        for (Row& r : inequalities) {
            if (r.coeff[p] == 0) zero.push_back(std::move(r));
            else if (r.coeff[p] > 0) pos.push_back(std::move(r));
            else neg.push_back(std::move(r));
        }
        std::vector<Row> next = std::move(zero);
        std::set<IntVec> seen;
        for (Row& r : next) seen.insert(normalize_row_key(r));
        for (const Row& a : pos) {
            for (const Row& b : neg) {
                Row c;
                c.coeff.assign(nvars, Rat(0));
                Rat fa = -b.coeff[p]; // > 0
                Rat fb = a.coeff[p];  // > 0
                for (std::size_t i = 0; i < nvars; ++i)
                    c.coeff[i] = fa * a.coeff[i] + fb * b.coeff[i];
                c.constant = fa * a.constant + fb * b.constant;
                c.coeff[p] = 0;
                bool allzero = is_zero(c.coeff);
                if (allzero) {
                    if (c.constant < 0) return false;
                    continue;
                }
                if (seen.insert(normalize_row_key(c)).second) next.push_back(std::move(c));
                if (next.size() > kFourierMotzkinRowCap)
                    throw Error(Errc::UnboundedRegion, "Fourier-Motzkin row cap exceeded");
            }
        }
        inequalities = std::move(next);
    }
    for (const Row& r : inequalities) {
        if (is_zero(r.coeff) && r.constant < 0) return false;
    }
    return true;
}

IntVec sign_canonical(IntVec v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return v;
}

// Extreme rays of { x in R^k : c.x >= 0 for all rows c }, for a pointed cone.
std::vector<IntVec> extreme_rays_pointed(std::size_t k, const std::vector<IntVec>& constraints) {
    std::vector<IntVec> rays;
    if (k == 0) return rays;
    std::size_t need = k - 1;
    std::size_t m = constraints.size();
    if (need > m) return rays;
    std::set<IntVec> seen;
    std::vector<std::size_t> idx(need);
    for (std::size_t i = 0; i < need; ++i) idx[i] = i;
    auto advance = [&]() -> bool {
        if (need == 0) return false;
        std::size_t i = need;
        while (i-- > 0) {
            if (idx[i] + (need - i) < m) {
                ++idx[i];
                for (std::size_t j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        RatMat sub(need, k);
        for (std::size_t r = 0; r < need; ++r)
            for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = Rat(constraints[idx[r]][c]);
        std::vector<IntVec> null = rat_nullspace(sub);
        if (null.size() != 1) continue;
        IntVec cand = null[0];
        bool ok_pos = true, ok_neg = true;
        for (const IntVec& c : constraints) {
            Int d = dot(c, cand);
            if (d < 0) ok_pos = false;
            if (d > 0) ok_neg = false;
            if (!ok_pos && !ok_neg) break;
        }
        if (ok_pos && ok_neg) continue; // in the lineality space; not a ray
        if (ok_neg) cand = vec_neg(cand);
        else if (!ok_pos) continue;
        if (seen.insert(cand).second) rays.push_back(cand);
    } while (advance());
    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

struct RaysWithLineality {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

// Extreme rays plus a lineality basis of { x in R^k : c.x >= 0 }.
RaysWithLineality extreme_rays_general(std::size_t k, const std::vector<IntVec>& constraints) {
    RaysWithLineality out;
    if (k == 0) return out;
    RatMat cmat(constraints.size(), k);
    for (std::size_t r = 0; r < constraints.size(); ++r)
        for (std::size_t c = 0; c < k; ++c) cmat.at(r, c) = Rat(constraints[r][c]);
    std::vector<IntVec> lin = rat_nullspace(cmat);
    if (lin.empty()) {
        out.rays = extreme_rays_pointed(k, constraints);
        return out;
    }
    out.lineality = lin;
    // Restrict to the orthogonal complement of the lineality space, where the
    // cone is pointed, and lift the rays back.
    RatMat lrows(lin.size(), k);
    for (std::size_t r = 0; r < lin.size(); ++r)
        for (std::size_t c = 0; c < k; ++c) lrows.at(r, c) = Rat(lin[r][c]);
    std::vector<IntVec> wbasis = rat_nullspace(lrows);
    std::size_t kw = wbasis.size();
    std::vector<IntVec> restricted;
    for (const IntVec& c : constraints) {
        IntVec rc(kw);
        for (std::size_t j = 0; j < kw; ++j) rc[j] = dot(c, wbasis[j]);
        restricted.push_back(std::move(rc));
    }
    for (const IntVec& ray : extreme_rays_pointed(kw, restricted)) {
        IntVec lifted(k, Int(0));
        for (std::size_t j = 0; j < kw; ++j)
            for (std::size_t c = 0; c < k; ++c) lifted[c] += ray[j] * wbasis[j][c];
        out.rays.push_back(primitive(lifted));
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

// Basis of the linear span of the given vectors (nonzero reduced echelon rows).
std::vector<IntVec> span_basis(std::size_t dim, const std::vector<IntVec>& vecs) {
    if (vecs.empty()) return {};
    RatMat m(vecs.size(), dim);
    for (std::size_t r = 0; r < vecs.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = Rat(vecs[r][c]);
    RatMat w = m;
    std::vector<std::size_t> pivots;
    {
        std::size_t row = 0;
        for (std::size_t col = 0; col < w.cols && row < w.rows; ++col) {
            std::size_t piv = row;
            while (piv < w.rows && w.at(piv, col) == 0) ++piv;
            if (piv == w.rows) continue;
            if (piv != row)
                for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(row, j), w.at(piv, j));
            Rat inv = Rat(1) / w.at(row, col);
            for (std::size_t j = col; j < w.cols; ++j) w.at(row, j) *= inv;
            for (std::size_t i = 0; i < w.rows; ++i) {
                if (i == row || w.at(i, col) == 0) continue;
                Rat f = w.at(i, col);
                for (std::size_t j = col; j < w.cols; ++j) w.at(i, j) -= f * w.at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
    }
    std::vector<IntVec> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        RatVec v(dim);
        for (std::size_t c = 0; c < dim; ++c) v[c] = w.at(r, c);
        basis.push_back(primitive(v));
    }
    return basis;
}

// Coordinates of v in the given (independent) basis, if v lies in its span.
std::optional<RatVec> coords_in_basis(const std::vector<IntVec>& basis, const RatVec& v) {
    std::size_t dim = v.size();
    RatMat m(dim, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = Rat(basis[j][i]);
    std::optional<RatVec> sol = rat_solve(m, v);
    if (!sol) return std::nullopt;
    RatVec check(dim, Rat(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) check[i] += (*sol)[j] * Rat(basis[j][i]);
    for (std::size_t i = 0; i < dim; ++i)
        if (check[i] != v[i]) return std::nullopt;
    return sol;
}

} // namespace

bool nonneg_combination_exists(const std::vector<IntVec>& gens, const RatVec& v) {
    std::size_t m = gens.size();
    std::size_t n = v.size();
    if (m == 0) return is_zero(v);
    std::vector<Row> eqs;
    for (std::size_t k = 0; k < n; ++k) {
        Row r;
        r.coeff.assign(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i) r.coeff[i] = Rat(gens[i][k]);
        r.constant = -v[k]; // sum lambda_i g_i[k] - v[k] = 0
        eqs.push_back(std::move(r));
    }
    std::vector<Row> ineqs;
    for (std::size_t i = 0; i < m; ++i) {
        Row r;
        r.coeff.assign(m, Rat(0));
        r.coeff[i] = 1;
        r.constant = 0;
        ineqs.push_back(std::move(r));
    }
    return feasible_nonneg_system(std::move(eqs), std::move(ineqs), m);
}

RationalCone::RationalCone(std::size_t ambient_dim) : dim_(ambient_dim) {}

RationalCone RationalCone::from_generators(std::size_t ambient_dim,
                                           const std::vector<RatVec>& gens) {
    std::vector<IntVec> igens;
    for (const RatVec& g : gens) {
        if (g.size() != ambient_dim)
            throw Error(Errc::DimensionMismatch, "generator length does not match ambient");
        if (latcone::is_zero(g)) throw Error(Errc::ZeroGenerator, "cone generator is zero");
        igens.push_back(primitive(g));
    }
    RationalCone c(ambient_dim);
    std::sort(igens.begin(), igens.end(), lex_less);
    igens.erase(std::unique(igens.begin(), igens.end()), igens.end());
    // Drop generators already in the cone of the remaining ones.
    std::vector<IntVec> kept = igens;
    for (const IntVec& g : igens) {
        std::vector<IntVec> others;
        for (const IntVec& h : kept)
            if (h != g) others.push_back(h);
        if (others.size() < kept.size() && nonneg_combination_exists(others, to_rat(g)))
            kept = std::move(others);
    }
    c.gens_ = std::move(kept);
    return c;
}

RationalCone RationalCone::from_generators(std::size_t ambient_dim,
                                           const std::vector<IntVec>& gens) {
    std::vector<RatVec> rgens;
    rgens.reserve(gens.size());
    for (const IntVec& g : gens) rgens.push_back(to_rat(g));
    return from_generators(ambient_dim, rgens);
}

RationalCone RationalCone::from_halfspaces(std::size_t ambient_dim, const FacetData& facets) {
    // Basis of the subspace cut out by the equalities.
    std::vector<IntVec> subspace;
    if (facets.equalities.empty()) {
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            IntVec e(ambient_dim, Int(0));
            e[i] = 1;
            subspace.push_back(std::move(e));
        }
    } else {
        RatMat em(facets.equalities.size(), ambient_dim);
        for (std::size_t r = 0; r < facets.equalities.size(); ++r)
            for (std::size_t c = 0; c < ambient_dim; ++c)
                em.at(r, c) = Rat(facets.equalities[r][c]);
        subspace = rat_nullspace(em);
    }
    std::size_t k = subspace.size();
    std::vector<IntVec> restricted;
    for (const IntVec& f : facets.inequalities) {
        IntVec rf(k);
        for (std::size_t j = 0; j < k; ++j) rf[j] = dot(f, subspace[j]);
        restricted.push_back(std::move(rf));
    }
    RaysWithLineality rl = extreme_rays_general(k, restricted);
    std::vector<IntVec> gens;
    auto lift = [&](const IntVec& a) {
        IntVec x(ambient_dim, Int(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < ambient_dim; ++c) x[c] += a[j] * subspace[j][c];
        return x;
    };
    for (const IntVec& r : rl.rays) gens.push_back(lift(r));
    for (const IntVec& l : rl.lineality) {
        IntVec x = lift(l);
        gens.push_back(x);
        gens.push_back(vec_neg(x));
    }
    return from_generators(ambient_dim, gens);
}

std::size_t RationalCone::dim() const {
    if (gens_.empty()) return 0;
    return span_basis(dim_, gens_).size();
}

bool RationalCone::contains(const RatVec& v, bool strict) const {
    if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "point length does not match ambient");
    if (!strict) return nonneg_combination_exists(gens_, v);
    const FacetData& fd = facets();
    for (const IntVec& e : fd.equalities)
        if (dot(e, v) != 0) return false;
    for (const IntVec& f : fd.inequalities)
        if (dot(f, v) <= 0) return false;
    return true;
}

bool RationalCone::contains(const IntVec& v, bool strict) const { return contains(to_rat(v), strict); }

bool RationalCone::contains_by_halfspaces(const RatVec& v) const {
    if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "point length does not match ambient");
    const FacetData& fd = facets();
    for (const IntVec& e : fd.equalities)
        if (dot(e, v) != 0) return false;
    for (const IntVec& f : fd.inequalities)
        if (dot(f, v) < 0) return false;
    return true;
}

const FacetData& RationalCone::facets() const {
    if (facets_) return *facets_;
    FacetData fd;
    if (gens_.empty()) {
        for (std::size_t i = 0; i < dim_; ++i) {
            IntVec e(dim_, Int(0));
            e[i] = 1;
            fd.equalities.push_back(std::move(e));
        }
        facets_ = std::move(fd);
        return *facets_;
    }
    // Equalities: functionals vanishing on the span.
    RatMat gm(gens_.size(), dim_);
    for (std::size_t r = 0; r < gens_.size(); ++r)
        for (std::size_t c = 0; c < dim_; ++c) gm.at(r, c) = Rat(gens_[r][c]);
    for (IntVec e : rat_nullspace(gm)) fd.equalities.push_back(sign_canonical(std::move(e)));
    std::sort(fd.equalities.begin(), fd.equalities.end(), lex_less);

    // Facet inequalities: extreme rays of the dual cone in span coordinates.
    std::vector<IntVec> basis = span_basis(dim_, gens_);
    std::size_t k = basis.size();
    std::vector<IntVec> coords;
    for (const IntVec& g : gens_) {
        std::optional<RatVec> a = coords_in_basis(basis, to_rat(g));
        coords.push_back(primitive(*a)); // scaling a generator is harmless
    }
    std::vector<IntVec> duals = extreme_rays_pointed(k, coords);
    for (const IntVec& phi : duals) {
        // Lift phi to an ambient functional f with f.g = phi.coords(g); any
        // solution of B^T f = phi works, made canonical by reducing modulo the
        // equality functionals.
        RatMat bt(k, dim_);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < dim_; ++j) bt.at(i, j) = Rat(basis[i][j]);
        RatVec rhs(k);
        for (std::size_t i = 0; i < k; ++i) rhs[i] = Rat(phi[i]);
        std::optional<RatVec> f = rat_solve(bt, rhs);
        if (!f) continue; // cannot happen: basis rows are independent
        // Reduce modulo equalities for a canonical representative.
        RatVec fr = *f;
        for (const IntVec& e : fd.equalities) {
            std::size_t p = 0;
            while (p < dim_ && e[p] == 0) ++p;
            if (p == dim_) continue;
            Rat factor = fr[p] / Rat(e[p]);
            for (std::size_t j = 0; j < dim_; ++j) fr[j] -= factor * Rat(e[j]);
        }
        if (latcone::is_zero(fr)) continue;
        fd.inequalities.push_back(primitive(fr));
    }
    std::sort(fd.inequalities.begin(), fd.inequalities.end(), lex_less);
    facets_ = std::move(fd);
    return *facets_;
}

RationalCone RationalCone::intersect_halfspace(const IntVec& functional) const {
    if (functional.size() != dim_)
        throw Error(Errc::DimensionMismatch, "functional length does not match ambient");
    std::vector<IntVec> keep, negs;
    std::vector<Int> vals;
    for (const IntVec& g : gens_) {
        Int v = dot(functional, g);
        if (v >= 0) keep.push_back(g);
        else negs.push_back(g);
        vals.push_back(v);
    }
    std::vector<IntVec> out = keep;
    for (const IntVec& p : keep) {
        Int fp = dot(functional, p);
        if (fp == 0) continue;
        for (const IntVec& n : negs) {
            Int fn = dot(functional, n); // < 0
            // (f.p) n - (f.n) p lies on the hyperplane and in the cone.
            IntVec w = vec_sub(vec_scale(fp, n), vec_scale(fn, p));
            if (!latcone::is_zero(w)) out.push_back(primitive(w));
        }
    }
    return from_generators(dim_, out);
}

bool RationalCone::is_subset_of(const RationalCone& other) const {
    for (const IntVec& g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

bool RationalCone::same_cone_as(const RationalCone& other) const {
    return is_subset_of(other) && other.is_subset_of(*this);
}

PositiveConeRef::PositiveConeRef(Lattice lattice, IntVec reference)
    : lattice_(std::move(lattice)), reference_(std::move(reference)) {
    if (!lattice_.is_hyperbolic())
        throw Error(Errc::WrongSignature, "positive cone requires signature (1, rank-1)");
    if (reference_.size() != lattice_.rank())
        throw Error(Errc::DimensionMismatch, "reference length does not match rank");
    if (lattice_.norm(reference_) <= 0)
        throw Error(Errc::NotInPositiveCone, "reference vector must have positive square");
}

bool in_positive_cone(const PositiveConeRef& p, const IntVec& v) {
    return p.lattice().norm(v) > 0 && p.lattice().inner(v, p.reference()) > 0;
}

bool in_positive_cone(const PositiveConeRef& p, const RatVec& v) {
    RatVec ref = to_rat(p.reference());
    return p.lattice().inner(v, v) > 0 && p.lattice().inner(v, ref) > 0;
}

std::vector<RationalCone> subdivide(const Lattice& lattice, const RationalCone& c,
                                    const std::vector<IntVec>& walls) {
    if (c.ambient_dim() != lattice.rank())
        throw Error(Errc::DimensionMismatch, "cone ambient does not match lattice rank");
    std::vector<RationalCone> cells{c};
    for (const IntVec& w : walls) {
        if (is_zero(w)) throw Error(Errc::ZeroGenerator, "wall vector is zero");
        IntVec f = lattice.pairing_functional(w);
        std::vector<RationalCone> next;
        for (const RationalCone& cell : cells) {
            RationalCone plus = cell.intersect_halfspace(f);
            RationalCone minus = cell.intersect_halfspace(vec_neg(f));
            for (RationalCone* cand : {&plus, &minus}) {
                if (cand->is_zero()) continue;
                if (std::find(next.begin(), next.end(), *cand) == next.end())
                    next.push_back(std::move(*cand));
            }
        }
        cells = std::move(next);
    }
    // Drop cells contained in another cell (lower-dimensional slices produced
    // when a wall only touches a cell's boundary).
    std::vector<RationalCone> pruned;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cells.size() && !dominated; ++j) {
            if (i == j || !cells[i].is_subset_of(cells[j])) continue;
            bool mutual = cells[j].is_subset_of(cells[i]);
            if (!mutual || j < i) dominated = true;
        }
        if (!dominated) pruned.push_back(cells[i]);
    }
    std::sort(pruned.begin(), pruned.end(), [](const RationalCone& a, const RationalCone& b) {
        return std::lexicographical_compare(a.generators().begin(), a.generators().end(),
                                            b.generators().begin(), b.generators().end(), lex_less);
    });
    return pruned;
}

std::vector<RationalCone> chamber_components(const Lattice& lattice, const RationalCone& c,
                                             const std::vector<IntVec>& walls) {
    std::vector<RationalCone> cells = subdivide(lattice, c, walls);
    std::size_t full = c.dim();
    std::vector<RationalCone> out;
    for (RationalCone& cell : cells)
        if (cell.dim() == full) out.push_back(std::move(cell));
    return out;
}

RatVec galois_average(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) throw Error(Errc::EmptyInput, "average of an empty list");
    std::size_t n = vectors[0].size();
    RatVec sum(n, Rat(0));
    for (const RatVec& v : vectors) {
        if (v.size() != n) throw Error(Errc::DimensionMismatch, "mixed vector lengths");
        sum = vec_add(sum, v);
    }
    return vec_scale(Rat(1, static_cast<unsigned>(vectors.size())), sum);
}

RatVec galois_average(const std::vector<IntVec>& vectors) {
    std::vector<RatVec> rv;
    rv.reserve(vectors.size());
    for (const IntVec& v : vectors) rv.push_back(to_rat(v));
    return galois_average(rv);
}

} // namespace latcone
