#include "latcone/enumerate.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace latcone {

namespace {

void check_enumeration_preconditions(const Lattice& lattice, const RationalCone& cone,
                                     const Int& d) {
    if (!lattice.is_hyperbolic())
        throw Error(Errc::WrongSignature, "enumeration requires signature (1, rank-1)");
    if (d < 1) throw Error(Errc::MalformedInput, "square must be a positive integer");
    if (cone.ambient_dim() != lattice.rank())
        throw Error(Errc::DimensionMismatch, "cone ambient does not match lattice rank");
    const auto& gens = cone.generators();
    bool has_null = false;
    Int max_pairing;
    bool first = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            Int b = lattice.inner(gens[i], gens[j]);
            if (b < 0)
                throw Error(Errc::NotInPositiveCone,
                            "cone is not contained in the closure of a positive cone");
            if (i == j && b == 0) has_null = true;
            if (first || b > max_pairing) { max_pairing = b; first = false; }
        }
    }
    if (has_null && (first || max_pairing <= 0))
        throw Error(Errc::UnboundedRegion,
                    "null-norm generator with a degenerate coefficient bound");
}

// Fast closed membership on precomputed facet data (integer arithmetic only).
bool facet_contains(const FacetData& fd, const IntVec& v) {
    for (const IntVec& e : fd.equalities)
        if (dot(e, v) != 0) return false;
    for (const IntVec& f : fd.inequalities)
        if (dot(f, v) < 0) return false;
    return true;
}

// Scan one slice of the prefix odometer, solving the norm equation for the
// last coordinate.
std::vector<IntVec> scan_range(const Lattice& lattice, const FacetData& fd,
                               const EnumerationBudget& budget, const Int& d,
                               const Int& first_lo, const Int& first_hi) {
    std::size_t n = lattice.rank();
    const IntMat& g = lattice.gram();
    std::vector<IntVec> found;
    IntVec v(n, Int(0));
    std::size_t last = n - 1;

    auto try_candidate = [&](const Int& t) {
        if (t < budget.box_lo[last] || t > budget.box_hi[last]) return;
        v[last] = t;
        if (lattice.norm(v) != d) return;
        if (facet_contains(fd, v)) found.push_back(v);
    };

    auto solve_last = [&]() {
        // Quadratic in the last coordinate: a t^2 + b t + c = d.
        Int a = g.at(last, last);
        Int b = 0;
        for (std::size_t i = 0; i < last; ++i) b += 2 * g.at(last, i) * v[i];
        Int c = 0;
        for (std::size_t i = 0; i < last; ++i)
            for (std::size_t j = 0; j < last; ++j) c += g.at(i, j) * v[i] * v[j];
        c -= d;
        if (a != 0) {
            Int disc = b * b - 4 * a * c;
            Int s;
            if (!is_perfect_square(disc, s)) return;
            for (int sign : {1, -1}) {
                Int num = -b + sign * s;
                if (num % (2 * a) != 0) continue;
                try_candidate(num / (2 * a));
                if (s == 0) break;
            }
        } else if (b != 0) {
            if ((-c) % b == 0) try_candidate(-c / b);
        } else if (c == 0) {
            for (Int t = budget.box_lo[last]; t <= budget.box_hi[last]; ++t) try_candidate(t);
        }
    };

    if (n == 1) {
        solve_last();
        return found;
    }
    // Odometer over coordinates 0..n-2, the first restricted to [first_lo, first_hi].
    if (first_lo > first_hi) return found;
    for (std::size_t i = 0; i + 1 < n; ++i) v[i] = (i == 0) ? first_lo : budget.box_lo[i];
    while (true) {
        solve_last();
        std::size_t k = n - 1;
        while (k-- > 0) {
            Int hi = (k == 0) ? first_hi : budget.box_hi[k];
            if (v[k] < hi) {
                ++v[k];
                for (std::size_t j = k + 1; j + 1 < n; ++j) v[j] = budget.box_lo[j];
                break;
            }
            if (k == 0) return found;
        }
    }
}

} // namespace

EnumerationBudget enumeration_budget(const Lattice& lattice, const RationalCone& cone,
                                     const Int& d) {
    check_enumeration_preconditions(lattice, cone, d);
    const auto& gens = cone.generators();
    std::size_t n = lattice.rank();
    EnumerationBudget budget;
    budget.box_lo.assign(n, Int(0));
    budget.box_hi.assign(n, Int(0));
    if (gens.empty()) {
        budget.coefficient_bound = 0;
        return budget;
    }
    Int m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            m = std::max(m, lattice.inner(gens[i], gens[j]));
    budget.coefficient_bound = d * Int(gens.size()) * m;
    budget.iteration_cap = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Int lo = 0, hi = 0;
        for (const IntVec& g : gens) {
            if (g[k] > 0) hi += g[k];
            else lo += g[k];
        }
        budget.box_lo[k] = budget.coefficient_bound * lo;
        budget.box_hi[k] = budget.coefficient_bound * hi;
        budget.iteration_cap *= budget.box_hi[k] - budget.box_lo[k] + 1;
    }
    return budget;
}

std::vector<IntVec> vectors_of_square_in_cone(const RationalCone& cone, const Int& d,
                                              const Lattice& lattice, unsigned jobs) {
    EnumerationBudget budget = enumeration_budget(lattice, cone, d);
    if (cone.is_zero()) return {};
    const FacetData& fd = cone.facets(); // warmed before any parallel scan
    std::size_t n = lattice.rank();

    std::vector<IntVec> all;
    if (jobs <= 1 || n == 1) {
        all = scan_range(lattice, fd, budget, d, budget.box_lo[0], budget.box_hi[0]);
    } else {
        Int lo = budget.box_lo[0], hi = budget.box_hi[0];
        Int width = hi - lo + 1;
        Int chunk = width / jobs + 1;
        std::vector<std::future<std::vector<IntVec>>> futures;
        for (unsigned w = 0; w < jobs; ++w) {
            Int a = lo + chunk * w;
            Int b = std::min(Int(a + chunk - 1), hi);
            if (a > hi) break;
            futures.push_back(std::async(std::launch::async, [&, a, b]() {
                return scan_range(lattice, fd, budget, d, a, b);
            }));
        }
        for (auto& f : futures) {
            std::vector<IntVec> part = f.get();
            all.insert(all.end(), part.begin(), part.end());
        }
    }
    std::sort(all.begin(), all.end(), lex_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

GeneratedGroup::GeneratedGroup(const Lattice& lattice, const std::vector<IntMat>& generators,
                               std::size_t word_radius)
    : rank_(lattice.rank()), word_radius_(word_radius) {
    std::set<std::vector<Int>> seen;
    for (const IntMat& g : generators) {
        if (!lattice.is_isometry(g))
            throw Error(Errc::NotAnIsometry, "group generator does not preserve the form");
        if (seen.insert(g.a).second) generators_.push_back(g);
        IntMat inv = unimodular_inverse(g);
        if (seen.insert(inv.a).second) generators_.push_back(inv);
    }
}

std::vector<IntMat> GeneratedGroup::word_ball(std::size_t radius, std::size_t element_cap) const {
    std::vector<IntMat> ball{IntMat::identity(rank_)};
    std::set<std::vector<Int>> seen{ball[0].a};
    std::size_t frontier_begin = 0;
    for (std::size_t step = 0; step < radius; ++step) {
        std::size_t frontier_end = ball.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const IntMat& g : generators_) {
                IntMat prod = mat_mul(ball[i], g);
                if (seen.insert(prod.a).second) {
                    ball.push_back(std::move(prod));
                    if (ball.size() > element_cap)
                        throw Error(Errc::UnboundedRegion, "word ball exceeds the element cap");
                }
            }
        }
        frontier_begin = frontier_end;
    }
    return ball;
}

namespace {

// Exact null rays of a rank-2 hyperbolic form, oriented into the component of
// y, when the rays are rational; otherwise nullopt.
std::optional<std::vector<IntVec>> rational_null_rays(const Lattice& lattice, const IntVec& y) {
    if (lattice.rank() != 2) return std::nullopt;
    const IntMat& g = lattice.gram();
    const Int &a = g.at(0, 0), &b = g.at(0, 1), &c = g.at(1, 1);
    // Q(s,t) = a s^2 + 2 b s t + c t^2
    std::vector<IntVec> rays;
    if (a == 0) {
        rays.push_back(IntVec{1, 0});
        // remaining factor: 2 b s + c t = 0
        rays.push_back(primitive(IntVec{c, -2 * b}));
    } else {
        Int disc = b * b - a * c, s;
        if (!is_perfect_square(disc, s)) return std::nullopt;
        if (s == 0) return std::nullopt; // degenerate (excluded by nondegeneracy anyway)
        rays.push_back(primitive(IntVec{-b + s, a}));
        rays.push_back(primitive(IntVec{-b - s, a}));
    }
    for (IntVec& r : rays) {
        Int pairing = lattice.inner(r, y);
        if (pairing < 0) r = vec_neg(r);
        else if (pairing == 0) return std::nullopt; // y on a null ray: not interior
    }
    return rays;
}

} // namespace

DirichletDomain dirichlet_domain(const GeneratedGroup& group, const IntVec& y,
                                 const PositiveConeRef& p) {
    const Lattice& lattice = p.lattice();
    if (!in_positive_cone(p, y))
        throw Error(Errc::NotInPositiveCone, "base point is not in the positive cone");
    for (const IntMat& g : group.generators())
        if (lattice.inner(mat_apply(g, y), y) <= 0)
            throw Error(Errc::NotInPositiveCone,
                        "a generator does not preserve the positive cone component");

    std::size_t n = lattice.rank();
    IntVec gy = lattice.pairing_functional(y);
    std::optional<std::vector<IntVec>> null_rays = rational_null_rays(lattice, y);

    auto domain_at = [&](std::size_t radius, std::size_t& ball_size) {
        std::vector<IntMat> ball = group.word_ball(radius);
        ball_size = ball.size();
        std::vector<IntVec> base;
        if (null_rays) {
            base = *null_rays; // exact closed positive cone
        } else {
            for (const IntMat& m : ball) base.push_back(mat_apply(m, y));
        }
        RationalCone cone = RationalCone::from_generators(n, base);
        IntMat id = IntMat::identity(n);
        for (const IntMat& m : ball) {
            if (m == id) continue;
            // (gamma x, y) >= (x, y)  <=>  ((gamma^T - 1) G y) . x >= 0
            IntVec u = mat_apply(mat_transpose(m), gy);
            u = vec_sub(u, gy);
            if (is_zero(u)) continue;
            cone = cone.intersect_halfspace(u);
        }
        return cone;
    };

    std::size_t max_radius = group.word_radius();
    std::size_t prev_ball = 0;
    RationalCone prev = domain_at(1, prev_ball);
    for (std::size_t r = 1; r <= max_radius; ++r) {
        std::size_t next_ball = 0;
        RationalCone next = domain_at(r + 1, next_ball);
        if (prev.same_cone_as(next))
            return DirichletDomain{std::move(prev), r, prev_ball};
        prev = std::move(next);
        prev_ball = next_ball;
    }
    throw Error(Errc::NotStabilized,
                "word radius " + std::to_string(max_radius) + " did not stabilize the domain");
}

std::vector<IntVec> orbit_representatives(const Int& d, const GeneratedGroup& group,
                                          const IntVec& y, const PositiveConeRef& p,
                                          unsigned jobs) {
    const Lattice& lattice = p.lattice();
    DirichletDomain domain = dirichlet_domain(group, y, p);
    std::vector<IntVec> vs = vectors_of_square_in_cone(domain.cone, d, lattice, jobs);
    if (vs.empty()) return vs;

    // Identify boundary-equivalent vectors within the word ball and keep the
    // lexicographically smallest of each class.
    std::vector<IntMat> ball = group.word_ball(group.word_radius());
    std::map<IntVec, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
    std::vector<std::size_t> parent(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (const IntMat& m : ball) {
            auto it = index.find(mat_apply(m, vs[i]));
            if (it == index.end() || it->second == i) continue;
            std::size_t a = find(i), b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<IntVec> reps;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (find(i) == i) reps.push_back(vs[i]); // vs is sorted, so i is the lex-min of its class
    return reps;
}

std::vector<IntVec> walls_meeting_cone(const RationalCone& P, const Int& N,
                                       const Lattice& lattice) {
    if (P.ambient_dim() != lattice.rank())
        throw Error(Errc::DimensionMismatch, "cone ambient does not match lattice rank");
    if (N < 1) throw Error(Errc::MalformedInput, "wall bound must be a positive integer");
    const auto& gens = P.generators();
    if (gens.empty()) return {};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (lattice.norm(gens[i]) <= 0)
            throw Error(Errc::UnboundedRegion,
                        "cone generator on or beyond the null cone; region not compact");
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (lattice.inner(gens[i], gens[j]) <= 0)
                throw Error(Errc::NotInPositiveCone,
                            "generators are not in one positive cone component");
    }
    std::size_t n = lattice.rank();
    // Interior point y = sum of generators; bound (v,y)^2 for candidate walls,
    // then box the positive definite form 2 (v,y)^2/(y,y) - (v,v).
    IntVec y(n, Int(0));
    for (const IntVec& g : gens) y = vec_add(y, g);
    Int yy = lattice.norm(y);
    Int ymax = 0, bmin;
    bool first = true;
    for (const IntVec& g : gens) {
        ymax = std::max(ymax, lattice.inner(y, g));
        Int nn = lattice.norm(g);
        if (first || nn < bmin) { bmin = nn; first = false; }
    }
    Rat b1 = Rat(Int(gens.size()) * ymax * ymax) / Rat(bmin);
    Rat b2 = Rat(N) * (b1 - Rat(yy));
    if (b2 < 0) b2 = 0;
    Rat b4 = Rat(2) * b2 / Rat(yy) + Rat(N);

    // Gram matrix of the positive definite majorant.
    IntVec gy = lattice.pairing_functional(y);
    RatMat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = Rat(2 * gy[i] * gy[j]) / Rat(yy) - Rat(lattice.gram().at(i, j));
    RatMat hinv = rat_inverse(h);
    IntVec bound(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rat limit = b4 * hinv.at(k, k); // v_k^2 <= limit
        Int num = numerator(limit), den = denominator(limit);
        if (num < 0) { bound[k] = 0; continue; }
        Int bk = isqrt(num / den);
        while ((bk + 1) * (bk + 1) * den <= num) ++bk;
        bound[k] = bk;
    }

    std::vector<IntVec> out;
    IntVec v(n, Int(0));
    // Scan the half box with first nonzero coordinate positive.
    std::vector<Int> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) { lo[k] = -bound[k]; hi[k] = bound[k]; }
    for (std::size_t k = 0; k < n; ++k) v[k] = lo[k];
    while (true) {
        bool leading_ok = false, nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k] != 0) {
                nonzero = true;
                leading_ok = v[k] > 0;
                break;
            }
        }
        if (nonzero && leading_ok) {
            Int nn = lattice.norm(v);
            if (nn < 0 && nn > -N) {
                IntVec pv = primitive(v);
                if (pv == v) {
                    bool pos = false, neg = false, zero = false;
                    for (const IntVec& g : gens) {
                        Int s = lattice.inner(v, g);
                        if (s > 0) pos = true;
                        else if (s < 0) neg = true;
                        else zero = true;
                    }
                    if (zero || (pos && neg)) out.push_back(pv);
                }
            }
        }
        std::size_t k = n;
        bool done = true;
        while (k-- > 0) {
            if (v[k] < hi[k]) {
                ++v[k];
                for (std::size_t j = k + 1; j < n; ++j) v[j] = lo[j];
                done = false;
                break;
            }
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace latcone
