#include "latcone/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latcone {

namespace {

bool is_automorphism_table(const FiniteGroup& g, const std::vector<std::size_t>& t) {
    std::size_t n = g.order();
    if (t.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::size_t x : t) {
        if (x >= n || hit[x]) return false;
        hit[x] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t[g.mul(a, b)] != g.mul(t[a], t[b])) return false;
    return true;
}

std::vector<std::size_t> compose_tables(const std::vector<std::size_t>& outer,
                                        const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

std::vector<std::size_t> inverse_table(const std::vector<std::size_t>& t) {
    std::vector<std::size_t> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) r[t[i]] = i;
    return r;
}

} // namespace

FiniteAction::FiniteAction(FiniteGroup gamma, FiniteGroup g,
                           std::vector<std::vector<std::size_t>> sigma)
    : gamma_(std::move(gamma)), g_(std::move(g)), sigma_(std::move(sigma)) {
    if (sigma_.size() != gamma_.order())
        throw Error(Errc::InvalidAction, "one automorphism per group element required");
    for (const auto& t : sigma_)
        if (!is_automorphism_table(g_, t))
            throw Error(Errc::InvalidAction, "action value is not an automorphism");
    for (std::size_t x = 0; x < g_.order(); ++x)
        if (sigma_[gamma_.identity()][x] != x)
            throw Error(Errc::InvalidAction, "identity must act trivially");
    for (std::size_t a = 0; a < gamma_.order(); ++a)
        for (std::size_t b = 0; b < gamma_.order(); ++b)
            if (compose_tables(sigma_[a], sigma_[b]) != sigma_[gamma_.mul(a, b)])
                throw Error(Errc::InvalidAction, "action is not a homomorphism");
}

FiniteAction FiniteAction::trivial(FiniteGroup gamma, FiniteGroup g) {
    std::vector<std::size_t> id(g.order());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    std::vector<std::vector<std::size_t>> sigma(gamma.order(), id);
    return FiniteAction(std::move(gamma), std::move(g), std::move(sigma));
}

bool is_cocycle(const FiniteAction& action, const FiniteCocycle& c) {
    const FiniteGroup& gamma = action.gamma();
    const FiniteGroup& g = action.coeff();
    if (c.size() != gamma.order()) return false;
    if (c[gamma.identity()] != g.identity()) return false;
    for (std::size_t a = 0; a < gamma.order(); ++a)
        for (std::size_t b = 0; b < gamma.order(); ++b)
            if (c[gamma.mul(a, b)] != g.mul(c[a], action.act(a, c[b]))) return false;
    return true;
}

std::vector<FiniteCocycle> all_cocycles(const FiniteAction& action) {
    const FiniteGroup& gamma = action.gamma();
    const FiniteGroup& g = action.coeff();
    std::size_t n = gamma.order();
    std::vector<std::size_t> gens = gamma.generators();
    std::vector<FiniteCocycle> out;
    if (gens.empty()) {
        out.push_back(FiniteCocycle{g.identity()});
        return out;
    }
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> assign(gens.size(), 0);
    while (true) {
        // Complete the candidate from generator values by c(ab) = c(a) sigma_a(c(b)).
        FiniteCocycle c(n, kUnset);
        c[gamma.identity()] = g.identity();
        bool ok = true;
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
            std::size_t e = gens[i], v = assign[i];
            if (c[e] == kUnset) c[e] = v;
            else ok = c[e] == v;
        }
        if (ok) {
            bool grew = true;
            while (grew && ok) {
                grew = false;
                for (std::size_t a = 0; a < n && ok; ++a) {
                    if (c[a] == kUnset) continue;
                    for (std::size_t gi : gens) {
                        if (c[gi] == kUnset) continue;
                        std::size_t ab = gamma.mul(a, gi);
                        std::size_t val = g.mul(c[a], action.act(a, c[gi]));
                        if (c[ab] == kUnset) { c[ab] = val; grew = true; }
                        else if (c[ab] != val) { ok = false; break; }
                    }
                }
            }
        }
        if (ok && std::find(c.begin(), c.end(), kUnset) == c.end() && is_cocycle(action, c))
            out.push_back(c);
        // advance odometer
        std::size_t i = gens.size();
        bool done = true;
        while (i-- > 0) {
            if (assign[i] + 1 < g.order()) {
                ++assign[i];
                for (std::size_t j = i + 1; j < gens.size(); ++j) assign[j] = 0;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FiniteCocycle> h1_finite(const FiniteAction& action) {
    const FiniteGroup& gamma = action.gamma();
    const FiniteGroup& g = action.coeff();
    std::vector<FiniteCocycle> cocycles = all_cocycles(action);
    std::map<FiniteCocycle, std::size_t> index;
    for (std::size_t i = 0; i < cocycles.size(); ++i) index[cocycles[i]] = i;
    std::vector<bool> used(cocycles.size(), false);
    std::vector<FiniteCocycle> reps;
    FiniteCocycle trivial(gamma.order(), g.identity());
    // Walk classes; the b-orbit of a cocycle is its full equivalence class.
    auto emit_class = [&](std::size_t start) {
        if (used[start]) return;
        FiniteCocycle best = cocycles[start];
        std::vector<std::size_t> stack{start};
        used[start] = true;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < g.order(); ++b) {
                FiniteCocycle d(gamma.order());
                for (std::size_t a = 0; a < gamma.order(); ++a)
                    d[a] = g.mul(g.mul(g.inv(b), cocycles[cur][a]), action.act(a, b));
                auto it = index.find(d);
                if (it == index.end())
                    throw Error(Errc::InvalidAction, "coboundary left the cocycle set");
                if (!used[it->second]) {
                    used[it->second] = true;
                    stack.push_back(it->second);
                }
                if (d < best) best = d;
            }
        }
        reps.push_back(best);
    };
    emit_class(index.at(trivial));
    for (std::size_t i = 0; i < cocycles.size(); ++i) emit_class(i);
    std::sort(reps.begin() + 1, reps.end());
    return reps;
}

FiniteAction twist_action(const FiniteAction& action, const FiniteCocycle& c) {
    if (!is_cocycle(action, c))
        throw Error(Errc::NotACocycle, "twisting requires a valid cocycle");
    const FiniteGroup& gamma = action.gamma();
    const FiniteGroup& g = action.coeff();
    std::vector<std::vector<std::size_t>> sigma(gamma.order(),
                                                std::vector<std::size_t>(g.order()));
    for (std::size_t a = 0; a < gamma.order(); ++a)
        for (std::size_t x = 0; x < g.order(); ++x)
            sigma[a][x] = g.mul(g.mul(c[a], action.act(a, x)), g.inv(c[a]));
    return FiniteAction(gamma, g, std::move(sigma));
}

FreeAbelianAction::FreeAbelianAction(FiniteGroup gamma, std::size_t rank,
                                     std::vector<IntMat> sigma)
    : gamma_(std::move(gamma)), rank_(rank), sigma_(std::move(sigma)) {
    if (sigma_.size() != gamma_.order())
        throw Error(Errc::InvalidAction, "one matrix per group element required");
    for (const IntMat& m : sigma_) {
        if (m.rows != rank_ || m.cols != rank_)
            throw Error(Errc::InvalidAction, "action matrix size does not match rank");
        Int d = det(m);
        if (d != 1 && d != -1)
            throw Error(Errc::InvalidAction, "action matrix is not invertible over Z");
    }
    if (sigma_[gamma_.identity()] != IntMat::identity(rank_))
        throw Error(Errc::InvalidAction, "identity must act trivially");
    for (std::size_t a = 0; a < gamma_.order(); ++a)
        for (std::size_t b = 0; b < gamma_.order(); ++b)
            if (mat_mul(sigma_[a], sigma_[b]) != sigma_[gamma_.mul(a, b)])
                throw Error(Errc::InvalidAction, "matrices do not respect the group table");
}

namespace {

// Stacked coordinates for Z^r-valued cocycles: one block per non-identity
// element of Gamma, in element order.
struct CocycleCoords {
    std::vector<std::size_t> position; // element -> block index (identity unused)
    std::size_t blocks = 0;
};

CocycleCoords cocycle_coords(const FiniteGroup& gamma) {
    CocycleCoords cc;
    cc.position.assign(gamma.order(), 0);
    for (std::size_t e = 0; e < gamma.order(); ++e) {
        if (e == gamma.identity()) continue;
        cc.position[e] = cc.blocks++;
    }
    return cc;
}

VectorCocycle unstack(const FiniteGroup& gamma, std::size_t rank, const CocycleCoords& cc,
                      const IntVec& x) {
    VectorCocycle c(gamma.order(), IntVec(rank, Int(0)));
    for (std::size_t e = 0; e < gamma.order(); ++e) {
        if (e == gamma.identity()) continue;
        for (std::size_t i = 0; i < rank; ++i) c[e][i] = x[cc.position[e] * rank + i];
    }
    return c;
}

} // namespace

bool is_vector_cocycle(const FreeAbelianAction& action, const VectorCocycle& c) {
    const FiniteGroup& gamma = action.gamma();
    if (c.size() != gamma.order()) return false;
    for (const IntVec& v : c)
        if (v.size() != action.rank()) return false;
    if (!is_zero(c[gamma.identity()])) return false;
    for (std::size_t a = 0; a < gamma.order(); ++a)
        for (std::size_t b = 0; b < gamma.order(); ++b) {
            IntVec expect = vec_add(c[a], mat_apply(action.matrix(a), c[b]));
            if (c[gamma.mul(a, b)] != expect) return false;
        }
    return true;
}

bool is_vector_coboundary(const FreeAbelianAction& action, const VectorCocycle& c) {
    const FiniteGroup& gamma = action.gamma();
    std::size_t r = action.rank();
    std::size_t n = gamma.order();
    // Solve (sigma_a - 1) b = c(a) for all a simultaneously over Z.
    IntMat m(n * r, r);
    IntVec rhs(n * r, Int(0));
    for (std::size_t a = 0; a < n; ++a) {
        const IntMat& s = action.matrix(a);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j)
                m.at(a * r + i, j) = s.at(i, j) - (i == j ? 1 : 0);
            rhs[a * r + i] = c[a][i];
        }
    }
    return integer_solve(m, rhs).has_value();
}

H1FreeAbelian h1_free_abelian(const FreeAbelianAction& action) {
    const FiniteGroup& gamma = action.gamma();
    std::size_t r = action.rank();
    std::size_t n = gamma.order();
    H1FreeAbelian result;
    if (n == 1 || r == 0) return result;

    CocycleCoords cc = cocycle_coords(gamma);
    std::size_t vars = cc.blocks * r;

    // Cocycle conditions c(ab) - c(a) - sigma_a c(b) = 0 for a, b != identity.
    std::vector<IntVec> rows;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == gamma.identity()) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (b == gamma.identity()) continue;
            std::size_t ab = gamma.mul(a, b);
            for (std::size_t i = 0; i < r; ++i) {
                IntVec row(vars, Int(0));
                if (ab != gamma.identity()) row[cc.position[ab] * r + i] += 1;
                row[cc.position[a] * r + i] -= 1;
                const IntMat& s = action.matrix(a);
                for (std::size_t j = 0; j < r; ++j) row[cc.position[b] * r + j] -= s.at(i, j);
                rows.push_back(std::move(row));
            }
        }
    }
    IntMat eq(rows.size(), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < vars; ++j) eq.at(i, j) = rows[i][j];

    std::vector<IntVec> kernel = integer_kernel(eq);
    std::size_t k = kernel.size();
    if (k == 0) return result;
    IntMat km(vars, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < vars; ++i) km.at(i, j) = kernel[j][i];

    // Coboundaries in kernel coordinates.
    IntMat t(k, r);
    for (std::size_t j = 0; j < r; ++j) {
        IntVec cob(vars, Int(0));
        for (std::size_t a = 0; a < n; ++a) {
            if (a == gamma.identity()) continue;
            const IntMat& s = action.matrix(a);
            for (std::size_t i = 0; i < r; ++i)
                cob[cc.position[a] * r + i] = s.at(i, j) - (i == j ? 1 : 0);
        }
        std::optional<IntVec> coords = integer_solve(km, cob);
        if (!coords)
            throw Error(Errc::InvalidAction, "coboundary is not an integer cocycle combination");
        for (std::size_t i = 0; i < k; ++i) t.at(i, j) = (*coords)[i];
    }

    SmithForm sf = smith_normal_form(t);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < std::min(k, r); ++i)
        if (sf.d.at(i, i) != 0) ++nonzero;
    if (nonzero < k)
        throw Error(Errc::InvalidAction, "H1 of a finite action cannot have a free part");

    IntMat uinv = unimodular_inverse(sf.u);
    for (std::size_t i = 0; i < k; ++i) {
        const Int& d = sf.d.at(i, i);
        if (d <= 1) continue;
        result.elementary_divisors.push_back(d);
        // Generator of the Z/d factor: kernel combination U^-1 e_i.
        IntVec coords(k, Int(0));
        for (std::size_t j = 0; j < k; ++j) coords[j] = uinv.at(j, i);
        IntVec stacked = mat_apply(km, coords);
        result.representatives.push_back(unstack(gamma, r, cc, stacked));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Almost abelian machinery

AlmostAbelianGroup::AlmostAbelianGroup(FiniteGroup k, std::size_t rank, FiniteGroup q,
                                       std::vector<std::vector<std::size_t>> v_on_k,
                                       std::vector<std::vector<std::size_t>> q_on_k,
                                       std::vector<IntMat> q_on_v,
                                       std::vector<std::vector<G0Elem>> tau)
    : k_(std::move(k)), rank_(rank), q_(std::move(q)), v_on_k_(std::move(v_on_k)),
      q_on_k_(std::move(q_on_k)), q_on_v_(std::move(q_on_v)), tau_(std::move(tau)) {
    validate();
    for (const auto& t : v_on_k_) v_on_k_inv_.push_back(inverse_table(t));
}

AlmostAbelianGroup AlmostAbelianGroup::direct_product_with_free(FiniteGroup k, std::size_t rank) {
    std::vector<std::size_t> idk(k.order());
    for (std::size_t i = 0; i < idk.size(); ++i) idk[i] = i;
    FiniteGroup q = FiniteGroup::trivial();
    std::vector<std::vector<std::size_t>> v_on_k(rank, idk);
    std::vector<std::vector<std::size_t>> q_on_k{idk};
    std::vector<IntMat> q_on_v{IntMat::identity(rank)};
    std::vector<std::vector<G0Elem>> tau{{G0Elem{k.identity(), IntVec(rank, Int(0))}}};
    return AlmostAbelianGroup(std::move(k), rank, std::move(q), std::move(v_on_k),
                              std::move(q_on_k), std::move(q_on_v), std::move(tau));
}

void AlmostAbelianGroup::validate() const {
    if (v_on_k_.size() != rank_)
        throw Error(Errc::InvalidExtensionDatum, "one K-automorphism per basis vector required");
    for (const auto& t : v_on_k_)
        if (!is_automorphism_table(k_, t))
            throw Error(Errc::InvalidExtensionDatum, "Z^r does not act on K by automorphisms");
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i + 1; j < rank_; ++j)
            if (compose_tables(v_on_k_[i], v_on_k_[j]) != compose_tables(v_on_k_[j], v_on_k_[i]))
                throw Error(Errc::InvalidExtensionDatum, "basis automorphisms must commute");
    if (q_on_k_.size() != q_.order() || q_on_v_.size() != q_.order())
        throw Error(Errc::InvalidExtensionDatum, "one structure map per Q element required");
    for (const auto& t : q_on_k_)
        if (!is_automorphism_table(k_, t))
            throw Error(Errc::InvalidExtensionDatum, "Q does not act on K by automorphisms");
    for (const IntMat& m : q_on_v_) {
        if (m.rows != rank_ || m.cols != rank_)
            throw Error(Errc::InvalidExtensionDatum, "Q action matrix size mismatch");
        Int d = det(m);
        if (d != 1 && d != -1)
            throw Error(Errc::InvalidExtensionDatum, "Q action matrix is not in GL_r(Z)");
    }
    if (tau_.size() != q_.order())
        throw Error(Errc::InvalidExtensionDatum, "tau must be a |Q| x |Q| table");
    for (const auto& row : tau_) {
        if (row.size() != q_.order())
            throw Error(Errc::InvalidExtensionDatum, "tau must be a |Q| x |Q| table");
        for (const G0Elem& e : row)
            if (e.k >= k_.order() || e.v.size() != rank_)
                throw Error(Errc::InvalidExtensionDatum, "tau entry out of range");
    }
    for (std::size_t a = 0; a < q_.order(); ++a) {
        const G0Elem& left = tau_[q_.identity()][a];
        const G0Elem& right = tau_[a][q_.identity()];
        if (left.k != k_.identity() || !is_zero(left.v) || right.k != k_.identity() ||
            !is_zero(right.v))
            throw Error(Errc::InvalidExtensionDatum, "tau must be normalized along the identity");
    }

    // Associativity is validated on a deterministic element sample (the caps
    // keep the check polynomial while covering the finite layers).
    std::vector<AAElem> sample;
    std::size_t qcap = std::min<std::size_t>(q_.order(), 4);
    std::size_t kcap = std::min<std::size_t>(k_.order(), 4);
    std::vector<IntVec> vs{IntVec(rank_, Int(0))};
    if (rank_ > 0) {
        IntVec e0(rank_, Int(0));
        e0[0] = 1;
        vs.push_back(e0);
        vs.push_back(vec_neg(e0));
    }
    for (std::size_t qq = 0; qq < qcap; ++qq)
        for (std::size_t kk = 0; kk < kcap; ++kk)
            for (const IntVec& v : vs) sample.push_back(AAElem{qq, kk, v});
    for (const AAElem& a : sample)
        for (const AAElem& b : sample)
            for (const AAElem& c : sample)
                if (!(mul(mul(a, b), c) == mul(a, mul(b, c))))
                    throw Error(Errc::InvalidExtensionDatum,
                                "product rule is not associative on the sample");
    for (const AAElem& a : sample) {
        if (!(mul(a, inv(a)) == identity()) || !(mul(inv(a), a) == identity()))
            throw Error(Errc::InvalidExtensionDatum, "inverses fail on the sample");
    }
}

std::size_t AlmostAbelianGroup::v_act_on_k(const IntVec& v, std::size_t k) const {
    std::size_t cur = k;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (v[i] == 0) continue;
        // Exponent reduced modulo the order of the automorphism.
        std::size_t ord = 1;
        std::vector<std::size_t> acc = v_on_k_[i];
        std::vector<std::size_t> id(k_.order());
        for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
        while (acc != id) {
            acc = compose_tables(v_on_k_[i], acc);
            ++ord;
        }
        Int e = v[i] % Int(ord);
        if (e < 0) e += ord;
        for (Int s = 0; s < e; ++s) cur = v_on_k_[i][cur];
    }
    return cur;
}

AAElem AlmostAbelianGroup::identity() const {
    return AAElem{q_.identity(), k_.identity(), IntVec(rank_, Int(0))};
}

AlmostAbelianGroup::G0Elem AlmostAbelianGroup::g0_mul(const G0Elem& a, const G0Elem& b) const {
    return G0Elem{k_.mul(a.k, v_act_on_k(a.v, b.k)), vec_add(a.v, b.v)};
}

AlmostAbelianGroup::G0Elem AlmostAbelianGroup::g0_inv(const G0Elem& a) const {
    IntVec nv = vec_neg(a.v);
    return G0Elem{v_act_on_k(nv, k_.inv(a.k)), nv};
}

AAElem AlmostAbelianGroup::mul(const AAElem& a, const AAElem& b) const {
    // (n1, q1)(n2, q2) = (n1 . C_{q1}(n2) . tau(q1, q2), q1 q2)
    G0Elem n1{a.k, a.v};
    G0Elem cn2{q_on_k_[a.q][b.k], mat_apply(q_on_v_[a.q], b.v)};
    G0Elem n = g0_mul(g0_mul(n1, cn2), tau_[a.q][b.q]);
    return AAElem{q_.mul(a.q, b.q), n.k, n.v};
}

AAElem AlmostAbelianGroup::inv(const AAElem& a) const {
    std::size_t qi = q_.inv(a.q);
    // Solve (n, q)(n', q') = identity for n'.
    G0Elem rhs = g0_inv(g0_mul(G0Elem{a.k, a.v}, tau_[a.q][qi]));
    // n' = C_q^{-1}(rhs)
    std::vector<std::size_t> akinv = inverse_table(q_on_k_[a.q]);
    IntMat mvinv = unimodular_inverse(q_on_v_[a.q]);
    return AAElem{qi, akinv[rhs.k], mat_apply(mvinv, rhs.v)};
}

AlmostAbelianAction::AlmostAbelianAction(
    FiniteGroup gamma, AlmostAbelianGroup g, std::vector<std::vector<std::size_t>> k_maps,
    std::vector<IntMat> v_maps, std::vector<std::vector<std::size_t>> q_maps,
    std::vector<std::vector<AlmostAbelianGroup::G0Elem>> corr)
    : gamma_(std::move(gamma)), g_(std::move(g)), k_maps_(std::move(k_maps)),
      v_maps_(std::move(v_maps)), q_maps_(std::move(q_maps)), corr_(std::move(corr)) {
    std::size_t n = gamma_.order();
    if (k_maps_.size() != n || v_maps_.size() != n || q_maps_.size() != n || corr_.size() != n)
        throw Error(Errc::InvalidAction, "one structure tuple per group element required");
    for (const auto& t : k_maps_)
        if (!is_automorphism_table(g_.k_group(), t))
            throw Error(Errc::InvalidAction, "gamma does not act on K by automorphisms");
    for (const auto& t : q_maps_)
        if (!is_automorphism_table(g_.q_group(), t))
            throw Error(Errc::InvalidAction, "gamma does not act on Q by automorphisms");
    for (const IntMat& m : v_maps_) {
        if (m.rows != g_.rank() || m.cols != g_.rank())
            throw Error(Errc::InvalidAction, "v map size mismatch");
        Int d = det(m);
        if (d != 1 && d != -1) throw Error(Errc::InvalidAction, "v map is not in GL_r(Z)");
    }
    for (const auto& row : corr_) {
        if (row.size() != g_.q_group().order())
            throw Error(Errc::InvalidAction, "correction table size mismatch");
        const auto& at_id = row[g_.q_group().identity()];
        if (at_id.k != g_.k_group().identity() || !is_zero(at_id.v))
            throw Error(Errc::InvalidAction, "correction must be normalized at the identity");
    }
    std::size_t e = gamma_.identity();
    if (v_maps_[e] != IntMat::identity(g_.rank()))
        throw Error(Errc::InvalidAction, "identity must act trivially");
    for (std::size_t x = 0; x < g_.k_group().order(); ++x)
        if (k_maps_[e][x] != x) throw Error(Errc::InvalidAction, "identity must act trivially");
    for (std::size_t x = 0; x < g_.q_group().order(); ++x)
        if (q_maps_[e][x] != x) throw Error(Errc::InvalidAction, "identity must act trivially");

    // Sampled validation: each sigma_g is a homomorphism and sigma is an
    // action (sigma_{gh} = sigma_g sigma_h).
    std::vector<AAElem> sample;
    std::size_t qcap = std::min<std::size_t>(g_.q_group().order(), 3);
    std::size_t kcap = std::min<std::size_t>(g_.k_group().order(), 3);
    std::vector<IntVec> vs{IntVec(g_.rank(), Int(0))};
    if (g_.rank() > 0) {
        IntVec e0(g_.rank(), Int(0));
        e0[0] = 1;
        vs.push_back(e0);
    }
    for (std::size_t qq = 0; qq < qcap; ++qq)
        for (std::size_t kk = 0; kk < kcap; ++kk)
            for (const IntVec& v : vs) sample.push_back(AAElem{qq, kk, v});
    for (std::size_t a = 0; a < n; ++a) {
        for (const AAElem& x : sample)
            for (const AAElem& y : sample)
                if (!(act(a, g_.mul(x, y)) == g_.mul(act(a, x), act(a, y))))
                    throw Error(Errc::InvalidAction, "sigma value is not a homomorphism");
        for (std::size_t b = 0; b < n; ++b)
            for (const AAElem& x : sample)
                if (!(act(gamma_.mul(a, b), x) == act(a, act(b, x))))
                    throw Error(Errc::InvalidAction, "sigma is not an action");
    }
}

AlmostAbelianAction AlmostAbelianAction::plain(FiniteGroup gamma, AlmostAbelianGroup g,
                                               std::vector<std::vector<std::size_t>> k_maps,
                                               std::vector<IntMat> v_maps) {
    std::size_t n = gamma.order();
    std::vector<std::size_t> idq(g.q_group().order());
    for (std::size_t i = 0; i < idq.size(); ++i) idq[i] = i;
    std::vector<std::vector<std::size_t>> q_maps(n, idq);
    std::vector<std::vector<AlmostAbelianGroup::G0Elem>> corr(
        n, std::vector<AlmostAbelianGroup::G0Elem>(
               g.q_group().order(),
               AlmostAbelianGroup::G0Elem{g.k_group().identity(), IntVec(g.rank(), Int(0))}));
    return AlmostAbelianAction(std::move(gamma), std::move(g), std::move(k_maps),
                               std::move(v_maps), std::move(q_maps), std::move(corr));
}

AAElem AlmostAbelianAction::act(std::size_t gamma_elt, const AAElem& x) const {
    // sigma(n s(q)) = (t(k), N v) * (corr(q), pi(q))
    AAElem part1{g_.q_group().identity(), k_maps_[gamma_elt][x.k],
                 mat_apply(v_maps_[gamma_elt], x.v)};
    const auto& cr = corr_[gamma_elt][x.q];
    AAElem part2{q_maps_[gamma_elt][x.q], cr.k, cr.v};
    return g_.mul(part1, part2);
}

bool is_aa_cocycle(const AlmostAbelianAction& action, const AACocycle& c) {
    const FiniteGroup& gamma = action.gamma();
    if (c.size() != gamma.order()) return false;
    if (!(c[gamma.identity()] == action.coeff().identity())) return false;
    for (std::size_t a = 0; a < gamma.order(); ++a)
        for (std::size_t b = 0; b < gamma.order(); ++b) {
            AAElem expect = action.coeff().mul(c[a], action.act(a, c[b]));
            if (!(c[gamma.mul(a, b)] == expect)) return false;
        }
    return true;
}

namespace {

std::vector<Int> flatten_aa(const AACocycle& c) {
    std::vector<Int> out;
    for (const AAElem& e : c) {
        out.push_back(Int(e.q));
        out.push_back(Int(e.k));
        for (const Int& x : e.v) out.push_back(x);
    }
    return out;
}

// Odometer over [-bound, bound]^dims; calls fn for each point.
template <typename Fn>
void scan_box(std::size_t dims, const Int& bound, Fn&& fn) {
    IntVec v(dims, -bound);
    if (dims == 0) {
        fn(v);
        return;
    }
    while (true) {
        fn(v);
        std::size_t k = dims;
        bool done = true;
        while (k-- > 0) {
            if (v[k] < bound) {
                ++v[k];
                for (std::size_t j = k + 1; j < dims; ++j) v[j] = -bound;
                done = false;
                break;
            }
        }
        if (done) return;
    }
}

// Complete a candidate cocycle from generator values; returns false on
// conflict or if verification fails.
bool complete_aa_cocycle(const AlmostAbelianAction& action,
                         const std::vector<std::size_t>& gens,
                         const std::vector<AAElem>& gen_values, AACocycle& c) {
    const FiniteGroup& gamma = action.gamma();
    std::size_t n = gamma.order();
    std::vector<bool> known(n, false);
    c.assign(n, action.coeff().identity());
    known[gamma.identity()] = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (known[gens[i]] && !(c[gens[i]] == gen_values[i])) return false;
        c[gens[i]] = gen_values[i];
        known[gens[i]] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (!known[a]) continue;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                std::size_t s = gens[i];
                if (!known[s]) continue;
                std::size_t as = gamma.mul(a, s);
                AAElem val = action.coeff().mul(c[a], action.act(a, c[s]));
                if (!known[as]) {
                    c[as] = val;
                    known[as] = true;
                    grew = true;
                } else if (!(c[as] == val)) {
                    return false;
                }
            }
        }
    }
    if (std::find(known.begin(), known.end(), false) != known.end()) return false;
    return is_aa_cocycle(action, c);
}

} // namespace

Int h1_cardinality_bound(const Int& gamma_order, const Int& g0_index, const Int& k_order,
                         const Int& rank) {
    if (gamma_order < 1 || g0_index < 1 || k_order < 1 || rank < 0)
        throw Error(Errc::MalformedInput, "bound arguments must be positive");
    Int nm1 = gamma_order - 1;
    return int_pow(g0_index, nm1) * int_pow(k_order, nm1) * int_pow(gamma_order, rank * gamma_order);
}

H1AlmostAbelian h1_almost_abelian(const AlmostAbelianAction& action,
                                  const AASearchBounds& bounds) {
    const FiniteGroup& gamma = action.gamma();
    const AlmostAbelianGroup& g = action.coeff();
    const FiniteGroup& q = g.q_group();
    const FiniteGroup& kg = g.k_group();
    std::size_t r = g.rank();
    std::size_t n = gamma.order();

    H1AlmostAbelian result;
    result.upper_bound =
        h1_cardinality_bound(Int(n), Int(q.order()), Int(kg.order()), Int(r));

    // (i) classes on the finite quotient Q.
    std::vector<std::vector<std::size_t>> q_sigma;
    for (std::size_t a = 0; a < n; ++a) q_sigma.push_back({});
    for (std::size_t a = 0; a < n; ++a) {
        q_sigma[a].resize(q.order());
        for (std::size_t x = 0; x < q.order(); ++x) q_sigma[a][x] = action.q_act(a, x);
    }
    FiniteAction quotient_action(gamma, q, q_sigma);
    std::vector<FiniteCocycle> qreps = h1_finite(quotient_action);
    result.quotient_class_count = qreps.size();

    std::vector<std::size_t> gens = gamma.generators();

    // Whether the coefficient group is abelian (then equivalence is an exact
    // coboundary test instead of a bounded conjugator search).
    bool abelian = q.order() == 1 && kg.is_abelian();
    if (abelian) {
        for (std::size_t i = 0; i < r && abelian; ++i) {
            IntVec e(r, Int(0));
            e[i] = 1;
            for (std::size_t x = 0; x < kg.order(); ++x)
                if (g.v_act_on_k(e, x) != x) { abelian = false; break; }
        }
    }

    std::vector<AACocycle> reps;
    std::vector<std::size_t> rep_class;

    for (std::size_t qi = 0; qi < qreps.size(); ++qi) {
        const FiniteCocycle& cbar = qreps[qi];

        // (ii) lift the quotient class into G by bounded search.
        std::optional<AACocycle> lift;
        {
            std::size_t m = gens.size();
            std::vector<std::size_t> kassign(m, 0);
            bool done_all = m == 0;
            bool first_pass = true;
            while (!lift && (first_pass || !done_all)) {
                first_pass = false;
                bool found = false;
                // flatten the v search into one odometer of m*r coordinates
                scan_box(m * r, bounds.lift_component_bound, [&](const IntVec& flat) {
                    if (found) return;
                    std::vector<AAElem> values(m);
                    for (std::size_t i = 0; i < m; ++i) {
                        IntVec v(r);
                        for (std::size_t j = 0; j < r; ++j) v[j] = flat[i * r + j];
                        values[i] = AAElem{cbar[gens[i]], kassign[i], v};
                    }
                    AACocycle c;
                    if (complete_aa_cocycle(action, gens, values, c)) {
                        // the completion must lie over cbar
                        bool over = true;
                        for (std::size_t a = 0; a < n; ++a)
                            if (c[a].q != cbar[a]) { over = false; break; }
                        if (over) {
                            lift = c;
                            found = true;
                        }
                    }
                });
                if (m == 0) break;
                // advance k odometer
                std::size_t i = m;
                done_all = true;
                while (i-- > 0) {
                    if (kassign[i] + 1 < kg.order()) {
                        ++kassign[i];
                        for (std::size_t j = i + 1; j < m; ++j) kassign[j] = 0;
                        done_all = false;
                        break;
                    }
                }
            }
        }
        if (!lift) {
            if (r == 0) continue; // exhaustive search: the class is not in the image of p
            // With free directions the bounded search proves nothing either
            // way; report the exhaustion instead of guessing an empty fiber.
            result.certified = false;
            result.caveats.push_back("quotient class " + std::to_string(qi) +
                                     ": LiftSearchExhausted within component bound " +
                                     bounds.lift_component_bound.str());
            continue;
        }
        const AACocycle& c = *lift;

        // Twisted action on Z^r: conjugation by c(a) induces M_{q(c(a))} there,
        // composed with the v-part of sigma.
        std::vector<IntMat> tmats;
        for (std::size_t a = 0; a < n; ++a) {
            IntMat qv(r, r);
            for (std::size_t j = 0; j < r; ++j) {
                IntVec e(r, Int(0));
                e[j] = 1;
                AAElem x{q.identity(), kg.identity(), e};
                AAElem conj = g.mul(g.mul(c[a], x), g.inv(c[a]));
                for (std::size_t i2 = 0; i2 < r; ++i2) qv.at(i2, j) = conj.v[i2];
            }
            tmats.push_back(mat_mul(qv, action.v_matrix(a)));
        }
        FreeAbelianAction twisted_z(gamma, r, tmats);
        H1FreeAbelian zpart = h1_free_abelian(twisted_z);

        // Enumerate the finite abelian group of Z^r classes.
        std::vector<VectorCocycle> zreps;
        {
            std::size_t cnt = zpart.elementary_divisors.size();
            std::vector<Int> idx(cnt, Int(0));
            bool done = false;
            while (!done) {
                VectorCocycle z(n, IntVec(r, Int(0)));
                for (std::size_t t2 = 0; t2 < cnt; ++t2)
                    for (std::size_t a = 0; a < n; ++a)
                        z[a] = vec_add(z[a], vec_scale(idx[t2], zpart.representatives[t2][a]));
                zreps.push_back(std::move(z));
                done = true;
                std::size_t t2 = cnt;
                while (t2-- > 0) {
                    if (idx[t2] + 1 < zpart.elementary_divisors[t2]) {
                        ++idx[t2];
                        for (std::size_t u = t2 + 1; u < cnt; ++u) idx[u] = 0;
                        done = false;
                        break;
                    }
                }
            }
        }

        // (iii) K-layer lifts per Z^r class, assembled into G-cocycles.
        std::vector<AACocycle> fiber;
        for (const VectorCocycle& z : zreps) {
            std::size_t m = gens.size();
            std::vector<std::size_t> kassign(m, 0);
            while (true) {
                // candidate G-cocycle values on generators: (k, z(s)) * c(s)
                std::vector<AAElem> values(m);
                for (std::size_t i = 0; i < m; ++i) {
                    AAElem d{q.identity(), kassign[i], z[gens[i]]};
                    values[i] = g.mul(d, c[gens[i]]);
                }
                AACocycle e;
                if (m == 0) {
                    e = c;
                    if (is_aa_cocycle(action, e)) fiber.push_back(e);
                } else if (complete_aa_cocycle(action, gens, values, e)) {
                    fiber.push_back(e);
                }
                if (m == 0) break;
                std::size_t i = m;
                bool done = true;
                while (i-- > 0) {
                    if (kassign[i] + 1 < kg.order()) {
                        ++kassign[i];
                        for (std::size_t j = i + 1; j < m; ++j) kassign[j] = 0;
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
        }
        std::sort(fiber.begin(), fiber.end(), [](const AACocycle& a, const AACocycle& b) {
            return flatten_aa(a) < flatten_aa(b);
        });
        fiber.erase(std::unique(fiber.begin(), fiber.end()), fiber.end());

        // (iv) deduplicate the fiber.
        std::vector<std::size_t> parent(fiber.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto equivalent_bounded = [&](const AACocycle& x, const AACocycle& y) {
            Int comp = bounds.conjugator_margin;
            for (const AACocycle* cc : {&x, &y})
                for (const AAElem& el : *cc)
                    for (const Int& vv : el.v) comp = std::max(comp, int_abs(vv) + bounds.conjugator_margin);
            bool eq = false;
            for (std::size_t qb = 0; qb < q.order() && !eq; ++qb)
                for (std::size_t kb = 0; kb < kg.order() && !eq; ++kb)
                    scan_box(r, comp, [&](const IntVec& vb) {
                        if (eq) return;
                        AAElem b{qb, kb, vb};
                        AAElem binv = g.inv(b);
                        bool match = true;
                        for (std::size_t a = 0; a < n && match; ++a) {
                            AAElem lhs = g.mul(g.mul(binv, x[a]), action.act(a, b));
                            match = lhs == y[a];
                        }
                        if (match) eq = true;
                    });
            return eq;
        };
        auto equivalent_abelian = [&](const AACocycle& x, const AACocycle& y) {
            // difference must be a coboundary: k-part by exhaustive b in K,
            // v-part by an exact integer solve.
            VectorCocycle diff(n, IntVec(r, Int(0)));
            for (std::size_t a = 0; a < n; ++a) diff[a] = vec_sub(y[a].v, x[a].v);
            if (!is_vector_coboundary(twisted_z, diff)) return false;
            for (std::size_t kb = 0; kb < kg.order(); ++kb) {
                bool match = true;
                for (std::size_t a = 0; a < n && match; ++a) {
                    std::size_t shift = kg.mul(kg.inv(kb), action.k_act(a, kb));
                    match = y[a].k == kg.mul(x[a].k, shift);
                }
                if (match) return true;
            }
            return false;
        };
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j) {
                if (find(i) == find(j)) continue;
                bool eq = abelian ? equivalent_abelian(fiber[i], fiber[j])
                                  : equivalent_bounded(fiber[i], fiber[j]);
                if (eq) parent[std::max(find(i), find(j))] = std::min(find(i), find(j));
            }
        std::size_t class_count = 0;
        for (std::size_t i = 0; i < fiber.size(); ++i) {
            if (find(i) != i) continue;
            ++class_count;
            reps.push_back(fiber[i]);
            rep_class.push_back(qi);
        }
        if (!abelian && r > 0 && class_count > 1) {
            result.certified = false;
            result.caveats.push_back("fiber over quotient class " + std::to_string(qi) +
                                     ": bounded conjugator search; classes reported distinct");
        }
    }

    // Trivial class first, then canonical order.
    AACocycle trivial(n, g.identity());
    std::vector<std::size_t> order(reps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        bool ta = reps[a] == trivial, tb = reps[b] == trivial;
        if (ta != tb) return ta;
        return flatten_aa(reps[a]) < flatten_aa(reps[b]);
    });
    for (std::size_t i : order) {
        result.representatives.push_back(reps[i]);
        result.quotient_class.push_back(rep_class[i]);
    }
    return result;
}

} // namespace latcone
