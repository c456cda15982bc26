#include "latcone/coxeter.hpp"

#include <algorithm>
#include <map>

namespace latcone {

int pair_order(const Int& beta, const Int& alpha) {
    if (beta >= 0) throw Error(Errc::MalformedInput, "self-pairing must be negative");
    Int a = int_abs(alpha);
    if (a == 0) return 2;
    if (beta == -2 * a) return 3;
    return kInfiniteOrder;
}

int pair_order(const Lattice& lattice, const Root& e1, const Root& e2) {
    if (e1.vector() == e2.vector() || e1.vector() == vec_neg(e2.vector()))
        throw Error(Errc::EqualRoots, "pair order needs two distinct root lines");
    if (e1.norm() != e2.norm())
        throw Error(Errc::UnequalNorms, "pair order needs equal self-pairings");
    return pair_order(e1.norm(), lattice.inner(e1.vector(), e2.vector()));
}

std::vector<RootOrbit> root_orbits(const Lattice& lattice, const std::vector<IntVec>& roots,
                                   const LatticeAction& action) {
    std::vector<Root> normalized;
    std::map<IntVec, std::size_t> index;
    for (const IntVec& v : roots) {
        Root r(lattice, primitive(v));
        if (index.count(r.vector()) || index.count(vec_neg(r.vector())))
            throw Error(Errc::EqualRoots, "duplicate root line in input");
        index[r.vector()] = normalized.size();
        normalized.push_back(std::move(r));
    }
    auto locate = [&](const IntVec& image) -> std::size_t {
        auto it = index.find(image);
        if (it != index.end()) return it->second;
        it = index.find(vec_neg(image));
        if (it != index.end()) return it->second;
        throw Error(Errc::ActionDoesNotPreserveRoots,
                    "action maps a root outside the root set");
    };
    std::vector<std::size_t> parent(normalized.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        for (std::size_t e = 0; e < action.order(); ++e) {
            std::size_t j = locate(primitive(mat_apply(action.matrix(e), normalized[i].vector())));
            std::size_t a = find(i), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < normalized.size(); ++i) groups[find(i)].push_back(i);
    std::vector<RootOrbit> orbits;
    for (auto& [root_idx, members] : groups) {
        RootOrbit orbit;
        orbit.beta = normalized[members.front()].norm();
        for (std::size_t m : members) {
            if (normalized[m].norm() != orbit.beta)
                throw Error(Errc::UnequalNorms, "orbit mixes self-pairings");
            orbit.roots.push_back(normalized[m]);
        }
        std::sort(orbit.roots.begin(), orbit.roots.end(),
                  [](const Root& a, const Root& b) { return lex_less(a.vector(), b.vector()); });
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

OrbitReport analyze_orbit(const Lattice& lattice, const RootOrbit& orbit) {
    OrbitReport report;
    std::size_t m = orbit.roots.size();
    if (m == 0) throw Error(Errc::EmptyInput, "empty orbit");
    std::vector<IntVec> vecs;
    for (const Root& r : orbit.roots) vecs.push_back(r.vector());

    std::vector<std::vector<Int>> pair(m, std::vector<Int>(m, Int(0)));
    bool all_zero = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            pair[i][j] = pair[j][i] = lattice.inner(vecs[i], vecs[j]);
            if (pair[i][j] != 0) all_zero = false;
        }

    auto product_of = [&](const std::vector<std::size_t>& word) {
        IntMat acc = IntMat::identity(lattice.rank());
        for (std::size_t idx : word) acc = mat_mul(acc, reflection_matrix(lattice, orbit.roots[idx]));
        return acc;
    };

    if (all_zero) {
        report.finite = true;
        report.kase = OrbitCase::A;
        IntVec sum(lattice.rank(), Int(0));
        std::vector<std::size_t> word;
        for (std::size_t i = 0; i < m; ++i) {
            sum = vec_add(sum, vecs[i]);
            word.push_back(i);
        }
        report.composite_root = sum;
        report.longest_element = product_of(word);
        return report;
    }

    // Case B candidate: every root has exactly one partner with nonzero
    // pairing, and beta = -2 alpha on each matched pair (alpha taken positive;
    // a pair presented with the opposite sign has its second member flipped,
    // which changes nothing else because cross pairings vanish).
    std::vector<std::size_t> partner(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || pair[i][j] == 0) continue;
            if (partner[i] != m) return report; // more than one neighbour: infinite
            partner[i] = j;
        }
        if (partner[i] == m) return report; // isolated vertex in a mixed orbit
    }
    for (std::size_t i = 0; i < m; ++i)
        if (partner[partner[i]] != i) return report;

    std::vector<bool> flip(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = partner[i];
        if (i > j) continue;
        Int alpha = pair[i][j];
        if (alpha < 0) { flip[j] = true; alpha = -alpha; }
        if (orbit.beta != -2 * alpha) return report;
        report.matching.emplace_back(i, j);
    }

    report.finite = true;
    report.kase = OrbitCase::B;
    IntVec sum(lattice.rank(), Int(0));
    for (std::size_t i = 0; i < m; ++i)
        sum = vec_add(sum, flip[i] ? vec_neg(vecs[i]) : vecs[i]);
    report.composite_root = sum;
    IntMat longest = IntMat::identity(lattice.rank());
    for (auto [i, j] : report.matching) {
        IntMat ri = reflection_matrix(lattice, orbit.roots[i]);
        IntMat rj = reflection_matrix(lattice, orbit.roots[j]);
        longest = mat_mul(longest, mat_mul(mat_mul(ri, rj), ri));
    }
    report.longest_element = longest;
    return report;
}

std::vector<IntMat> invariant_generators(const Lattice& lattice,
                                         const std::vector<RootOrbit>& orbits) {
    std::vector<IntMat> gens;
    for (const RootOrbit& orbit : orbits) {
        OrbitReport report = analyze_orbit(lattice, orbit);
        if (report.finite) gens.push_back(*report.longest_element);
    }
    return gens;
}

bool invariant_chamber_test(const PositiveConeRef& p, const IntVec& lambda,
                            const std::vector<RootOrbit>& orbits) {
    if (!in_positive_cone(p, lambda))
        throw Error(Errc::NotInPositiveCone, "class is not in the positive cone");
    for (const RootOrbit& orbit : orbits) {
        OrbitReport report = analyze_orbit(p.lattice(), orbit);
        if (!report.finite) continue; // infinite orbits contribute no walls
        for (const Root& r : orbit.roots)
            if (p.lattice().inner(lambda, r.vector()) < 0) return false;
    }
    return true;
}

} // namespace latcone
