#include "latcone/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latcone {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    std::size_t n = table_.size();
    if (n == 0) throw Error(Errc::InvalidGroupTable, "empty multiplication table");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error(Errc::InvalidGroupTable, "table is not square");
        for (std::size_t v : row)
            if (v >= n) throw Error(Errc::InvalidGroupTable, "table entry out of range");
    }
    // identity
    identity_ = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) { identity_ = e; break; }
    }
    if (identity_ == n) throw Error(Errc::InvalidGroupTable, "no identity element");
    // inverses
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) { inverse_[a] = b; break; }
        if (inverse_[a] == n) throw Error(Errc::InvalidGroupTable, "element without inverse");
    }
    // associativity
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw Error(Errc::InvalidGroupTable, "multiplication is not associative");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw Error(Errc::InvalidGroupTable, "cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0) throw Error(Errc::InvalidGroupTable, "dihedral group needs n >= 1");
    // Elements 0..n-1 rotations r^i, n..2n-1 reflections s r^i.
    std::size_t order = 2 * n;
    auto enc = [n](bool flip, std::size_t rot) { return (flip ? n : 0) + rot; };
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            bool fa = a >= n, fb = b >= n;
            std::size_t ra = a % n, rb = b % n;
            // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb +- ra)
            std::size_t rot = fb ? (rb + n - ra % n) % n : (ra + rb) % n;
            t[a][b] = enc(fa != fb, rot);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
    auto enc = [nb](std::size_t x, std::size_t y) { return x * nb + y; };
    for (std::size_t x1 = 0; x1 < na; ++x1)
        for (std::size_t y1 = 0; y1 < nb; ++y1)
            for (std::size_t x2 = 0; x2 < na; ++x2)
                for (std::size_t y2 = 0; y2 < nb; ++y2)
                    t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() { return dihedral(3); }

bool FiniteGroup::is_abelian() const {
    std::size_t n = order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<std::size_t> FiniteGroup::generators() const {
    std::size_t n = order();
    std::vector<std::size_t> gens;
    std::set<std::size_t> closed{identity_};
    auto close = [&](std::set<std::size_t>& s) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::size_t> cur(s.begin(), s.end());
            for (std::size_t a : cur)
                for (std::size_t b : cur)
                    if (s.insert(table_[a][b]).second) grew = true;
        }
    };
    while (closed.size() < n) {
        for (std::size_t g = 0; g < n; ++g) {
            if (closed.count(g)) continue;
            gens.push_back(g);
            closed.insert(g);
            close(closed);
            break;
        }
    }
    return gens;
}

} // namespace latcone
