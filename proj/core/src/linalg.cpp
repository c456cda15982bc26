#include "latcone/linalg.hpp"

#include <algorithm>

namespace latcone {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw Error(Errc::DimensionMismatch, "matrix product shape");
    IntMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

IntMat mat_transpose(const IntMat& x) {
    IntMat r(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
    if (m.cols != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape");
    IntVec r(m.rows, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

RatVec mat_apply(const IntMat& m, const RatVec& v) {
    if (m.cols != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape");
    RatVec r(m.rows, Rat(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += Rat(m.at(i, j)) * v[j];
    return r;
}

Int dot(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "dot product length");
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rat dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "dot product length");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rat dot(const IntVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "dot product length");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += Rat(x[i]) * y[i];
    return s;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

IntVec vec_add(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "vector sum length");
    IntVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

IntVec vec_sub(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "vector difference length");
    IntVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

IntVec vec_neg(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IntVec vec_scale(const Int& c, const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

RatVec vec_add(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "vector sum length");
    RatVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

RatVec vec_scale(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

IntVec to_int(const RatVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1)
            throw Error(Errc::MalformedInput, "expected an integral vector");
        r[i] = numerator(v[i]);
    }
    return r;
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return denominator(x) == 1; });
}

IntVec primitive(const RatVec& v) {
    if (is_zero(v)) throw Error(Errc::ZeroGenerator, "primitive of the zero vector");
    Int lcm = 1;
    for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, Int(denominator(x)));
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = Int(numerator(v[i])) * (lcm / Int(denominator(v[i])));
    return primitive(w);
}

IntVec primitive(const IntVec& v) {
    if (is_zero(v)) throw Error(Errc::ZeroGenerator, "primitive of the zero vector");
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

bool lex_less(const IntVec& x, const IntVec& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

Int det(const IntMat& m) {
    if (m.rows != m.cols) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && w.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

RatMat to_rat_mat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

} // namespace

std::size_t rat_rank(const RatMat& m) {
    RatMat w = m;
    return echelon(w).size();
}

std::size_t rat_rank_int(const IntMat& m) { return rat_rank(to_rat_mat(m)); }

std::optional<RatVec> rat_solve(const RatMat& m, const RatVec& b) {
    if (m.rows != b.size()) throw Error(Errc::DimensionMismatch, "solve shape");
    RatMat aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<std::size_t> pivots = echelon(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    RatVec x(m.cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
    return x;
}

std::vector<IntVec> rat_nullspace(const RatMat& m) {
    RatMat w = m;
    std::vector<std::size_t> pivots = echelon(w);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<IntVec> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(r, free);
        basis.push_back(primitive(v));
    }
    return basis;
}

std::vector<IntVec> rat_nullspace_int(const IntMat& m) { return rat_nullspace(to_rat_mat(m)); }

RatMat rat_inverse(const RatMat& m) {
    if (m.rows != m.cols) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return RatMat(0, 0);
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots = echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw Error(Errc::Degenerate, "matrix is singular");
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

RatMat rat_inverse_int(const IntMat& m) { return rat_inverse(to_rat_mat(m)); }

IntMat unimodular_inverse(const IntMat& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw Error(Errc::NotAnIsometry, "matrix is not unimodular");
    RatMat inv = rat_inverse_int(m);
    IntMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < inv.a.size(); ++i) {
        if (denominator(inv.a[i]) != 1)
            throw Error(Errc::NotAnIsometry, "unimodular inverse is not integral");
        r.a[i] = numerator(inv.a[i]);
    }
    return r;
}

Inertia symmetric_inertia(const IntMat& gram) {
    if (gram.rows != gram.cols) throw Error(Errc::DimensionMismatch, "inertia of non-square matrix");
    std::size_t n = gram.rows;
    RatMat m = to_rat_mat(gram);
    Inertia inertia;
    for (std::size_t k = 0; k < n; ++k) {
        if (m.at(k, k) == 0) {
            // Prefer a later nonzero diagonal entry; otherwise manufacture one
            // from an off-diagonal entry (valid over Q, characteristic 0).
            std::size_t swap_with = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, i) != 0) { swap_with = i; break; }
            if (swap_with == n) {
                std::size_t oi = n, oj = n;
                for (std::size_t i = k; i < n && oi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (m.at(i, j) != 0) { oi = i; oj = j; break; }
                if (oi == n) {
                    inertia.zero += n - k;
                    return inertia;
                }
                for (std::size_t j = 0; j < n; ++j) m.at(oi, j) += m.at(oj, j);
                for (std::size_t i = 0; i < n; ++i) m.at(i, oi) += m.at(i, oj);
                swap_with = oi;
            }
            if (swap_with != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_with, j));
                for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, swap_with));
            }
        }
        Rat pivot = m.at(k, k);
        if (pivot > 0) ++inertia.positive;
        else ++inertia.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / pivot;
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            for (std::size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
        }
    }
    return inertia;
}

SmithForm smith_normal_form(const IntMat& a) {
    SmithForm s;
    s.d = a;
    s.u = IntMat::identity(a.rows);
    s.v = IntMat::identity(a.cols);
    IntMat& d = s.d;
    std::size_t n = a.rows, m = a.cols;

    auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {
        // row_i -= q * row_k, mirrored in u
        for (std::size_t j = 0; j < m; ++j) d.at(i, j) -= q * d.at(k, j);
        for (std::size_t j = 0; j < n; ++j) s.u.at(i, j) -= q * s.u.at(k, j);
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
        for (std::size_t i = 0; i < n; ++i) d.at(i, j) -= q * d.at(i, k);
        for (std::size_t i = 0; i < m; ++i) s.v.at(i, j) -= q * s.v.at(i, k);
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < m; ++j) std::swap(d.at(i, j), d.at(k, j));
        for (std::size_t j = 0; j < n; ++j) std::swap(s.u.at(i, j), s.u.at(k, j));
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < n; ++i) std::swap(d.at(i, j), d.at(i, k));
        for (std::size_t i = 0; i < m; ++i) std::swap(s.v.at(i, j), s.v.at(i, k));
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t j = 0; j < m; ++j) d.at(i, j) = -d.at(i, j);
        for (std::size_t j = 0; j < n; ++j) s.u.at(i, j) = -s.u.at(i, j);
    };

    std::size_t t = 0;
    while (t < n && t < m) {
        // Locate the least nonzero entry of the trailing block.
        std::size_t pi = n, pj = m;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j)
                if (d.at(i, j) != 0 &&
                    (pi == n || int_abs(d.at(i, j)) < int_abs(d.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == n) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (d.at(i, t) == 0) continue;
            Int q = d.at(i, t) / d.at(t, t);
            row_op(i, t, q);
            if (d.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < m; ++j) {
            if (d.at(t, j) == 0) continue;
            Int q = d.at(t, j) / d.at(t, t);
            col_op(j, t, q);
            if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders exist; re-pick the pivot

        // Divisibility fix-up: pivot must divide the trailing block.
        bool divides = true;
        for (std::size_t i = t + 1; i < n && divides; ++i)
            for (std::size_t j = t + 1; j < m; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_op(t, i, Int(-1)); // row_t += row_i
                    divides = false;
                    break;
                }
        if (!divides) continue;

        if (d.at(t, t) < 0) row_negate(t);
        ++t;
    }
    return s;
}

std::vector<Int> invariant_factors(const IntMat& a) {
    SmithForm s = smith_normal_form(a);
    std::vector<Int> f;
    for (std::size_t i = 0; i < std::min(a.rows, a.cols); ++i)
        if (s.d.at(i, i) != 0) f.push_back(s.d.at(i, i));
    return f;
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
    SmithForm s = smith_normal_form(a);
    std::vector<IntVec> basis;
    for (std::size_t j = 0; j < a.cols; ++j) {
        bool zero_col = j >= a.rows || s.d.at(j, j) == 0;
        if (!zero_col) continue;
        IntVec v(a.cols);
        for (std::size_t i = 0; i < a.cols; ++i) v[i] = s.v.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<IntVec> integer_solve(const IntMat& a, const IntVec& b) {
    if (a.rows != b.size()) throw Error(Errc::DimensionMismatch, "solve shape");
    SmithForm s = smith_normal_form(a);
    IntVec c = mat_apply(s.u, b);
    IntVec y(a.cols, Int(0));
    for (std::size_t i = 0; i < a.rows; ++i) {
        Int di = (i < a.cols) ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            y[i] = c[i] / di;
        }
    }
    return mat_apply(s.v, y);
}

} // namespace latcone
