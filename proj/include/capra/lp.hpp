#pragma once

#include "capra/vector.hpp"

#include <cstddef>
#include <vector>

namespace capra {

/// Phase-I simplex feasibility for  A x = b, x >= 0, with Bland's rule.
/// On success `solution` holds x; on failure `farkas` holds y with
/// y^T A <= 0 componentwise and y^T b > 0 (both re-checked before return).
template <class T>
struct FeasibilityResult {
    bool feasible = false;
    std::vector<T> solution;
    std::vector<T> farkas;
};

namespace detail {

template <class T>
int sgn(const T& v, const T& eps) {
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

}  // namespace detail

/// columns[j] is the j-th column of A (length m = b.size()).
/// eps = 0 gives exact pivoting over rationals.
template <class T>
FeasibilityResult<T> lp_feasible(const std::vector<std::vector<T>>& columns, const std::vector<T>& rhs,
                                 const T& eps = T(0)) {
    const std::size_t m = rhs.size();
    const std::size_t n = columns.size();
    for (const auto& c : columns)
        if (c.size() != m) throw DimensionMismatchError("lp_feasible: column length mismatch");

    // Row tableau over n structural + m artificial columns, RHS made nonnegative.
    std::vector<int> row_sign(m, 1);
    std::vector<std::vector<T>> tab(m, std::vector<T>(n + m, T(0)));
    std::vector<T> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        row_sign[i] = detail::sgn(rhs[i], eps) < 0 ? -1 : 1;
        b[i] = row_sign[i] < 0 ? T(-rhs[i]) : rhs[i];
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = row_sign[i] < 0 ? T(-columns[j][i]) : columns[j][i];
        tab[i][n + i] = T(1);
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Phase-I objective: minimize the sum of artificials. Maintain reduced
    // costs z[j] = c_j - sum over basic rows of c_basis * tab, with c = (0..0,1..1).
    std::vector<T> z(n + m, T(0));
    T obj(0);
    for (std::size_t j = 0; j < n + m; ++j) {
        T s(0);
        for (std::size_t i = 0; i < m; ++i) s += tab[i][j];
        z[j] = (j >= n ? T(1) : T(0)) - s;
    }
    for (std::size_t i = 0; i < m; ++i) obj += b[i];

    for (;;) {
        // Bland: entering = lowest index with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (detail::sgn(z[j], eps) < 0) { enter = j; break; }
        }
        if (enter == n + m) break;

        // Ratio test; Bland tie-break on lowest basis index.
        std::size_t leave = m;
        T best(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (detail::sgn(tab[i][enter], eps) <= 0) continue;
            T ratio = b[i] / tab[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) break;  // unbounded never happens in Phase-I; defensive exit

        // Pivot on (leave, enter).
        T piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        b[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            T f = tab[i][enter];
            if (detail::sgn(f, T(0)) == 0) continue;
            for (std::size_t j = 0; j < n + m; ++j) tab[i][j] -= f * tab[leave][j];
            b[i] -= f * b[leave];
        }
        T zf = z[enter];
        for (std::size_t j = 0; j < n + m; ++j) z[j] -= zf * tab[leave][j];
        obj += zf * b[leave];
        basis[leave] = enter;
    }

    FeasibilityResult<T> res;
    if (detail::sgn(obj, eps) == 0) {
        res.feasible = true;
        res.solution.assign(n, T(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.solution[basis[i]] = b[i];
    } else {
        // Simplex multipliers off the artificial columns: y_i = 1 - z[n+i],
        // undoing the row sign flips.
        res.feasible = false;
        res.farkas.assign(m, T(0));
        for (std::size_t i = 0; i < m; ++i) {
            T y = T(1) - z[n + i];
            res.farkas[i] = row_sign[i] < 0 ? T(-y) : y;
        }
        for (std::size_t j = 0; j < n; ++j) {
            T s(0);
            for (std::size_t i = 0; i < m; ++i) s += res.farkas[i] * columns[j][i];
            if (detail::sgn(s, eps) > 0) throw Error("lp_feasible: Farkas certificate failed column check");
        }
        T s(0);
        for (std::size_t i = 0; i < m; ++i) s += res.farkas[i] * rhs[i];
        if (detail::sgn(s, eps) <= 0) throw Error("lp_feasible: Farkas certificate failed objective check");
    }
    return res;
}

}  // namespace capra
