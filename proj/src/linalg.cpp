#include "capra/linalg.hpp"

#include <optional>

namespace capra {

namespace {

/// Clears denominators row-wise, then runs Bareiss elimination with column
/// pivoting. Returns the echelon matrix (as rationals for back substitution)
/// together with the pivot column of each eliminated row.
struct Echelon {
    std::vector<VecR> rows;
    std::vector<std::size_t> pivot_cols;
};

Echelon echelon_form(const std::vector<VecR>& input, std::size_t d) {
    std::vector<std::vector<Int>> a;
    a.reserve(input.size());
    for (const VecR& r : input) {
        if (r.size() != d) throw DimensionMismatchError("echelon_form: row length mismatch");
        Int lcm_den(1);
        for (const Rat& v : r) lcm_den = lcm(lcm_den, Int(denominator(v)));
        std::vector<Int> row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = Int(numerator(r[j])) * (lcm_den / Int(denominator(r[j])));
        a.push_back(std::move(row));
    }

    const std::size_t m = a.size();
    std::vector<std::size_t> pivots;
    Int prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < m; ++col) {
        std::size_t sel = m;
        for (std::size_t i = rank; i < m; ++i)
            if (!a[i][col].is_zero()) { sel = i; break; }
        if (sel == m) continue;
        std::swap(a[rank], a[sel]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        pivots.push_back(col);
        ++rank;
    }

    Echelon e;
    e.pivot_cols = pivots;
    e.rows.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        VecR row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = Rat(a[i][j]);
        e.rows.push_back(std::move(row));
    }
    return e;
}

}  // namespace

std::size_t matrix_rank(const std::vector<VecR>& rows, std::size_t d) {
    return echelon_form(rows, d).pivot_cols.size();
}

std::vector<VecR> kernel_basis(const std::vector<VecR>& rows, std::size_t d) {
    Echelon e = echelon_form(rows, d);
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<VecR> basis;
    for (std::size_t f = 0; f < d; ++f) {
        if (is_pivot[f]) continue;
        VecR x(d, Rat(0));
        x[f] = 1;
        for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
            std::size_t pc = e.pivot_cols[i];
            Rat s(0);
            for (std::size_t j = pc + 1; j < d; ++j) s += e.rows[i][j] * x[j];
            x[pc] = -s / e.rows[i][pc];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<VecR> solve_affine(const std::vector<VecR>& rows, const VecR& b, std::size_t d) {
    // Eliminate the augmented matrix [A | b]; inconsistent when a pivot lands
    // in the last column.
    std::vector<VecR> aug;
    aug.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        VecR r = rows[i];
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    Echelon e = echelon_form(aug, d + 1);
    for (std::size_t c : e.pivot_cols)
        if (c == d) return std::nullopt;

    VecR x(d, Rat(0));
    for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
        std::size_t pc = e.pivot_cols[i];
        Rat s = e.rows[i][d];
        for (std::size_t j = pc + 1; j < d; ++j) s -= e.rows[i][j] * x[j];
        x[pc] = s / e.rows[i][pc];
    }
    return x;
}

}  // namespace capra
