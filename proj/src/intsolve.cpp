#include "superindex/intsolve.hpp"

#include <cstdlib>

#include "superindex/errors.hpp"

namespace superindex {

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a0, const std::vector<Int>& b) {
    const size_t m = a0.size();
    const size_t n = m == 0 ? 0 : a0[0].size();
    if (b.size() != m) fail("ParseError", "right-hand side does not match matrix");

    IntMatrix a = a0;
    // U tracks column operations: solution of the reduced system maps back
    // through x = U y.
    IntMatrix u(n, std::vector<Int>(n, 0));
    for (size_t j = 0; j < n; ++j) u[j][j] = 1;

    auto add_col = [&](size_t dst, size_t src, const Int& k) {
        for (size_t i = 0; i < m; ++i) a[i][dst] -= k * a[i][src];
        for (size_t i = 0; i < n; ++i) u[i][dst] -= k * u[i][src];
    };
    auto swap_col = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < n; ++r) std::swap(u[r][i], u[r][j]);
    };
    auto negate_col = [&](size_t j) {
        for (size_t r = 0; r < m; ++r) a[r][j] = -a[r][j];
        for (size_t r = 0; r < n; ++r) u[r][j] = -u[r][j];
    };

    // Column echelon form: in each processed row, one pivot column with all
    // later columns zero.
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    size_t pivcol = 0;
    for (size_t row = 0; row < m && pivcol < n; ++row) {
        while (true) {
            size_t best = n;
            int nonzero = 0;
            for (size_t j = pivcol; j < n; ++j) {
                if (a[row][j] == 0) continue;
                ++nonzero;
                if (best == n || abs(a[row][j]) < abs(a[row][best])) best = j;
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                swap_col(best, pivcol);
                if (a[row][pivcol] < 0) negate_col(pivcol);
                pivots.emplace_back(row, pivcol);
                ++pivcol;
                break;
            }
            for (size_t j = pivcol; j < n; ++j) {
                if (j == best || a[row][j] == 0) continue;
                add_col(j, best, a[row][j] / a[row][best]);
            }
        }
    }

    // Forward solve H y = b over the pivot columns.
    std::vector<Int> y(n, 0);
    std::vector<bool> row_has_pivot(m, false);
    for (auto [row, col] : pivots) {
        row_has_pivot[row] = true;
        Int resid = b[row];
        for (size_t j = 0; j < n; ++j)
            if (j != col && y[j] != 0) resid -= a[row][j] * y[j];
        if (resid % a[row][col] != 0) return std::nullopt;
        y[col] = resid / a[row][col];
    }
    for (size_t row = 0; row < m; ++row) {
        if (row_has_pivot[row]) continue;
        Int resid = b[row];
        for (size_t j = 0; j < n; ++j)
            if (y[j] != 0) resid -= a[row][j] * y[j];
        if (resid != 0) return std::nullopt;
    }

    std::vector<Int> x(n, 0);
    for (size_t i = 0; i < n; ++i) {
        Int s = 0;
        for (size_t j = 0; j < n; ++j)
            if (y[j] != 0) s += u[i][j] * y[j];
        x[i] = s;
    }

    for (size_t row = 0; row < m; ++row) {
        Int s = 0;
        for (size_t j = 0; j < n; ++j)
            if (x[j] != 0) s += a0[row][j] * x[j];
        if (s != b[row]) return std::nullopt;
    }
    return x;
}

}  // namespace superindex
