#include "kklab/linalg.hpp"

#include "kklab/errors.hpp"

namespace kklab {

namespace {

uint32_t inv_mod(uint32_t a, uint32_t p) {
    // p is a small prime
    int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int64_t quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    require(r == 1, Errc::Internal, "not invertible mod p");
    return static_cast<uint32_t>(((t % p) + p) % p);
}

} // namespace

std::optional<std::vector<uint32_t>> solve_mod_p(uint32_t p,
                                                 const std::vector<std::vector<uint32_t>>& columns,
                                                 const std::vector<uint32_t>& rhs) {
    size_t ncols = columns.size();
    size_t nrows = rhs.size();
    // augmented row-major matrix
    std::vector<std::vector<uint32_t>> a(nrows, std::vector<uint32_t>(ncols + 1, 0));
    for (size_t j = 0; j < ncols; ++j) {
        require(columns[j].size() == nrows, Errc::Internal, "column size mismatch");
        for (size_t i = 0; i < nrows; ++i) a[i][j] = columns[j][i] % p;
    }
    for (size_t i = 0; i < nrows; ++i) a[i][ncols] = rhs[i] % p;

    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && a[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        uint32_t piv_inv = inv_mod(a[row][col], p);
        for (size_t j = col; j <= ncols; ++j)
            a[row][j] = static_cast<uint32_t>((static_cast<uint64_t>(a[row][j]) * piv_inv) % p);
        for (size_t i = 0; i < nrows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            uint64_t f = a[i][col];
            for (size_t j = col; j <= ncols; ++j)
                a[i][j] = static_cast<uint32_t>((a[i][j] + (p - 1ull) * f % p * a[row][j]) % p);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (size_t i = row; i < nrows; ++i)
        if (a[i][ncols] != 0) return std::nullopt;

    std::vector<uint32_t> x(ncols, 0);
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = a[i][ncols];
    return x;
}

std::vector<std::vector<uint32_t>> invert_mod_p(uint32_t p,
                                                const std::vector<std::vector<uint32_t>>& columns) {
    size_t n = columns.size();
    std::vector<std::vector<uint32_t>> inv_cols;
    inv_cols.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<uint32_t> e(n, 0);
        e[j] = 1;
        auto sol = solve_mod_p(p, columns, e);
        if (!sol) return {};
        inv_cols.push_back(*sol);
    }
    return inv_cols;
}

} // namespace kklab
