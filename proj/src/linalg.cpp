#include "tightspan/linalg.hpp"

#include <utility>

namespace tightspan {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m, int columns) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pr = row;
        while (pr < m.size() && sgn(m[pr][col]) == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        Rational inv = 1 / m[row][col];
        for (int c = col; c < columns; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < columns; ++c)
                if (sgn(m[row][c]) != 0) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RationalMatrix rows) {
    if (rows.empty()) return 0;
    int cols = static_cast<int>(rows.front().size());
    return static_cast<int>(rref(rows, cols).size());
}

int rank(const std::vector<IntVector>& rows) {
    RationalMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_rational(r));
    return rank(std::move(m));
}

std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, int columns) {
    RationalMatrix m;
    for (const auto& r : rows) m.push_back(to_rational(r));
    auto pivots = rref(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<IntVector> basis;
    for (int free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(primitive(v));
    }
    return basis;
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = rref(a, n + 1);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    RationalVector x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

Integer determinant(std::vector<IntVector> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(m[p][k]) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

int affine_dimension(const std::vector<RationalVector>& points) {
    if (points.empty()) return -1;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(points[i].size());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

}  // namespace tightspan
