#include "toric/linalg.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace toric {

namespace {

// One Bareiss step: entries stay minors of the input, so for the small
// matrices with small entries used here long long never overflows; products
// are taken in 128 bits anyway.
Int exact_div(__int128 num, Int den) {
    assert(den != 0);
    __int128 q = num / den;
    assert(q * den == num);
    assert(q <= __int128(9223372036854775807LL) && q >= -__int128(9223372036854775807LL));
    return static_cast<Int>(q);
}

}  // namespace

Int det(Matrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");

    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 num = (__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

int rank(Matrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size();
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Int a = m[r][c];
            Int b = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                __int128 v = (__int128)m[i][j] * a - (__int128)m[r][j] * b;
                assert(v <= __int128(9223372036854775807LL) &&
                       v >= -__int128(9223372036854775807LL));
                m[i][j] = static_cast<Int>(v);
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

bool solve_unimodular(const Matrix& a, const std::vector<Int>& rhs, std::vector<Int>& x) {
    std::size_t n = a.size();
    Int d = det(a);
    if (d == 0) return false;
    x.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix replaced = a;
        for (std::size_t r = 0; r < n; ++r) replaced[r][i] = rhs[r];
        Int di = det(replaced);
        assert(di % d == 0);
        x[i] = di / d;
    }
    return true;
}

void cramer_signs(const Matrix& columns, const std::vector<Int>& p, Int& det_out,
                  std::vector<Int>& coord_dets) {
    std::size_t n = columns.size();
    det_out = det(columns);
    coord_dets.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix replaced = columns;
        for (std::size_t r = 0; r < n; ++r) replaced[r][i] = p[r];
        coord_dets[i] = det(replaced);
    }
}

Matrix matrix_from_columns(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty()) return {};
    std::size_t rows = cols[0].size();
    Matrix m(rows, std::vector<Int>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = cols[c][r];
    }
    return m;
}

std::vector<Int> matvec(const Matrix& m, const std::vector<Int>& v) {
    std::vector<Int> out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        __int128 acc = 0;
        for (std::size_t c = 0; c < v.size(); ++c) acc += (__int128)m[r][c] * v[c];
        assert(acc <= __int128(9223372036854775807LL) &&
               acc >= -__int128(9223372036854775807LL));
        out[r] = static_cast<Int>(acc);
    }
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (__int128)a[i] * b[i];
    assert(acc <= __int128(9223372036854775807LL) && acc >= -__int128(9223372036854775807LL));
    return static_cast<Int>(acc);
}

}  // namespace toric
