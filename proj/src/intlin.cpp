#include "flift/intlin.hpp"

#include <algorithm>
#include <cstdlib>

namespace flift {

int64_t vec_gcd(const ZVec& v) {
    int64_t g = 0;
    for (int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

ZVec primitive(ZVec v) {
    int64_t g = vec_gcd(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

int64_t dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int zmat_rank(ZMat m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t rc = 0;
    for (size_t c = 0; c < cols && rc < rows; ++c) {
        size_t piv = rc;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rc], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rc || m[r][c] == 0) continue;
            int64_t a = m[rc][c], b = m[r][c];
            int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
            int64_t fa = b / g, fb = a / g;
            for (size_t cc = 0; cc < cols; ++cc)
                m[r][cc] = m[r][cc] * fb - m[rc][cc] * fa;
        }
        ++rc;
        ++rank;
    }
    return rank;
}

std::vector<int64_t> smith_divisors(ZMat m) {
    std::vector<int64_t> divs;
    if (m.empty() || m[0].empty()) return divs;
    size_t rows = m.size(), cols = m[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot
        size_t pr = rows, pc = cols;
        int64_t best = 0;
        for (size_t r = t; r < rows; ++r)
            for (size_t c = t; c < cols; ++c)
                if (m[r][c] != 0) {
                    int64_t a = m[r][c] < 0 ? -m[r][c] : m[r][c];
                    if (best == 0 || a < best) { best = a; pr = r; pc = c; }
                }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) continue;
                int64_t q = m[r][t] / m[t][t];
                for (size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
                if (m[r][t] != 0) { std::swap(m[t], m[r]); clean = false; }
            }
            for (size_t c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) continue;
                int64_t q = m[t][c] / m[t][t];
                for (size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
                if (m[t][c] != 0) {
                    for (size_t r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
                    clean = false;
                }
            }
        }
        divs.push_back(m[t][t] < 0 ? -m[t][t] : m[t][t]);
        ++t;
    }
    return divs;
}

bool solve_rational(const std::vector<std::vector<Rat>>& a_in, const std::vector<Rat>& b_in,
                    std::vector<Rat>& x) {
    auto a = a_in;
    auto b = b_in;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    size_t rc = 0;
    for (size_t c = 0; c < cols && rc < rows; ++c) {
        size_t piv = rc;
        while (piv < rows && a[piv][c].num == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rc], a[piv]);
        std::swap(b[rc], b[piv]);
        Rat inv = Rat(1) / a[rc][c];
        for (size_t cc = 0; cc < cols; ++cc) a[rc][cc] = a[rc][cc] * inv;
        b[rc] = b[rc] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rc || a[r][c].num == 0) continue;
            Rat f = a[r][c];
            for (size_t cc = 0; cc < cols; ++cc) a[r][cc] = a[r][cc] - f * a[rc][cc];
            b[r] = b[r] - f * b[rc];
        }
        pivot_col[rc] = (int)c;
        ++rc;
    }
    for (size_t r = rc; r < rows; ++r)
        if (b[r].num != 0) return false;
    x.assign(cols, Rat(0));
    for (size_t r = 0; r < rc; ++r) x[pivot_col[r]] = b[r];
    return true;
}

int64_t zmat_det(const ZMat& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: non-square matrix");
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    int64_t det = 0;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        ZMat minor(n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) minor[r - 1].push_back(m[r][cc]);
        int64_t term = m[0][c] * zmat_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace flift
