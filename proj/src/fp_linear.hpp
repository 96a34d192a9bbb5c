#pragma once

// Dense linear algebra over F_p for the small per-degree complexes of the v0 layer.

#include <vector>

namespace chromatic::fp {

using Vec = std::vector<int>;

inline int inv(int a, int p)
{
    int r = 1, e = p - 2;
    long long b = a;
    while (e) {
        if (e & 1)
            r = static_cast<int>(r * b % p);
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Row-reduces in place; returns the rank.
inline int reduce(std::vector<Vec>& rows, int p, std::vector<int>* pivots = nullptr)
{
    if (rows.empty())
        return 0;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        int f = inv(rows[r][c], p);
        for (auto& x : rows[r])
            x = static_cast<int>(1LL * x * f % p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            int g = rows[i][c];
            for (size_t k = 0; k < n; ++k)
                rows[i][k] = static_cast<int>(((rows[i][k] - 1LL * g * rows[r][k]) % p + p) % p);
        }
        if (pivots)
            pivots->push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

inline int rank(std::vector<Vec> rows, int p) { return reduce(rows, p); }

// Kernel of the map whose value on basis vector i is images[i] (all of length m).
inline std::vector<Vec> kernel(const std::vector<Vec>& images, size_t m, int p)
{
    const size_t n = images.size();
    // rows of the transpose [A | I] trick: reduce columns of A by row ops on (A^T | I)
    std::vector<Vec> aug(n, Vec(m + n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < m; ++k)
            aug[i][k] = ((images[i][k] % p) + p) % p;
        aug[i][m + i] = 1;
    }
    // eliminate on the first m columns only
    size_t r = 0;
    for (size_t c = 0; c < m && r < n; ++c) {
        size_t piv = r;
        while (piv < n && aug[piv][c] == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(aug[r], aug[piv]);
        int f = inv(aug[r][c], p);
        for (auto& x : aug[r])
            x = static_cast<int>(1LL * x * f % p);
        for (size_t i = 0; i < n; ++i) {
            if (i == r || aug[i][c] == 0)
                continue;
            int g = aug[i][c];
            for (size_t k = 0; k < m + n; ++k)
                aug[i][k] = static_cast<int>(((aug[i][k] - 1LL * g * aug[r][k]) % p + p) % p);
        }
        ++r;
    }
    std::vector<Vec> out;
    for (size_t i = r; i < n; ++i)
        out.emplace_back(aug[i].begin() + static_cast<long>(m), aug[i].end());
    return out;
}

}  // namespace chromatic::fp
