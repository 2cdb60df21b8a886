#pragma once

// Brute-force classical Leibniz homology over Q. Shares no code with the
// rest of the library: plain mpq_class arrays, its own tensor enumeration
// and its own rank routine.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace homuce::oracle {

/// c[i][j][k]: coefficient of e_k in [e_i, e_j]; identity [[x,y],z] = [[x,z],y] + [x,[y,z]].
using Constants = std::vector<std::vector<std::vector<mpq_class>>>;
using Dense = std::vector<std::vector<mpq_class>>;

/// Classical co-representation: lam[x][m][k] is the coefficient of m_k in
/// e_x . m_m, rho[m][x][k] that of m_k in m_m . e_x.
struct Module {
    std::size_t mdim = 1;
    std::vector<std::vector<std::vector<mpq_class>>> lam, rho;
};

inline Module trivial_module(std::size_t ldim, std::size_t mdim = 1) {
    Module M;
    M.mdim = mdim;
    M.lam.assign(ldim, std::vector<std::vector<mpq_class>>(mdim, std::vector<mpq_class>(mdim)));
    M.rho.assign(mdim, std::vector<std::vector<mpq_class>>(ldim, std::vector<mpq_class>(mdim)));
    return M;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

/// (m, x1, ..., xn) from a flat index, m most significant.
inline std::vector<std::size_t> decode(std::size_t code, std::size_t mdim, std::size_t l, std::size_t n) {
    std::vector<std::size_t> d(n + 1);
    for (std::size_t p = n; p >= 1; --p) {
        d[p] = code % l;
        code /= l;
    }
    d[0] = code % mdim;
    return d;
}

inline std::size_t encode(const std::vector<std::size_t>& d, std::size_t l) {
    std::size_t out = d[0];
    for (std::size_t p = 1; p < d.size(); ++p) out = out * l + d[p];
    return out;
}

/// Loday-Pirashvili boundary on M ⊗ L^{⊗n}:
///   d(m, x1..xn) = (m x1, x2..xn) + sum_{i>=2} (-1)^i (x_i m, x1..x̂i..xn)
///                + sum_{i<j} (-1)^{j+1} (m, x1..[xi,xj]..x̂j..xn).
inline Dense boundary(const Constants& c, const Module& M, std::size_t n) {
    const std::size_t l = c.size(), md = M.mdim;
    const std::size_t src = md * ipow(l, n), dst = n == 0 ? 0 : md * ipow(l, n - 1);
    Dense out(dst, std::vector<mpq_class>(src));
    if (n == 0) return out;
    for (std::size_t code = 0; code < src; ++code) {
        const auto x = decode(code, md, l, n);
        auto drop = [&](std::size_t slot, std::size_t new_m) {
            std::vector<std::size_t> y{new_m};
            for (std::size_t p = 1; p <= n; ++p)
                if (p != slot) y.push_back(x[p]);
            return y;
        };
        for (std::size_t k = 0; k < md; ++k) {
            const mpq_class& a = M.rho[x[0]][x[1]][k];
            if (a != 0) out[encode(drop(1, k), l)][code] += a;
        }
        for (std::size_t i = 2; i <= n; ++i)
            for (std::size_t k = 0; k < md; ++k) {
                const mpq_class& a = M.lam[x[i]][x[0]][k];
                if (a != 0) out[encode(drop(i, k), l)][code] += (i % 2 == 0 ? 1 : -1) * a;
            }
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                for (std::size_t k = 0; k < l; ++k) {
                    const mpq_class& a = c[x[i]][x[j]][k];
                    if (a == 0) continue;
                    auto y = drop(j, x[0]);
                    y[i] = k;
                    out[encode(y, l)][code] += ((j + 1) % 2 == 0 ? 1 : -1) * a;
                }
    }
    return out;
}

inline std::size_t rank_of(Dense a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const mpq_class f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// dim HL_n(L, M) = dim (M ⊗ L^{⊗n}) - rank d_n - rank d_{n+1}.
inline std::size_t leibniz_homology(const Constants& c, const Module& M, std::size_t n) {
    const std::size_t chains = M.mdim * ipow(c.size(), n);
    return chains - rank_of(boundary(c, M, n)) - rank_of(boundary(c, M, n + 1));
}

inline std::size_t leibniz_homology(const Constants& c, std::size_t n) {
    return leibniz_homology(c, trivial_module(c.size()), n);
}

}  // namespace homuce::oracle
