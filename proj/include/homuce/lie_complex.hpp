#pragma once

#include <string>
#include <vector>

#include "homuce/chain.hpp"
#include "homuce/index.hpp"

namespace homuce {

namespace detail {

/// out += coeff * (v_0 ∧ v_1 ∧ ...) in the basis of increasing tuples.
inline void add_wedge(Vector& out, const WedgeIndex& w, const std::vector<const Vector*>& f, const Scalar& coeff) {
    MultiIndex idx(f.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t s, const Scalar& c) {
        if (s == f.size()) {
            if (auto nrm = WedgeIndex::normalize(idx)) {
                const std::size_t pos = w.flatten(nrm->sorted);
                if (nrm->sign > 0)
                    out[pos] += c;
                else
                    out[pos] -= c;
            }
            return;
        }
        const Vector& v = *f[s];
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            idx[s] = k;
            rec(s + 1, c * v[k]);
        }
    };
    if (!coeff.is_zero()) rec(0, coeff);
}

inline void require_lie(const HomAlgebra& L) {
    if (L.flavor() != Flavor::lie) throw NotHomLie(L.name() + " is not tagged as a Hom-Lie algebra");
    const auto rep = validate(L);
    if (!rep.is_hom_lie) throw NotHomLie(L.name() + " fails the Hom-Lie checks");
}

}  // namespace detail

/// d_n(x1 ∧ ... ∧ xn) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ∧ α(x1) ∧ ..α(x_i)^..α(x_j)^.. ∧ α(xn)
/// on Λ^n L with trivial coefficients; d_0 and d_1 are zero.
inline Mat lie_differential(const HomAlgebra& L, std::size_t n, const ChainOptions& opt = {}) {
    detail::require_lie(L);
    if (n > opt.max_degree) throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds the cap");
    const std::size_t l = L.dim();
    const WedgeIndex src(n, l);
    if (n == 0) return Mat(0, src.size());
    const WedgeIndex dst(n - 1, l);
    Mat d(dst.size(), src.size());
    std::vector<Vector> e(l), ae(l);
    for (std::size_t i = 0; i < l; ++i) {
        e[i] = unit_vector(l, i);
        ae[i] = L.alpha().column(i);
    }
    std::vector<const Vector*> f;
    for (std::size_t b = 0; b < src.size(); ++b) {
        const MultiIndex& t = src.unflatten(b);
        Vector col(dst.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Vector br = L.bracket_basis(t[i], t[j]);
                f = {&br};
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i && k != j) f.push_back(&ae[t[k]]);
                detail::add_wedge(col, dst, f, Scalar((i + j) % 2 == 0 ? 1 : -1));
            }
        d.set_column(b, col);
    }
    return d;
}

/// H_n = Ker d_n / Im d_{n+1} on the exterior complex.
inline HomologyReport lie_homology(const HomAlgebra& L, std::size_t n, const ChainOptions& opt = {}) {
    return detail::homology_from(n, lie_differential(L, n, opt), lie_differential(L, n + 1, opt));
}

}  // namespace homuce
