#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homuce/constructions.hpp"
#include "homuce/corep.hpp"

namespace homuce::random {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Scalar small_rational(Rng& rng) {
    static const long dens[] = {1, 1, 1, 2, 3};
    return Scalar(Rational(uniform(rng, -2, 2), dens[uniform(rng, 0, 4)]));
}

/// Unit lower-triangular times unit upper-triangular with small entries; always invertible.
inline Mat random_invertible(Rng& rng, std::size_t n) {
    Mat lo = Mat::identity(n), up = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (uniform(rng, 0, 2) == 0) lo(i, j) = Scalar(uniform(rng, -1, 1));
            if (uniform(rng, 0, 2) == 0) up(j, i) = Scalar(uniform(rng, -1, 1));
        }
    return lo * up;
}

inline Mat inverse(const Mat& m) {
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    const auto r = rref_with_pivots(aug);
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw DimensionMismatch("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

/// The same algebra in the basis given by the columns of P.
inline HomAlgebra change_basis(const HomAlgebra& L, const Mat& P) {
    const std::size_t n = L.dim();
    const Mat Pinv = inverse(P);
    Mat s(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.set_column(i * n + j, Pinv.apply(L.bracket(P.column(i), P.column(j))));
    return HomAlgebra(L.name(), L.labels(), std::move(s), Pinv * L.alpha() * P, L.flavor());
}

/// A Leibniz algebra (alpha = Id) together with a few of its endomorphisms.
struct LeibnizSample {
    HomAlgebra algebra;
    std::vector<Mat> endomorphisms;
};

namespace detail {

/// Hemisemidirect product g ⊕ M: [(x,m),(y,n)] = ([x,y], -rho(y) m) for a
/// Lie algebra g with representation rho. The result satisfies the Leibniz
/// identity in the form used throughout ([x,[y,z]] = [[x,y],z] - [[x,z],y]).
inline HomAlgebra hemisemidirect(const std::vector<std::vector<Vector>>& gbr, const std::vector<Mat>& rho,
                                 std::size_t mdim) {
    const std::size_t gd = gbr.size(), n = gd + mdim;
    std::vector<HomAlgebra::Entry> entries;
    for (std::size_t i = 0; i < gd; ++i)
        for (std::size_t j = 0; j < gd; ++j) {
            Vector v(n);
            for (std::size_t k = 0; k < gd; ++k) v[k] = gbr[i][j][k];
            if (!is_zero_vector(v)) entries.push_back({i, j, v});
        }
    for (std::size_t a = 0; a < mdim; ++a)
        for (std::size_t y = 0; y < gd; ++y) {
            Vector v(n);
            for (std::size_t b = 0; b < mdim; ++b) v[gd + b] = -rho[y](b, a);
            if (!is_zero_vector(v)) entries.push_back({gd + a, y, v});
        }
    return HomAlgebra::from_brackets("R", HomAlgebra::default_labels("x", n), entries, Mat::identity(n));
}

/// Derivations D with D[x,y] = [Dx,y] + [x,Dy], as a basis of matrices.
inline std::vector<Mat> derivations(const HomAlgebra& L) {
    const std::size_t n = L.dim(), nv = n * n;
    std::vector<Vector> rows;
    // unknown D(a, b) at index a * n + b
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector r(nv);
                for (std::size_t b = 0; b < n; ++b) r[k * n + b] += L.constant(i, j, b);
                for (std::size_t a = 0; a < n; ++a) {
                    r[a * n + i] -= L.constant(a, j, k);
                    r[a * n + j] -= L.constant(i, a, k);
                }
                rows.push_back(std::move(r));
            }
    std::vector<Mat> out;
    for (const auto& v : null_space_basis(Mat::from_rows(nv, rows))) {
        Mat d(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d(a, b) = v[a * n + b];
        out.push_back(std::move(d));
    }
    return out;
}

/// exp(D) for nilpotent D; nothing otherwise.
inline std::optional<Mat> exp_nilpotent(const Mat& D) {
    const std::size_t n = D.rows();
    Mat term = Mat::identity(n), sum = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * D * Scalar(Rational(1, static_cast<long>(k)));
        if (term.is_zero()) return sum;
        sum += term;
    }
    return std::nullopt;
}

}  // namespace detail

/// Random Leibniz algebra of dimension 1..max_dim (alpha = Id) with endomorphisms
/// including 0, Id, a scaling of the module part, the projection onto the Lie part
/// and exponentials of nilpotent derivations.
inline LeibnizSample random_leibniz(Rng& rng, std::size_t max_dim = 3) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
    // Lie part: abelian, the 2-dim non-abelian algebra, or (n = 3) so(3) / Heisenberg
    std::size_t gd = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
    int gtype = 0;  // 0 abelian, 1 [x1,x2]=x2, 2 so(3), 3 heisenberg
    if (gd == 2) gtype = static_cast<int>(uniform(rng, 0, 1));
    if (gd == 3) gtype = static_cast<int>(uniform(rng, 2, 3));
    std::vector<std::vector<Vector>> gbr(gd, std::vector<Vector>(gd, Vector(gd)));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
        gbr[i][j][k] = Scalar(c);
        gbr[j][i][k] = Scalar(-c);
    };
    if (gtype == 1) set(0, 1, 1, 1);
    if (gtype == 2) {
        set(0, 1, 2, 1);
        set(1, 2, 0, 1);
        set(2, 0, 1, 1);
    }
    if (gtype == 3) set(0, 1, 2, 1);
    const std::size_t md = n - gd;
    // representation of g on M
    std::vector<Mat> rho(gd, Mat(md, md));
    if (md > 0 && gd > 0) {
        if (gtype == 0) {
            // commuting operators: polynomials in one random matrix
            Mat A(md, md);
            for (std::size_t a = 0; a < md; ++a)
                for (std::size_t b = 0; b < md; ++b) A(a, b) = Scalar(uniform(rng, -1, 1));
            for (std::size_t y = 0; y < gd; ++y) {
                const Scalar c0 = Scalar(uniform(rng, -1, 1)), c1 = Scalar(uniform(rng, -1, 1));
                rho[y] = A * c1 + Mat::identity(md) * c0;
            }
        } else if (gtype == 1) {
            // [x1,x2] = x2 forces rho(x2) = [rho(x1), rho(x2)]; take rho(x2) = 0
            rho[0] = Mat::identity(md) * Scalar(uniform(rng, -2, 2));
        }
    }
    HomAlgebra L0 = detail::hemisemidirect(gbr, rho, md);

    std::vector<Mat> endos{Mat(n, n), Mat::identity(n)};
    const Scalar lambda = small_rational(rng);
    Mat scale = Mat::identity(n);
    for (std::size_t a = gd; a < n; ++a) scale(a, a) = lambda;
    endos.push_back(scale);
    if (gd > 0 && md > 0) {
        Mat proj(n, n);
        for (std::size_t a = 0; a < gd; ++a) proj(a, a) = Scalar(1);
        endos.push_back(proj);
    }
    const auto ders = detail::derivations(L0);
    for (int attempt = 0; attempt < 4 && !ders.empty(); ++attempt) {
        Mat D(n, n);
        for (const auto& b : ders) D += b * Scalar(uniform(rng, -1, 1));
        if (auto e = detail::exp_nilpotent(D)) {
            endos.push_back(*e);
            endos.push_back(scale * *e);
        }
    }
    const Mat P = random_invertible(rng, n);
    const Mat Pinv = inverse(P);
    LeibnizSample s{change_basis(L0, P), {}};
    for (const auto& f : endos) {
        Mat g = Pinv * f * P;
        if (!bracket_defect(s.algebra, g)) s.endomorphisms.push_back(std::move(g));
    }
    return s;
}

/// Twisted multiplicative Hom-Leibniz algebra: a random sample twisted along
/// one of its endomorphisms.
inline HomAlgebra random_twisted(Rng& rng, std::size_t max_dim = 3) {
    LeibnizSample s = random_leibniz(rng, max_dim);
    const auto& f = s.endomorphisms[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.endomorphisms.size()) - 1))];
    return twist(s.algebra, f).renamed("T");
}

/// Random co-representation with mdim <= 2: trivial with a random alpha_M, the
/// algebra on itself when dim L <= 2, or a small ideal of it.
inline HomCoRep random_corep(Rng& rng, const HomAlgebra& L) {
    const long choice = uniform(rng, 0, 3);
    if (choice == 1 && L.dim() <= 2) return corep_self(L);
    if (choice >= 1) {
        std::vector<Subspace> candidates{derived(L)};
        for (int t = 0; t < 3; ++t) {
            Vector v(L.dim());
            for (auto& x : v) x = Scalar(uniform(rng, -1, 1));
            candidates.push_back(ideal_closure(L, Subspace::span(L.dim(), {v})));
        }
        for (const auto& I : candidates)
            if (I.dim() > 0 && I.dim() <= 2 && !restrict_corep(corep_self(L), I).is_trivial())
                return restrict_corep(corep_self(L), I);
    }
    const std::size_t md = static_cast<std::size_t>(uniform(rng, 1, 2));
    Mat am(md, md);
    for (std::size_t a = 0; a < md; ++a)
        for (std::size_t b = 0; b < md; ++b) am(a, b) = Scalar(uniform(rng, -1, 1));
    return corep_trivial(L, md, am);
}

}  // namespace homuce::random
