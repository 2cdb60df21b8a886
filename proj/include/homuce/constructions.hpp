#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homuce/algebra.hpp"
#include "homuce/subspace.hpp"

namespace homuce {

/// First basis pair (i, j) with f[e_i, e_j] != [f e_i, f e_j], if any.
inline std::optional<std::pair<std::size_t, std::size_t>> bracket_defect(const HomAlgebra& L, const Mat& f) {
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (f.apply(L.bracket_basis(i, j)) != L.bracket(f.column(i), f.column(j)))
                return std::make_pair(i, j);
    return std::nullopt;
}

/// Yau twist of an untwisted algebra L0 along an endomorphism f:
/// [x, y]_f = [f x, f y] with twisting map f.
inline HomAlgebra twist(const HomAlgebra& L0, const Mat& f) {
    const std::size_t n = L0.dim();
    if (L0.alpha() != Mat::identity(n)) throw PreconditionFailed("twist expects an algebra with alpha = Id");
    if (f.rows() != n || f.cols() != n) throw DimensionMismatch("twist: endomorphism shape");
    if (auto w = bracket_defect(L0, f))
        throw NotEndomorphism("twist: map does not preserve [" + L0.labels()[w->first] + "," +
                                  L0.labels()[w->second] + "]",
                              w->first, w->second);
    Mat s(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.set_column(i * n + j, L0.bracket(f.column(i), f.column(j)));
    return HomAlgebra(L0.name() + "_twisted", L0.labels(), std::move(s), f, L0.flavor());
}

/// Span of [h, k] over basis pairs of H and K.
inline Subspace commutator(const HomAlgebra& L, const Subspace& H, const Subspace& K) {
    std::vector<Vector> vs;
    for (const auto& h : H.basis())
        for (const auto& k : K.basis()) vs.push_back(L.bracket(h, k));
    return Subspace::span(L.dim(), vs);
}

inline Subspace derived(const HomAlgebra& L) {
    const auto full = Subspace::full(L.dim());
    return commutator(L, full, full);
}

inline Subspace alpha_image(const HomAlgebra& L) { return Subspace::image(L.alpha()); }

/// Smallest two-sided Hom-ideal containing S.
inline Subspace ideal_closure(const HomAlgebra& L, const Subspace& S) {
    const std::size_t n = L.dim();
    Subspace cur = S;
    for (;;) {
        std::vector<Vector> vs = cur.basis();
        for (const auto& v : cur.basis()) {
            for (std::size_t j = 0; j < n; ++j) {
                const Vector e = unit_vector(n, j);
                vs.push_back(L.bracket(v, e));
                vs.push_back(L.bracket(e, v));
            }
            vs.push_back(L.apply_alpha(v));
        }
        Subspace next = Subspace::span(n, vs);
        if (next.dim() == cur.dim()) return next;
        cur = std::move(next);
    }
}

inline bool is_ideal(const HomAlgebra& L, const Subspace& S) { return ideal_closure(L, S) == S; }

/// Z(L) = { x : [x, y] = 0 = [y, x] for all y }.
inline Subspace center(const HomAlgebra& L) {
    const std::size_t n = L.dim();
    Mat sys(2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector e = unit_vector(n, j);
        const Mat r = L.right_mult(e);  // x -> [x, e_j]
        const Mat l = L.left_mult(e);   // x -> [e_j, x]
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                sys(j * n + a, b) = r(a, b);
                sys(n * n + j * n + a, b) = l(a, b);
            }
    }
    return kernel(sys);
}

struct Perfectness {
    bool is_perfect = false;
    bool is_alpha_perfect = false;
};

inline Perfectness perfectness(const HomAlgebra& L) {
    const Subspace im = alpha_image(L);
    return {derived(L).is_full(), commutator(L, im, im).is_full()};
}

/// Quotient algebra together with its canonical projection and a linear section.
struct QuotientAlgebra {
    HomAlgebra algebra;
    Mat projection;  // quotient.dim x L.dim
    Mat section;     // L.dim x quotient.dim
    Subspace ideal;
};

/// L / I for a two-sided Hom-ideal I.
inline QuotientAlgebra quotient_algebra(const HomAlgebra& L, const Subspace& I, std::string name = "") {
    if (!is_ideal(L, I)) throw NotAnIdeal("subspace is not a two-sided Hom-ideal of " + L.name());
    const QuotientSpace q(L.dim(), I);
    const std::size_t m = q.dim();
    const Mat& P = q.projection();
    const Mat& S = q.section();
    Mat s(m, m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            s.set_column(a * m + b, P.apply(L.bracket(S.column(a), S.column(b))));
    Mat alpha = P * L.alpha() * S;

    std::vector<std::string> labels;
    std::vector<bool> is_pivot(L.dim(), false);
    for (auto p : I.pivots()) is_pivot[p] = true;
    for (std::size_t j = 0; j < L.dim(); ++j)
        if (!is_pivot[j]) labels.push_back(L.labels()[j]);

    if (name.empty()) name = L.name() + "/I";
    HomAlgebra Q(std::move(name), std::move(labels), std::move(s), std::move(alpha), L.flavor());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (P.apply(L.bracket_basis(i, j)) != Q.bracket(P.column(i), P.column(j)))
                throw NotAnIdeal("projection fails to preserve brackets");
    if (P * L.alpha() != Q.alpha() * P) throw NotAnIdeal("projection fails to commute with alpha");
    return {std::move(Q), P, S, I};
}

/// L^ann: span of all squares [x, x], by polarization.
inline Subspace squares_span(const HomAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < n; ++i) {
        vs.push_back(L.bracket_basis(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = L.bracket_basis(i, j);
            const Vector w = L.bracket_basis(j, i);
            for (std::size_t k = 0; k < n; ++k) v[k] += w[k];
            vs.push_back(std::move(v));
        }
    }
    return Subspace::span(n, vs);
}

/// L_Lie = L / L^ann with L^ann the ideal generated by the squares.
inline QuotientAlgebra liezation(const HomAlgebra& L) {
    QuotientAlgebra q = quotient_algebra(L, ideal_closure(L, squares_span(L)), L.name() + "_Lie");
    q.algebra = q.algebra.with_flavor(Flavor::lie);
    return q;
}

/// L_mult = L / I with I generated by alpha[x, y] - [alpha x, alpha y].
inline QuotientAlgebra multiplicative_hull(const HomAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = L.apply_alpha(L.bracket_basis(i, j));
            const Vector w = L.bracket(L.alpha().column(i), L.alpha().column(j));
            for (std::size_t k = 0; k < n; ++k) v[k] -= w[k];
            vs.push_back(std::move(v));
        }
    return quotient_algebra(L, ideal_closure(L, Subspace::span(n, vs)), L.name() + "_mult");
}

/// A x B with componentwise bracket and block-diagonal alpha.
inline HomAlgebra direct_product(const HomAlgebra& A, const HomAlgebra& B, std::string name = "") {
    const std::size_t p = A.dim(), q = B.dim(), n = p + q;
    Mat s(n, n * n);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k) s(k, i * n + j) = A.constant(i, j, k);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < q; ++k) s(p + k, (p + i) * n + (p + j)) = B.constant(i, j, k);
    Mat alpha(n, n);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) alpha(i, j) = A.alpha()(i, j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) alpha(p + i, p + j) = B.alpha()(i, j);
    std::vector<std::string> labels = A.labels();
    for (const auto& l : B.labels()) {
        std::string cand = l;
        while (std::find(labels.begin(), labels.end(), cand) != labels.end()) cand += "'";
        labels.push_back(cand);
    }
    const Flavor f = (A.flavor() == Flavor::lie && B.flavor() == Flavor::lie) ? Flavor::lie : Flavor::leibniz;
    if (name.empty()) name = A.name() + "x" + B.name();
    return HomAlgebra(std::move(name), std::move(labels), std::move(s), std::move(alpha), f);
}

/// Subalgebra on a bracket- and alpha-closed subspace, in the RREF basis of S.
struct Subalgebra {
    HomAlgebra algebra;
    Mat inclusion;  // L.dim x S.dim
};

inline Subalgebra subalgebra(const HomAlgebra& L, const Subspace& S, std::string name = "") {
    const std::size_t m = S.dim();
    const Mat inc = S.inclusion();
    Mat s(m, m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const Vector br = L.bracket(inc.column(a), inc.column(b));
            if (!S.contains(br)) throw PreconditionFailed("subspace is not closed under the bracket");
            s.set_column(a * m + b, S.coordinates(br));
        }
    Mat alpha(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        const Vector v = L.apply_alpha(inc.column(a));
        if (!S.contains(v)) throw PreconditionFailed("subspace is not alpha-invariant");
        alpha.set_column(a, S.coordinates(v));
    }
    if (name.empty()) name = L.name() + "_sub";
    return {HomAlgebra(std::move(name), HomAlgebra::default_labels("s", m), std::move(s), std::move(alpha),
                       L.flavor()),
            inc};
}

}  // namespace homuce
