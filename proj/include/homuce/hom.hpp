#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homuce/constructions.hpp"

namespace homuce {

/// Linear map between algebras; column j is the image of src basis vector j.
struct Hom {
    std::string name;
    HomAlgebra src;
    HomAlgebra dst;
    Mat matrix;

    Vector operator()(const Vector& x) const { return matrix.apply(x); }
};

struct HomDefect {
    std::string property;  // "bracket" or "alpha"
    std::vector<std::size_t> indices;
};

/// First violation of f[x, y] = [f x, f y] or f α = α' f, if any.
inline std::optional<HomDefect> hom_defect(const HomAlgebra& src, const HomAlgebra& dst, const Mat& m) {
    if (m.rows() != dst.dim() || m.cols() != src.dim()) throw DimensionMismatch("homomorphism matrix shape");
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            if (m.apply(src.bracket_basis(i, j)) != dst.bracket(m.column(i), m.column(j)))
                return HomDefect{"bracket", {i, j}};
    const Mat lhs = m * src.alpha(), rhs = dst.alpha() * m;
    for (std::size_t j = 0; j < src.dim(); ++j)
        if (lhs.column(j) != rhs.column(j)) return HomDefect{"alpha", {j}};
    return std::nullopt;
}

inline std::string describe(const HomDefect& d, const HomAlgebra& src) {
    if (d.property == "bracket")
        return "f[" + src.labels()[d.indices[0]] + "," + src.labels()[d.indices[1]] + "] != [f " +
               src.labels()[d.indices[0]] + ", f " + src.labels()[d.indices[1]] + "]";
    return "f(alpha " + src.labels()[d.indices[0]] + ") != alpha f(" + src.labels()[d.indices[0]] + ")";
}

/// Validated homomorphism; throws NotAHomomorphism with a witness.
inline Hom make_hom(std::string name, const HomAlgebra& src, const HomAlgebra& dst, Mat m) {
    if (auto d = hom_defect(src, dst, m)) throw NotAHomomorphism(name + ": " + describe(*d, src));
    return Hom{std::move(name), src, dst, std::move(m)};
}

inline Hom identity_hom(const HomAlgebra& L) { return Hom{"id", L, L, Mat::identity(L.dim())}; }

inline Hom compose(const Hom& outer, const Hom& inner) {
    if (!(inner.dst == outer.src)) throw CompositionMismatch(outer.name + " o " + inner.name + ": algebras differ");
    return Hom{outer.name + "." + inner.name, inner.src, outer.dst, outer.matrix * inner.matrix};
}

enum class Centrality { central, alpha_central_only, neither };

inline const char* to_string(Centrality c) {
    switch (c) {
        case Centrality::central: return "central";
        case Centrality::alpha_central_only: return "alpha_central_only";
        default: return "neither";
    }
}

/// A surjective homomorphism pi : K -> L with its kernel.
struct Extension {
    Hom pi;
    Subspace ker;
    Centrality classification = Centrality::neither;

    bool is_central() const { return classification == Centrality::central; }
    bool is_alpha_central() const { return classification != Centrality::neither; }
    const HomAlgebra& middle() const { return pi.src; }
    const HomAlgebra& base() const { return pi.dst; }
};

inline Centrality classify(const HomAlgebra& K, const Subspace& ker) {
    const Subspace z = center(K);
    if (z.contains(ker)) return Centrality::central;
    if (z.contains(ker.mapped(K.alpha()))) return Centrality::alpha_central_only;
    return Centrality::neither;
}

inline Extension make_extension(const Hom& pi) {
    if (auto d = hom_defect(pi.src, pi.dst, pi.matrix)) throw NotAHomomorphism(pi.name + ": " + describe(*d, pi.src));
    if (rank(pi.matrix) != pi.dst.dim()) throw NotSurjective(pi.name + " is not surjective");
    Subspace ker = kernel(pi.matrix);
    const Centrality c = classify(pi.src, ker);
    return Extension{pi, std::move(ker), c};
}

/// The extension outer.pi o inner.pi.
inline Extension compose(const Extension& outer, const Extension& inner) {
    return make_extension(compose(outer.pi, inner.pi));
}

struct Pullback {
    HomAlgebra algebra;
    Hom proj_tau;  // onto the source of tau
    Hom proj_pi;   // onto the source of pi
};

/// A x_L K = {(a, k) : tau(a) = pi(k)} with componentwise bracket and twist.
inline Pullback pullback(const Hom& tau, const Hom& pi) {
    if (!(tau.dst == pi.dst)) throw NotOverSameBase("pullback: maps have different codomains");
    const HomAlgebra prod = direct_product(tau.src, pi.src, tau.src.name() + "x_" + pi.dst.name() + pi.src.name());
    const std::size_t p = tau.src.dim(), q = pi.src.dim();
    Mat cond(tau.dst.dim(), p + q);
    for (std::size_t i = 0; i < tau.dst.dim(); ++i) {
        for (std::size_t j = 0; j < p; ++j) cond(i, j) = tau.matrix(i, j);
        for (std::size_t j = 0; j < q; ++j) cond(i, p + j) = -pi.matrix(i, j);
    }
    const auto sub = subalgebra(prod, kernel(cond), prod.name());
    Mat pa(p, p + q), pk(q, p + q);
    for (std::size_t j = 0; j < p; ++j) pa(j, j) = Scalar(1);
    for (std::size_t j = 0; j < q; ++j) pk(j, p + j) = Scalar(1);
    Hom ht = make_hom("pr_" + tau.src.name(), sub.algebra, tau.src, pa * sub.inclusion);
    Hom hp = make_hom("pr_" + pi.src.name(), sub.algebra, pi.src, pk * sub.inclusion);
    return {sub.algebra, std::move(ht), std::move(hp)};
}

enum class SectionSearch { found, not_found, undetermined };

inline const char* to_string(SectionSearch s) {
    switch (s) {
        case SectionSearch::found: return "found";
        case SectionSearch::not_found: return "not_found";
        default: return "undetermined";
    }
}

struct SectionResult {
    SectionSearch status = SectionSearch::undetermined;
    std::optional<Mat> section;  // L.dim columns in K
};

namespace detail {

/// Flattened unknowns s(k, j) of a K.dim x L.dim matrix, index k * L.dim + j.
inline Mat unflatten_section(const Vector& v, std::size_t kd, std::size_t ld) {
    Mat s(kd, ld);
    for (std::size_t k = 0; k < kd; ++k)
        for (std::size_t j = 0; j < ld; ++j) s(k, j) = v[k * ld + j];
    return s;
}

}  // namespace detail

/// Searches for a homomorphism s : L -> K with pi s = Id. The conditions
/// pi s = Id and s α_L = α_K s are linear; the bracket condition becomes
/// linear when the kernel is central, otherwise it is only decided when the
/// linear conditions leave a single candidate.
inline SectionResult find_section(const Extension& ext) {
    const HomAlgebra& K = ext.middle();
    const HomAlgebra& L = ext.base();
    const std::size_t kd = K.dim(), ld = L.dim(), nv = kd * ld;
    std::vector<Vector> rows;
    Vector rhs;
    auto add_row = [&](Vector r, Scalar b) {
        rows.push_back(std::move(r));
        rhs.push_back(std::move(b));
    };
    // pi s = Id: sum_k pi(i,k) s(k,j) = delta_ij
    for (std::size_t i = 0; i < ld; ++i)
        for (std::size_t j = 0; j < ld; ++j) {
            Vector r(nv);
            for (std::size_t k = 0; k < kd; ++k) r[k * ld + j] = ext.pi.matrix(i, k);
            add_row(std::move(r), Scalar(i == j ? 1 : 0));
        }
    // s α_L - α_K s = 0
    for (std::size_t a = 0; a < kd; ++a)
        for (std::size_t j = 0; j < ld; ++j) {
            Vector r(nv);
            for (std::size_t m = 0; m < ld; ++m) r[a * ld + m] += L.alpha()(m, j);
            for (std::size_t k = 0; k < kd; ++k) r[k * ld + j] -= K.alpha()(a, k);
            add_row(std::move(r), Scalar(0));
        }
    auto solve = [&]() -> std::optional<std::pair<Vector, std::vector<Vector>>> {
        const Mat A = Mat::from_rows(nv, rows);
        auto x = particular_solution(A, rhs);
        if (!x) return std::nullopt;
        return std::make_pair(*x, null_space_basis(A));
    };
    auto bracket_ok = [&](const Mat& s) { return !hom_defect(L, K, s).has_value(); };

    auto base = solve();
    if (!base) return {SectionSearch::not_found, std::nullopt};
    if (base->second.empty()) {
        const Mat s = detail::unflatten_section(base->first, kd, ld);
        if (bracket_ok(s)) return {SectionSearch::found, s};
        return {SectionSearch::not_found, std::nullopt};
    }
    if (!ext.is_central()) return {SectionSearch::undetermined, std::nullopt};

    // Central kernel: [s x, s y] = [s0 x, s0 y] for every candidate s = s0 + n,
    // so s[x, y] = [s0 x, s0 y] is a linear condition on s.
    const Mat s0 = detail::unflatten_section(base->first, kd, ld);
    for (std::size_t x = 0; x < ld; ++x)
        for (std::size_t y = 0; y < ld; ++y) {
            const Vector target = K.bracket(s0.column(x), s0.column(y));
            const Vector br = L.bracket_basis(x, y);
            for (std::size_t a = 0; a < kd; ++a) {
                Vector r(nv);
                for (std::size_t m = 0; m < ld; ++m) r[a * ld + m] = br[m];
                add_row(std::move(r), target[a]);
            }
        }
    auto full = solve();
    if (!full) return {SectionSearch::not_found, std::nullopt};
    const Mat s = detail::unflatten_section(full->first, kd, ld);
    if (!bracket_ok(s)) throw Error("section search: linearised bracket condition inconsistent");
    return {SectionSearch::found, s};
}

}  // namespace homuce
