#pragma once

#include <string>
#include <vector>

#include "homuce/hom.hpp"
#include "homuce/index.hpp"

namespace homuce {

/// uce(L) = L⊗L / I, uce_Lie(L) = Λ²L / I, and the alpha variants built on α(L)⊗α(L), α(L)∧α(L).
enum class UceKind { leibniz, lie, alpha_leibniz, alpha_lie };

inline const char* to_string(UceKind k) {
    switch (k) {
        case UceKind::leibniz: return "uce";
        case UceKind::lie: return "uce_lie";
        case UceKind::alpha_leibniz: return "uce_alpha_leib";
        default: return "uce_alpha_lie";
    }
}

inline bool is_alpha_kind(UceKind k) { return k == UceKind::alpha_leibniz || k == UceKind::alpha_lie; }
inline bool is_wedge_kind(UceKind k) { return k == UceKind::lie || k == UceKind::alpha_lie; }

/// Degree-two part L⊗L or Λ²L in coordinates, with the maps the constructions need.
class PairSpace {
public:
    PairSpace() = default;
    PairSpace(const HomAlgebra& L, bool wedge) : L_(L), wedge_(wedge), w_(2, L.dim()) {}

    bool wedge() const { return wedge_; }
    std::size_t dim() const { return wedge_ ? w_.size() : L_.dim() * L_.dim(); }
    std::size_t ldim() const { return L_.dim(); }

    /// Basis pair (i, j) of coordinate k.
    std::pair<std::size_t, std::size_t> pair(std::size_t k) const {
        if (wedge_) return {w_.unflatten(k)[0], w_.unflatten(k)[1]};
        return {k / L_.dim(), k % L_.dim()};
    }

    /// x⊗y or x∧y.
    Vector of(const Vector& x, const Vector& y) const {
        const std::size_t n = L_.dim();
        Vector out(dim());
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                if (!wedge_) {
                    out[i * n + j].add_mul(x[i], y[j]);
                } else if (i < j) {
                    out[w_.flatten({i, j})].add_mul(x[i], y[j]);
                } else if (i > j) {
                    out[w_.flatten({j, i})] -= x[i] * y[j];
                }
            }
        }
        return out;
    }

    /// The bracket map x⊗y -> [x, y] (resp. x∧y -> [x, y]) as an L.dim x dim matrix.
    Mat bracket_map() const {
        Mat m(L_.dim(), dim());
        for (std::size_t k = 0; k < dim(); ++k) {
            auto [i, j] = pair(k);
            m.set_column(k, L_.bracket_basis(i, j));
        }
        return m;
    }

    /// f⊗f (resp. Λ²f) for an endomorphism f of L.
    Mat induced(const Mat& f) const {
        Mat m(dim(), dim());
        for (std::size_t k = 0; k < dim(); ++k) {
            auto [i, j] = pair(k);
            m.set_column(k, of(f.column(i), f.column(j)));
        }
        return m;
    }

    std::string describe(std::size_t k) const {
        auto [i, j] = pair(k);
        return "{" + L_.labels()[i] + "," + L_.labels()[j] + "}";
    }
    std::string label(std::size_t k) const {
        auto [i, j] = pair(k);
        return L_.labels()[i] + "_" + L_.labels()[j];
    }
    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (std::size_t k = 0; k < dim(); ++k) out.push_back(label(k));
        return out;
    }

private:
    HomAlgebra L_;
    bool wedge_ = false;
    WedgeIndex w_;
};

struct UceResult {
    UceKind kind = UceKind::leibniz;
    HomAlgebra base;
    HomAlgebra algebra;
    Hom u;            // algebra -> base, {x, y} -> [x, y]
    Subspace kernel;  // Ker u in algebra coordinates
    bool input_perfect = false;  // perfect, or alpha-perfect for the alpha kinds
    bool surjective = false;
    bool universal = false;  // universality claims enabled
    std::vector<std::string> warnings;
    std::vector<std::string> generators;  // representative of each basis class

    PairSpace pairs;
    Subspace W;          // α(L)⊗α(L) etc. inside the pair space
    Subspace relations;  // I ∩ W
    Mat to_class;        // algebra.dim x pairs.dim, meaningful on W
    Mat rep;             // pairs.dim x algebra.dim

    std::size_t kernel_dim() const { return kernel.dim(); }
};

namespace detail {

inline Vector relation(const HomAlgebra& L, const PairSpace& P, std::size_t a, std::size_t b, std::size_t c) {
    const Vector ax = L.alpha().column(a), ay = L.alpha().column(b), az = L.alpha().column(c);
    Vector v = P.of(L.bracket_basis(a, c), ay);
    const Vector t1 = P.of(L.bracket_basis(a, b), az);
    const Vector t3 = P.wedge() ? P.of(L.bracket_basis(b, c), ax) : P.of(ax, L.bracket_basis(b, c));
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] -= t1[k];
        if (P.wedge())
            v[k] -= t3[k];
        else
            v[k] += t3[k];
    }
    return v;
}

}  // namespace detail

/// Builds the quotient W / (I ∩ W) with the induced bracket and twist, where
/// I is spanned by the relations over all basis triples:
///   tensor: -[x1,x2]⊗α x3 + [x1,x3]⊗α x2 + α x1⊗[x2,x3]
///   wedge:  -[x1,x2]∧α x3 + [x1,x3]∧α x2 - [x2,x3]∧α x1
inline UceResult build_uce(const HomAlgebra& L, UceKind kind) {
    const auto rep_l = validate(L);
    if (!rep_l.is_hom_leibniz || !rep_l.is_multiplicative)
        throw PreconditionFailed(L.name() + " must be a multiplicative Hom-Leibniz algebra");
    if (is_wedge_kind(kind) && (L.flavor() != Flavor::lie || !rep_l.is_hom_lie))
        throw NotHomLie(L.name() + " is not a Hom-Lie algebra");

    UceResult r;
    r.kind = kind;
    r.base = L;
    r.pairs = PairSpace(L, is_wedge_kind(kind));
    const PairSpace& P = r.pairs;
    const std::size_t n = L.dim(), pd = P.dim();
    const Mat twist_pairs = P.induced(L.alpha());
    const Mat br = P.bracket_map();

    const Perfectness pf = perfectness(L);
    r.input_perfect = is_alpha_kind(kind) ? pf.is_alpha_perfect : pf.is_perfect;
    r.W = is_alpha_kind(kind) ? Subspace::image(twist_pairs) : Subspace::full(pd);

    std::vector<Vector> rel;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) rel.push_back(detail::relation(L, P, a, b, c));
    const Subspace I = Subspace::span(pd, rel);
    if (r.W.contains(I)) {
        r.relations = I;
    } else {
        r.relations = I.intersect(r.W);
        r.warnings.push_back("relations leave W; quotienting by their intersection with W");
    }

    // W coordinates, then the quotient by the relations
    const std::size_t k = r.W.dim();
    Mat wcoord(k, pd);
    for (std::size_t row = 0; row < k; ++row) wcoord(row, r.W.pivots()[row]) = Scalar(1);
    std::vector<Vector> relc;
    for (const auto& v : r.relations.basis()) relc.push_back(r.W.coordinates(v));
    const QuotientSpace Q(k, Subspace::span(k, relc));
    r.to_class = Q.projection() * wcoord;
    r.rep = r.W.inclusion() * Q.section();
    const std::size_t m = Q.dim();

    // Labels: the pair behind each representative when W is the whole pair space.
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
        const Vector v = r.rep.column(a);
        std::size_t nz = 0, at = 0;
        for (std::size_t q = 0; q < pd; ++q)
            if (!v[q].is_zero()) ++nz, at = q;
        if (nz == 1 && v[at].is_one()) {
            labels.push_back(P.label(at));
            r.generators.push_back(P.describe(at));
        } else {
            labels.push_back("w" + std::to_string(a + 1));
            r.generators.push_back(format_linear(v, P.labels()));
        }
    }

    auto class_of = [&](const Vector& v, const std::string& what) {
        if (!r.W.contains(v)) throw BracketNotWellDefined(what + " leaves the generating subspace");
        return r.to_class.apply(v);
    };
    // [{a}, {b}] = {u'(a), u'(b)}; the bracket factors through u', which must kill the relations.
    for (const auto& v : r.relations.basis()) {
        const Vector ub = br.apply(v);
        if (!is_zero_vector(ub))
            throw BracketNotWellDefined("bracket does not vanish on relation " +
                                        format_linear(v, P.labels()));
        if (!is_zero_vector(class_of(twist_pairs.apply(v), "twisted relation")))
            throw BracketNotWellDefined("twisting map does not preserve the relations");
    }
    std::vector<Vector> ureps(m);
    for (std::size_t a = 0; a < m; ++a) ureps[a] = br.apply(r.rep.column(a));
    Mat s(m, m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) s.set_column(a * m + b, class_of(P.of(ureps[a], ureps[b]), "bracket"));
    Mat alpha(m, m);
    for (std::size_t a = 0; a < m; ++a) alpha.set_column(a, class_of(twist_pairs.apply(r.rep.column(a)), "twist"));

    const std::string name = std::string(to_string(kind)) + "(" + L.name() + ")";
    r.algebra = HomAlgebra(name, labels, std::move(s), std::move(alpha),
                           is_wedge_kind(kind) ? Flavor::lie : Flavor::leibniz);
    r.u = make_hom("u", r.algebra, L, Mat::from_columns(n, ureps));
    r.kernel = homuce::kernel(r.u.matrix);
    r.surjective = rank(r.u.matrix) == n;
    if (!r.input_perfect)
        r.warnings.push_back(is_alpha_kind(kind) ? "NotAlphaPerfect: universality claims disabled"
                                                 : "NonPerfect: u maps onto [L,L] only, universality claims disabled");
    r.universal = r.input_perfect && r.surjective;
    return r;
}

inline UceResult uce_leibniz(const HomAlgebra& L) { return build_uce(L, UceKind::leibniz); }
inline UceResult uce_lie(const HomAlgebra& L) { return build_uce(L, UceKind::lie); }

enum class UceMode { lie, leibniz };

inline UceResult uce_alpha(const HomAlgebra& L, UceMode mode) {
    return build_uce(L, mode == UceMode::lie ? UceKind::alpha_lie : UceKind::alpha_leibniz);
}

namespace detail {

/// Lift matrix built from a section S (K.dim x L.dim) of the target.
inline Mat lift_matrix(const UceResult& U, const Extension& target, const Mat& S) {
    const HomAlgebra& K = target.middle();
    const PairSpace& P = U.pairs;
    const Mat T = is_alpha_kind(U.kind) ? K.alpha() * S : S;
    // psi on the pair space: e_i ⊗ e_j -> [T e_i, T e_j]
    Mat psi(K.dim(), P.dim());
    for (std::size_t q = 0; q < P.dim(); ++q) {
        auto [i, j] = P.pair(q);
        psi.set_column(q, K.bracket(T.column(i), T.column(j)));
    }
    if (!is_alpha_kind(U.kind)) {
        for (const auto& v : U.relations.basis())
            if (!is_zero_vector(psi.apply(v)))
                throw LiftIllDefined("candidate lift does not vanish on the relations");
        return psi * U.rep;
    }
    // alpha kinds: {α x1, α x2} -> [α_K k1, α_K k2], evaluated through a preimage under α⊗α
    const Mat tw = P.induced(U.base.alpha());
    for (const auto& v : homuce::kernel(tw).basis())
        if (!is_zero_vector(psi.apply(v))) throw LiftIllDefined("candidate lift depends on the preimage under alpha");
    for (const auto& v : U.relations.basis()) {
        auto pre = particular_solution(tw, v);
        if (!pre || !is_zero_vector(psi.apply(*pre)))
            throw LiftIllDefined("candidate lift does not vanish on the relations");
    }
    Mat out(K.dim(), U.algebra.dim());
    for (std::size_t a = 0; a < U.algebra.dim(); ++a) {
        auto pre = particular_solution(tw, U.rep.column(a));
        if (!pre) throw LiftIllDefined("representative outside the image of alpha");
        out.set_column(a, psi.apply(*pre));
    }
    return out;
}

}  // namespace detail

/// The homomorphism uce -> K over the base: {x1, x2} -> [k1, k2] with pi(k_i) = x_i
/// ({α x1, α x2} -> [α k1, α k2] for the alpha kinds). Preimages come from the
/// canonical particular solution; the result is re-derived from a second section
/// and both must agree.
inline Hom lift_over(const UceResult& U, const Extension& target) {
    if (!(target.base() == U.base)) throw NotOverSameBase("target extension is over a different algebra");
    const bool ok = is_alpha_kind(U.kind) ? target.is_alpha_central() : target.is_central();
    if (!ok)
        throw LiftIllDefined(std::string("target extension is ") + to_string(target.classification) +
                             ", which does not admit a lift from " + to_string(U.kind));
    const HomAlgebra& K = target.middle();
    const HomAlgebra& L = U.base;
    Mat S(K.dim(), L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        auto k = particular_solution(target.pi.matrix, unit_vector(L.dim(), i));
        if (!k) throw NotSurjective("target projection is not surjective");
        S.set_column(i, *k);
    }
    const Mat phi = detail::lift_matrix(U, target, S);
    if (!target.ker.is_zero()) {
        Vector shift(K.dim());
        for (const auto& v : target.ker.basis())
            for (std::size_t q = 0; q < K.dim(); ++q) shift[q] += v[q];
        Mat S2 = S;
        for (std::size_t i = 0; i < L.dim(); ++i) {
            Vector c = S.column(i);
            for (std::size_t q = 0; q < K.dim(); ++q) c[q] += Scalar(static_cast<long>(i + 1)) * shift[q];
            S2.set_column(i, c);
        }
        if (detail::lift_matrix(U, target, S2) != phi) throw LiftIllDefined("lift depends on the choice of preimages");
    }
    if (auto d = hom_defect(U.algebra, K, phi)) throw LiftIllDefined("lift is not a homomorphism: " + describe(*d, U.algebra));
    if (target.pi.matrix * phi != U.u.matrix) throw LiftIllDefined("pi o lift != u");
    return Hom{"lift", U.algebra, K, phi};
}

}  // namespace homuce
