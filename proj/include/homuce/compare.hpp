#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homuce/chain.hpp"
#include "homuce/lie_complex.hpp"
#include "homuce/uce.hpp"

namespace homuce {

struct SigmaReport {
    bool is_hom = false;
    bool surjective = false;
    std::size_t hl2_dim = 0;  // Ker u of uce(L)
    std::size_t h2_dim = 0;   // Ker u of uce_Lie(L)
    bool restriction_iso = false;
};

struct ComparisonReport {
    std::size_t leib_dim = 0;
    std::size_t lie_dim = 0;
    bool phi_is_hom = false;
    bool u_commutes = false;  // u_lie o Phi = U
    bool phi_surjective = false;
    std::size_t phi_kernel_dim = 0;
    bool phi_kernel_central = false;
    std::size_t liezation_dim = 0;
    bool liezation_bijective = false;
    Hom phi;
    std::optional<SigmaReport> sigma;  // present when L is perfect

    bool ok() const {
        return phi_is_hom && u_commutes && phi_surjective && phi_kernel_central && liezation_bijective &&
               leib_dim - lie_dim == phi_kernel_dim;
    }
};

namespace detail {

/// Map Leib-kind uce -> Lie-kind uce induced by x⊗y -> x∧y.
inline Mat wedge_comparison(const UceResult& leib, const UceResult& lie) {
    const std::size_t n = leib.base.dim();
    Mat to_wedge(lie.pairs.dim(), leib.pairs.dim());
    for (std::size_t q = 0; q < leib.pairs.dim(); ++q) {
        auto [i, j] = leib.pairs.pair(q);
        to_wedge.set_column(q, lie.pairs.of(unit_vector(n, i), unit_vector(n, j)));
    }
    for (const auto& v : leib.relations.basis()) {
        const Vector w = to_wedge.apply(v);
        if (!lie.W.contains(w) || !is_zero_vector(lie.to_class.apply(w)))
            throw BracketNotWellDefined("x⊗y -> x∧y does not respect the relations");
    }
    Mat phi(lie.algebra.dim(), leib.algebra.dim());
    for (std::size_t a = 0; a < leib.algebra.dim(); ++a) {
        const Vector w = to_wedge.apply(leib.rep.column(a));
        if (!lie.W.contains(w)) throw BracketNotWellDefined("x⊗y -> x∧y leaves the generating subspace");
        phi.set_column(a, lie.to_class.apply(w));
    }
    return phi;
}

}  // namespace detail

/// Compares the alpha-universal constructions of an alpha-perfect Hom-Lie
/// algebra in the Leibniz and Lie settings through Phi({a, b}) = {a ∧ b}, and,
/// for perfect L, the plain constructions through sigma.
inline ComparisonReport compare_lie_leib(const HomAlgebra& L) {
    if (L.flavor() != Flavor::lie) throw NotHomLie(L.name() + " is not tagged as a Hom-Lie algebra");
    const Perfectness pf = perfectness(L);
    if (!pf.is_alpha_perfect) throw PreconditionFailed(L.name() + " is not alpha-perfect");

    ComparisonReport r;
    const UceResult leib = uce_alpha(L, UceMode::leibniz);
    const UceResult lie = uce_alpha(L, UceMode::lie);
    r.leib_dim = leib.algebra.dim();
    r.lie_dim = lie.algebra.dim();
    const Mat phi = detail::wedge_comparison(leib, lie);
    r.phi = Hom{"Phi", leib.algebra, lie.algebra, phi};
    r.phi_is_hom = !hom_defect(leib.algebra, lie.algebra, phi).has_value();
    r.u_commutes = lie.u.matrix * phi == leib.u.matrix;
    r.phi_surjective = rank(phi) == lie.algebra.dim();
    const Subspace ker = kernel(phi);
    r.phi_kernel_dim = ker.dim();
    r.phi_kernel_central = center(leib.algebra).contains(ker);

    // The induced map from the Liezation must be well defined and bijective.
    const QuotientAlgebra q = liezation(leib.algebra);
    r.liezation_dim = q.algebra.dim();
    bool kills_ideal = true;
    for (const auto& v : q.ideal.basis())
        if (!is_zero_vector(phi.apply(v))) kills_ideal = false;
    const Mat bar = phi * q.section;
    r.liezation_bijective = kills_ideal && bar.rows() == bar.cols() && rank(bar) == bar.rows() &&
                            !hom_defect(q.algebra, lie.algebra, bar).has_value();

    if (pf.is_perfect) {
        SigmaReport s;
        const UceResult ul = uce_leibniz(L);
        const UceResult uw = uce_lie(L);
        const Mat sigma = detail::wedge_comparison(ul, uw);
        s.is_hom = !hom_defect(ul.algebra, uw.algebra, sigma).has_value();
        s.surjective = rank(sigma) == uw.algebra.dim();
        s.hl2_dim = ul.kernel.dim();
        s.h2_dim = uw.kernel.dim();
        // sigma restricted to Ker u -> Ker u
        const Mat inc = ul.kernel.inclusion();
        Mat restricted(uw.kernel.dim(), ul.kernel.dim());
        bool maps_into = true;
        for (std::size_t a = 0; a < ul.kernel.dim(); ++a) {
            const Vector v = sigma.apply(inc.column(a));
            if (!uw.kernel.contains(v)) {
                maps_into = false;
                break;
            }
            restricted.set_column(a, uw.kernel.coordinates(v));
        }
        s.restriction_iso = maps_into && s.hl2_dim == s.h2_dim && rank(restricted) == s.h2_dim;
        r.sigma = s;
    }
    return r;
}

}  // namespace homuce
