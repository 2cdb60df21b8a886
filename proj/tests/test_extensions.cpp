#include <gtest/gtest.h>

#include "homuce/audit.hpp"
#include "homuce/catalog.hpp"
#include "homuce/compare.hpp"
#include "homuce/document.hpp"
#include "homuce/random.hpp"
#include "homuce/uce.hpp"

using namespace homuce;

namespace {

Extension ext_pi() { return make_extension(catalog::pi()); }
Extension ext_rho(bool repaired) { return make_extension(catalog::rho(repaired)); }

}  // namespace

TEST(Classification, Counterexamples) {
    EXPECT_EQ(ext_pi().classification, Centrality::central);
    EXPECT_EQ(ext_rho(false).classification, Centrality::central);
    EXPECT_EQ(ext_rho(true).classification, Centrality::central);
    // the literal F has a two-dimensional center and the composite stays central;
    // with the extra bracket [e4,e2] = e1 it is alpha-central only
    EXPECT_EQ(compose(ext_pi(), ext_rho(false)).classification, Centrality::central);
    EXPECT_EQ(compose(ext_pi(), ext_rho(true)).classification, Centrality::alpha_central_only);
    const HomAlgebra K = catalog::counterexample_K();
    EXPECT_EQ(make_extension(identity_hom(K)).classification, Centrality::central);
}

TEST(Classification, CentralImpliesAlphaCentral) {
    random::Rng rng(307);
    std::size_t seen = 0;
    for (int t = 0; t < 60; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        const Subspace Z = center(L);
        if (rank(L.alpha()) < L.dim() || !is_ideal(L, Z)) continue;
        const QuotientAlgebra Q = quotient_algebra(L, Z);
        const Extension e = make_extension(make_hom("q", L, Q.algebra, Q.projection));
        EXPECT_EQ(e.classification, Centrality::central);
        EXPECT_TRUE(e.is_alpha_central());
        ++seen;
    }
    EXPECT_GT(seen, 0u);
}

TEST(Classification, RejectsBadProjections) {
    const HomAlgebra K = catalog::counterexample_K(), L = catalog::counterexample_L();
    EXPECT_THROW(make_extension(make_hom("z", K, L, Mat(2, 3))), NotSurjective);
    Mat m(2, 3);
    m(0, 0) = Scalar(1);
    m(1, 1) = Scalar(1);
    EXPECT_THROW(make_hom("bad", K, L, m), NotAHomomorphism);
    EXPECT_THROW(compose(catalog::rho(), catalog::pi()), CompositionMismatch);
}

TEST(Pullback, OfCentralExtensionIsCentral) {
    const Hom pi = catalog::pi();
    const HomAlgebra L = catalog::counterexample_L();
    const Pullback pb = pullback(identity_hom(L), pi);
    EXPECT_EQ(pb.algebra.dim(), 3u);
    const Extension e = make_extension(pb.proj_tau);
    EXPECT_EQ(e.classification, Centrality::central);
    EXPECT_FALSE(hom_defect(pb.algebra, catalog::counterexample_K(), pb.proj_pi.matrix).has_value());
    EXPECT_THROW(pullback(identity_hom(catalog::counterexample_K()), pi), NotOverSameBase);
}

TEST(Section, SplitAndNonSplit) {
    const HomAlgebra so3 = catalog::cross_product(), ab = catalog::abelian(1);
    const HomAlgebra P = direct_product(so3, ab, "P");
    Mat pr(3, 4);
    for (std::size_t i = 0; i < 3; ++i) pr(i, i) = Scalar(1);
    const SectionResult split = find_section(make_extension(make_hom("pr", P, so3, pr)));
    ASSERT_EQ(split.status, SectionSearch::found);
    EXPECT_EQ(pr * *split.section, Mat::identity(3));
    // pi : K -> L has no section since L is perfect and K is not a product
    EXPECT_EQ(find_section(ext_pi()).status, SectionSearch::not_found);
    EXPECT_EQ(find_section(make_extension(identity_hom(so3))).status, SectionSearch::found);
}

TEST(Uce, KernelDimensions) {
    const UceResult uK = uce_leibniz(catalog::counterexample_K());
    EXPECT_EQ(uK.algebra.dim(), 9u);
    EXPECT_EQ(uK.kernel_dim(), 6u);
    EXPECT_TRUE(uK.surjective && uK.universal);
    const UceResult uL = uce_leibniz(catalog::counterexample_L());
    EXPECT_EQ(uL.kernel_dim(), 2u);
    EXPECT_EQ(uce_leibniz(catalog::cross_product()).kernel_dim(), 0u);
    EXPECT_EQ(uce_lie(catalog::cross_product()).kernel_dim(), 0u);
    for (const auto& U : {uK, uL}) {
        EXPECT_TRUE(validate(U.algebra).ok());
        EXPECT_EQ(make_extension(U.u).classification, Centrality::central);
    }
}

TEST(Uce, NonPerfectInputDisablesUniversality) {
    const UceResult u = uce_leibniz(catalog::diag_twist());
    EXPECT_FALSE(u.surjective);
    EXPECT_FALSE(u.universal);
    EXPECT_FALSE(u.warnings.empty());
    EXPECT_THROW(uce_lie(catalog::counterexample_K()), NotHomLie);
    EXPECT_THROW(uce_leibniz(catalog::swap_square()), PreconditionFailed);
}

TEST(Uce, AlphaVersionIsAlphaPerfectAndAlphaCentral) {
    const HomAlgebra S = catalog::sqrt2_example();
    for (UceMode mode : {UceMode::leibniz, UceMode::lie}) {
        const UceResult U = uce_alpha(S, mode);
        EXPECT_TRUE(U.universal);
        EXPECT_EQ(U.algebra.dim(), 3u);
        EXPECT_TRUE(validate(U.algebra).ok());
        EXPECT_TRUE(perfectness(U.algebra).is_alpha_perfect);
        EXPECT_TRUE(make_extension(U.u).is_alpha_central());
    }
    const UceResult Rb = uce_alpha(catalog::cross_alpha_zero(), UceMode::leibniz);
    EXPECT_FALSE(Rb.universal);
}

TEST(Uce, KernelMatchesHomologyOnRandomPerfectAlgebras) {
    random::Rng rng(311);
    for (int t = 0; t < 40; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        const UceResult U = uce_leibniz(L);
        EXPECT_EQ(U.kernel_dim(), homology(corep_ground(L), 2).dim);
        EXPECT_EQ(U.surjective, perfectness(L).is_perfect);
    }
}

TEST(Lift, OverCentralExtensions) {
    const UceResult uL = uce_leibniz(catalog::counterexample_L());
    const Hom lift = lift_over(uL, ext_pi());
    EXPECT_EQ(catalog::pi().matrix * lift.matrix, uL.u.matrix);
    EXPECT_FALSE(hom_defect(uL.algebra, catalog::counterexample_K(), lift.matrix).has_value());
    const UceResult uK = uce_leibniz(catalog::counterexample_K());
    EXPECT_EQ(lift_over(uK, make_extension(identity_hom(catalog::counterexample_K()))).matrix, uK.u.matrix);
    // self lift over u is the identity
    EXPECT_EQ(lift_over(uK, make_extension(uK.u)).matrix, Mat::identity(uK.algebra.dim()));
}

TEST(Lift, RejectsWrongTargets) {
    const UceResult uL = uce_leibniz(catalog::counterexample_L());
    EXPECT_THROW(lift_over(uL, ext_rho(false)), NotOverSameBase);
    const HomAlgebra K = catalog::counterexample_K();
    const QuotientAlgebra Q = quotient_algebra(K, parse_span("span{a1}", K.labels(), 0));
    const HomAlgebra P = direct_product(Q.algebra, catalog::counterexample_L(), "P");
    Mat pr(2, 4);
    pr(0, 2) = Scalar(1);
    pr(1, 3) = Scalar(1);
    const Extension e = make_extension(make_hom("pr", P, catalog::counterexample_L(), pr));
    EXPECT_THROW(lift_over(uL, e), LiftIllDefined);
}

TEST(Compare, CrossProductAndSqrt2) {
    for (const auto& L : {catalog::cross_product(), catalog::sqrt2_example()}) {
        const ComparisonReport c = compare_lie_leib(L);
        EXPECT_TRUE(c.ok()) << L.name();
        ASSERT_TRUE(c.sigma.has_value());
        EXPECT_TRUE(c.sigma->restriction_iso);
        EXPECT_EQ(c.sigma->hl2_dim, c.sigma->h2_dim);
    }
    EXPECT_THROW(compare_lie_leib(catalog::abelian(2)), PreconditionFailed);
    EXPECT_THROW(compare_lie_leib(catalog::counterexample_K()), NotHomLie);
}

TEST(Audit, CatalogInstances) {
    for (const auto& L : catalog::all()) EXPECT_TRUE(theorem_audit(L).ok()) << L.name();
    AuditOptions opt;
    opt.universal_middle = true;
    EXPECT_TRUE(theorem_audit(uce_alpha(catalog::sqrt2_example(), UceMode::leibniz).algebra, opt).ok());
    EXPECT_TRUE(theorem_audit(uce_leibniz(catalog::cross_product()).algebra, opt).ok());
    // alpha = 0 middle term outside the hypothesis: HL_2 does not vanish
    const AuditReport k = theorem_audit(uce_leibniz(catalog::counterexample_K()).algebra, opt);
    EXPECT_FALSE(k.ok());
}

TEST(Perfectness, PropagatesAlongSurjections) {
    random::Rng rng(313);
    for (int t = 0; t < 40; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        if (!perfectness(L).is_perfect) continue;
        const QuotientAlgebra Q = quotient_algebra(L, derived(L).intersect(center(L)).is_zero()
                                                          ? Subspace::zero(L.dim())
                                                          : ideal_closure(L, center(L)));
        EXPECT_TRUE(perfectness(Q.algebra).is_perfect);
    }
    const UceResult U = uce_leibniz(catalog::counterexample_K());
    EXPECT_TRUE(perfectness(U.algebra).is_perfect);
}
