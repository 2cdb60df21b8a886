#include <gtest/gtest.h>

#include "homuce/catalog.hpp"
#include "homuce/constructions.hpp"
#include "homuce/corep.hpp"
#include "homuce/document.hpp"
#include "homuce/hom.hpp"
#include "homuce/random.hpp"

using namespace homuce;

namespace {

Subspace span_of(const HomAlgebra& L, const std::string& text) { return parse_span(text, L.labels(), 2); }

}  // namespace

TEST(Validate, CatalogAlgebrasPass) {
    for (const auto& L : catalog::all()) {
        const ValidationReport v = validate(L);
        EXPECT_TRUE(v.ok()) << L.name();
        EXPECT_TRUE(v.is_multiplicative) << L.name();
    }
    EXPECT_TRUE(validate(catalog::sqrt2_example()).is_hom_lie);
}

TEST(Validate, AlternatingWitness) {
    const HomAlgebra L = algebra_from_text("X", {"b1", "b2"}, {{"b1", "b1", "b2"}}, identity_rows(2), Flavor::lie);
    const ValidationReport v = validate(L);
    EXPECT_FALSE(v.is_hom_lie);
    ASSERT_FALSE(v.failures.empty());
    const auto& f = v.failures.back();
    EXPECT_EQ(f.identity, "alternating");
    EXPECT_EQ(f.indices, (std::vector<std::size_t>{0, 0}));
    EXPECT_NE(describe(f, L).find("(b1,b1)"), std::string::npos);
}

TEST(Validate, NonMultiplicativeSwap) {
    const ValidationReport v = validate(catalog::swap_square());
    EXPECT_FALSE(v.is_multiplicative);
    EXPECT_FALSE(v.ok());
}

TEST(Validate, LeibnizIdentityViolation) {
    // [b2,b1] = b2, [b2,b2] = b1 fails the identity once alpha = Id
    const HomAlgebra L = algebra_from_text("X", {"b1", "b2"}, {{"b2", "b1", "b2"}, {"b2", "b2", "b1"}}, identity_rows(2));
    const ValidationReport v = validate(L);
    EXPECT_FALSE(v.ok());
    EXPECT_EQ(v.failures.front().identity, "hom-leibniz");
}

TEST(Twist, IdentityAndZero) {
    const HomAlgebra so3 = catalog::cross_product();
    const HomAlgebra same = twist(so3, Mat::identity(3));
    EXPECT_EQ(same.structure(), so3.structure());
    EXPECT_EQ(same.alpha(), so3.alpha());
    const HomAlgebra zero = twist(so3, Mat(3, 3));
    EXPECT_TRUE(zero.structure().is_zero());
    EXPECT_TRUE(zero.alpha().is_zero());
}

TEST(Twist, ZeroTwistOfNonLeibnizBracketIsAbelian) {
    const HomAlgebra L0 =
        algebra_from_text("X", {"b1", "b2"}, {{"b2", "b1", "b2"}, {"b2", "b2", "b1"}}, identity_rows(2));
    const HomAlgebra T = twist(L0, Mat(2, 2));
    EXPECT_TRUE(T.structure().is_zero());
    EXPECT_TRUE(validate(T).ok());
    EXPECT_FALSE(T.structure() == catalog::counterexample_L().structure());
}

TEST(Twist, RejectsNonEndomorphism) {
    const HomAlgebra so3 = catalog::cross_product();
    Mat f = Mat::identity(3);
    f(0, 0) = Scalar(2);
    EXPECT_THROW(twist(so3, f), NotEndomorphism);
    EXPECT_THROW(twist(catalog::counterexample_K(), Mat(3, 3)), PreconditionFailed);
}

TEST(Twist, RandomTwistsAreMultiplicativeHomLeibniz) {
    random::Rng rng(101);
    for (int t = 0; t < 80; ++t) {
        const random::LeibnizSample s = random::random_leibniz(rng, 3);
        ASSERT_TRUE(validate(s.algebra).ok());
        ASSERT_GE(s.endomorphisms.size(), 2u);
        for (const auto& f : s.endomorphisms) {
            const ValidationReport v = validate(twist(s.algebra, f));
            EXPECT_TRUE(v.ok() && v.is_multiplicative);
        }
    }
}

TEST(Commutator, Examples) {
    const HomAlgebra K = catalog::counterexample_K();
    EXPECT_TRUE(derived(K).is_full());
    EXPECT_TRUE(commutator(K, Subspace::zero(3), Subspace::full(3)).is_zero());
    const HomAlgebra Rc = catalog::diag_twist();
    const Subspace a = alpha_image(Rc);
    EXPECT_EQ(commutator(Rc, a, a), span_of(Rc, "span{a2}"));
}

TEST(Commutator, IdealsCommutatorInsideIntersection) {
    random::Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        Vector v(L.dim()), w(L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i) {
            v[i] = Scalar(random::uniform(rng, -1, 1));
            w[i] = Scalar(random::uniform(rng, -1, 1));
        }
        const Subspace H = ideal_closure(L, Subspace::span(L.dim(), {v}));
        const Subspace I = ideal_closure(L, Subspace::span(L.dim(), {w}));
        EXPECT_TRUE(H.intersect(I).contains(commutator(L, H, I)));
    }
}

TEST(IdealClosure, Examples) {
    const HomAlgebra K = catalog::counterexample_K();
    EXPECT_EQ(ideal_closure(K, span_of(K, "span{a1}")), span_of(K, "span{a1}"));
    EXPECT_TRUE(ideal_closure(K, Subspace::zero(3)).is_zero());
    EXPECT_TRUE(ideal_closure(K, span_of(K, "span{a3}")).is_full());
}

TEST(IdealClosure, IdempotentAndMonotone) {
    random::Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        Vector v(L.dim()), w(L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i) {
            v[i] = Scalar(random::uniform(rng, -1, 1));
            w[i] = Scalar(random::uniform(rng, -1, 1));
        }
        const Subspace S = Subspace::span(L.dim(), {v});
        const Subspace T = Subspace::span(L.dim(), {v, w});
        const Subspace cS = ideal_closure(L, S);
        EXPECT_EQ(ideal_closure(L, cS), cS);
        EXPECT_TRUE(ideal_closure(L, T).contains(cS));
        EXPECT_TRUE(is_ideal(L, cS));
    }
}

TEST(Center, Examples) {
    const HomAlgebra K = catalog::counterexample_K();
    EXPECT_EQ(center(K), span_of(K, "span{a1}"));
    EXPECT_TRUE(center(catalog::abelian(3)).is_full());
    const HomAlgebra F = catalog::counterexample_F(false);
    EXPECT_EQ(center(F), span_of(F, "span{e1, e2}"));
    const HomAlgebra Fr = catalog::counterexample_F(true);
    EXPECT_EQ(center(Fr), span_of(Fr, "span{e1}"));
}

TEST(Center, AnnihilatesBracketsAndIsIdealForSurjectiveAlpha) {
    random::Rng rng(29);
    std::size_t surjective = 0;
    for (int t = 0; t < 60; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        const Subspace Z = center(L);
        for (const auto& z : Z.basis())
            for (std::size_t j = 0; j < L.dim(); ++j) {
                EXPECT_TRUE(is_zero_vector(L.bracket(z, unit_vector(L.dim(), j))));
                EXPECT_TRUE(is_zero_vector(L.bracket(unit_vector(L.dim(), j), z)));
            }
        if (rank(L.alpha()) == L.dim()) {
            ++surjective;
            EXPECT_EQ(ideal_closure(L, Z), Z);
        }
    }
    EXPECT_GT(surjective, 0u);
}

TEST(Perfectness, Examples) {
    const Perfectness s = perfectness(catalog::sqrt2_example());
    EXPECT_TRUE(s.is_perfect && s.is_alpha_perfect);
    const Perfectness b = perfectness(catalog::cross_alpha_zero());
    EXPECT_TRUE(b.is_perfect);
    EXPECT_FALSE(b.is_alpha_perfect);
    const HomAlgebra Rc = catalog::diag_twist();
    const Perfectness c = perfectness(Rc);
    EXPECT_FALSE(c.is_perfect || c.is_alpha_perfect);
    EXPECT_EQ(rank(Rc.alpha()), 2u);
    EXPECT_TRUE(perfectness(catalog::counterexample_K()).is_perfect);
}

TEST(Quotient, TrivialCases) {
    const HomAlgebra K = catalog::counterexample_K();
    const QuotientAlgebra same = quotient_algebra(K, Subspace::zero(3));
    EXPECT_EQ(same.algebra.structure(), K.structure());
    EXPECT_EQ(quotient_algebra(K, Subspace::full(3)).algebra.dim(), 0u);
    EXPECT_THROW(quotient_algebra(K, span_of(K, "span{a3}")), NotAnIdeal);
}

TEST(Quotient, KModuloCenterIsL) {
    const HomAlgebra K = catalog::counterexample_K();
    const QuotientAlgebra Q = quotient_algebra(K, span_of(K, "span{a1}"));
    ASSERT_EQ(Q.algebra.dim(), 2u);
    EXPECT_TRUE(validate(Q.algebra).ok());
    // free columns a2, a3 map to b1, b2
    const HomAlgebra L = catalog::counterexample_L();
    EXPECT_NO_THROW(make_hom("iso", Q.algebra, L, Mat::identity(2)));
    EXPECT_EQ(Q.algebra.structure(), L.structure());
}

TEST(Quotient, ProjectionIsHomomorphism) {
    random::Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        const QuotientAlgebra Q = quotient_algebra(L, derived(L));
        EXPECT_FALSE(hom_defect(L, Q.algebra, Q.projection).has_value());
        EXPECT_TRUE(Q.algebra.structure().is_zero());
    }
}

TEST(Liezation, Examples) {
    const HomAlgebra so3 = catalog::cross_product();
    EXPECT_EQ(liezation(so3).algebra.dim(), 3u);
    EXPECT_EQ(liezation(catalog::counterexample_L()).algebra.dim(), 0u);
    EXPECT_EQ(liezation(catalog::abelian(2)).algebra.dim(), 2u);
}

TEST(Liezation, QuotientIsAlternating) {
    random::Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        const HomAlgebra Q = liezation(random::random_twisted(rng, 3)).algebra;
        for (std::size_t i = 0; i < Q.dim(); ++i) EXPECT_TRUE(is_zero_vector(Q.bracket_basis(i, i)));
        EXPECT_TRUE(validate(Q).is_hom_lie);
    }
}

TEST(MultiplicativeHull, Examples) {
    const HomAlgebra K = catalog::counterexample_K();
    EXPECT_EQ(multiplicative_hull(K).algebra.dim(), 3u);
    EXPECT_EQ(multiplicative_hull(catalog::cross_product()).algebra.dim(), 3u);
    const QuotientAlgebra h = multiplicative_hull(catalog::swap_square());
    EXPECT_LE(h.algebra.dim(), 1u);
    EXPECT_TRUE(validate(h.algebra).is_multiplicative);
}

TEST(DirectProduct, Examples) {
    const HomAlgebra K = catalog::counterexample_K();
    const HomAlgebra zero = HomAlgebra::abelian(0, Mat(0, 0));
    EXPECT_EQ(direct_product(K, zero).structure(), K.structure());
    const HomAlgebra ab = direct_product(catalog::abelian(2), catalog::abelian(1));
    EXPECT_EQ(ab.dim(), 3u);
    EXPECT_TRUE(ab.structure().is_zero());
}

TEST(DirectProduct, ProjectionFromQuotientTimesL) {
    // (K/span{a1}) x L -> L: the kernel is the first factor, a copy of L with
    // nonzero brackets, so the extension is alpha-central (alpha = 0) but not central.
    const HomAlgebra K = catalog::counterexample_K();
    const HomAlgebra Q = quotient_algebra(K, span_of(K, "span{a1}")).algebra;
    const HomAlgebra L = catalog::counterexample_L();
    const HomAlgebra P = direct_product(Q, L, "P");
    ASSERT_EQ(P.dim(), 4u);
    EXPECT_TRUE(validate(P).ok());
    Mat pr(2, 4);
    pr(0, 2) = Scalar(1);
    pr(1, 3) = Scalar(1);
    const Extension e = make_extension(make_hom("pr", P, L, pr));
    EXPECT_EQ(e.ker.dim(), 2u);
    EXPECT_EQ(e.classification, Centrality::alpha_central_only);
}

TEST(Subalgebra, ClosedAndNotClosed) {
    const HomAlgebra K = catalog::counterexample_K();
    const Subalgebra s = subalgebra(K, span_of(K, "span{a1, a2}"));
    EXPECT_EQ(s.algebra.dim(), 2u);
    EXPECT_TRUE(validate(s.algebra).ok());
    EXPECT_THROW(subalgebra(K, span_of(K, "span{a3}")), PreconditionFailed);
}

TEST(CoRep, TrivialGroundAndSelf) {
    const HomAlgebra K = catalog::counterexample_K();
    EXPECT_TRUE(validate(corep_trivial(K, 2, Mat(2, 2))).ok());
    EXPECT_TRUE(validate(corep_ground(K)).ok());
    const HomCoRep self = corep_self(K);
    EXPECT_TRUE(validate(self).ok());
    const Vector a1 = unit_vector(3, 0);
    EXPECT_TRUE(self.left_by(a1).is_zero());
    EXPECT_TRUE(self.right_by(a1).is_zero());
    EXPECT_TRUE(corep_self(catalog::abelian(2)).is_trivial());
    const HomCoRep empty = corep_trivial(K, 0, Mat(0, 0));
    EXPECT_TRUE(validate(empty).ok());
}

TEST(CoRep, ClassicalSelfRepresentation) {
    random::Rng rng(41);
    for (int t = 0; t < 30; ++t) {
        const HomAlgebra L = random::random_leibniz(rng, 3).algebra;
        EXPECT_TRUE(validate(corep_self(L)).ok());
    }
}

TEST(CoRep, CorruptedActionFailsAxiom1) {
    const HomAlgebra so3 = catalog::cross_product();
    const HomCoRep self = corep_self(so3);
    Mat bad = self.left(0);
    bad(0, 0) += Scalar(1);
    const CoRepReport r = validate(self.with_left(0, bad));
    ASSERT_FALSE(r.ok());
    bool axiom1 = false;
    for (const auto& f : r.failures) axiom1 = axiom1 || f.axiom == "axiom1";
    EXPECT_TRUE(axiom1);
    EXPECT_NE(describe(r.failures.front(), self).find(" at ("), std::string::npos);
}

TEST(CoRep, RandomCorpusValid) {
    random::Rng rng(43);
    for (int t = 0; t < 60; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        const HomCoRep C = random::random_corep(rng, L);
        EXPECT_LE(C.mdim(), 2u);
        EXPECT_TRUE(validate(C).ok());
    }
}

TEST(Random, DeterministicForSeed) {
    random::Rng a(5), b(5);
    for (int t = 0; t < 10; ++t) {
        const HomAlgebra x = random::random_twisted(a, 3), y = random::random_twisted(b, 3);
        EXPECT_EQ(x.structure(), y.structure());
        EXPECT_EQ(x.alpha(), y.alpha());
    }
}

TEST(Random, ChangeOfBasisPreservesValidity) {
    random::Rng rng(47);
    const HomAlgebra S = catalog::sqrt2_example();
    for (int t = 0; t < 10; ++t) {
        const Mat P = random::random_invertible(rng, 3);
        const HomAlgebra T = random::change_basis(S, P);
        EXPECT_TRUE(validate(T).ok());
        EXPECT_EQ(random::change_basis(T, random::inverse(P)).structure(), S.structure());
    }
}
