#include <gtest/gtest.h>

#include <random>

#include "homuce/index.hpp"
#include "homuce/matrix.hpp"
#include "homuce/subspace.hpp"
#include "homuce/text.hpp"

using namespace homuce;

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }
Scalar s2(long a, long b) { return Scalar(Rational(a), Rational(b), 2); }

Mat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, bool sqrt2 = false) {
    std::uniform_int_distribution<long> d(-2, 2);
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (d(rng) == 0) continue;
            m(i, j) = sqrt2 ? s2(d(rng), d(rng)) : q(d(rng), 1 + (d(rng) + 2) % 3);
        }
    return m;
}

}  // namespace

TEST(Scalar, QuadraticFieldArithmetic) {
    const Scalar r2 = Scalar::sqrt_of(2);
    EXPECT_EQ(r2 * r2, q(2));
    EXPECT_EQ((q(1, 2) * r2) * (q(1, 2) * r2), q(1, 2));
    EXPECT_EQ(s2(1, 1) * s2(1, -1), q(-1));
    EXPECT_EQ(s2(3, 2).inverse() * s2(3, 2), q(1));
    EXPECT_TRUE((r2 - r2).is_rational());
    EXPECT_EQ((r2 - r2).radicand(), 0);
}

TEST(Scalar, MixingRadicandsThrows) {
    EXPECT_THROW(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), FieldMismatch);
    EXPECT_THROW(Scalar::sqrt_of(4), FieldMismatch);
    EXPECT_NO_THROW(Scalar::sqrt_of(3) + q(1, 2));
}

TEST(Scalar, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 200; ++t) {
        const Scalar x(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))), 2);
        const Scalar y(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))), 2);
        const Scalar z(Rational(d(rng)), Rational(d(rng)), 2);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        if (!y.is_zero()) EXPECT_EQ((x * y) / y, x);
        Scalar acc = z;
        acc.add_mul(x, y);
        EXPECT_EQ(acc, z + x * y);
    }
}

TEST(Text, ScalarGrammar) {
    EXPECT_EQ(parse_scalar("1/2*sqrt(2)", 2), q(1, 2) * Scalar::sqrt_of(2));
    EXPECT_EQ(parse_scalar("-3/4", 0), q(-3, 4));
    EXPECT_EQ(parse_scalar("1 + 2*sqrt(2)", 2), s2(1, 2));
    EXPECT_EQ(parse_scalar("(1+sqrt(2))*(1-sqrt(2))", 2), q(-1));
    EXPECT_EQ(parse_scalar("4/6", 0), q(2, 3));
}

TEST(Text, ScalarErrorsCarryColumns) {
    try {
        parse_scalar("1/0", 0);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 3);
    }
    EXPECT_THROW(parse_scalar("sqrt(2)", 0), ParseError);
    EXPECT_THROW(parse_scalar("sqrt(3)", 2), ParseError);
    EXPECT_THROW(parse_scalar("1 +", 0), ParseError);
    EXPECT_THROW(parse_scalar("x", 0), ParseError);
}

TEST(Text, LinearCombinations) {
    const std::vector<std::string> labels{"a1", "a2", "a3"};
    const auto v = parse_linear("a1 - 1/2*sqrt(2)*a3 + a1", labels, 2);
    EXPECT_EQ(v[0], q(2));
    EXPECT_TRUE(v[1].is_zero());
    EXPECT_EQ(v[2], q(-1, 2) * Scalar::sqrt_of(2));
    EXPECT_THROW(parse_linear("a4", labels, 0), UnknownLabel);
    EXPECT_THROW(parse_linear("a1*a2", labels, 0), ParseError);
    EXPECT_THROW(parse_linear("a1 + 1", labels, 0), ParseError);
    EXPECT_EQ(parse_linear(format_linear(v, labels), labels, 2), v);
    EXPECT_EQ(format_linear({Scalar(), Scalar(), Scalar()}, labels), "0");
}

TEST(Text, FormatParseRoundTripRandom) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-4, 4);
    const std::vector<std::string> labels{"x", "y'", "z_1"};
    for (int t = 0; t < 100; ++t) {
        Vector v(3);
        for (auto& c : v) c = Scalar(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 3), 2);
        EXPECT_EQ(parse_linear(format_linear(v, labels), labels, 2), v);
    }
}

TEST(Matrix, RrefRankNullSpace) {
    Mat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(rank(m), 2u);
    const auto ns = null_space_basis(m);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_TRUE(is_zero_vector(m.apply(ns[0])));
    auto x = particular_solution(m, Vector{q(6), q(12), q(2)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.apply(*x), (Vector{q(6), q(12), q(2)}));
    EXPECT_FALSE(particular_solution(m, Vector{q(1), q(0), q(0)}).has_value());
}

TEST(Matrix, Kronecker) {
    Mat a{{1, 2}, {0, 1}}, b{{0, 1}, {1, 0}};
    const Mat k = kron(a, b);
    EXPECT_EQ(k.rows(), 4u);
    // (A ⊗ B)(e_0 ⊗ e_1) = A e_0 ⊗ B e_1 = e_0 ⊗ e_0
    EXPECT_EQ(k.column(1), unit_vector(4, 0));
    EXPECT_EQ(k.column(3)[0], q(2));
}

TEST(Matrix, RankNullityProperty) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 6;
        const Mat m = random_matrix(rng, r, c, t % 2 == 0);
        const auto ns = null_space_basis(m);
        EXPECT_EQ(rank(m) + ns.size(), c);
        for (const auto& v : ns) EXPECT_TRUE(is_zero_vector(m.apply(v)));
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(Subspace, SumIntersectionDimensions) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 4;
        const Subspace U = Subspace::image(random_matrix(rng, n, 1 + t % 3, t % 3 == 0));
        const Subspace V = Subspace::image(random_matrix(rng, n, 1 + (t + 1) % 3));
        const Subspace S = U + V, I = U.intersect(V);
        EXPECT_EQ(S.dim() + I.dim(), U.dim() + V.dim());
        EXPECT_TRUE(S.contains(U));
        EXPECT_TRUE(U.contains(I));
        EXPECT_TRUE(V.contains(I));
        for (const auto& b : U.basis()) EXPECT_EQ(U.from_coordinates(U.coordinates(b)), b);
    }
}

TEST(Subspace, QuotientProjectionAndSection) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 5;
        const Subspace W = Subspace::image(random_matrix(rng, n, 1 + t % 3));
        const QuotientSpace Q = quotient(n, W);
        EXPECT_EQ(Q.dim() + W.dim(), n);
        EXPECT_EQ(Q.projection() * Q.section(), Mat::identity(Q.dim()));
        for (const auto& w : W.basis()) EXPECT_TRUE(is_zero_vector(Q.project(w)));
        EXPECT_EQ(kernel(Q.projection()), W);
    }
}

TEST(Subspace, PreimageAndMappedImage) {
    Mat m{{1, 0, 0}, {0, 0, 0}};
    const Subspace target = Subspace::zero(2);
    EXPECT_EQ(preimage(m, target), kernel(m));
    const Subspace img = Subspace::full(3).mapped(m);
    EXPECT_EQ(img.dim(), 1u);
    EXPECT_TRUE(img.contains(unit_vector(2, 0)));
}

TEST(Index, TensorLexicographic) {
    const TensorIndex t = TensorIndex::chains(2, 3, 2);
    EXPECT_EQ(t.size(), 18u);
    EXPECT_EQ(t.flatten({1, 0, 2}), 11u);
    EXPECT_EQ(t.unflatten(11), (MultiIndex{1, 0, 2}));
    for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(t.flatten(t.unflatten(k)), k);
}

TEST(Index, WedgeSignsAndEnumeration) {
    const WedgeIndex w(2, 4);
    EXPECT_EQ(w.size(), 6u);
    EXPECT_EQ(w.unflatten(0), (MultiIndex{0, 1}));
    const auto n = WedgeIndex::normalize({2, 0, 1});
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(n->sign, 1);
    EXPECT_EQ(n->sorted, (MultiIndex{0, 1, 2}));
    EXPECT_EQ(WedgeIndex::normalize({1, 0})->sign, -1);
    EXPECT_FALSE(WedgeIndex::normalize({1, 2, 1}).has_value());
    EXPECT_EQ(WedgeIndex(3, 3).size(), 1u);
}
