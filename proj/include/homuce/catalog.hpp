#pragma once

#include <array>
#include <string>
#include <vector>

#include "homuce/hom.hpp"
#include "homuce/text.hpp"

namespace homuce {

struct BracketText {
    std::string left, right, value;
};

/// Algebra from readable text: brackets as label pairs with linear
/// combinations, alpha as matrix rows of scalar literals.
inline HomAlgebra algebra_from_text(std::string name, std::vector<std::string> labels,
                                    const std::vector<BracketText>& brackets,
                                    const std::vector<std::vector<std::string>>& alpha_rows,
                                    Flavor flavor = Flavor::leibniz, long field_d = 0) {
    const std::size_t n = labels.size();
    auto index = [&](const std::string& l) {
        for (std::size_t i = 0; i < n; ++i)
            if (labels[i] == l) return i;
        throw UnknownLabel(l);
    };
    std::vector<HomAlgebra::Entry> entries;
    for (const auto& b : brackets)
        entries.push_back({index(b.left), index(b.right), parse_linear(b.value, labels, field_d)});
    Mat alpha(n, n);
    if (alpha_rows.size() != n) throw DimensionMismatch("alpha must have one row per basis element");
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha_rows[i].size() != n) throw DimensionMismatch("alpha row length");
        for (std::size_t j = 0; j < n; ++j) alpha(i, j) = parse_scalar(alpha_rows[i][j], field_d);
    }
    return HomAlgebra::from_brackets(std::move(name), std::move(labels), entries, std::move(alpha), flavor);
}

inline std::vector<std::vector<std::string>> zero_rows(std::size_t n) {
    return std::vector<std::vector<std::string>>(n, std::vector<std::string>(n, "0"));
}
inline std::vector<std::vector<std::string>> identity_rows(std::size_t n) {
    auto rows = zero_rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = "1";
    return rows;
}

namespace catalog {

/// 2-dim base: [b2,b1] = b2, [b2,b2] = b1, alpha = 0.
inline HomAlgebra counterexample_L() {
    return algebra_from_text("L", {"b1", "b2"}, {{"b2", "b1", "b2"}, {"b2", "b2", "b1"}}, zero_rows(2));
}

/// 3-dim: [a2,a2] = a1, [a3,a2] = a3, [a3,a3] = a2, alpha = 0.
inline HomAlgebra counterexample_K() {
    return algebra_from_text("K", {"a1", "a2", "a3"}, {{"a2", "a2", "a1"}, {"a3", "a2", "a3"}, {"a3", "a3", "a2"}},
                             zero_rows(3));
}

/// 4-dim: [e3,e3] = e2, [e4,e3] = e4, [e4,e4] = e3, alpha = 0; the repaired
/// variant adds [e4,e2] = e1.
inline HomAlgebra counterexample_F(bool repaired = false) {
    std::vector<BracketText> br{{"e3", "e3", "e2"}, {"e4", "e3", "e4"}, {"e4", "e4", "e3"}};
    if (repaired) br.push_back({"e4", "e2", "e1"});
    return algebra_from_text(repaired ? "F_repaired" : "F", {"e1", "e2", "e3", "e4"}, br, zero_rows(4));
}

/// pi : K -> L, a1 -> 0, a2 -> b1, a3 -> b2.
inline Hom pi() {
    Mat m{{0, 1, 0}, {0, 0, 1}};
    return make_hom("pi", counterexample_K(), counterexample_L(), m);
}

/// rho : F -> K, e1 -> 0, e2 -> a1, e3 -> a2, e4 -> a3.
inline Hom rho(bool repaired = false) {
    Mat m{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    return make_hom(repaired ? "rho_repaired" : "rho", counterexample_F(repaired), counterexample_K(), m);
}

/// Cross-product brackets [a1,a2] = a3, [a2,a3] = a1, [a3,a1] = a2.
inline std::vector<BracketText> cross_brackets() {
    return {{"a1", "a2", "a3"}, {"a2", "a1", "-a3"}, {"a2", "a3", "a1"},
            {"a3", "a2", "-a1"}, {"a3", "a1", "a2"}, {"a1", "a3", "-a2"}};
}

/// Cross product with the symmetric orthogonal twist
/// [[√2/2, 0, √2/2], [0, -1, 0], [√2/2, 0, -√2/2]] over Q(√2).
inline HomAlgebra sqrt2_example() {
    const std::string h = "1/2*sqrt(2)";
    return algebra_from_text("S", {"a1", "a2", "a3"}, cross_brackets(),
                             {{h, "0", h}, {"0", "-1", "0"}, {h, "0", "-" + h}}, Flavor::lie, 2);
}

/// [a1,a2] = a3, [a1,a3] = a2, [a2,a3] = a1 (antisymmetric), alpha = 0.
inline HomAlgebra cross_alpha_zero() {
    return algebra_from_text("Rb", {"a1", "a2", "a3"},
                             {{"a1", "a2", "a3"}, {"a2", "a1", "-a3"}, {"a1", "a3", "a2"},
                              {"a3", "a1", "-a2"}, {"a2", "a3", "a1"}, {"a3", "a2", "-a1"}},
                             zero_rows(3), Flavor::lie);
}

/// [a1,a2] = -[a2,a1] = a2, alpha = diag(1, 2).
inline HomAlgebra diag_twist() {
    return algebra_from_text("Rc", {"a1", "a2"}, {{"a1", "a2", "a2"}, {"a2", "a1", "-a2"}},
                             {{"1", "0"}, {"0", "2"}}, Flavor::lie);
}

/// Cross product with alpha = Id (a perfect Lie algebra).
inline HomAlgebra cross_product() {
    return algebra_from_text("so3", {"a1", "a2", "a3"}, cross_brackets(), identity_rows(3), Flavor::lie);
}

inline HomAlgebra abelian(std::size_t n, bool identity_twist = true) {
    return algebra_from_text("ab" + std::to_string(n), HomAlgebra::default_labels("e", n), {},
                             identity_twist ? identity_rows(n) : zero_rows(n), Flavor::lie);
}

/// 2-dim [b1,b1] = b2 with alpha swapping b1 and b2; fails multiplicativity.
inline HomAlgebra swap_square() {
    return algebra_from_text("Sw", {"b1", "b2"}, {{"b1", "b1", "b2"}}, {{"0", "1"}, {"1", "0"}});
}

/// All algebras of the catalog that satisfy the Hom-Leibniz identity.
inline std::vector<HomAlgebra> all() {
    return {counterexample_L(), counterexample_K(), counterexample_F(false), counterexample_F(true),
            sqrt2_example(),    cross_alpha_zero(),         diag_twist(),              cross_product(),
            abelian(2)};
}

}  // namespace catalog

}  // namespace homuce
