#pragma once

#include <string>
#include <vector>

#include "homuce/chain.hpp"
#include "homuce/document.hpp"
#include "homuce/lie_complex.hpp"
#include "homuce/uce.hpp"

namespace homuce {

struct ExpectationResult {
    std::string subject;  // document, homomorphism or "outer.inner"
    std::string key;
    std::string expected;
    std::string actual;
    bool matches = false;
    bool reference = false;  // recorded claim rather than an expected computation
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline bool degree_key(const std::string& key, const std::string& stem, std::size_t& n) {
    if (key.size() <= stem.size() || key.rfind(stem, 0) != 0) return false;
    const std::string rest = key.substr(stem.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos) return false;
    n = std::stoul(rest);
    return true;
}

inline std::string actual_for_algebra(const AlgebraDocument& d, const std::string& key, const ChainOptions& opt) {
    const HomAlgebra L = to_algebra(d);
    std::size_t n = 0;
    if (key == "valid") return yes_no(validate(L).ok());
    if (key == "multiplicative") return yes_no(validate(L).is_multiplicative);
    if (key == "hom_lie") return yes_no(validate(L).is_hom_lie);
    if (key == "center") return format_span(center(L), L.labels());
    if (key == "perfect") return yes_no(perfectness(L).is_perfect);
    if (key == "alpha_perfect") return yes_no(perfectness(L).is_alpha_perfect);
    if (key == "alpha_surjective") return yes_no(rank(L.alpha()) == L.dim());
    if (key == "alpha_commutator") {
        const Subspace a = alpha_image(L);
        return format_span(commutator(L, a, a), L.labels());
    }
    if (key == "uce_kernel_dim") return std::to_string(uce_leibniz(L).kernel_dim());
    if (key == "corep_valid") {
        const auto C = to_corep(d);
        if (!C) throw PreconditionFailed(d.name + " has no corep block");
        return yes_no(validate(*C).ok());
    }
    if (degree_key(key, "hl", n)) return std::to_string(homology(corep_ground(L), n, opt).dim);
    if (degree_key(key, "h", n)) return std::to_string(lie_homology(L, n, opt).dim);
    throw ParseError("a known expectation key (got '" + key + "')", 1, 1);
}

inline bool same_value(const std::string& key, const std::string& expected, const std::string& actual,
                       const std::vector<std::string>& labels, long field) {
    if (expected.rfind("span", 0) == 0 && actual.rfind("span", 0) == 0 && !labels.empty() && key != "classification")
        return parse_span(expected, labels, field) == parse_span(actual, labels, field);
    return expected == actual;
}

}  // namespace detail

/// Evaluates every expect/reference entry of d (and of its homomorphisms and
/// compositions) against the algebras of lib.
inline std::vector<ExpectationResult> evaluate(const Library& lib, const AlgebraDocument& d,
                                               const ChainOptions& opt = {}) {
    std::vector<ExpectationResult> out;
    auto run = [&](const std::string& subject, const Expectations& e, bool reference, auto&& actual_of,
                   const std::vector<std::string>& labels) {
        for (const auto& [key, expected] : e) {
            const std::string actual = actual_of(key);
            out.push_back({subject, key, expected, actual,
                           detail::same_value(key, expected, actual, labels, d.field), reference});
        }
    };
    auto alg = [&](const std::string& key) { return detail::actual_for_algebra(d, key, opt); };
    run(d.name, d.expect, false, alg, d.labels);
    run(d.name, d.reference, true, alg, d.labels);
    for (const auto& h : d.homs) {
        auto hom_actual = [&](const std::string& key) -> std::string {
            const Hom f = lib.hom(h.name);
            if (key == "classification") return to_string(make_extension(f).classification);
            if (key == "surjective") return detail::yes_no(rank(f.matrix) == f.dst.dim());
            throw ParseError("a known homomorphism expectation key (got '" + key + "')", 1, 1);
        };
        run(h.name, h.expect, false, hom_actual, {});
        run(h.name, h.reference, true, hom_actual, {});
    }
    for (const auto& c : d.compositions) {
        auto comp_actual = [&](const std::string& key) -> std::string {
            const Extension e = compose(make_extension(lib.hom(c.outer)), make_extension(lib.hom(c.inner)));
            if (key == "classification") return to_string(e.classification);
            throw ParseError("a known composition expectation key (got '" + key + "')", 1, 1);
        };
        const std::string subject = c.outer + "." + c.inner;
        run(subject, c.expect, false, comp_actual, {});
        run(subject, c.reference, true, comp_actual, {});
    }
    return out;
}

}  // namespace homuce
