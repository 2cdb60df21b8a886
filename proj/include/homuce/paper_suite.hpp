#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "homuce/audit.hpp"
#include "homuce/catalog.hpp"
#include "homuce/compare.hpp"
#include "homuce/expectations.hpp"
#include "homuce/oracle/classical_leibniz.hpp"
#include "homuce/random.hpp"

namespace homuce {

enum class LineStatus { pass, fail, discrepancy, note };

inline const char* to_string(LineStatus s) {
    switch (s) {
        case LineStatus::pass: return "PASS";
        case LineStatus::fail: return "FAIL";
        case LineStatus::discrepancy: return "DISCREPANCY";
        case LineStatus::note: return "NOTE";
    }
    return "?";
}

struct SuiteLine {
    LineStatus status;
    std::string text;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<SuiteLine> lines;

    bool passed() const {
        return std::none_of(lines.begin(), lines.end(), [](const SuiteLine& l) { return l.status == LineStatus::fail; });
    }
    void check(bool ok, std::string text) { lines.push_back({ok ? LineStatus::pass : LineStatus::fail, std::move(text)}); }
    void note(std::string text) { lines.push_back({LineStatus::note, std::move(text)}); }
    void discrepancy(std::string text) { lines.push_back({LineStatus::discrepancy, std::move(text)}); }
};

struct SuiteOptions {
    std::string fixture_dir;
    std::uint64_t seed = 20240917;
    std::size_t random_count = 200;
    std::size_t regression_count = 20;
    ChainOptions chain;
};

struct SuiteReport {
    std::vector<CriterionResult> criteria;
    bool ok() const {
        return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed(); });
    }
};

/// Every *.yaml document in dir, files in name order.
inline Library load_fixture_library(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw PreconditionFailed("fixture directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".yaml") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<AlgebraDocument> docs;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        for (auto& d : parse_documents(ss.str())) docs.push_back(std::move(d));
    }
    return Library(std::move(docs));
}

namespace suite {

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline bool same_algebra(const HomAlgebra& a, const HomAlgebra& b) {
    return a.labels() == b.labels() && a.structure() == b.structure() && a.alpha() == b.alpha() &&
           a.flavor() == b.flavor();
}

/// Expect entries become PASS/FAIL lines, reference entries NOTE or DISCREPANCY lines.
inline void report_expectations(CriterionResult& r, const Library& lib, const std::string& doc) {
    for (const auto& e : evaluate(lib, lib.document(doc))) {
        const std::string head = e.subject + " " + e.key + ": computed " + e.actual;
        if (!e.reference) {
            r.check(e.matches, head + (e.matches ? "" : ", fixture expects " + e.expected));
        } else if (e.matches) {
            r.note(head + ", agrees with the recorded claim");
        } else {
            r.discrepancy(head + ", recorded claim " + e.expected);
        }
    }
}

inline std::vector<HomCoRep> random_corpus(const SuiteOptions& opt) {
    random::Rng rng(opt.seed);
    std::vector<HomCoRep> out;
    for (std::size_t k = 0; k < opt.random_count; ++k) {
        HomAlgebra L = random::random_twisted(rng, 3);
        out.push_back(random::random_corep(rng, L));
    }
    return out;
}

inline oracle::Constants constants_of(const HomAlgebra& L) {
    const std::size_t n = L.dim();
    oracle::Constants c(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& s = L.constant(i, j, k);
                if (!s.is_rational()) throw FieldMismatch("oracle works over the rationals");
                c[i][j][k] = s.rational_part();
            }
    return c;
}

inline oracle::Module module_of(const HomCoRep& C) {
    oracle::Module M = oracle::trivial_module(C.ldim(), C.mdim());
    for (std::size_t x = 0; x < C.ldim(); ++x)
        for (std::size_t m = 0; m < C.mdim(); ++m)
            for (std::size_t k = 0; k < C.mdim(); ++k) {
                const Scalar& a = C.left(x)(k, m);
                const Scalar& b = C.right(x)(k, m);
                if (!a.is_rational() || !b.is_rational()) throw FieldMismatch("oracle works over the rationals");
                M.lam[x][m][k] = a.rational_part();
                M.rho[m][x][k] = b.rational_part();
            }
    return M;
}

}  // namespace suite

/// Counterexample reproduction: L, K, F and the repaired F.
inline CriterionResult criterion_counterexamples(const Library& lib) {
    CriterionResult r{1, "counterexample reproduction", {}};
    const std::pair<const char*, HomAlgebra> pairs[] = {{"L", catalog::counterexample_L()},
                                                        {"K", catalog::counterexample_K()},
                                                        {"F", catalog::counterexample_F(false)},
                                                        {"F_repaired", catalog::counterexample_F(true)}};
    for (const auto& [name, cat] : pairs)
        r.check(suite::same_algebra(lib.algebra(name), cat), std::string(name) + " fixture matches the catalog presentation");
    for (const char* name : {"L", "K", "F", "F_repaired"})
        r.check(validate(lib.algebra(name)).ok(), std::string(name) + " satisfies the Hom-Leibniz identity");
    const Extension pi = make_extension(lib.hom("pi")), rho = make_extension(lib.hom("rho"));
    r.check(pi.is_central(), "pi : K -> L is " + std::string(to_string(pi.classification)));
    r.check(rho.is_central(), "rho : F -> K is " + std::string(to_string(rho.classification)));
    const HomAlgebra K = lib.algebra("K");
    r.check(format_span(center(K), K.labels()) == "span{a1}", "Z(K) = " + format_span(center(K), K.labels()));
    r.check(perfectness(K).is_perfect, "K is perfect");
    for (const char* doc : {"K", "F", "F_repaired"}) suite::report_expectations(r, lib, doc);
    return r;
}

/// d o d = 0 and the five Cartan identities on a random corpus.
inline CriterionResult criterion_homology_engine(const SuiteOptions& opt) {
    CriterionResult r{2, "homology engine", {}};
    std::size_t square_fail = 0, checks = 0, failures = 0, nontrivial = 0, invalid = 0;
    std::vector<std::size_t> dims(4);
    for (const auto& C : suite::random_corpus(opt)) {
        ++dims[C.ldim()];
        if (!C.is_trivial()) ++nontrivial;
        if (!validate(C.base()).ok() || !validate(C).ok()) ++invalid;
        if (!squares_to_zero(C, 4, opt.chain)) ++square_fail;
        const CartanReport cr = cartan_verify(C, 3, opt.chain);
        checks += cr.checked;
        failures += cr.failures.size();
    }
    r.note(std::to_string(opt.random_count) + " twisted algebras (dim 1/2/3: " + std::to_string(dims[1]) + "/" +
           std::to_string(dims[2]) + "/" + std::to_string(dims[3]) + "), " + std::to_string(nontrivial) +
           " with nontrivial coefficients");
    r.check(invalid == 0, "corpus validity: " + std::to_string(invalid) + " invalid algebras or coefficient modules");
    r.check(square_fail == 0, "d_n d_{n+1} = 0 for n <= 3: " + std::to_string(square_fail) + " failures");
    r.check(failures == 0, "Cartan identities (a)-(e), n <= 3: " + std::to_string(checks) + " checks, " +
                               std::to_string(failures) + " failures");
    return r;
}

/// Closed forms for HL_0 and HL_1 against the complex.
inline CriterionResult criterion_closed_forms(const SuiteOptions& opt) {
    CriterionResult r{3, "closed forms", {}};
    std::size_t n0 = 0, bad0 = 0, n1 = 0, bad1 = 0;
    for (const auto& C : suite::random_corpus(opt)) {
        for (const HomCoRep& M : {C, corep_ground(C.base())}) {
            ++n0;
            if (hl0_closed_form(M) != homology(M, 0, opt.chain).dim) ++bad0;
            if (M.is_trivial()) {
                ++n1;
                if (hl1_trivial_closed_form(M) != homology(M, 1, opt.chain).dim) ++bad1;
            }
        }
    }
    r.check(bad0 == 0, "HL_0 = M / M_L on " + std::to_string(n0) + " modules: " + std::to_string(bad0) + " mismatches");
    r.check(bad1 == 0, "HL_1 = (M ⊗ L) / (α_M(M) ⊗ [L,L]) on " + std::to_string(n1) + " trivial modules: " +
                           std::to_string(bad1) + " mismatches");
    return r;
}

/// HL_n(L, L) against HL_{n+1}(L, K) for the catalog.
inline CriterionResult criterion_degree_shift(const SuiteOptions& opt) {
    CriterionResult r{4, "degree shift", {}};
    bool any_commuting = false;
    for (const auto& L : catalog::all()) {
        std::vector<std::size_t> lhs, rhs;
        bool ok = true;
        for (std::size_t n = 0; n <= 2; ++n) {
            const DegreeShiftReport d = degree_shift_check(L, n, opt.chain);
            lhs.push_back(d.lhs_dim);
            rhs.push_back(d.rhs_dim);
            ok = ok && d.lhs_dim == d.rhs_dim && d.signed_chain_map && d.map_is_iso;
            any_commuting = any_commuting || (d.minus_id_commutes && n > 0 && d.lhs_dim > 0);
        }
        r.check(ok, L.name() + ": dim HL_n(L,L) = " + suite::join(lhs) + ", dim HL_{n+1}(L,K) = " + suite::join(rhs) +
                        " (n = 0..2), chain isomorphism verified");
    }
    r.note("the identification -Id anticommutes with the differentials; (-1)^(n+1) Id is the chain map" +
           std::string(any_commuting ? "" : " (plain -Id is a chain map only where the differentials vanish)"));
    return r;
}

/// dim Ker u = dim HL_2 on K and L through both code paths.
inline CriterionResult criterion_kernel_vs_homology(const Library& lib, const SuiteOptions& opt) {
    CriterionResult r{5, "Ker u = HL_2", {}};
    for (const auto& [name, want] : {std::pair<const char*, std::size_t>{"K", 6}, {"L", 2}}) {
        const HomAlgebra A = lib.algebra(name);
        const std::size_t ker = uce_leibniz(A).kernel_dim();
        const std::size_t hl2 = homology(corep_ground(A), 2, opt.chain).dim;
        r.check(ker == hl2 && hl2 == want, std::string(name) + ": dim Ker u = " + std::to_string(ker) +
                                               ", dim HL_2 = " + std::to_string(hl2) + ", expected " +
                                               std::to_string(want));
        const AuditReport a = theorem_audit(A, {false, opt.chain});
        for (const auto& c : a.checks) r.check(c.passed, std::string(name) + " audit, " + c.name + ": " + c.detail);
    }
    const HomAlgebra S = lib.algebra("S");
    const UceResult us = uce_alpha(S, UceMode::leibniz);
    const AuditReport mid = theorem_audit(us.algebra.renamed("uce_alpha(S)"), {true, opt.chain});
    const AuditCheck& last = mid.checks.back();
    r.check(last.passed, "middle of uce_alpha^Leib(S) -> S, " + last.name + ": " + last.detail);
    const UceResult uk = uce_leibniz(lib.algebra("K"));
    const ChainOptions& co = opt.chain;
    const HomCoRep g = corep_ground(uk.algebra);
    r.note("uce(K) -> K is universal central but K (alpha = 0) is not alpha-perfect; its middle term has HL_1 = " +
           std::to_string(homology(g, 1, co).dim) + ", HL_2 = " + std::to_string(homology(g, 2, co).dim) +
           " (outside the alpha-central vanishing statement)");
    return r;
}

/// alpha = Id against an independent classical Leibniz homology computation.
inline CriterionResult criterion_classical_regression(const SuiteOptions& opt) {
    CriterionResult r{6, "classical regression", {}};
    random::Rng rng(opt.seed + 6);
    std::size_t mism = 0, uce_mism = 0, self_mism = 0;
    std::vector<std::size_t> totals(3), self_totals(3);
    for (std::size_t k = 0; k < opt.regression_count; ++k) {
        const HomAlgebra A = random::random_leibniz(rng, 3).algebra;
        const auto c = suite::constants_of(A);
        const HomCoRep ground = corep_ground(A);
        for (std::size_t n = 0; n <= 2; ++n) {
            const std::size_t ours = homology(ground, n, opt.chain).dim;
            const std::size_t theirs = oracle::leibniz_homology(c, n);
            totals[n] += theirs;
            if (ours != theirs) ++mism;
        }
        const HomCoRep self = corep_self(A);
        const oracle::Module M = suite::module_of(self);
        for (std::size_t n = 0; n <= 2; ++n) {
            const std::size_t theirs = oracle::leibniz_homology(c, M, n);
            self_totals[n] += theirs;
            if (homology(self, n, opt.chain).dim != theirs) ++self_mism;
        }
        if (uce_leibniz(A).kernel_dim() != oracle::leibniz_homology(c, 2)) ++uce_mism;
    }
    r.check(mism == 0, "HL_n (n <= 2) on " + std::to_string(opt.regression_count) + " Leibniz algebras: " +
                           std::to_string(mism) + " mismatches (summed oracle dims " + suite::join(totals) + ")");
    r.check(self_mism == 0, "HL_n(A, A) (n <= 2) with the adjoint co-representation: " + std::to_string(self_mism) +
                                " mismatches (summed oracle dims " + suite::join(self_totals) + ")");
    r.check(uce_mism == 0, "dim Ker u = classical HL_2: " + std::to_string(uce_mism) + " mismatches");
    return r;
}

/// The cross product with the orthogonal twist over Q(√2).
inline CriterionResult criterion_sqrt2_example(const Library& lib) {
    CriterionResult r{7, "twisted cross product over Q(sqrt 2)", {}};
    const AlgebraDocument& d = lib.document("S");
    const HomAlgebra S = to_algebra(d);
    r.check(suite::same_algebra(S, catalog::sqrt2_example()) && d.field == 2,
            "fixture parsed over Q(sqrt(2)) and matches the catalog presentation");
    const ValidationReport v = validate(S);
    r.check(v.ok() && v.is_multiplicative && v.is_hom_lie, "multiplicative Hom-Lie algebra");
    const Perfectness p = perfectness(S);
    r.check(p.is_perfect && p.is_alpha_perfect, std::string("perfectness = (") + (p.is_perfect ? "true" : "false") +
                                                    ", " + (p.is_alpha_perfect ? "true" : "false") + ")");
    const UceResult ul = uce_alpha(S, UceMode::leibniz), uw = uce_alpha(S, UceMode::lie);
    r.check(ul.surjective && uw.surjective, "uce_alpha built in both modes: dim " + std::to_string(ul.algebra.dim()) +
                                                " (Leibniz), " + std::to_string(uw.algebra.dim()) + " (Lie)");
    const ComparisonReport c = compare_lie_leib(S);
    r.check(c.u_commutes, "u_alpha o Phi = U_alpha");
    r.check(c.phi_is_hom && c.phi_surjective && c.phi_kernel_central &&
                c.leib_dim - c.lie_dim == c.phi_kernel_dim,
            "Phi surjective homomorphism with central kernel of dim " + std::to_string(c.phi_kernel_dim));
    r.check(c.liezation_bijective, "Liezation of uce_alpha^Leib -> uce_alpha^Lie is bijective (dim " +
                                       std::to_string(c.liezation_dim) + ")");
    return r;
}

/// Degenerate twists: cross product with alpha = 0 and the diag(1, 2) twist.
inline CriterionResult criterion_degenerate_twists(const Library& lib) {
    CriterionResult r{8, "degenerate twists", {}};
    const HomAlgebra Rb = lib.algebra("Rb"), Rc = lib.algebra("Rc");
    r.check(suite::same_algebra(Rb, catalog::cross_alpha_zero()) && suite::same_algebra(Rc, catalog::diag_twist()),
            "fixtures match the catalog presentations");
    const Perfectness pb = perfectness(Rb);
    r.check(validate(Rb).ok() && pb.is_perfect && !pb.is_alpha_perfect, "alpha = 0 cross product: perfect, not alpha-perfect");
    const Subspace a = alpha_image(Rc);
    const Subspace comm = commutator(Rc, a, a);
    r.check(validate(Rc).ok() && rank(Rc.alpha()) == Rc.dim(), "diag(1,2) twist: alpha surjective");
    r.check(format_span(comm, Rc.labels()) == "span{a2}" && comm.dim() < Rc.dim(),
            "[alpha L, alpha L] = " + format_span(comm, Rc.labels()) + " != L");
    return r;
}

/// Lifts of universal constructions over central extensions of the same base.
inline CriterionResult criterion_lifts(const Library& lib) {
    CriterionResult r{9, "lift machinery", {}};
    const HomAlgebra L = lib.algebra("L"), K = lib.algebra("K"), S = lib.algebra("S"), so3 = catalog::cross_product();
    const UceResult uL = uce_leibniz(L), uK = uce_leibniz(K), uSl = uce_alpha(S, UceMode::leibniz),
                    uSw = uce_alpha(S, UceMode::lie), uso = uce_leibniz(so3), usow = uce_lie(so3);
    struct Pair {
        std::string label;
        const UceResult* U;
        Extension E;
    };
    std::vector<Pair> pairs{
        {"uce(L) over pi", &uL, make_extension(lib.hom("pi"))},
        {"uce(L) over pi.rho", &uL, compose(make_extension(lib.hom("pi")), make_extension(lib.hom("rho")))},
        {"uce(L) over Id", &uL, make_extension(identity_hom(L))},
        {"uce(L) over u_L", &uL, make_extension(uL.u)},
        {"uce(K) over rho", &uK, make_extension(lib.hom("rho"))},
        {"uce(K) over rho_repaired", &uK, make_extension(lib.hom("rho_repaired"))},
        {"uce(K) over Id", &uK, make_extension(identity_hom(K))},
        {"uce(K) over u_K", &uK, make_extension(uK.u)},
        {"uce_alpha^Leib(S) over Id", &uSl, make_extension(identity_hom(S))},
        {"uce_alpha^Lie(S) over Id", &uSw, make_extension(identity_hom(S))},
        {"uce_alpha^Lie(S) over u_alpha", &uSw, make_extension(uSw.u)},
        {"uce(so3) over Id", &uso, make_extension(identity_hom(so3))},
        {"uce(so3) over u_Lie", &uso, make_extension(usow.u)},
    };
    for (const auto& p : pairs) {
        try {
            const Hom lift = lift_over(*p.U, p.E);
            bool unique = true;
            // a second lift from a different choice of preimages
            Mat S1(p.E.middle().dim(), p.E.base().dim());
            for (std::size_t i = 0; i < S1.cols(); ++i) {
                Vector c = *particular_solution(p.E.pi.matrix, unit_vector(S1.cols(), i));
                const auto kb = p.E.ker.basis();
                for (std::size_t t = 0; t < kb.size(); ++t)
                    c = axpy(Scalar(static_cast<long>((i + 2 * t) % 3) - 1), kb[t], c);
                S1.set_column(i, c);
            }
            unique = detail::lift_matrix(*p.U, p.E, S1) == lift.matrix;
            r.check(p.E.pi.matrix * lift.matrix == p.U->u.matrix && unique,
                    p.label + ": lift exists, pi o lift = u, independent of preimages");
        } catch (const Error& e) {
            r.check(false, p.label + ": " + e.what());
        }
    }
    // the identity over Id: lift of uce(K) over Id_K equals u_K
    r.check(lift_over(uK, make_extension(identity_hom(K))).matrix == uK.u.matrix, "lift of uce(K) over Id_K equals u_K");
    return r;
}

/// Criteria 1-9 in order.
inline SuiteReport run_paper_suite(const SuiteOptions& opt) {
    const Library lib = load_fixture_library(opt.fixture_dir);
    SuiteReport rep;
    rep.criteria.push_back(criterion_counterexamples(lib));
    rep.criteria.push_back(criterion_homology_engine(opt));
    rep.criteria.push_back(criterion_closed_forms(opt));
    rep.criteria.push_back(criterion_degree_shift(opt));
    rep.criteria.push_back(criterion_kernel_vs_homology(lib, opt));
    rep.criteria.push_back(criterion_classical_regression(opt));
    rep.criteria.push_back(criterion_sqrt2_example(lib));
    rep.criteria.push_back(criterion_degenerate_twists(lib));
    rep.criteria.push_back(criterion_lifts(lib));
    return rep;
}

inline std::string format_text(const SuiteReport& rep) {
    std::string out;
    for (const auto& c : rep.criteria) {
        out += "criterion " + std::to_string(c.id) + " (" + c.title + "): " + (c.passed() ? "PASS" : "FAIL") + "\n";
        for (const auto& l : c.lines) out += std::string("  ") + to_string(l.status) + " " + l.text + "\n";
    }
    out += std::string("paper-suite: ") + (rep.ok() ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace homuce
