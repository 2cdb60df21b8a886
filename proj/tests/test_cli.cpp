#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "homuce/catalog.hpp"
#include "homuce/document.hpp"
#include "homuce/random.hpp"

using namespace homuce;

namespace {

std::string fixture(const std::string& name) { return std::string(HOMUCE_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Captured {
    int status = -1;
    std::string out;
};

Captured run(const std::string& args) {
    Captured c;
    const std::string cmd = std::string("\"") + HOMUCE_CLI + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return c;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, n);
    const int raw = pclose(p);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Document, CounterexampleKParses) {
    const AlgebraDocument d = parse_document(slurp(fixture("counterexample_K.yaml")));
    EXPECT_EQ(d.name, "K");
    EXPECT_EQ(d.field, 0);
    const HomAlgebra K = to_algebra(d);
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 9; ++c) nonzero += !K.structure()(r, c).is_zero();
    EXPECT_EQ(nonzero, 3u);
    EXPECT_EQ(K, catalog::counterexample_K());
    ASSERT_EQ(d.homs.size(), 1u);
    EXPECT_EQ(d.homs[0].dst, "L");
}

TEST(Document, QuadraticFieldFixture) {
    const AlgebraDocument d = parse_document(slurp(fixture("sqrt2_cross.yaml")));
    EXPECT_EQ(d.field, 2);
    const HomAlgebra S = to_algebra(d);
    EXPECT_EQ(S.structure(), catalog::sqrt2_example().structure());
    EXPECT_EQ(S.alpha(), catalog::sqrt2_example().alpha());
    EXPECT_EQ(field_of(S.alpha()), 2);
}

TEST(Document, FixturesRoundTrip) {
    for (const char* f : {"counterexample_L.yaml", "counterexample_K.yaml", "counterexample_F.yaml",
                          "counterexample_F_repaired.yaml", "sqrt2_cross.yaml", "cross_alpha_zero.yaml",
                          "diag_twist.yaml", "so3.yaml", "abelian2.yaml", "self_coefficients_K.yaml"}) {
        const AlgebraDocument d = parse_document(slurp(fixture(f)));
        const std::string once = serialize(d);
        const AlgebraDocument back = parse_document(once);
        EXPECT_EQ(back, d) << f;
        EXPECT_EQ(serialize(back), once) << f;
    }
}

TEST(Document, RandomAlgebrasRoundTrip) {
    random::Rng rng(401);
    for (int t = 0; t < 50; ++t) {
        const HomAlgebra L = random::random_twisted(rng, 3);
        AlgebraDocument d = to_document(L);
        if (t % 3 == 0) d.corep = to_corep_block(random::random_corep(rng, L));
        const AlgebraDocument back = parse_document(serialize(d));
        EXPECT_EQ(back, d);
        EXPECT_EQ(to_algebra(back), L);
    }
}

TEST(Document, MultipleDocumentsAndDefaults) {
    const auto docs = parse_documents("name: A\nlabels: [x]\n---\nname: B\nlabels: [u, v]\nbrackets:\n  - [u, u, v]\n");
    ASSERT_EQ(docs.size(), 2u);
    EXPECT_EQ(to_algebra(docs[0]).alpha(), Mat::identity(1));
    EXPECT_EQ(to_algebra(docs[1]).bracket_basis(0, 0), unit_vector(2, 1));
}

TEST(Document, ErrorLocations) {
    try {
        parse_document("name: X\nlabels: [x, y]\nbrackets:\n  - [x, z, y]\n");
        FAIL();
    } catch (const UnknownLabel& e) {
        EXPECT_EQ(e.label(), "z");
        EXPECT_NE(std::string(e.what()).find("4:9"), std::string::npos);
    }
    try {
        parse_document("name: X\nlabels: [x, y]\nbrackets:\n  - [x, y, 2*x +]\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4);
    }
    try {
        parse_document("name: X\nlabels: [x]\ncolour: red\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(parse_document("name: X\nlabels: [x, y]\nalpha:\n  - [1, 0]\n"), DimensionMismatch);
    EXPECT_THROW(parse_document("name: [X\n"), ParseError);
}

TEST(Document, SpanParsing) {
    const std::vector<std::string> labels{"a1", "a2", "a3"};
    const Subspace s = parse_span("span{a1, a2 + a3}", labels);
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_EQ(parse_span(format_span(s, labels), labels), s);
    EXPECT_TRUE(parse_span("span{}", labels).is_zero());
    EXPECT_THROW(parse_span("a1", labels), ParseError);
}

TEST(Library, ResolvesHomsAcrossDocuments) {
    std::vector<AlgebraDocument> docs;
    for (const char* f : {"counterexample_L.yaml", "counterexample_K.yaml"})
        docs.push_back(parse_document(slurp(fixture(f))));
    const Library lib(docs);
    EXPECT_TRUE(lib.has("K"));
    const Hom pi = lib.hom("pi");
    EXPECT_EQ(pi.matrix, catalog::pi().matrix);
    EXPECT_THROW(lib.document("Q"), UnknownLabel);
}

TEST(Cli, CenterOfK) {
    const Captured c = run("center \"" + fixture("counterexample_K.yaml") + "\"");
    EXPECT_EQ(c.status, 0);
    EXPECT_NE(c.out.find("Z = span{a1}, dim 1"), std::string::npos) << c.out;
}

TEST(Cli, HomologyOfK) {
    const Captured c = run("homology --degree 2 \"" + fixture("counterexample_K.yaml") + "\"");
    EXPECT_EQ(c.status, 0);
    EXPECT_NE(c.out.find("dim HL_2^α = 6"), std::string::npos) << c.out;
}

TEST(Cli, ValidateFailsOnNonAlternatingLieDocument) {
    const std::string path =
        write_temp("homuce_nonalt.yaml", "name: X\nflavor: lie\nlabels: [x, y]\nbrackets:\n  - [x, x, y]\n");
    const Captured c = run("validate \"" + path + "\"");
    EXPECT_EQ(c.status, 1);
    EXPECT_NE(c.out.find("alternating at (x,x)"), std::string::npos) << c.out;
    EXPECT_NE(c.out.find("validate: FAIL"), std::string::npos);
}

TEST(Cli, InputErrorsExitWithTwo) {
    const std::string path = write_temp("homuce_badlabel.yaml", "name: X\nlabels: [x, y]\nbrackets:\n  - [x, z, y]\n");
    const Captured c = run("validate \"" + path + "\"");
    EXPECT_EQ(c.status, 2);
    EXPECT_NE(c.out.find("unknown label 'z' at 4:9"), std::string::npos) << c.out;
    EXPECT_EQ(run("homology /nonexistent/file.yaml").status, 2);
    EXPECT_EQ(run("no-such-command").status, 2);
    EXPECT_EQ(run("lie-homology \"" + fixture("counterexample_K.yaml") + "\"").status, 2);
}

TEST(Cli, JsonOutput) {
    const Captured c = run("center --format json \"" + fixture("counterexample_K.yaml") + "\"");
    EXPECT_EQ(c.status, 0);
    EXPECT_NE(c.out.find("\"command\": \"center\""), std::string::npos) << c.out;
    EXPECT_NE(c.out.find("\"passed\": true"), std::string::npos);
}

TEST(Cli, ExtensionAuditReportsDiscrepancies) {
    const Captured c = run("extension-audit \"" + fixture("counterexample_F.yaml") + "\" \"" +
                           fixture("counterexample_K.yaml") + "\" \"" + fixture("counterexample_L.yaml") + "\"");
    EXPECT_EQ(c.status, 0) << c.out;
    EXPECT_NE(c.out.find("DISCREPANCY F: center: computed span{e1, e2}, recorded claim span{e1}"), std::string::npos)
        << c.out;
    EXPECT_NE(c.out.find("DISCREPANCY pi.rho: classification: computed central"), std::string::npos);
}

TEST(Cli, UceCommands) {
    const Captured u = run("uce \"" + fixture("counterexample_K.yaml") + "\"");
    EXPECT_EQ(u.status, 0);
    EXPECT_NE(u.out.find("dim Ker u = 6"), std::string::npos) << u.out;
    const Captured a = run("uce-alpha --mode lie \"" + fixture("sqrt2_cross.yaml") + "\"");
    EXPECT_EQ(a.status, 0);
    EXPECT_NE(a.out.find("dim 3"), std::string::npos) << a.out;
}

TEST(Cli, CartanOnSelfCoefficients) {
    const Captured c = run("cartan --degree 2 \"" + fixture("self_coefficients_K.yaml") + "\"");
    EXPECT_EQ(c.status, 0) << c.out;
    EXPECT_NE(c.out.find("cartan: PASS"), std::string::npos);
}
