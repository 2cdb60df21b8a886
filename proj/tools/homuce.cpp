#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homuce/homuce.hpp"

#ifndef HOMUCE_FIXTURE_DIR
#define HOMUCE_FIXTURE_DIR "fixtures"
#endif

using namespace homuce;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, check_failed = 1, input_error = 2 };

struct Result {
    std::string status;  // PASS, FAIL, INFO, NOTE, DISCREPANCY
    std::string subject;
    std::string text;
};

struct Run {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<Result> results;

    void add(std::string status, std::string subject, std::string text) {
        results.push_back({std::move(status), std::move(subject), std::move(text)});
    }
    void check(bool pass, std::string subject, std::string text) {
        add(pass ? "PASS" : "FAIL", std::move(subject), std::move(text));
    }
    void info(std::string subject, std::string text) { add("INFO", std::move(subject), std::move(text)); }
    bool failed() const {
        for (const auto& r : results)
            if (r.status == "FAIL") return true;
        return false;
    }
};

struct Flags {
    std::size_t degree = 2;
    std::size_t cap = 100000;
    long field = 0;
    std::string fixture_dir = HOMUCE_FIXTURE_DIR;
    std::string format = "text";
    std::string mode = "leibniz";
    std::string coefficients = "auto";
    bool timing = false;
    std::vector<std::string> files;

    ChainOptions chain() const {
        ChainOptions c;
        c.max_degree = std::max<std::size_t>(degree + 2, c.max_degree);
        c.max_coordinates = cap;
        return c;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionFailed("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<AlgebraDocument> load(const Flags& f) {
    std::vector<AlgebraDocument> docs;
    for (const auto& path : f.files) {
        try {
            for (auto& d : parse_documents(read_file(path), f.field)) docs.push_back(std::move(d));
        } catch (const ParseError& e) {
            throw ParseError(e.expected() + " in " + path, e.line(), e.column());
        } catch (const UnknownLabel& e) {
            throw PreconditionFailed(std::string(e.what()) + " in " + path);
        }
    }
    if (docs.empty()) throw PreconditionFailed("no input documents");
    return docs;
}

HomCoRep coefficients(const AlgebraDocument& d, const Flags& f) {
    const HomAlgebra L = to_algebra(d);
    if (f.coefficients == "self") return corep_self(L);
    if (f.coefficients == "ground") return corep_ground(L);
    if (f.coefficients == "document" && !d.corep) throw PreconditionFailed(d.name + " has no corep block");
    if (d.corep) return *to_corep(d);
    return corep_ground(L);
}

void cmd_validate(Run& run, const Flags& f) {
    for (const auto& d : load(f)) {
        const HomAlgebra L = to_algebra(d);
        const ValidationReport v = validate(L);
        run.check(v.ok(), d.name,
                  std::string(to_string(L.flavor())) + " dim " + std::to_string(L.dim()) + ", multiplicative " +
                      (v.is_multiplicative ? "yes" : "no") + ", alternating " + (v.is_hom_lie ? "yes" : "no"));
        for (const auto& fl : v.failures) run.add("FAIL", d.name, describe(fl, L));
        if (auto C = to_corep(d)) {
            const CoRepReport cr = validate(*C);
            run.check(cr.ok(), d.name + " corep", "dim " + std::to_string(C->mdim()) + ", " +
                                                     std::to_string(cr.failures.size()) + " axiom failures");
            for (const auto& a : cr.failures) run.add("FAIL", d.name + " corep", describe(a, *C));
        }
    }
}

void cmd_center(Run& run, const Flags& f) {
    for (const auto& d : load(f)) {
        const HomAlgebra L = to_algebra(d);
        const Subspace Z = center(L);
        run.info(d.name, "Z = " + format_span(Z, L.labels()) + ", dim " + std::to_string(Z.dim()));
    }
}

void cmd_homology(Run& run, const Flags& f) {
    for (const auto& d : load(f)) {
        const HomCoRep C = coefficients(d, f);
        const HomologyReport h = homology(C, f.degree, f.chain());
        run.info(d.name, "dim HL_" + std::to_string(f.degree) + "^α = " + std::to_string(h.dim) + " (cycles " +
                             std::to_string(h.cycle_dim) + ", boundaries " + std::to_string(h.boundary_rank) +
                             ", coefficients dim " + std::to_string(C.mdim()) + ")");
    }
}

void cmd_lie_homology(Run& run, const Flags& f) {
    for (const auto& d : load(f)) {
        const HomologyReport h = lie_homology(to_algebra(d), f.degree, f.chain());
        run.info(d.name, "dim H_" + std::to_string(f.degree) + "^α = " + std::to_string(h.dim) + " (cycles " +
                             std::to_string(h.cycle_dim) + ", boundaries " + std::to_string(h.boundary_rank) + ")");
    }
}

void report_uce(Run& run, const UceResult& U) {
    const std::string subject = std::string(to_string(U.kind)) + "(" + U.base.name() + ")";
    run.info(subject, "dim " + std::to_string(U.algebra.dim()) + ", dim Ker u = " + std::to_string(U.kernel_dim()) +
                          ", u surjective " + (U.surjective ? "yes" : "no") + ", universality " +
                          (U.universal ? "enabled" : "disabled"));
    for (const auto& w : U.warnings) run.add("NOTE", subject, w);
    std::string gens;
    for (std::size_t i = 0; i < U.generators.size(); ++i) gens += (i ? ", " : "") + U.generators[i];
    run.info(subject, "basis classes: " + gens);
}

void cmd_uce(Run& run, const Flags& f, bool alpha) {
    if (f.mode != "leibniz" && f.mode != "lie") throw PreconditionFailed("--mode must be leibniz or lie");
    const bool lie = f.mode == "lie";
    for (const auto& d : load(f)) {
        const HomAlgebra L = to_algebra(d);
        if (alpha) {
            report_uce(run, uce_alpha(L, lie ? UceMode::lie : UceMode::leibniz));
        } else {
            report_uce(run, lie ? uce_lie(L) : uce_leibniz(L));
        }
    }
}

void cmd_extension_audit(Run& run, const Flags& f) {
    const Library lib(load(f));
    for (const auto& d : lib.documents()) {
        for (const auto& h : d.homs) {
            const Extension e = make_extension(lib.hom(h.name));
            run.info(h.name, h.src + " -> " + h.dst + ": " + to_string(e.classification) + ", kernel " +
                                 format_span(e.ker, e.middle().labels()));
        }
        for (const auto& c : d.compositions) {
            const Extension e = compose(make_extension(lib.hom(c.outer)), make_extension(lib.hom(c.inner)));
            run.info(c.outer + "." + c.inner, to_string(e.classification) + std::string(", kernel ") +
                                                  format_span(e.ker, e.middle().labels()));
        }
        for (const auto& r : evaluate(lib, d, f.chain())) {
            std::string text = r.key + ": computed " + r.actual;
            if (r.reference) text += r.matches ? ", agrees with the recorded claim" : ", recorded claim " + r.expected;
            else if (!r.matches) text += ", expected " + r.expected;
            if (r.reference) {
                run.add(r.matches ? "NOTE" : "DISCREPANCY", r.subject, text);
            } else {
                run.check(r.matches, r.subject, text);
            }
        }
        const HomAlgebra L = to_algebra(d);
        if (validate(L).ok() && validate(L).is_multiplicative)
            for (const auto& c : theorem_audit(L, {false, f.chain()}).checks)
                run.check(c.passed, d.name, c.name + ": " + c.detail);
    }
}

void cmd_cartan(Run& run, const Flags& f) {
    for (const auto& d : load(f)) {
        const HomCoRep C = coefficients(d, f);
        const CartanReport r = cartan_verify(C, f.degree, f.chain());
        for (char id : {'a', 'b', 'c', 'd', 'e'})
            run.check(r.holds(id), d.name, std::string("identity (") + id + ") for n <= " + std::to_string(f.degree));
        for (const auto& fl : r.failures)
            run.add("FAIL", d.name, std::string("witness (") + fl.identity + ") n=" + std::to_string(fl.n) +
                                        " column " + std::to_string(fl.column));
        run.info(d.name, std::to_string(r.checked) + " matrix identities checked");
    }
}

void cmd_paper_suite(Run& run, const Flags& f) {
    SuiteOptions opt;
    opt.fixture_dir = f.fixture_dir;
    opt.chain = f.chain();
    const SuiteReport rep = run_paper_suite(opt);
    for (const auto& c : rep.criteria) {
        const std::string subject = "criterion " + std::to_string(c.id);
        run.check(c.passed(), subject, c.title);
        for (const auto& l : c.lines) run.add(to_string(l.status), subject, l.text);
    }
}

void print(const Run& run, const Flags& f, double seconds) {
    if (f.format == "json") {
        json j;
        j["command"] = run.command;
        j["inputs"] = run.inputs;
        j["results"] = json::array();
        for (const auto& r : run.results) j["results"].push_back({{"status", r.status}, {"subject", r.subject}, {"text", r.text}});
        j["passed"] = !run.failed();
        if (f.timing) j["seconds"] = seconds;
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& r : run.results) std::cout << r.status << " " << r.subject << ": " << r.text << "\n";
    std::cout << run.command << ": " << (run.failed() ? "FAIL" : "PASS") << "\n";
    if (f.timing) std::cout << "time: " << seconds << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hom-Leibniz and Hom-Lie algebras: validation, homology, universal central extensions"};
    app.require_subcommand(1, 1);
    Flags f;
    auto common = [&](CLI::App* sub, bool files_required = true) {
        sub->add_option("--degree", f.degree, "homology degree / top degree");
        sub->add_option("--cap", f.cap, "maximum chain-space dimension");
        sub->add_option("--field", f.field, "default radicand d for documents without a field (0: rationals)");
        sub->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", f.timing, "append wall-clock time");
        auto* files = sub->add_option("files", f.files, "algebra documents")->check(CLI::ExistingFile);
        if (files_required) files->required();
        return sub;
    };
    common(app.add_subcommand("validate", "check the Hom-Leibniz identity, multiplicativity and corep axioms"));
    common(app.add_subcommand("center", "center of each algebra"));
    auto* hom = common(app.add_subcommand("homology", "Hom-Leibniz homology HL_n"));
    hom->add_option("--coefficients", f.coefficients, "auto, document, ground or self")
        ->check(CLI::IsMember({"auto", "document", "ground", "self"}));
    common(app.add_subcommand("lie-homology", "Hom-Lie homology H_n"));
    common(app.add_subcommand("uce", "universal central extension"))->add_option("--mode", f.mode, "leibniz or lie");
    common(app.add_subcommand("uce-alpha", "alpha-universal central extension"))
        ->add_option("--mode", f.mode, "leibniz or lie");
    common(app.add_subcommand("extension-audit", "classify homomorphisms, check recorded expectations"));
    auto* cartan = common(app.add_subcommand("cartan", "Cartan identities up to --degree"));
    cartan->add_option("--coefficients", f.coefficients, "auto, document, ground or self")
        ->check(CLI::IsMember({"auto", "document", "ground", "self"}));
    auto* suite = common(app.add_subcommand("paper-suite", "run the full reproduction battery"), false);
    suite->add_option("--fixture-dir", f.fixture_dir, "directory of fixture documents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : input_error;
    }

    CLI::App* sub = app.get_subcommands().front();
    Run run;
    run.command = sub->get_name();
    run.inputs = f.files;
    if (run.command == "paper-suite") run.inputs = {f.fixture_dir};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (run.command == "validate") cmd_validate(run, f);
        if (run.command == "center") cmd_center(run, f);
        if (run.command == "homology") cmd_homology(run, f);
        if (run.command == "lie-homology") cmd_lie_homology(run, f);
        if (run.command == "uce") cmd_uce(run, f, false);
        if (run.command == "uce-alpha") cmd_uce(run, f, true);
        if (run.command == "extension-audit") cmd_extension_audit(run, f);
        if (run.command == "cartan") cmd_cartan(run, f);
        if (run.command == "paper-suite") cmd_paper_suite(run, f);
    } catch (const Error& e) {
        std::cerr << "homuce " << run.command << ": " << e.what() << "\n";
        return input_error;
    }
    print(run, f, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return run.failed() ? check_failed : ok;
}
