// Acceptance criteria 1-10, one PASS/FAIL line each.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "homuce/homuce.hpp"

using namespace homuce;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome from(const CriterionResult& r) {
    std::string detail;
    for (const auto& l : r.lines)
        if (l.status != LineStatus::pass) detail += std::string("\n    ") + to_string(l.status) + " " + l.text;
    return {r.passed(), detail};
}

struct Captured {
    int status = -1;
    std::string out;
};

Captured run_command(const std::string& cmd) {
    Captured c;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return c;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, n);
    const int raw = pclose(p);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

}  // namespace

int main() {
    SuiteOptions opt;
    opt.fixture_dir = HOMUCE_FIXTURE_DIR;
    int failures = 0;
    auto report = [&](int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("\n    exception: ") + e.what()};
        }
        const double t = seconds_since(t0);
        const bool in_time = limit <= 0 || t < limit;
        const bool ok = o.passed && in_time;
        if (!ok) ++failures;
        std::printf("criterion %2d %s  %-44s %7.3f s%s%s\n", id, ok ? "PASS" : "FAIL", title.c_str(), t,
                    limit > 0 ? (" (limit " + std::to_string(static_cast<int>(limit)) + " s)").c_str() : "",
                    in_time ? "" : " TIME LIMIT EXCEEDED");
        if (!o.detail.empty()) std::printf("%s\n", o.detail.c_str() + 1);
        std::fflush(stdout);
    };

    report(1, "counterexample reproduction", 1.0,
           [&] { return from(criterion_counterexamples(load_fixture_library(opt.fixture_dir))); });
    report(2, "d^2 = 0 and Cartan identities (random)", 60.0, [&] { return from(criterion_homology_engine(opt)); });
    report(3, "HL_0 / HL_1 closed forms", 0, [&] { return from(criterion_closed_forms(opt)); });
    report(4, "degree shift HL_n(L,L) = HL_{n+1}(L,K)", 0, [&] { return from(criterion_degree_shift(opt)); });
    report(5, "dim Ker u = dim HL_2 (K, L)", 5.0, [&] {
        return from(criterion_kernel_vs_homology(load_fixture_library(opt.fixture_dir), opt));
    });
    report(6, "alpha = Id classical regression", 0, [&] { return from(criterion_classical_regression(opt)); });
    report(7, "twisted cross product over Q(sqrt 2)", 5.0,
           [&] { return from(criterion_sqrt2_example(load_fixture_library(opt.fixture_dir))); });
    report(8, "degenerate twists (alpha = 0, diag(1,2))", 0,
           [&] { return from(criterion_degenerate_twists(load_fixture_library(opt.fixture_dir))); });
    report(9, "lift machinery", 0, [&] { return from(criterion_lifts(load_fixture_library(opt.fixture_dir))); });
    report(10, "homuce paper-suite end to end", 120.0, [&]() -> Outcome {
        const std::string cmd = std::string("\"") + HOMUCE_CLI + "\" paper-suite --fixture-dir \"" + opt.fixture_dir + "\"";
        const Captured a = run_command(cmd), b = run_command(cmd);
        std::string detail;
        if (a.status != 0) detail += "\n    exit status " + std::to_string(a.status);
        if (a.out != b.out) detail += "\n    output differs between two runs";
        const bool discrepancy = a.out.find("DISCREPANCY") != std::string::npos;
        if (!discrepancy) detail += "\n    no DISCREPANCY line for the literal F";
        if (a.out.find("paper-suite: PASS") == std::string::npos) detail += "\n    summary line missing";
        return {a.status == 0 && a.out == b.out && discrepancy && detail.empty(), detail};
    });
    std::printf("acceptance: %s (%d failing)\n", failures == 0 ? "PASS" : "FAIL", failures);
    return failures == 0 ? 0 : 1;
}
