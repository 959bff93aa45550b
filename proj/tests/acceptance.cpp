// Acceptance runner: one pass/fail line per criterion. Exact arithmetic
// throughout, so every comparison is exact equality.
#include "pairdiff.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace {

using namespace pairdiff;

constexpr std::uint64_t kSeed = 42;
constexpr int kTrials = 100;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failing;
};

Outcome from_checks(const std::vector<CheckResult>& checks, const std::vector<TableRecord>& tables = {}) {
    Outcome out;
    int passed = 0, unsupported = 0;
    std::string failing;
    for (const auto& c : checks) {
        if (c.verdict == Verdict::pass) ++passed;
        else if (c.verdict == Verdict::unsupported) ++unsupported;
        else {
            failing += (failing.empty() ? "" : ", ") + c.id;
            out.failing.push_back(c.id);
        }
    }
    int tables_passed = 0;
    for (const auto& t : tables) {
        if (t.verdict == Verdict::pass) ++tables_passed;
        else {
            failing += (failing.empty() ? "" : ", ") + t.name;
            out.failing.push_back(t.name);
        }
    }
    out.pass = failing.empty();
    out.detail = std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks";
    if (!tables.empty()) out.detail += ", " + std::to_string(tables_passed) + "/" + std::to_string(tables.size()) + " tables";
    if (unsupported) out.detail += ", " + std::to_string(unsupported) + " unsupported";
    if (!failing.empty()) out.detail += "; failing: " + failing;
    return out;
}

SuiteOptions options() {
    SuiteOptions o;
    o.seed = kSeed;
    o.trials = kTrials;
    o.real_charts = {Chart::torus(2), Chart::torus(3), Chart::affine(2)};
    return o;
}

Outcome criterion1() { return from_checks(identity_suite(options())); }

Outcome criterion2() {
    Report r;
    cohomology_suite(Scenario{}, r);
    return from_checks(r.checks, r.tables);
}

Outcome criterion3() {
    Report r;
    relative_suite(Scenario{}, r);
    return from_checks(r.checks, r.tables);
}

Outcome criterion4() {
    Report r;
    dolbeault_suite(Scenario{}, r);
    for (const auto& c : dolbeault_checks(options()))
        if (c.id == "dolbeault.lie_exactness") r.checks.push_back(c);
    return from_checks(r.checks, r.tables);
}

Outcome criterion5() { return from_checks(symplectic_checks({1, 2})); }

Outcome criterion6() { return from_checks(harmonic_checks(options(), {1, 2})); }

Outcome criterion7() {
    const CheckResult c = adjointness_discrepancy(options());
    Outcome out;
    const bool both = c.witness.find("stated_form=") != std::string::npos &&
                      c.witness.find("skew_form=") != std::string::npos &&
                      c.witness.find("witness:") != std::string::npos;
    out.pass = c.verdict == Verdict::pass && both;
    out.detail = c.witness;
    return out;
}

const std::vector<std::pair<std::string, Outcome (*)()>>& criteria() {
    static const std::vector<std::pair<std::string, Outcome (*)()>> list{
        {"identity suite", criterion1},
        {"pair cohomology dimensions", criterion2},
        {"relative cohomology dimensions", criterion3},
        {"Dolbeault pair dimensions", criterion4},
        {"symplectic suite", criterion5},
        {"harmonic suite", criterion6},
        {"adjointness discrepancy report", criterion7},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    std::vector<std::string> expected;
    auto* single = app.add_option("--criterion", only, "run a single criterion (1-7)")->check(CLI::Range(1, 7));
    app.add_option("--expect-failing", expected, "check ids whose failure is documented; exit 0 iff exactly these fail")
        ->needs(single);
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    for (std::size_t k = 0; k < criteria().size(); ++k) {
        if (only != 0 && static_cast<int>(k) + 1 != only) continue;
        const auto& [name, fn] = criteria()[k];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {"exception"}};
        }
        std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail
                  << ")\n";
        if (!o.pass) ++failures;
        if (!expected.empty()) {
            std::vector<std::string> got = o.failing, want = expected;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) {
                std::cout << "  unexpected failure set\n";
                return 1;
            }
            return 0;
        }
    }
    return failures == 0 ? 0 : 1;
}
