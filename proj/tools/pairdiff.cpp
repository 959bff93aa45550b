// Scenario runner: pairdiff <kind> [flags]
#include "pairdiff.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    pairdiff::Scenario s;
    CLI::App app{"Exact checks and cohomology tables for pair differential forms"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    for (const auto& kind : pairdiff::scenario_kinds()) app.add_subcommand(kind, "run the " + kind + " scenario");

    std::optional<int> dim, max_freq;
    std::optional<std::string> field, map, eta, out;
    bool json = false;
    app.add_option("--dim", dim, "chart dimension");
    app.add_option("--max-freq", max_freq, "band size N");
    app.add_option("--seed", s.seed, "base seed")->capture_default_str();
    app.add_option("--trials", s.trials, "random instances per identity")->capture_default_str();
    app.add_option("--field", field, "vector field, e.g. \"d/dx[1] + 2*d/dx[2]\"");
    app.add_option("--map", map, "integer torus map, e.g. \"[[2,1],[1,1]]\"");
    app.add_option("--eta", eta, "closed 1-form for the eta complex");
    app.add_flag("--json", json, "write the JSON report");
    app.add_option("--out", out, "write the report to a file");
    app.add_flag("--timing", s.timing, "record elapsed_ms (otherwise 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    s.kind = app.get_subcommands().front()->get_name();
    s.dim = dim;
    s.max_freq = max_freq;
    s.field = field;
    s.map = map;
    s.eta = eta;

    pairdiff::Report report;
    try {
        report = pairdiff::run(s);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string text = json ? pairdiff::to_json(report).dump(2) + "\n" : pairdiff::to_text(report);
    if (out) {
        std::ofstream f(*out);
        if (!f) {
            std::cerr << "error: cannot write " << *out << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return report.failed() ? 1 : 0;
}
