// Scenario kinds, dimension-table suites and the JSON report.
#pragma once

#include "pairdiff/checks.hpp"

#include <json.hpp>

#include <chrono>

namespace pairdiff {

inline constexpr const char* kVersion = "1.0.0";

struct TableRecord {
    std::string name;
    std::vector<int> degrees;
    std::vector<long> dims;
    std::vector<long> predicted;
    Verdict verdict = Verdict::pass;
};

inline TableRecord record(const DimTable& t) {
    return {t.name, t.degrees, t.dims, t.predicted, t.pass() ? Verdict::pass : Verdict::fail};
}

struct Scenario {
    std::string kind = "all";  // identities | cohomology | relative | dolbeault | symplectic | harmonic | all
    std::optional<int> dim;
    std::optional<int> max_freq;
    std::uint64_t seed = 42;
    int trials = 100;
    std::optional<std::string> field;
    std::optional<std::string> map;
    std::optional<std::string> eta;
    bool timing = false;
};

struct Report {
    Scenario scenario;
    std::vector<CheckResult> checks;
    std::vector<TableRecord> tables;
    long elapsed_ms = 0;

    bool failed() const {
        for (const auto& c : checks)
            if (c.verdict == Verdict::fail) return true;
        for (const auto& t : tables)
            if (t.verdict == Verdict::fail) return true;
        return false;
    }

    void append(std::vector<CheckResult> more) { checks.insert(checks.end(), more.begin(), more.end()); }
};

/// Bad scenario parameters (exit status 2 in the CLI).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<int> band_sizes(const Scenario& s) {
    if (s.max_freq) return {*s.max_freq};
    return {1, 2};
}

inline std::string render_table(const std::vector<long>& v) {
    std::string out = "(";
    for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + std::to_string(v[j]);
    return out + ")";
}

inline IntMatrix parse_matrix(const std::string& src) {
    IntMatrix out;
    try {
        const auto j = nlohmann::json::parse(src);
        out = j.get<IntMatrix>();
    } catch (const std::exception& e) {
        throw ConfigError("--map: expected an integer matrix like [[2,1],[1,1]]: " + std::string(e.what()));
    }
    if (out.empty() || out.front().empty()) throw ConfigError("--map: empty matrix");
    return out;
}

inline VectorField parse_field_or_throw(const Chart& c, const std::string& src) {
    try {
        return text::parse_field(c, src);
    } catch (const std::exception& e) {
        throw ConfigError("--field: " + std::string(e.what()));
    }
}

inline Form parse_eta_or_throw(const Chart& c, const std::string& src) {
    try {
        return text::parse_form(c, src, 1);
    } catch (const std::exception& e) {
        throw ConfigError("--eta: " + std::string(e.what()));
    }
}

inline CheckResult table_check(const std::string& id, const std::string& anchor, bool ok, const std::string& witness) {
    return {id, anchor, ok ? Verdict::pass : Verdict::fail, ok ? "" : witness};
}

}  // namespace detail

/// Pair cohomology of tori: b_p + b_{p-1}, Poincare symmetry, transfer
/// invariance, band stabilization, de Rham Betti numbers and the eta complex.
inline void cohomology_suite(const Scenario& s, Report& r) {
    using namespace detail;
    std::vector<int> dims = s.dim ? std::vector<int>{*s.dim} : std::vector<int>{1, 2, 3};
    const auto bands = band_sizes(s);
    bool zero_comp = true, symmetric = true, invariant = true, stable = true;
    std::string zero_w, sym_w, inv_w, stab_w;
    for (int n : dims) {
        const Chart t = Chart::torus(n);
        std::vector<VectorField> fields;
        if (s.field) {
            fields.push_back(parse_field_or_throw(t, *s.field));
        } else {
            fields.push_back(VectorField::coordinate(t, 0));
            if (n >= 2) fields.push_back(VectorField::coordinate(t, 0) + VectorField::coordinate(t, 1).scaled(GaussQ(2)));
        }
        for (int N : bands) {
            const BandComplex dr = de_rham_complex(t, N);
            r.tables.push_back(record(make_table(dr, [n](int p) { return binomial(n, p); })));
            zero_comp = zero_comp && dr.composes_to_zero;
            std::optional<std::vector<long>> first;
            for (const auto& X : fields) {
                BandComplex c;
                try {
                    c = pair_complex(X, N);
                } catch (const UnsupportedScenario& e) {
                    r.checks.push_back({"cohomology.pair_complex", "H~_X(T^n) band model", Verdict::unsupported, e.what()});
                    continue;
                }
                if (!c.composes_to_zero) {
                    zero_comp = false;
                    zero_w += c.name + "; ";
                }
                const DimTable tab = make_table(c, torus_pair_prediction(n));
                r.tables.push_back(record(tab));
                for (int p = 0; p <= n + 1; ++p)
                    if (tab.dims[p] != tab.dims[n + 1 - p]) {
                        symmetric = false;
                        sym_w += tab.name + " p=" + std::to_string(p) + "; ";
                    }
                if (!first) first = tab.dims;
                else if (*first != tab.dims) {
                    invariant = false;
                    inv_w += tab.name + " " + render_table(tab.dims) + " vs " + render_table(*first) + "; ";
                }
                if (N == bands.front() && bands.size() > 1) {
                    const DimTable next = make_table(pair_complex(X, bands.back()), torus_pair_prediction(n));
                    if (next.dims != tab.dims) {
                        stable = false;
                        stab_w += tab.name + "; ";
                    }
                }
            }
        }
        // Closed eta: d~_eta = (d phi, -d psi) has the same dimensions.
        std::vector<ScalarExpr> w(n, ScalarExpr(t));
        w[0] = ScalarExpr::constant(t, GaussQ(1));
        const Form eta = s.eta ? parse_eta_or_throw(t, *s.eta) : Form::one_form(t, w);
        try {
            const BandComplex ec = eta_complex(eta, bands.front());
            zero_comp = zero_comp && ec.composes_to_zero;
            r.tables.push_back(record(make_table(ec, torus_pair_prediction(n))));
        } catch (const UnsupportedScenario& e) {
            r.checks.push_back({"cohomology.eta_complex[n=" + std::to_string(n) + "]", "H~_eta band model requires d eta = 0",
                                Verdict::unsupported, e.what()});
        }
    }
    if (!s.eta) {
        // A non-closed eta is rejected, never approximated.
        const Chart t2 = Chart::torus(2);
        std::vector<ScalarExpr> w{ScalarExpr(t2), trig::sin(t2, {1, 0})};
        try {
            eta_complex(Form::one_form(t2, w), 1);
            r.checks.push_back({"cohomology.eta_nonclosed", "d~_eta with d eta != 0", Verdict::fail, "accepted"});
        } catch (const UnsupportedScenario& e) {
            r.checks.push_back({"cohomology.eta_nonclosed", "d~_eta with d eta != 0", Verdict::unsupported, e.what()});
        }
    }
    r.checks.push_back(table_check("cohomology.zero_composition", "consecutive band differentials compose to 0", zero_comp, zero_w));
    r.checks.push_back(table_check("cohomology.poincare_symmetry", "dim H~^p = dim H~^{n+1-p}", symmetric, sym_w));
    r.checks.push_back(table_check("cohomology.transfer_invariance", "H~_X independent of constant X", invariant, inv_w));
    r.checks.push_back(table_check("cohomology.band_stabilization", "N = 1 and N = 2 tables agree", stable, stab_w));
}

/// Relative cohomology over torus maps: C(n,p) + C(n',p-1), the identity
/// reduction and the primed complex over the inverse map.
inline void relative_suite(const Scenario& s, Report& r) {
    using namespace detail;
    const auto bands = band_sizes(s);
    struct Case {
        ChartMap f;
        std::string label;
    };
    std::vector<Case> cases;
    if (s.map) {
        const IntMatrix a = parse_matrix(*s.map);
        try {
            cases.push_back({ChartMap::torus_linear(Chart::torus(static_cast<int>(a.front().size())),
                                                    Chart::torus(static_cast<int>(a.size())), a),
                             "map"});
        } catch (const std::exception& e) {
            throw ConfigError("--map: " + std::string(e.what()));
        }
    } else {
        const Chart t2 = Chart::torus(2), t1 = Chart::torus(1);
        cases.push_back({ChartMap::identity(t2), "identity"});
        cases.push_back({ChartMap::torus_linear(t1, t1, {{2}}), "doubling T^1"});
        cases.push_back({ChartMap::torus_linear(t2, t2, {{2, 0}, {0, 2}}), "doubling T^2"});
        cases.push_back({ChartMap::torus_linear(t2, t2, {{2, 1}, {1, 1}}), "GL(2,Z)"});
        cases.push_back({ChartMap::torus_linear(t1, t2, {{1}, {2}}), "T^1 -> T^2"});
    }
    bool identity_ok = true, inverse_ok = true, zero_comp = true;
    std::string identity_w, inverse_w, zero_w;
    for (const auto& cs : cases) {
        const ChartMap& f = cs.f;
        const int n = f.target().dim(), np = f.source().dim();
        const VectorField X = s.field ? parse_field_or_throw(f.source(), *s.field) : VectorField::coordinate(f.source(), 0);
        auto predicted = [n, np](int p) { return binomial(n, p) + binomial(np, p - 1); };
        for (int N : bands) {
            BandComplex c;
            try {
                c = relative_complex(f, X, N);
            } catch (const UnsupportedScenario& e) {
                r.checks.push_back({"relative.band_model", "H_X(f) band model", Verdict::unsupported, e.what()});
                continue;
            }
            zero_comp = zero_comp && c.composes_to_zero;
            if (!c.composes_to_zero) zero_w += c.name + "; ";
            const DimTable tab = make_table(c, predicted);
            r.tables.push_back(record(tab));
            if (cs.label == "identity") {
                const DimTable pt = make_table(pair_complex(X, N), torus_pair_prediction(n));
                std::vector<long> trimmed(tab.dims.begin(), tab.dims.begin() + static_cast<long>(pt.dims.size()));
                const bool tail_zero = std::all_of(tab.dims.begin() + static_cast<long>(pt.dims.size()), tab.dims.end(),
                                                   [](long v) { return v == 0; });
                if (trimmed != pt.dims || !tail_zero) {
                    identity_ok = false;
                    identity_w += tab.name + " " + render_table(tab.dims) + " vs " + render_table(pt.dims) + "; ";
                }
            }
            if (f.invertible()) {
                {
                    const ChartMap inv = f.inverse();
                    std::vector<ScalarExpr> zero(static_cast<std::size_t>(np), ScalarExpr(f.source()));
                    const Form eta = Form::one_form(f.source(), zero);
                    const BandComplex pc = primed_relative_complex(inv, eta, N);
                    zero_comp = zero_comp && pc.composes_to_zero;
                    if (make_table(pc, predicted).dims != tab.dims) {
                        inverse_ok = false;
                        inverse_w += pc.name + "; ";
                    }
                }
            }
        }
    }
    if (!s.map) {
        // Primed complex with a non-closed eta is rejected.
        const Chart t2 = Chart::torus(2);
        std::vector<ScalarExpr> w{ScalarExpr(t2), trig::sin(t2, {1, 0})};
        try {
            primed_relative_complex(ChartMap::identity(t2), Form::one_form(t2, w), 1);
            r.checks.push_back({"relative.eta_nonclosed", "d_{eta,f} with d eta != 0", Verdict::fail, "accepted"});
        } catch (const UnsupportedScenario& e) {
            r.checks.push_back({"relative.eta_nonclosed", "d_{eta,f} with d eta != 0", Verdict::unsupported, e.what()});
        }
    }
    r.checks.push_back(table_check("relative.zero_composition", "consecutive band differentials compose to 0", zero_comp, zero_w));
    r.checks.push_back(table_check("relative.identity_table", "H_X(Id) = H~_X(M)", identity_ok, identity_w));
    r.checks.push_back(table_check("relative.inverse_table", "H_X(f) = H_eta(f^{-1}) for closed eta", inverse_ok, inverse_w));
}

/// Dolbeault pair cohomology on the complex torus C/L: C(1,p)(C(1,q) + C(1,q-1))
/// and Serre symmetry.
inline void dolbeault_suite(const Scenario& s, Report& r) {
    using namespace detail;
    const Chart c = Chart::complex_torus(1);
    std::vector<VectorField> fields;
    if (s.field) {
        fields.push_back(parse_field_or_throw(c, *s.field));
    } else {
        fields.push_back(VectorField::holomorphic(c, {ScalarExpr::constant(c, GaussQ(1))}));
        fields.push_back(VectorField::holomorphic(c, {ScalarExpr::constant(c, GaussQ(1, 2))}));
    }
    bool serre = true, zero_comp = true;
    std::string serre_w, zero_w;
    for (const auto& X : fields) {
        for (int N : band_sizes(s)) {
            std::vector<DimTable> per_p;
            for (int p = 0; p <= 1; ++p) {
                BandComplex bc;
                try {
                    bc = dolbeault_pair_complex(X, p, N);
                } catch (const std::exception& e) {
                    r.checks.push_back({"dolbeault.band_model", "H~^{p,q}_X band model", Verdict::unsupported, e.what()});
                    per_p.clear();
                    break;
                }
                zero_comp = zero_comp && bc.composes_to_zero;
                if (!bc.composes_to_zero) zero_w += bc.name + "; ";
                per_p.push_back(make_table(bc, [p](int q) { return binomial(1, p) * (binomial(1, q) + binomial(1, q - 1)); }));
                r.tables.push_back(record(per_p.back()));
            }
            if (per_p.size() != 2) continue;
            for (int p = 0; p <= 1; ++p)
                for (int q = 0; q <= 2; ++q)
                    if (per_p[p].dims[q] != per_p[1 - p].dims[2 - q]) {
                        serre = false;
                        serre_w += per_p[p].name + " q=" + std::to_string(q) + "; ";
                    }
        }
    }
    r.checks.push_back(table_check("dolbeault.zero_composition", "consecutive band differentials compose to 0", zero_comp, zero_w));
    r.checks.push_back(table_check("dolbeault.serre_symmetry", "dim H~^{p,q} = dim H~^{1-p,2-q}", serre, serre_w));
}

inline SuiteOptions suite_options(const Scenario& s) {
    SuiteOptions o;
    o.seed = s.seed;
    o.trials = s.trials;
    if (s.dim) o.real_charts = {Chart::torus(*s.dim), Chart::affine(*s.dim)};
    return o;
}

inline const std::vector<std::string>& scenario_kinds() {
    static const std::vector<std::string> kinds{"identities", "cohomology", "relative", "dolbeault",
                                                "symplectic", "harmonic", "all"};
    return kinds;
}

inline void validate(const Scenario& s) {
    if (std::find(scenario_kinds().begin(), scenario_kinds().end(), s.kind) == scenario_kinds().end())
        throw ConfigError("unknown scenario kind '" + s.kind + "'");
    if (s.dim && (*s.dim < 1 || *s.dim > 4)) throw ConfigError("--dim must be in 1..4");
    if (s.max_freq && (*s.max_freq < 0 || *s.max_freq > 3)) throw ConfigError("--max-freq must be in 0..3");
    if (s.trials < 1) throw ConfigError("--trials must be positive");
}

/// Runs every check registered for the scenario kind.
inline Report run(const Scenario& s) {
    validate(s);
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.scenario = s;
    const SuiteOptions o = suite_options(s);
    const bool all = s.kind == "all";
    if (all || s.kind == "identities") {
        for (auto part : {scalar_checks(o), exterior_checks(o), hodge_checks(o), pair_checks(o)}) r.append(part);
        if (!all) {
            r.append(relative_checks(o));
            r.append(dolbeault_checks(o));
        }
    }
    if (all || s.kind == "cohomology") cohomology_suite(s, r);
    if (all || s.kind == "relative") {
        r.append(relative_checks(o));
        relative_suite(s, r);
    }
    if (all || s.kind == "dolbeault") {
        r.append(dolbeault_checks(o));
        dolbeault_suite(s, r);
    }
    if (all || s.kind == "symplectic") r.append(s.dim ? symplectic_checks({*s.dim}) : symplectic_checks());
    if (all || s.kind == "harmonic") {
        r.append(s.max_freq ? harmonic_checks(o, {*s.max_freq}) : harmonic_checks(o));
        r.checks.push_back(adjointness_discrepancy(o));
    }
    if (s.timing)
        r.elapsed_ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

inline nlohmann::ordered_json to_json(const Report& r) {
    using nlohmann::ordered_json;
    ordered_json scenario{{"kind", r.scenario.kind}, {"seed", r.scenario.seed}, {"trials", r.scenario.trials}};
    scenario["dim"] = r.scenario.dim ? ordered_json(*r.scenario.dim) : ordered_json(nullptr);
    scenario["max_freq"] = r.scenario.max_freq ? ordered_json(*r.scenario.max_freq) : ordered_json(nullptr);
    scenario["field"] = r.scenario.field ? ordered_json(*r.scenario.field) : ordered_json(nullptr);
    scenario["map"] = r.scenario.map ? ordered_json(*r.scenario.map) : ordered_json(nullptr);
    scenario["eta"] = r.scenario.eta ? ordered_json(*r.scenario.eta) : ordered_json(nullptr);

    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json j{{"id", c.id}, {"anchor", c.anchor}, {"verdict", to_string(c.verdict)}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    ordered_json tables = ordered_json::array();
    for (const auto& t : r.tables)
        tables.push_back({{"name", t.name},
                          {"degrees", t.degrees},
                          {"dims", t.dims},
                          {"predicted", t.predicted},
                          {"verdict", to_string(t.verdict)}});
    return {{"version", kVersion}, {"scenario", scenario}, {"checks", checks}, {"tables", tables}, {"elapsed_ms", r.elapsed_ms}};
}

inline std::string to_text(const Report& r) {
    std::ostringstream out;
    for (const auto& c : r.checks) {
        out << "[" << to_string(c.verdict) << "] " << c.id << "  " << c.anchor << "\n";
        if (!c.witness.empty()) out << "    " << c.witness << "\n";
    }
    for (const auto& t : r.tables)
        out << "[" << to_string(t.verdict) << "] " << t.name << "  dims " << detail::render_table(t.dims) << " predicted "
            << detail::render_table(t.predicted) << "\n";
    int pass = 0, fail = 0, unsupported = 0;
    for (const auto& c : r.checks) (c.verdict == Verdict::pass ? pass : c.verdict == Verdict::fail ? fail : unsupported)++;
    for (const auto& t : r.tables) (t.verdict == Verdict::pass ? pass : fail)++;
    out << pass << " passed, " << fail << " failed, " << unsupported << " unsupported\n";
    if (r.scenario.timing) out << "elapsed " << r.elapsed_ms << " ms\n";
    return out.str();
}

}  // namespace pairdiff
