// Randomized identity suites and deterministic example suites. Every check
// yields a CheckResult with a stable id and an anchor naming the identity.
#pragma once

#include "pairdiff/cohomology.hpp"
#include "pairdiff/generators.hpp"
#include "pairdiff/symplectic.hpp"
#include "pairdiff/text.hpp"

#include <sstream>

namespace pairdiff {

enum class Verdict { pass, fail, unsupported };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::unsupported: return "unsupported";
    }
    return "?";
}

struct CheckResult {
    std::string id;
    std::string anchor;
    Verdict verdict = Verdict::pass;
    std::string witness;  // counterexample on failure, or a summary where useful
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    int trials = 100;
    std::vector<Chart> real_charts{Chart::torus(2), Chart::torus(3), Chart::affine(2)};
};

namespace detail {

using Witness = std::optional<std::string>;

inline std::string mismatch(const std::string& lhs, const std::string& rhs) { return "lhs = " + lhs + "; rhs = " + rhs; }

template <class T>
Witness expect_equal(const T& lhs, const T& rhs, const std::string& context = "") {
    if (lhs == rhs) return std::nullopt;
    return (context.empty() ? "" : context + ": ") + mismatch(text::render(lhs), text::render(rhs));
}

template <class T>
Witness expect_zero(const T& value, const std::string& context = "") {
    if (value.is_zero()) return std::nullopt;
    return (context.empty() ? "" : context + ": ") + "nonzero " + text::render(value);
}

inline std::string render_rel(const RelPairForm& a) { return text::render(a); }

// Runs fn(rng, trial) for the configured number of trials; the first
// counterexample (or exception) fails the check.
template <class Fn>
CheckResult property(const std::string& id, const std::string& anchor, const SuiteOptions& o, Fn&& fn) {
    Rng rng(o.seed ^ stable_hash(id));
    for (int t = 0; t < o.trials; ++t) {
        Witness w;
        try {
            w = fn(rng, t);
        } catch (const std::exception& e) {
            w = std::string("exception: ") + e.what();
        }
        if (w) return {id, anchor, Verdict::fail, "trial " + std::to_string(t) + ": " + *w};
    }
    return {id, anchor, Verdict::pass, ""};
}

template <class Fn>
CheckResult single(const std::string& id, const std::string& anchor, Fn&& fn) {
    Witness w;
    try {
        w = fn();
    } catch (const std::exception& e) {
        w = std::string("exception: ") + e.what();
    }
    if (w) return {id, anchor, Verdict::fail, *w};
    return {id, anchor, Verdict::pass, ""};
}

inline const Chart& chart_for(const SuiteOptions& o, int trial) {
    return o.real_charts.at(static_cast<std::size_t>(trial) % o.real_charts.size());
}

inline std::vector<Chart> tori_of(const SuiteOptions& o) {
    std::vector<Chart> out;
    for (const auto& c : o.real_charts)
        if (c.is_real_torus()) out.push_back(c);
    if (out.empty()) out = {Chart::torus(2), Chart::torus(3)};
    return out;
}

inline int random_degree(Rng& rng, const Chart& c) { return rng.uniform(0, c.dim()); }

// Coordinate formula for the Lie derivative, used as an oracle for the
// Cartan-formula implementation:
// L_X(f dx^I) = X(f) dx^I + sum_k f dx^{i_1} ^ .. ^ d(X^{i_k}) ^ .. ^ dx^{i_p}.
inline Form lie_coordinate_oracle(const VectorField& X, const Form& a) {
    const Chart& c = a.chart();
    Form out(c, a.degree());
    for (const auto& [I, f] : a.components()) {
        out += Form::monomial(X.apply(f), I);
        const auto axes = mask_axes(I);
        for (std::size_t k = 0; k < axes.size(); ++k) {
            Form piece = Form::function(f);
            for (std::size_t j = 0; j < axes.size(); ++j) {
                if (j == k) piece = wedge(piece, ext_d(Form::function(X[axes[j]])));
                else piece = wedge(piece, Form::basis(c, Mask{1} << axes[j]));
            }
            out += piece;
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<CheckResult> scalar_checks(const SuiteOptions& o) {
    using namespace detail;
    std::vector<CheckResult> out;
    out.push_back(property("scalar.ring_laws", "plumbing: canonical ring operations", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ScalarExpr a = gen::scalar(rng, c), b = gen::scalar(rng, c), d = gen::scalar(rng, c);
        std::vector<Term> raw;
        for (const auto& [m, k] : a.terms()) raw.push_back({k, m});
        if (auto w = expect_equal(ScalarExpr::normalize(c, raw), a, "normalize idempotent")) return w;
        if (auto w = expect_equal(a + b, b + a, "add commutative")) return w;
        if (auto w = expect_equal(a * b, b * a, "mul commutative")) return w;
        if (auto w = expect_equal((a + b) + d, a + (b + d), "add associative")) return w;
        if (auto w = expect_equal((a * b) * d, a * (b * d), "mul associative")) return w;
        return expect_equal(a * (b + d), a * b + a * d, "distributive");
    }));
    out.push_back(property("scalar.leibniz", "d_j(fg) = d_j f g + f d_j g", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ScalarExpr a = gen::scalar(rng, c), b = gen::scalar(rng, c);
        const int axis = rng.uniform(0, c.dim() - 1);
        return expect_equal(partial(a * b, axis), partial(a, axis) * b + a * partial(b, axis));
    }));
    out.push_back(property("scalar.integration_by_parts", "int_T d_j f = 0", o, [&](Rng& rng, int t) -> Witness {
        const auto tori = tori_of(o);
        const Chart& c = tori[static_cast<std::size_t>(t) % tori.size()];
        const ScalarExpr a = gen::scalar(rng, c);
        const GaussQ v = torus_integral(partial(a, rng.uniform(0, c.dim() - 1)));
        if (v.is_zero()) return std::nullopt;
        return "integral " + v.to_string() + " of derivative of " + text::render(a);
    }));
    return out;
}

inline std::vector<CheckResult> exterior_checks(const SuiteOptions& o) {
    using namespace detail;
    std::vector<CheckResult> out;
    out.push_back(property("exterior.d_squared", "d^2 = 0", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        return expect_zero(ext_d(ext_d(gen::form(rng, c, random_degree(rng, c)))));
    }));
    out.push_back(property("exterior.interior_squared", "i_X i_X = 0", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c);
        return expect_zero(interior(X, interior(X, gen::form(rng, c, random_degree(rng, c)))));
    }));
    out.push_back(property("exterior.d_antiderivation", "d(a^b) = da^b + (-1)^p a^db", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const Form a = gen::form(rng, c, random_degree(rng, c)), b = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(ext_d(wedge(a, b)),
                            wedge(ext_d(a), b) + wedge(a, ext_d(b)).scaled(GaussQ(sign_power(a.degree()))));
    }));
    out.push_back(property("exterior.interior_antiderivation", "i_X(a^b) = i_X a^b + (-1)^p a^i_X b", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c)), b = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(interior(X, wedge(a, b)),
                            wedge(interior(X, a), b) + wedge(a, interior(X, b)).scaled(GaussQ(sign_power(a.degree()))));
    }));
    out.push_back(property("exterior.lie_coordinate_formula", "L_X = d i_X + i_X d", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(lie(X, a), lie_coordinate_oracle(X, a));
    }));
    out.push_back(property("exterior.lie_on_functions", "L_X f = X(f)", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c);
        const ScalarExpr f = gen::scalar(rng, c);
        return expect_equal(lie(X, Form::function(f)), Form::function(X.apply(f)));
    }));
    out.push_back(property("exterior.lie_commutes_d", "[L_X, d] = 0", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(lie(X, ext_d(a)), ext_d(lie(X, a)));
    }));
    out.push_back(property("exterior.lie_bracket", "[L_X, L_Y] = L_[X,Y]", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c), Y = gen::field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(lie(X, lie(Y, a)) - lie(Y, lie(X, a)), lie(bracket(X, Y), a));
    }));
    out.push_back(property("exterior.lie_interior", "[L_X, i_Y] = i_[X,Y]", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c), Y = gen::field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(lie(X, interior(Y, a)) - interior(Y, lie(X, a)), interior(bracket(X, Y), a));
    }));
    out.push_back(property("exterior.pullback_d", "f^* d = d f^*", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ChartMap f = c.is_periodic() ? gen::torus_map(rng, c, c) : gen::polynomial_map(rng, c, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(pullback(f, ext_d(a)), ext_d(pullback(f, a)));
    }));
    out.push_back(property("exterior.pullback_wedge", "f^*(a^b) = f^*a ^ f^*b", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ChartMap f = c.is_periodic() ? gen::torus_map(rng, c, c) : gen::polynomial_map(rng, c, c);
        const Form a = gen::form(rng, c, random_degree(rng, c)), b = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(pullback(f, wedge(a, b)), wedge(pullback(f, a), pullback(f, b)));
    }));
    out.push_back(property("exterior.naturality_interior", "f^*(i_{f_*X} a) = i_X f^*a", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ChartMap f = gen::automorphism(rng, c);
        const VectorField X = gen::field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(pullback(f, interior(pushforward(f, X), a)), interior(X, pullback(f, a)));
    }));
    out.push_back(property("exterior.naturality_lie", "f^*(L_{f_*X} a) = L_X f^*a", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ChartMap f = gen::automorphism(rng, c);
        const VectorField X = gen::field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(pullback(f, lie(pushforward(f, X), a)), lie(X, pullback(f, a)));
    }));
    return out;
}

inline std::vector<CheckResult> hodge_checks(const SuiteOptions& o) {
    using namespace detail;
    const auto tori = tori_of(o);
    auto torus = [tori](int t) { return tori[static_cast<std::size_t>(t) % tori.size()]; };
    auto constant_one_form = [](Rng& rng, const Chart& c) {
        std::vector<ScalarExpr> w;
        for (int j = 0; j < c.dim(); ++j) w.push_back(ScalarExpr::constant(c, GaussQ(rng.uniform(-2, 2))));
        return Form::one_form(c, w);
    };
    std::vector<CheckResult> out;
    out.push_back(property("hodge.star_star", "** = (-1)^{p(n-p)}", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        const int p = a.degree(), n = c.dim();
        return expect_equal(hodge_star(hodge_star(a)), a.scaled(GaussQ(sign_power(p * (n - p)))));
    }));
    out.push_back(property("hodge.codiff_squared", "delta^2 = 0", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        return expect_zero(codiff(codiff(gen::form(rng, c, random_degree(rng, c)))));
    }));
    out.push_back(property("hodge.codiff_adjoint", "<da, b> = <a, delta b>", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const int p = rng.uniform(0, c.dim() - 1);
        GenLimits lim;
        lim.complex_coefficients = true;
        const Form a = gen::form(rng, c, p, lim), b = gen::form(rng, c, p + 1, lim);
        const GaussQ lhs = inner(ext_d(a), b), rhs = inner(a, codiff(b));
        if (lhs == rhs) return std::nullopt;
        return mismatch(lhs.to_string(), rhs.to_string());
    }));
    out.push_back(property("hodge.lie_via_codiff", "L_U = -delta e(w) - e(w) delta", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const Form w = constant_one_form(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(lie(sharp(w), a), -codiff(wedge(w, a)) - wedge(w, codiff(a)));
    }));
    out.push_back(property("hodge.codiff_lie_commute", "delta L_U = L_U delta", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const VectorField U = gen::constant_field(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(codiff(lie(U, a)), lie(U, codiff(a)));
    }));
    out.push_back(property("hodge.lie_skew", "<L_U a, b> = -<a, L_U b>", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const VectorField U = gen::constant_field(rng, c);
        const int p = random_degree(rng, c);
        const Form a = gen::form(rng, c, p), b = gen::form(rng, c, p);
        const GaussQ lhs = inner(lie(U, a), b), rhs = -inner(a, lie(U, b));
        if (lhs == rhs) return std::nullopt;
        return mismatch(lhs.to_string(), rhs.to_string());
    }));
    out.push_back(property("hodge.laplacian_eigenvalue", "Delta e^{i<k,x>} dx^I = |k|^2 e^{i<k,x>} dx^I", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        std::vector<int> k(c.dim());
        long norm = 0;
        for (auto& v : k) {
            v = rng.uniform(-2, 2);
            norm += v * v;
        }
        const auto masks = masks_of_size(c.dim(), random_degree(rng, c));
        const Form a = Form::monomial(ScalarExpr::exponential(c, k), rng.pick(masks));
        return expect_equal(laplacian(a), a.scaled(GaussQ(norm)));
    }));
    out.push_back(property("hodge.lichnerowicz_d_squared", "d_w^2 = 0", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const Form w = constant_one_form(rng, c);
        return expect_zero(lichnerowicz_d(w, lichnerowicz_d(w, gen::form(rng, c, random_degree(rng, c)))));
    }));
    out.push_back(property("hodge.lichnerowicz_laplacian", "Delta_w = Delta + |w|^2 id", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const Form w = constant_one_form(rng, c);
        const Form a = gen::form(rng, c, random_degree(rng, c));
        return expect_equal(lichnerowicz_laplacian(w, a), laplacian(a) + a.scaled(norm_squared(w)));
    }));
    return out;
}

namespace detail {

// A d~_X-cocycle: d~_X b + (phi, i_X phi) + (0, h) with phi, h closed.
inline PairForm random_cocycle(Rng& rng, const VectorField& X, int p) {
    const Chart& c = X.chart();
    return d_tilde(X, gen::pair(rng, c, p - 1)) + class_embed(X, gen::closed_form(rng, c, p)) +
           PairForm::from_second(gen::closed_form(rng, c, p - 1));
}

inline int random_pair_degree(Rng& rng, const Chart& c) { return rng.uniform(0, c.dim() + 1); }

}  // namespace detail

inline std::vector<CheckResult> pair_checks(const SuiteOptions& o) {
    using namespace detail;
    std::vector<CheckResult> out;
    auto setup = [&](Rng& rng, int t) {
        const Chart& c = chart_for(o, t);
        return std::make_tuple(c, gen::field(rng, c), gen::pair(rng, c, random_pair_degree(rng, c)));
    };
    out.push_back(property("pair.d_tilde_squared", "d~_X^2 = (0,0)", o, [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        return expect_zero(d_tilde(X, d_tilde(X, a)));
    }));
    out.push_back(property("pair.i_tilde_squared", "i~_X^2 = (0,0)", o, [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        return expect_zero(i_tilde(X, i_tilde(X, a)));
    }));
    out.push_back(property("pair.d_tilde_antiderivation", "d~_X(a^b) = d~_X a ^ b + (-1)^p a ^ d~_X b", o,
                           [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const PairForm b = gen::pair(rng, c, random_pair_degree(rng, c));
        return expect_equal(d_tilde(X, pair_wedge(a, b)),
                            pair_wedge(d_tilde(X, a), b) + pair_wedge(a, d_tilde(X, b)).scaled(GaussQ(sign_power(a.degree()))));
    }));
    out.push_back(property("pair.i_tilde_antiderivation", "i~_X(a^b) = i~_X a ^ b + (-1)^p a ^ i~_X b", o,
                           [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const PairForm b = gen::pair(rng, c, random_pair_degree(rng, c));
        return expect_equal(i_tilde(X, pair_wedge(a, b)),
                            pair_wedge(i_tilde(X, a), b) + pair_wedge(a, i_tilde(X, b)).scaled(GaussQ(sign_power(a.degree()))));
    }));
    out.push_back(property("pair.lie_tilde_derivation", "L~_X(a^b) = L~_X a ^ b + a ^ L~_X b", o,
                           [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const PairForm b = gen::pair(rng, c, random_pair_degree(rng, c));
        return expect_equal(lie_tilde(X, pair_wedge(a, b)), pair_wedge(lie_tilde(X, a), b) + pair_wedge(a, lie_tilde(X, b)));
    }));
    out.push_back(property("pair.wedge_graded", "a^b = (-1)^{pq} b^a, (a^b)^c = a^(b^c), (f,0)^(phi,psi) = (f phi, f psi)", o,
                           [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const PairForm b = gen::pair(rng, c, random_pair_degree(rng, c));
        const PairForm d = gen::pair(rng, c, random_pair_degree(rng, c));
        if (auto w = expect_equal(pair_wedge(a, b), pair_wedge(b, a).scaled(GaussQ(sign_power(a.degree() * b.degree()))),
                                  "graded commutativity"))
            return w;
        if (auto w = expect_equal(pair_wedge(pair_wedge(a, b), d), pair_wedge(a, pair_wedge(b, d)), "associativity")) return w;
        const ScalarExpr f = gen::scalar(rng, c);
        return expect_equal(pair_wedge(PairForm::from_first(Form::function(f)), a), PairForm(f * a.first(), f * a.second()),
                            "function action");
    }));
    out.push_back(property("pair.lie_tilde_bracket", "[L~_X, L~_Y] = L~_[X,Y]", o, [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const VectorField Y = gen::field(rng, c);
        return expect_equal(lie_tilde(X, lie_tilde(Y, a)) - lie_tilde(Y, lie_tilde(X, a)), lie_tilde(bracket(X, Y), a));
    }));
    out.push_back(property("pair.lie_tilde_interior", "[L~_X, i~_Y] = i~_[X,Y]", o, [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const VectorField Y = gen::field(rng, c);
        return expect_equal(lie_tilde(X, i_tilde(Y, a)) - i_tilde(Y, lie_tilde(X, a)), i_tilde(bracket(X, Y), a));
    }));
    out.push_back(property("pair.cartan_symmetry", "[X,Y] = 0 => L~_Y = d~_X i~_Y + i~_Y d~_X, [L~_Y, d~_X] = (0,0)", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const auto [X, Y] = gen::commuting_fields(rng, c);
        if (!bracket(X, Y).is_zero()) return "generator produced non-commuting fields";
        const PairForm a = gen::pair(rng, c, random_pair_degree(rng, c));
        if (auto w = expect_equal(lie_tilde(Y, a), d_tilde(X, i_tilde(Y, a)) + i_tilde(Y, d_tilde(X, a)), "Cartan")) return w;
        return expect_equal(lie_tilde(Y, d_tilde(X, a)), d_tilde(X, lie_tilde(Y, a)), "commutator");
    }));
    out.push_back(property("pair.cartan_self", "L~_X = d~_X i~_X + i~_X d~_X, [L~_X, d~_X] = (0,0)", o,
                           [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        if (auto w = expect_equal(lie_tilde(X, a), d_tilde(X, i_tilde(X, a)) + i_tilde(X, d_tilde(X, a)), "Cartan")) return w;
        return expect_equal(lie_tilde(X, d_tilde(X, a)), d_tilde(X, lie_tilde(X, a)), "commutator");
    }));
    out.push_back(property("pair.naturality", "d~_X f~^* = f~^* d~_{f_*X}, f~^* i~_{f_*X} = i~_X f~^*, f~^* L~_{f_*X} = L~_X f~^*",
                           o, [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const ChartMap f = gen::automorphism(rng, c);
        const VectorField Y = pushforward(f, X);
        if (auto w = expect_equal(d_tilde(X, pair_pullback(f, a)), pair_pullback(f, d_tilde(Y, a)), "d~")) return w;
        if (auto w = expect_equal(pair_pullback(f, i_tilde(Y, a)), i_tilde(X, pair_pullback(f, a)), "i~")) return w;
        return expect_equal(pair_pullback(f, lie_tilde(Y, a)), lie_tilde(X, pair_pullback(f, a)), "L~");
    }));
    out.push_back(property("pair.class_maps", "[phi] -> [(phi, i_X phi)], [(phi,psi)] -> [i_X phi - psi]", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c);
        const int p = random_pair_degree(rng, c);
        const Form phi = gen::closed_form(rng, c, p);
        if (auto w = expect_zero(d_tilde(X, class_embed(X, phi)), "embed")) return w;
        const PairForm z = random_cocycle(rng, X, p);
        if (auto w = expect_zero(d_tilde(X, z), "cocycle generator")) return w;
        if (auto w = expect_zero(ext_d(class_project(X, z)), "project")) return w;
        const auto [s1, s2] = class_split(X, z);
        if (auto w = expect_equal(class_reverse(X, s1, s2), z, "reverse o split")) return w;
        const Form h = gen::closed_form(rng, c, p - 1);
        const auto [r1, r2] = class_split(X, class_reverse(X, phi, h));
        if (auto w = expect_equal(r1, phi, "split o reverse (first)")) return w;
        return expect_equal(r2, h, "split o reverse (second)");
    }));
    out.push_back(property("pair.transfer", "alpha_{X,Y}: d~_X-cocycles -> d~_Y-cocycles, alpha_{Y,X} alpha_{X,Y} = id", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const VectorField X = gen::field(rng, c), Y = gen::field(rng, c);
        const PairForm z = random_cocycle(rng, X, random_pair_degree(rng, c));
        if (auto w = expect_zero(d_tilde(Y, transfer(X, Y, z)), "closedness")) return w;
        const PairForm a = gen::pair(rng, c, random_pair_degree(rng, c));
        return expect_equal(transfer(Y, X, transfer(X, Y, a)), a, "round trip");
    }));
    out.push_back(property("pair.d_eta_squared", "d~_eta^2 = (0,0)", o, [&](Rng& rng, int t) -> Witness {
        const auto [c, X, a] = setup(rng, t);
        const Form eta = gen::form(rng, c, 1);
        return expect_zero(d_eta(eta, d_eta(eta, a)));
    }));
    out.push_back(property("pair.degree_bound", "deg > n+1 => (0,0)", o, [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const PairForm a = gen::pair(rng, c, c.dim() + 2 + rng.uniform(0, 1));
        const PairForm b = d_tilde(gen::field(rng, c), gen::pair(rng, c, c.dim() + 1));
        if (auto w = expect_zero(a, "random high-degree pair")) return w;
        return expect_zero(b, "d~_X of a top-degree pair");
    }));
    return out;
}

inline std::vector<CheckResult> relative_checks(const SuiteOptions& o) {
    using namespace detail;
    std::vector<CheckResult> out;
    // A map f: M' -> M; target dimension varies to exercise n != n'.
    auto random_map = [&](Rng& rng, int t) {
        const Chart& src = chart_for(o, t);
        const int tdim = std::max(1, src.dim() + rng.uniform(-1, 1));
        if (src.is_periodic()) return gen::torus_map(rng, src, Chart::torus(tdim));
        return gen::polynomial_map(rng, src, Chart::affine(tdim));
    };
    auto random_rel = [](Rng& rng, const ChartMap& f, int p) {
        return RelPairForm(f, gen::form(rng, f.target(), p), gen::form(rng, f.source(), p - 1));
    };
    auto random_primed = [](Rng& rng, const ChartMap& f, int p) {
        return RelPairForm(f, gen::form(rng, f.source(), p), gen::form(rng, f.target(), p - 1), true);
    };
    auto degree_for = [](Rng& rng, const ChartMap& f) {
        return rng.uniform(0, std::max(f.source().dim(), f.target().dim()) + 1);
    };
    out.push_back(property("relative.d_rel_squared", "d_{X,f}^2 = (0,0)", o, [&](Rng& rng, int t) -> Witness {
        const ChartMap f = random_map(rng, t);
        const VectorField X = gen::field(rng, f.source());
        const RelPairForm a = random_rel(rng, f, degree_for(rng, f));
        const RelPairForm r = d_rel(X, d_rel(X, a));
        if (r.is_zero()) return std::nullopt;
        return "nonzero " + render_rel(r);
    }));
    out.push_back(property("relative.d_eta_rel_squared", "d_{eta,f}^2 = (0,0)", o, [&](Rng& rng, int t) -> Witness {
        const ChartMap f = random_map(rng, t);
        const Form eta = gen::form(rng, f.target(), 1);
        const RelPairForm a = random_primed(rng, f, degree_for(rng, f));
        const RelPairForm r = d_eta_rel(eta, d_eta_rel(eta, a));
        if (r.is_zero()) return std::nullopt;
        return "nonzero " + render_rel(r);
    }));
    out.push_back(property("relative.identity_reduction", "d_{X,Id} = d~_X, ^_Id = pair wedge, d_{eta,Id} = d~_eta", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ChartMap id = ChartMap::identity(c);
        const VectorField X = gen::field(rng, c);
        const PairForm a = gen::pair(rng, c, random_pair_degree(rng, c));
        const PairForm b = gen::pair(rng, c, random_pair_degree(rng, c));
        const RelPairForm r = d_rel(X, RelPairForm(id, a.first(), a.second()));
        if (auto w = expect_equal(PairForm(r.first(), r.second()), d_tilde(X, a), "d")) return w;
        const RelPairForm wr = wedge_rel(RelPairForm(id, a.first(), a.second()), RelPairForm(id, b.first(), b.second()));
        if (auto w = expect_equal(PairForm(wr.first(), wr.second()), pair_wedge(a, b), "wedge")) return w;
        const Form eta = gen::form(rng, c, 1);
        const RelPairForm e = d_eta_rel(eta, RelPairForm(id, a.first(), a.second(), true));
        return expect_equal(PairForm(e.first(), e.second()), d_eta(eta, a), "d_eta");
    }));
    out.push_back(property("relative.wedge_laws", "a ^_f b = (-1)^{pq} b ^_f a, d_{X,f} antiderivation over ^_f", o,
                           [&](Rng& rng, int t) -> Witness {
        const ChartMap f = random_map(rng, t);
        const VectorField X = gen::field(rng, f.source());
        const RelPairForm a = random_rel(rng, f, degree_for(rng, f));
        const RelPairForm b = random_rel(rng, f, degree_for(rng, f));
        const RelPairForm ab = wedge_rel(a, b);
        const RelPairForm ba = wedge_rel(b, a).scaled(GaussQ(sign_power(a.degree() * b.degree())));
        if (!(ab == ba)) return "graded commutativity: " + mismatch(render_rel(ab), render_rel(ba));
        const RelPairForm lhs = d_rel(X, ab);
        const RelPairForm rhs = wedge_rel(d_rel(X, a), b) + wedge_rel(a, d_rel(X, b)).scaled(GaussQ(sign_power(a.degree())));
        if (lhs == rhs) return std::nullopt;
        return "antiderivation: " + mismatch(render_rel(lhs), render_rel(rhs));
    }));
    out.push_back(property("relative.closed_pair", "(phi, i_X f^*phi) is d_{X,f}-closed; exact phi gives a d_{X,f}-image", o,
                           [&](Rng& rng, int t) -> Witness {
        const ChartMap f = random_map(rng, t);
        const VectorField X = gen::field(rng, f.source());
        const int p = rng.uniform(0, f.target().dim());
        closed_pair(X, f, gen::closed_form(rng, f.target(), p));
        if (p == 0) return std::nullopt;
        const Form psi = gen::form(rng, f.target(), p - 1);
        closed_pair(X, f, ext_d(psi), psi, gen::form(rng, f.source(), p - 3));
        return std::nullopt;
    }));
    out.push_back(property("relative.connecting_maps", "d phi = 0 => L_X f^*phi = d(i_X f^*phi); d psi = 0 => f^*(d eta ^ psi) = d f^*(eta ^ psi)",
                           o, [&](Rng& rng, int t) -> Witness {
        const ChartMap f = random_map(rng, t);
        const VectorField X = gen::field(rng, f.source());
        const int p = rng.uniform(0, f.target().dim());
        const Form phi = gen::closed_form(rng, f.target(), p);
        if (auto w = expect_equal(lie(X, pullback(f, phi)), ext_d(interior(X, pullback(f, phi))), "Lie term")) return w;
        const Form eta = gen::form(rng, f.target(), 1);
        const Form psi = gen::closed_form(rng, f.target(), p);
        return expect_equal(pullback(f, wedge(ext_d(eta), psi)), ext_d(pullback(f, wedge(eta, psi))), "eta term");
    }));
    out.push_back(property("relative.structural_maps", "d_{X,f} alpha = alpha (-d), beta d_{X,f} = d beta, d_{eta,f} mu = mu d, nu d_{eta,f} = -d nu",
                           o, [&](Rng& rng, int t) -> Witness {
        const ChartMap f = random_map(rng, t);
        const VectorField X = gen::field(rng, f.source());
        const Form eta = gen::form(rng, f.target(), 1);
        const int p = degree_for(rng, f);
        const Form psi = gen::form(rng, f.source(), p - 1);
        if (!(d_rel(X, rel_alpha(f, psi)) == rel_alpha(f, -ext_d(psi)))) return std::string("alpha");
        const RelPairForm a = random_rel(rng, f, p);
        if (auto w = expect_equal(rel_beta(d_rel(X, a)), ext_d(rel_beta(a)), "beta")) return w;
        if (!rel_beta(rel_alpha(f, psi)).is_zero()) return std::string("beta alpha != 0");
        const Form phi = gen::form(rng, f.source(), p);
        if (!(d_eta_rel(eta, rel_mu(f, phi)) == rel_mu(f, ext_d(phi)))) return std::string("mu");
        const RelPairForm b = random_primed(rng, f, p);
        if (auto w = expect_equal(rel_nu(d_eta_rel(eta, b)), -ext_d(rel_nu(b)), "nu")) return w;
        if (!rel_nu(rel_mu(f, phi)).is_zero()) return std::string("nu mu != 0");
        return std::nullopt;
    }));
    out.push_back(property("relative.inverse_reindex", "f invertible => Omega'(f) = Omega(f^{-1})", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart& c = chart_for(o, t);
        const ChartMap f = gen::automorphism(rng, c);
        const RelPairForm b = random_primed(rng, f, random_pair_degree(rng, c));
        const RelPairForm r = as_inverse_relative(b);
        if (r.primed() || !(r.first() == b.first()) || !(r.second() == b.second())) return std::string("slots changed");
        if (!(r.map().source() == f.target()) || !(r.map().target() == f.source())) return std::string("charts changed");
        return std::nullopt;
    }));
    return out;
}

inline std::vector<CheckResult> dolbeault_checks(const SuiteOptions& o) {
    using namespace detail;
    const std::vector<Chart> charts{Chart::complex_affine(1), Chart::complex_affine(2), Chart::complex_torus(1)};
    auto chart = [&](int t) { return charts[static_cast<std::size_t>(t) % charts.size()]; };
    auto bidegree = [](Rng& rng, const Chart& c) { return Bidegree{rng.uniform(0, c.n()), rng.uniform(0, c.n() + 1)}; };
    GenLimits lim;
    lim.complex_coefficients = true;
    std::vector<CheckResult> out;
    out.push_back(property("dolbeault.split_d", "d = del + dbar, del^2 = dbar^2 = del dbar + dbar del = 0", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = chart(t);
        const Bidegree bd{rng.uniform(0, c.n()), rng.uniform(0, c.n())};
        const BigradedForm a(gen::bigraded_form(rng, c, bd, lim), bd);
        const auto [da, ba] = split_d(a);
        if (auto w = expect_zero(del(da.form()), "del^2")) return w;
        if (auto w = expect_zero(dbar(ba.form()), "dbar^2")) return w;
        if (auto w = expect_zero(dbar(da.form()) + del(ba.form()), "anticommutator")) return w;
        if (auto w = expect_equal(da.form() + ba.form(), ext_d(a.form()), "frame d")) return w;
        return expect_equal(to_real(da.form() + ba.form()), ext_d(to_real(a.form())), "real dictionary");
    }));
    out.push_back(property("dolbeault.lie_dbar_commute", "[L_X, dbar] = 0", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = chart(t);
        const VectorField X = gen::holomorphic_field(rng, c);
        const Bidegree bd{rng.uniform(0, c.n()), rng.uniform(0, c.n())};
        const BigradedForm a(gen::bigraded_form(rng, c, bd, lim), bd);
        const BigradedForm la = lie(X, a);  // validates that the bidegree is preserved
        return expect_equal(dbar(la.form()), lie(X, dbar(a.form())));
    }));
    out.push_back(property("dolbeault.dbar_X_squared", "dbar_X^2 = (0,0)", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = chart(t);
        const VectorField X = gen::holomorphic_field(rng, c);
        const PairBigradedForm a = gen::bigraded_pair(rng, c, bidegree(rng, c), lim);
        const PairBigradedForm r = dbar_X(X, dbar_X(X, a));
        return expect_zero(r.as_pair());
    }));
    out.push_back(property("dolbeault.dbar_X_antiderivation", "dbar_X(a^b) = dbar_X a ^ b + (-1)^{p+q} a ^ dbar_X b", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = chart(t);
        const VectorField X = gen::holomorphic_field(rng, c);
        const PairBigradedForm a = gen::bigraded_pair(rng, c, bidegree(rng, c), lim);
        const PairBigradedForm b = gen::bigraded_pair(rng, c, bidegree(rng, c), lim);
        const int s = sign_power(a.bidegree().p + a.bidegree().q);
        const PairForm lhs = dbar_X(X, pair_wedge(a, b)).as_pair();
        const PairForm rhs = pair_wedge(dbar_X(X, a), b).as_pair() + pair_wedge(a, dbar_X(X, b)).as_pair().scaled(GaussQ(s));
        if (auto w = expect_equal(lhs, rhs, "antiderivation")) return w;
        const int sc = sign_power((a.bidegree().p + a.bidegree().q) * (b.bidegree().p + b.bidegree().q));
        return expect_equal(pair_wedge(a, b).as_pair(), pair_wedge(b, a).as_pair().scaled(GaussQ(sc)), "graded commutativity");
    }));
    out.push_back(property("dolbeault.functoriality", "f~^* maps dbar_{f_*X}-cocycles to dbar_X-cocycles", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = chart(t);
        const ChartMap f = gen::biholomorphic_map(rng, c);
        const VectorField X = gen::holomorphic_field(rng, c);
        const VectorField Y = pushforward(f, X);
        if (!Y.is_holomorphic()) return "pushforward is not holomorphic: " + text::render(Y);
        const Bidegree bd = bidegree(rng, c);
        const PairBigradedForm b = gen::bigraded_pair(rng, c, {bd.p, bd.q - 1}, lim);
        const PairBigradedForm z = dbar_X(Y, b);
        const PairForm pulled = pair_pullback(f, z.as_pair());
        const PairBigradedForm zp(BigradedForm(pulled.first(), z.bidegree()),
                                  BigradedForm(pulled.second(), {bd.p, bd.q - 1}));
        if (auto w = expect_zero(dbar_X(X, zp).as_pair(), "pulled cocycle")) return w;
        const PairBigradedForm a = gen::bigraded_pair(rng, c, bd, lim);
        const PairForm pa = pair_pullback(f, a.as_pair());
        const PairBigradedForm pab(BigradedForm(pa.first(), bd), BigradedForm(pa.second(), {bd.p, bd.q - 1}));
        return expect_equal(dbar_X(X, pab).as_pair(), pair_pullback(f, dbar_X(Y, a).as_pair()), "intertwining");
    }));
    out.push_back(property("dolbeault.dbar_X_rel_squared", "dbar_{X,f}^2 = (0,0), dbar_{X,Id} = dbar_X", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart src = (t % 2 == 0) ? Chart::complex_affine(1) : Chart::complex_torus(1);
        const ChartMap f = gen::holomorphic_map(rng, src, src);
        const VectorField X = gen::holomorphic_field(rng, src);
        const Bidegree bd{rng.uniform(0, 1), rng.uniform(0, 2)};
        const RelPairForm a(f, gen::bigraded_form(rng, f.target(), bd, lim),
                            gen::bigraded_form(rng, f.source(), {bd.p, bd.q - 1}, lim));
        const RelPairForm r = dbar_X_rel(X, dbar_X_rel(X, a));
        if (!r.is_zero()) return "nonzero " + render_rel(r);
        const PairBigradedForm pa = gen::bigraded_pair(rng, src, bd, lim);
        const RelPairForm ri = dbar_X_rel(X, RelPairForm(ChartMap::identity(src), pa.first().form(), pa.second().form()));
        return expect_equal(PairForm(ri.first(), ri.second()), dbar_X(X, pa).as_pair(), "identity reduction");
    }));
    out.push_back(property("dolbeault.lie_exactness", "d phi = 0 => L_X phi = del(i_X phi), dbar(i_X phi) = 0", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = chart(t);
        const VectorField X = gen::holomorphic_field(rng, c);
        BigradedForm phi;
        switch (rng.uniform(0, 2)) {
            case 0: {  // constant coefficients
                const Bidegree bd{rng.uniform(0, c.n()), rng.uniform(0, c.n())};
                Form a(c, bd.p + bd.q);
                for (Mask I : masks_of_size(c.dim(), bd.p + bd.q))
                    if (bidegree_of(I, c.n()) == bd && rng.chance(1, 2))
                        a.add(I, ScalarExpr::constant(c, gen::coefficient(rng, true)));
                phi = BigradedForm(a, bd);
                break;
            }
            case 1:  // dbar del g
                phi = BigradedForm(dbar(del(Form::function(gen::scalar(rng, c, lim)))), {1, 1});
                break;
            default: {  // h(z) dz[1] ^ ... ^ dz[n] (closed: top holomorphic degree)
                Mask top = (Mask{1} << c.n()) - 1;
                phi = BigradedForm(Form::monomial(gen::holomorphic_scalar(rng, c), top), {c.n(), 0});
            }
        }
        const LieExactness w = lie_exactness_check(X, phi);
        if (w.holds()) return std::nullopt;
        return "phi = " + text::render(phi.form()) + ", X = " + text::render(X) + ", " +
               mismatch(text::render(w.lie), text::render(w.del_contraction)) + ", dbar(i_X phi) = " +
               text::render(w.dbar_contraction);
    }));
    return out;
}

/// Criterion-1 identity suite plus the single-form invariants.
inline std::vector<CheckResult> identity_suite(const SuiteOptions& o) {
    std::vector<CheckResult> out;
    for (auto part : {scalar_checks(o), exterior_checks(o), hodge_checks(o), pair_checks(o), relative_checks(o),
                      dolbeault_checks(o)})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

/// Liouville, Hamiltonian and relative Liouville examples on R^{2n}.
inline std::vector<CheckResult> symplectic_checks(const std::vector<int>& dims = {1, 2}) {
    using namespace detail;
    std::vector<CheckResult> out;
    for (int n : dims) {
        const std::string tag = "[n=" + std::to_string(n) + "]";
        const LiouvilleData L = standard_liouville(n);
        const Chart c = L.omega.chart();
        const ScalarExpr x = ScalarExpr::variable(c, 0), y = ScalarExpr::variable(c, n);
        out.push_back(single("symplectic.liouville" + tag, "i_xi w = theta, L_xi w = w, d theta = w", [&]() -> Witness {
            if (auto w = expect_equal(interior(L.xi, L.omega), L.theta, "i_xi w")) return w;
            if (auto w = expect_equal(lie(L.xi, L.omega), L.omega, "L_xi w")) return w;
            return expect_equal(ext_d(L.theta), L.omega, "d theta");
        }));
        out.push_back(single("symplectic.liouville_closed" + tag, "d~_xi(w, theta) = (0,0)",
                             [&]() -> Witness { return expect_zero(d_tilde(L.xi, PairForm(L.omega, L.theta))); }));
        out.push_back(single("symplectic.liouville_exact" + tag, "(w, theta) = d~_xi(theta + df, xi f)", [&]() -> Witness {
            for (const ScalarExpr& f : {x * y, x * x}) {
                const PairForm rhs = d_tilde(L.xi, PairForm(L.theta + ext_d(Form::function(f)), Form::function(L.xi.apply(f))));
                if (auto w = expect_equal(PairForm(L.omega, L.theta), rhs, "f = " + text::render(f))) return w;
            }
            return std::nullopt;
        }));
        out.push_back(single("symplectic.hamiltonian_solve" + tag, "i_X w = -df", [&]() -> Witness {
            const std::vector<ScalarExpr> fs{x, (x * x + y * y).scaled(GaussQ::ratio(1, 2)), x.pow(3) * y - y};
            for (const auto& f : fs) {
                const VectorField X = hamiltonian_field(L.omega, f);
                if (auto w = expect_equal(interior(X, L.omega), -ext_d(Form::function(f)), "f = " + text::render(f))) return w;
            }
            if (!hamiltonian_field(L.omega, ScalarExpr::constant(c, GaussQ(5))).is_zero()) return std::string("constant f");
            try {
                hamiltonian_field(Form(c, 2), x);
                return std::string("degenerate form accepted");
            } catch (const PreconditionError&) {
            }
            return std::nullopt;
        }));
        out.push_back(single("symplectic.symplectic_field" + tag, "L_X w = 0 => d~_X(w, theta') = (0,0) for closed theta'",
                             [&]() -> Witness {
            Rng rng(stable_hash("symplectic_field") + n);
            for (int t = 0; t < 10; ++t) {
                const VectorField X = hamiltonian_field(L.omega, gen::scalar(rng, c));
                const Form theta_p = gen::closed_form(rng, c, 1);
                if (auto w = expect_zero(d_tilde(X, PairForm(L.omega, theta_p)), "X = " + text::render(X))) return w;
            }
            return std::nullopt;
        }));
        out.push_back(single("symplectic.hamilton_equation" + tag, "-d~_X(f,0) = i~_X(w, dh'), Xh' = 0", [&]() -> Witness {
            const ScalarExpr f = x;
            const ScalarExpr h = x;
            const VectorField X = hamiltonian_field(L.omega, f);
            if (!X.apply(h).is_zero()) return std::string("X h' != 0");
            const PairForm lhs = -d_tilde(X, PairForm::from_first(Form::function(f)));
            const PairForm rhs = i_tilde(X, PairForm(L.omega, ext_d(Form::function(h))));
            return expect_equal(lhs, rhs);
        }));
        out.push_back(single("symplectic.relative_liouville" + tag,
                             "d_{xi',f}(w, theta') = (0,0); f^*theta = theta' => (w, theta') = d_{xi',f}(theta, 0)",
                             [&]() -> Witness {
            // Linear symplectomorphisms of R^{2n}: a shear and the antipodal map.
            std::vector<ScalarExpr> shear, antipodal;
            for (int a = 0; a < 2 * n; ++a) {
                ScalarExpr v = ScalarExpr::variable(c, a);
                shear.push_back(a < n ? v + ScalarExpr::variable(c, a + n) : v);
                antipodal.push_back(-v);
            }
            for (const auto& comps : {shear, antipodal}) {
                const ChartMap f = ChartMap::polynomial(c, c, comps);
                if (auto w = expect_equal(pullback(f, L.omega), L.omega, "symplectomorphism")) return w;
                const RelPairForm r = d_rel(L.xi, RelPairForm(f, L.omega, L.theta));
                if (!r.is_zero()) return "d_rel(w, theta') = " + render_rel(r);
                if (pullback(f, L.theta) == L.theta) {
                    const RelPairForm img = d_rel(L.xi, RelPairForm(f, L.theta, Form(c, 0)));
                    if (!(img == RelPairForm(f, L.omega, L.theta))) return "image " + render_rel(img);
                }
            }
            return std::nullopt;
        }));
    }
    return out;
}

/// A constant field with rational components, from a list of values.
inline VectorField constant_field(const Chart& c, const std::vector<GaussQ>& v) { return VectorField::constant(c, v); }

struct HarmonicCase {
    Chart chart;
    VectorField U;
    std::string label;
};

/// Killing fields used for the kernel comparison: resonant and non-resonant.
inline std::vector<HarmonicCase> harmonic_cases() {
    const Chart t1 = Chart::torus(1), t2 = Chart::torus(2);
    return {
        {t1, constant_field(t1, {GaussQ(1)}), "T^1 U=d/dx[1]"},
        {t2, constant_field(t2, {GaussQ(1), GaussQ(0)}), "T^2 U=d/dx[1]"},
        {t2, constant_field(t2, {GaussQ(0), GaussQ(1)}), "T^2 U=d/dx[2]"},
        {t2, constant_field(t2, {GaussQ::ratio(3, 5), GaussQ::ratio(4, 5)}), "T^2 U=3/5*d/dx[1] + 4/5*d/dx[2]"},
        {t2, constant_field(t2, {GaussQ::ratio(1, 2), GaussQ(0)}), "T^2 U=1/2*d/dx[1]"},
        {t2, constant_field(t2, {GaussQ(2), GaussQ(0)}), "T^2 U=2*d/dx[1]"},
    };
}

inline std::vector<CheckResult> harmonic_checks(const SuiteOptions& o, const std::vector<int>& bands = {1, 2}) {
    using namespace detail;
    const std::vector<Chart> tori{Chart::torus(2), Chart::torus(3)};
    auto torus = [&](int t) { return tori[static_cast<std::size_t>(t) % tori.size()]; };
    std::vector<CheckResult> out;
    out.push_back(property("harmonic.laplacian_closed_form", "d~_U delta~_U + delta~_U d~_U = (Delta + L_U^2, Delta + L_U^2)", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const VectorField U = gen::constant_field(rng, c);
        const PairForm a = gen::pair(rng, c, random_pair_degree(rng, c));
        const PairForm composite = d_tilde(U, delta_tilde(U, a)) + delta_tilde(U, d_tilde(U, a));
        return expect_equal(composite, laplacian_tilde_closed_form(U, a));
    }));
    out.push_back(property("harmonic.codiff_relations", "L_U = -delta e(w) - e(w) delta, delta L_U = L_U delta; w in {dx, 3/5 dx + 4/5 dy}",
                           o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        std::vector<ScalarExpr> w1(c.dim(), ScalarExpr(c)), w2(c.dim(), ScalarExpr(c));
        w1[0] = ScalarExpr::constant(c, GaussQ(1));
        w2[0] = ScalarExpr::constant(c, GaussQ::ratio(3, 5));
        w2[1] = ScalarExpr::constant(c, GaussQ::ratio(4, 5));
        const Form a = gen::form(rng, c, random_degree(rng, c));
        for (const Form& w : {Form::one_form(c, w1), Form::one_form(c, w2)}) {
            const VectorField U = sharp(w);
            if (auto r = expect_equal(lie(U, a), -codiff(wedge(w, a)) - wedge(w, codiff(a)), "w = " + text::render(w))) return r;
            if (auto r = expect_equal(codiff(lie(U, a)), lie(U, codiff(a)), "w = " + text::render(w))) return r;
        }
        return std::nullopt;
    }));
    out.push_back(property("harmonic.lichnerowicz", "Delta_w = Delta + id (|w| = 1), Delta_2dx = Delta + 4 id", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        std::vector<ScalarExpr> unit(c.dim(), ScalarExpr(c)), twice(c.dim(), ScalarExpr(c)), tilted(c.dim(), ScalarExpr(c));
        unit[0] = ScalarExpr::constant(c, GaussQ(1));
        twice[0] = ScalarExpr::constant(c, GaussQ(2));
        tilted[0] = ScalarExpr::constant(c, GaussQ::ratio(3, 5));
        tilted[1] = ScalarExpr::constant(c, GaussQ::ratio(4, 5));
        const Form a = gen::form(rng, c, random_degree(rng, c));
        for (const auto& w : {Form::one_form(c, unit), Form::one_form(c, tilted)})
            if (auto r = expect_equal(lichnerowicz_laplacian(w, a), laplacian(a) + a, "w = " + text::render(w))) return r;
        const Form w2 = Form::one_form(c, twice);
        if (auto r = expect_equal(lichnerowicz_laplacian(w2, a), laplacian(a) + a.scaled(GaussQ(4)), "w = 2dx")) return r;
        if (!a.is_zero() && lichnerowicz_laplacian(w2, a) == laplacian(a) + a) return std::string("w = 2dx matched Delta + id");
        return std::nullopt;
    }));
    out.push_back(property("harmonic.self_adjoint", "<<Delta~_U a, b>> = <<a, Delta~_U b>>", o, [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const VectorField U = gen::constant_field(rng, c);
        const int p = random_pair_degree(rng, c);
        GenLimits lim;
        lim.complex_coefficients = true;
        const PairForm a = gen::pair(rng, c, p, lim), b = gen::pair(rng, c, p, lim);
        const GaussQ lhs = pair_inner(laplacian_tilde(U, a), b), rhs = pair_inner(a, laplacian_tilde(U, b));
        if (lhs == rhs) return std::nullopt;
        return mismatch(lhs.to_string(), rhs.to_string());
    }));
    out.push_back(property("harmonic.constant_pairs", "constant phi, psi, Killing U => Delta~_U(phi, psi) = (0,0)", o,
                           [&](Rng& rng, int t) -> Witness {
        const Chart c = torus(t);
        const VectorField U = gen::constant_field(rng, c);
        GenLimits lim;
        lim.max_freq = 0;
        return expect_zero(laplacian_tilde(U, gen::pair(rng, c, random_pair_degree(rng, c), lim)));
    }));
    out.push_back(single("harmonic.klein_gordon", "Delta f + L_U^2 f = 0 for L_U f = k f", []() -> Witness {
        const Chart c = Chart::torus(2);
        const PairForm s = PairForm::from_first(Form::function(trig::sin(c, {1, 0})));
        const VectorField dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
        if (auto w = expect_zero(laplacian_tilde(dx, s), "U = d/dx[1]")) return w;
        if (auto w = expect_equal(laplacian_tilde(dy, s), s, "U = d/dx[2]")) return w;
        for (int m : {1, 2, -3}) {
            for (int mp : {-2, -1, 0, 1, 2}) {
                const PairForm e = PairForm::from_first(Form::function(ScalarExpr::exponential(c, {m, 0})));
                const VectorField U = dx.scaled(GaussQ(mp));
                const bool harmonic = laplacian_tilde(U, e).is_zero();
                if (harmonic != (mp * mp == 1))
                    return "m = " + std::to_string(m) + ", m' = " + std::to_string(mp) + ": harmonic = " + std::to_string(harmonic);
            }
        }
        const PairForm one = PairForm::from_first(Form::function(ScalarExpr::constant(c, GaussQ(1))));
        return expect_zero(laplacian_tilde(dx, one), "k = 0");
    }));
    out.push_back(single("harmonic.lichnerowicz_kernel", "Delta_w = Delta + id > 0 for |w| = 1", [&]() -> Witness {
        for (int n : {1, 2}) {
            const Chart c = Chart::torus(n);
            const Form w = Form::basis(c, 1);
            for (int p = 0; p <= n; ++p)
                for (int N : bands)
                    if (const int k = lichnerowicz_kernel(w, p, N); k != 0)
                        return c.to_string() + " p=" + std::to_string(p) + " N=" + std::to_string(N) + ": kernel " + std::to_string(k);
        }
        return std::nullopt;
    }));

    // Kernel comparisons on the band, for the delta~_U as given and for the skew adjoint.
    auto kernel_check = [&](const std::string& id, const std::string& anchor, bool skew) {
        std::ostringstream summary;
        bool all_equal = true;
        for (const auto& hc : harmonic_cases()) {
            for (int N : bands) {
                for (int p = 0; p <= hc.chart.dim() + 1; ++p) {
                    const HarmonicKernel k = skew ? skew_harmonic_kernel(hc.U, p, N) : harmonic_kernel(hc.U, p, N);
                    if (k.equal()) continue;
                    all_equal = false;
                    summary << hc.label << " N=" << N << " p=" << p << ": dim ker Delta~ = " << k.laplacian_kernel
                            << ", dim(ker d~ cap ker delta~) = " << k.joint_kernel;
                    if (k.witness) summary << ", e.g. " << text::render(*k.witness);
                    summary << "; ";
                }
            }
        }
        return CheckResult{id, anchor, all_equal ? Verdict::pass : Verdict::fail, summary.str()};
    };
    out.push_back(kernel_check("harmonic.kernel_equality", "Delta~_U a = 0 <=> d~_U a = 0 and delta~_U a = 0", false));
    out.push_back(kernel_check("harmonic.kernel_equality_skew",
                               "(Delta - L_U^2) a = 0 <=> d~_U a = 0 and (delta phi - L_U psi, -delta psi) = 0", true));
    return out;
}

/// Adjointness of delta~_U as stated versus the skew-corrected form, reported
/// together. Passes when the stated form fails only off ker L_U and the skew
/// form holds on every instance.
inline CheckResult adjointness_discrepancy(const SuiteOptions& o) {
    using namespace detail;
    const std::vector<Chart> tori{Chart::torus(2), Chart::torus(3)};
    Rng rng(o.seed ^ stable_hash("harmonic.adjointness"));
    int stated_fail = 0, stated_fail_on_kernel = 0, kernel_instances = 0, skew_fail = 0;
    std::string stated_witness, skew_witness;
    for (int t = 0; t < o.trials; ++t) {
        const Chart c = tori[static_cast<std::size_t>(t) % tori.size()];
        const VectorField U = gen::constant_field(rng, c);
        const int p = rng.uniform(0, c.dim());
        GenLimits lim;
        lim.complex_coefficients = true;
        const PairForm a = gen::pair(rng, c, p, lim);
        PairForm b = gen::pair(rng, c, p + 1, lim);
        // Every fourth instance has psi' in ker L_U (constant coefficients).
        if (t % 4 == 3) {
            GenLimits flat = lim;
            flat.max_freq = 0;
            b = PairForm(b.first(), gen::form(rng, c, p, flat));
        }
        const bool on_kernel = lie(U, b.second()).is_zero();
        kernel_instances += on_kernel ? 1 : 0;
        const GaussQ lhs = pair_inner(d_tilde(U, a), b);
        const GaussQ stated = pair_inner(a, delta_tilde(U, b));
        const GaussQ skew = pair_inner(a, skew_delta_tilde(U, b));
        if (!(lhs == stated)) {
            ++stated_fail;
            if (on_kernel) ++stated_fail_on_kernel;
            if (stated_witness.empty())
                stated_witness = "U = " + text::render(U) + ", a = " + text::render(a) + ", b = " + text::render(b) +
                                ": <<d~a,b>> = " + lhs.to_string() + ", <<a,delta~b>> = " + stated.to_string() +
                                ", <<a,skew delta~b>> = " + skew.to_string();
        }
        if (!(lhs == skew)) {
            ++skew_fail;
            if (skew_witness.empty()) skew_witness = "U = " + text::render(U) + ", a = " + text::render(a) + ", b = " + text::render(b);
        }
    }
    const bool as_documented = stated_fail > 0 && stated_fail_on_kernel == 0 && skew_fail == 0;
    std::ostringstream w;
    w << "stated_form=" << (stated_fail == 0 ? "pass" : "fail") << " (" << stated_fail << "/" << o.trials
      << " counterexamples, " << stated_fail_on_kernel << "/" << kernel_instances << " on ker L_U)";
    if (!stated_witness.empty()) w << " witness: " << stated_witness;
    w << "; skew_form=" << (skew_fail == 0 ? "pass" : "fail") << " (" << (o.trials - skew_fail) << "/" << o.trials << ")";
    if (!skew_witness.empty()) w << " witness: " << skew_witness;
    else if (!stated_witness.empty()) w << " witness: the stated-form counterexample above, where both sides agree";
    return {"harmonic.adjointness_documented_discrepancy",
            "<<d~_U a, b>> = <<a, delta~_U b>> (stated) vs <<a, (delta phi' - L_U psi', -delta psi')>> (skew)",
            as_documented ? Verdict::pass : Verdict::fail, w.str()};
}

}  // namespace pairdiff
