// Exact coefficient functions: finite sums c * x^alpha * e^{i<k,x>}.
#pragma once

#include "pairdiff/chart.hpp"
#include "pairdiff/gaussian_rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pairdiff {

/// Exponent vector alpha and frequency vector k of a single term.
struct Monomial {
    std::vector<int> exponents;
    std::vector<int> frequencies;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    bool is_unit() const {
        for (int e : exponents)
            if (e != 0) return false;
        for (int k : frequencies)
            if (k != 0) return false;
        return true;
    }
};

struct Term {
    GaussQ coefficient;
    Monomial monomial;
};

/// A scalar function on a chart in canonical form: terms keyed and sorted by
/// (alpha, k), no duplicates, no zero coefficients. Two expressions are equal
/// as functions iff their canonical term maps are identical.
class ScalarExpr {
public:
    using TermMap = std::map<Monomial, GaussQ>;

    ScalarExpr() = default;
    explicit ScalarExpr(Chart chart) : chart_(chart) {}

    static ScalarExpr constant(Chart chart, const GaussQ& c) {
        ScalarExpr out(chart);
        out.accumulate(unit_monomial(chart), c);
        return out;
    }

    /// The coordinate function for a frame axis; affine charts only.
    static ScalarExpr variable(Chart chart, int axis) {
        if (chart.is_periodic())
            throw ChartMismatch("ScalarExpr::variable: tori carry no polynomial coordinates");
        check_axis(chart, axis);
        Monomial m = unit_monomial(chart);
        m.exponents[axis] = 1;
        ScalarExpr out(chart);
        out.accumulate(std::move(m), GaussQ(1));
        return out;
    }

    /// c * x^alpha (affine charts).
    static ScalarExpr monomial(Chart chart, std::vector<int> alpha, const GaussQ& c = GaussQ(1)) {
        Monomial m = unit_monomial(chart);
        m.exponents = std::move(alpha);
        return normalize(chart, {Term{c, std::move(m)}});
    }

    /// c * e^{i<k,x>} (periodic charts; k has one entry per real coordinate).
    static ScalarExpr exponential(Chart chart, std::vector<int> k, const GaussQ& c = GaussQ(1)) {
        Monomial m = unit_monomial(chart);
        m.frequencies = std::move(k);
        return normalize(chart, {Term{c, std::move(m)}});
    }

    /// Canonicalizes a raw term list; throws on chart incompatibility.
    static ScalarExpr normalize(Chart chart, const std::vector<Term>& raw) {
        ScalarExpr out(chart);
        for (const auto& t : raw) {
            check_monomial(chart, t.monomial);
            out.accumulate(t.monomial, t.coefficient);
        }
        return out;
    }

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    /// Value of the constant term.
    GaussQ constant_term() const {
        auto it = terms_.find(unit_monomial(chart_));
        return it == terms_.end() ? GaussQ(0) : it->second;
    }

    /// Highest total polynomial degree.
    int max_degree() const {
        int out = 0;
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (int e : m.exponents) d += e;
            out = std::max(out, d);
        }
        return out;
    }

    /// Largest |k_j| over all terms.
    int max_frequency() const {
        int out = 0;
        for (const auto& [m, c] : terms_)
            for (int k : m.frequencies) out = std::max(out, k < 0 ? -k : k);
        return out;
    }

    ScalarExpr operator-() const {
        ScalarExpr out(chart_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    ScalarExpr& operator+=(const ScalarExpr& o) {
        require_same_chart(chart_, o.chart_, "ScalarExpr::+");
        for (const auto& [m, c] : o.terms_) accumulate(m, c);
        return *this;
    }
    ScalarExpr& operator-=(const ScalarExpr& o) {
        require_same_chart(chart_, o.chart_, "ScalarExpr::-");
        for (const auto& [m, c] : o.terms_) accumulate(m, -c);
        return *this;
    }

    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }

    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
        require_same_chart(a.chart_, b.chart_, "ScalarExpr::*");
        ScalarExpr out(a.chart_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t j = 0; j < m.exponents.size(); ++j) {
                    m.exponents[j] += mb.exponents[j];
                    m.frequencies[j] += mb.frequencies[j];
                }
                out.accumulate(std::move(m), ca * cb);
            }
        }
        return out;
    }

    ScalarExpr scaled(const GaussQ& s) const {
        ScalarExpr out(chart_);
        if (s.is_zero()) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    friend ScalarExpr operator*(const GaussQ& s, const ScalarExpr& a) { return a.scaled(s); }

    ScalarExpr pow(int e) const {
        if (e < 0) throw std::invalid_argument("ScalarExpr::pow: negative exponent");
        ScalarExpr out = constant(chart_, GaussQ(1));
        for (int j = 0; j < e; ++j) out = out * *this;
        return out;
    }

    /// Complex conjugate as a function on the chart.
    ScalarExpr conj() const {
        ScalarExpr out(chart_);
        const int n = chart_.n();
        for (const auto& [m, c] : terms_) {
            Monomial mc = m;
            for (auto& k : mc.frequencies) k = -k;
            if (chart_.kind() == ChartKind::affine_complex) {
                for (int j = 0; j < n; ++j) std::swap(mc.exponents[j], mc.exponents[n + j]);
            }
            out.accumulate(std::move(mc), c.conj());
        }
        return out;
    }

    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }

    /// Adds c * m, dropping the entry if it cancels.
    void accumulate(Monomial m, const GaussQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static Monomial unit_monomial(const Chart& chart) {
        return Monomial{std::vector<int>(chart.dim(), 0), std::vector<int>(chart.dim(), 0)};
    }

    static void check_axis(const Chart& chart, int axis) {
        if (axis < 0 || axis >= chart.dim())
            throw std::out_of_range("axis " + std::to_string(axis) + " out of range for " +
                                    chart.to_string());
    }

    static void check_monomial(const Chart& chart, const Monomial& m) {
        const auto d = static_cast<std::size_t>(chart.dim());
        if (m.exponents.size() != d || m.frequencies.size() != d)
            throw ChartMismatch("ScalarExpr: monomial arity does not match chart");
        for (std::size_t j = 0; j < d; ++j) {
            if (m.exponents[j] < 0) throw ChartMismatch("ScalarExpr: negative exponent");
            if (chart.is_periodic() && m.exponents[j] != 0)
                throw ChartMismatch("ScalarExpr: torus charts forbid polynomial exponents");
            if (!chart.is_periodic() && m.frequencies[j] != 0)
                throw ChartMismatch("ScalarExpr: affine charts forbid nonzero frequencies");
        }
    }

private:
    Chart chart_;
    TermMap terms_;
};

/// Exact derivative along a frame axis. On complex charts this is the
/// Wirtinger derivative d/dz[j] (axis j < n) or d/dzb[j] (axis n + j).
inline ScalarExpr partial(const ScalarExpr& a, int axis) {
    const Chart& chart = a.chart();
    ScalarExpr::check_axis(chart, axis);
    ScalarExpr out(chart);
    const GaussQ half = GaussQ::ratio(1, 2);
    for (const auto& [m, c] : a.terms()) {
        switch (chart.kind()) {
            case ChartKind::affine_real:
            case ChartKind::affine_complex: {
                const int e = m.exponents[axis];
                if (e == 0) break;
                Monomial md = m;
                md.exponents[axis] = e - 1;
                out.accumulate(std::move(md), c * GaussQ(e));
                break;
            }
            case ChartKind::torus: {
                const int k = m.frequencies[axis];
                if (k != 0) out.accumulate(m, c * GaussQ(0, k));
                break;
            }
            case ChartKind::complex_torus: {
                // d/dz = (d/dx - i d/dy)/2, d/dzb = (d/dx + i d/dy)/2.
                const int n = chart.n();
                const int j = axis % n;
                const int kx = m.frequencies[j];
                const int ky = m.frequencies[n + j];
                GaussQ factor = axis < n ? GaussQ(ky, kx) : GaussQ(-ky, kx);
                factor *= half;
                if (!factor.is_zero()) out.accumulate(m, c * factor);
                break;
            }
        }
    }
    return out;
}

/// Integral over a torus with the volume normalized to 1: the (alpha=0, k=0)
/// coefficient.
inline GaussQ torus_integral(const ScalarExpr& a) {
    if (!a.chart().is_periodic())
        throw ChartMismatch("torus_integral: chart " + a.chart().to_string() + " is not a torus");
    return a.constant_term();
}

namespace trig {

/// sin(<k,x>) on a periodic chart.
inline ScalarExpr sin(Chart chart, std::vector<int> k) {
    std::vector<int> neg = k;
    for (auto& v : neg) v = -v;
    // (e^{i t} - e^{-i t}) / (2i)
    return ScalarExpr::exponential(chart, std::move(k), GaussQ(0, -1) * GaussQ::ratio(1, 2)) +
           ScalarExpr::exponential(chart, std::move(neg), GaussQ(0, 1) * GaussQ::ratio(1, 2));
}

/// cos(<k,x>) on a periodic chart.
inline ScalarExpr cos(Chart chart, std::vector<int> k) {
    std::vector<int> neg = k;
    for (auto& v : neg) v = -v;
    return ScalarExpr::exponential(chart, std::move(k), GaussQ::ratio(1, 2)) +
           ScalarExpr::exponential(chart, std::move(neg), GaussQ::ratio(1, 2));
}

}  // namespace trig

}  // namespace pairdiff
