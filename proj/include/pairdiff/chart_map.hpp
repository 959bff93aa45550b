// Maps between model charts: polynomial maps of affine charts and integer
// linear maps of tori.
#pragma once

#include "pairdiff/linalg.hpp"
#include "pairdiff/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pairdiff {

using IntMatrix = std::vector<std::vector<long>>;

namespace detail {

// Frame 1-forms in terms of real coordinate differentials: dz = dx + i dy,
// dzb = dx - i dy. Identity on real charts.
inline DenseMatrix frame_from_real(const Chart& c) {
    const int d = c.dim();
    if (!c.is_complex()) return DenseMatrix::identity(d);
    const int n = c.n();
    DenseMatrix out(d, d);
    for (int j = 0; j < n; ++j) {
        out(j, j) = GaussQ(1);
        out(j, n + j) = GaussQ(0, 1);
        out(n + j, j) = GaussQ(1);
        out(n + j, n + j) = GaussQ(0, -1);
    }
    return out;
}

// Real coordinate differentials in terms of frame 1-forms (inverse of the above).
inline DenseMatrix real_from_frame(const Chart& c) {
    const int d = c.dim();
    if (!c.is_complex()) return DenseMatrix::identity(d);
    const int n = c.n();
    DenseMatrix out(d, d);
    const GaussQ half = GaussQ::ratio(1, 2);
    for (int j = 0; j < n; ++j) {
        out(j, j) = half;
        out(j, n + j) = half;
        out(n + j, j) = GaussQ(0, -1) * half;
        out(n + j, n + j) = GaussQ(0, 1) * half;
    }
    return out;
}

}  // namespace detail

/// A map f: source -> target. Polynomial rule: one ScalarExpr on the source
/// per target frame variable (affine charts). Linear-torus rule: an integer
/// matrix A acting on real coordinates, x -> A x (periodic charts).
class ChartMap {
public:
    enum class Rule { polynomial, linear_torus };

    ChartMap() = default;

    static ChartMap identity(Chart chart) {
        if (chart.is_periodic()) {
            IntMatrix a(chart.dim(), std::vector<long>(chart.dim(), 0));
            for (int j = 0; j < chart.dim(); ++j) a[j][j] = 1;
            return torus_linear(chart, chart, std::move(a));
        }
        std::vector<ScalarExpr> comps;
        for (int a = 0; a < chart.dim(); ++a) comps.push_back(ScalarExpr::variable(chart, a));
        return ChartMap(chart, chart, std::move(comps));
    }

    /// Polynomial map between affine charts. For a complex target, pass the
    /// z components only; the zb components are their conjugates.
    static ChartMap polynomial(Chart source, Chart target, std::vector<ScalarExpr> components) {
        if (source.is_periodic() || target.is_periodic())
            throw ChartMismatch("ChartMap::polynomial: affine charts only");
        for (const auto& c : components) require_same_chart(c.chart(), source, "ChartMap::polynomial");
        if (target.is_complex()) {
            if (static_cast<int>(components.size()) != target.n())
                throw ChartMismatch("ChartMap::polynomial: need one component per z axis");
            const int n = target.n();
            for (int j = 0; j < n; ++j) components.push_back(components[j].conj());
        } else if (static_cast<int>(components.size()) != target.dim()) {
            throw ChartMismatch("ChartMap::polynomial: need one component per target axis");
        }
        return ChartMap(source, target, std::move(components));
    }

    /// Integer linear map of tori on real coordinates (x^1..x^n, y^1..y^n for
    /// complex tori): rows index target coordinates, columns source ones.
    static ChartMap torus_linear(Chart source, Chart target, IntMatrix a) {
        if (!source.is_periodic() || !target.is_periodic())
            throw ChartMismatch("ChartMap::torus_linear: periodic charts only");
        if (static_cast<int>(a.size()) != target.dim())
            throw ChartMismatch("ChartMap::torus_linear: matrix row count != target dimension");
        for (const auto& row : a)
            if (static_cast<int>(row.size()) != source.dim())
                throw ChartMismatch("ChartMap::torus_linear: matrix column count != source dimension");
        ChartMap out;
        out.source_ = source;
        out.target_ = target;
        out.rule_ = Rule::linear_torus;
        out.matrix_ = std::move(a);
        return out;
    }

    /// The identification of a complex chart with its underlying real chart,
    /// as a map real -> complex (z = x + i y). Pulling back along it rewrites
    /// complex-frame forms in real coordinates.
    static ChartMap realification(Chart complex_chart) {
        if (!complex_chart.is_complex()) throw ChartMismatch("realification: chart is not complex");
        const int n = complex_chart.n();
        if (complex_chart.is_periodic()) {
            IntMatrix a(2 * n, std::vector<long>(2 * n, 0));
            for (int j = 0; j < 2 * n; ++j) a[j][j] = 1;
            return torus_linear(Chart::torus(2 * n), complex_chart, std::move(a));
        }
        const Chart real = Chart::affine(2 * n);
        std::vector<ScalarExpr> comps;
        for (int j = 0; j < n; ++j)
            comps.push_back(ScalarExpr::variable(real, j) +
                            ScalarExpr::variable(real, n + j).scaled(GaussQ::i()));
        return polynomial(real, complex_chart, std::move(comps));
    }

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    Rule rule() const { return rule_; }
    const IntMatrix& matrix() const { return matrix_; }
    const std::vector<ScalarExpr>& components() const { return components_; }

    /// f^* g = g o f.
    ScalarExpr pull(const ScalarExpr& g) const {
        require_same_chart(g.chart(), target_, "ChartMap::pull");
        if (rule_ == Rule::linear_torus) {
            ScalarExpr out(source_);
            const int sd = source_.dim();
            const int td = target_.dim();
            for (const auto& [m, c] : g.terms()) {
                Monomial pulled = ScalarExpr::unit_monomial(source_);
                for (int b = 0; b < sd; ++b) {
                    long k = 0;
                    for (int a = 0; a < td; ++a) k += matrix_[a][b] * m.frequencies[a];
                    pulled.frequencies[b] = static_cast<int>(k);
                }
                out.accumulate(std::move(pulled), c);
            }
            return out;
        }
        ScalarExpr out(source_);
        std::vector<std::vector<ScalarExpr>> powers(target_.dim());
        auto power = [&](int axis, int e) -> const ScalarExpr& {
            auto& cache = powers[axis];
            if (cache.empty()) cache.push_back(ScalarExpr::constant(source_, GaussQ(1)));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * components_[axis]);
            return cache[e];
        };
        for (const auto& [m, c] : g.terms()) {
            ScalarExpr t = ScalarExpr::constant(source_, c);
            for (int a = 0; a < target_.dim(); ++a)
                if (m.exponents[a] != 0) t = t * power(a, m.exponents[a]);
            out += t;
        }
        return out;
    }

    /// Coefficients on the source frame of f^*(e^axis) for a target frame axis.
    std::vector<ScalarExpr> pull_differential(int axis) const {
        ScalarExpr::check_axis(target_, axis);
        std::vector<ScalarExpr> out;
        if (rule_ == Rule::polynomial) {
            for (int b = 0; b < source_.dim(); ++b) out.push_back(partial(components_[axis], b));
            return out;
        }
        const DenseMatrix j = linear_jacobian();
        for (int b = 0; b < source_.dim(); ++b) out.push_back(ScalarExpr::constant(source_, j(axis, b)));
        return out;
    }

    /// True when the frame Jacobian is constant.
    bool is_affine() const {
        if (rule_ == Rule::linear_torus) return true;
        for (const auto& c : components_)
            if (c.max_degree() > 1) return false;
        return true;
    }

    /// Constant frame Jacobian J with f^*(e^a) = sum_b J(a, b) e^b.
    DenseMatrix frame_jacobian() const {
        if (rule_ == Rule::linear_torus) return linear_jacobian();
        if (!is_affine()) throw PreconditionError("frame_jacobian: map is not affine");
        DenseMatrix j(target_.dim(), source_.dim());
        for (int a = 0; a < target_.dim(); ++a)
            for (int b = 0; b < source_.dim(); ++b) j(a, b) = partial(components_[a], b).constant_term();
        return j;
    }

    /// Affine and bijective (tori: A in GL(n, Z)).
    bool invertible() const {
        if (source_.dim() != target_.dim()) return false;
        if (!is_affine()) return false;
        if (rule_ == Rule::linear_torus) {
            const GaussQ det = determinant(integer_matrix());
            return det == GaussQ(1) || det == GaussQ(-1);
        }
        return !determinant(frame_jacobian()).is_zero();
    }

    ChartMap inverse() const {
        if (!invertible()) throw PreconditionError("ChartMap::inverse: map is not invertible");
        if (rule_ == Rule::linear_torus) {
            const DenseMatrix inv = *pairdiff::inverse(integer_matrix());
            IntMatrix a(source_.dim(), std::vector<long>(target_.dim(), 0));
            for (int r = 0; r < source_.dim(); ++r)
                for (int c = 0; c < target_.dim(); ++c) a[r][c] = inv(r, c).re().get_num().get_si();
            return torus_linear(target_, source_, std::move(a));
        }
        // f(x) = J x + b  =>  f^{-1}(y) = J^{-1} (y - b), on frame variables.
        const DenseMatrix jinv = *pairdiff::inverse(frame_jacobian());
        std::vector<ScalarExpr> shifted;
        for (int c = 0; c < target_.dim(); ++c)
            shifted.push_back(ScalarExpr::variable(target_, c) -
                              ScalarExpr::constant(target_, components_[c].constant_term()));
        std::vector<ScalarExpr> comps;
        for (int r = 0; r < source_.dim(); ++r) {
            ScalarExpr acc(target_);
            for (int c = 0; c < target_.dim(); ++c) acc += shifted[c].scaled(jinv(r, c));
            comps.push_back(std::move(acc));
        }
        return ChartMap(target_, source_, std::move(comps));
    }

    /// Complex charts: the pullback preserves (p,q) type, i.e. the z
    /// components are holomorphic in the source variables.
    bool is_holomorphic() const {
        if (!source_.is_complex() || !target_.is_complex()) return false;
        if (rule_ == Rule::linear_torus) {
            const DenseMatrix j = linear_jacobian();
            const int n = target_.n();
            const int m = source_.n();
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < m; ++b)
                    if (!j(a, m + b).is_zero() || !j(n + a, b).is_zero()) return false;
            return true;
        }
        const int m = source_.n();
        for (int a = 0; a < target_.n(); ++a)
            for (int b = 0; b < m; ++b)
                if (!partial(components_[a], m + b).is_zero()) return false;
        return true;
    }

    std::string to_string() const {
        std::string out = source_.to_string() + " -> " + target_.to_string() + " ";
        if (rule_ == Rule::linear_torus) {
            out += "[";
            for (std::size_t r = 0; r < matrix_.size(); ++r) {
                out += r ? ",[" : "[";
                for (std::size_t c = 0; c < matrix_[r].size(); ++c)
                    out += (c ? "," : "") + std::to_string(matrix_[r][c]);
                out += "]";
            }
            return out + "]";
        }
        return out + "(polynomial)";
    }

private:
    ChartMap(Chart source, Chart target, std::vector<ScalarExpr> comps)
        : source_(source), target_(target), rule_(Rule::polynomial), components_(std::move(comps)) {}

    DenseMatrix integer_matrix() const {
        DenseMatrix a(target_.dim(), source_.dim());
        for (int r = 0; r < target_.dim(); ++r)
            for (int c = 0; c < source_.dim(); ++c) a(r, c) = GaussQ(matrix_[r][c]);
        return a;
    }

    DenseMatrix linear_jacobian() const {
        return detail::frame_from_real(target_) * integer_matrix() * detail::real_from_frame(source_);
    }

    Chart source_;
    Chart target_;
    Rule rule_ = Rule::polynomial;
    std::vector<ScalarExpr> components_;
    IntMatrix matrix_;
};

}  // namespace pairdiff
