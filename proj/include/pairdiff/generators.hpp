// Seeded generators of random expressions, forms, fields and chart maps.
// Values depend only on the seed: the engine is mt19937_64 and integers are
// drawn by reduction modulo the range, never through std distributions.
#pragma once

#include "pairdiff/dolbeault.hpp"

#include <cstdint>
#include <random>

namespace pairdiff {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    int uniform(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }

    bool chance(int num, int den) { return uniform(1, den) <= num; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v.at(static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1)));
    }

private:
    std::mt19937_64 engine_;
};

/// Stable 64-bit FNV-1a hash, used to derive per-check seeds from names.
inline std::uint64_t stable_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct GenLimits {
    int max_terms = 2;
    int max_power = 2;
    int max_freq = 2;
    bool complex_coefficients = false;
};

namespace gen {

inline GaussQ coefficient(Rng& rng, bool complex = false) {
    int num = rng.uniform(-3, 3);
    if (num == 0) num = 1;
    GaussQ c = rng.chance(1, 4) ? GaussQ::ratio(num, rng.uniform(2, 3)) : GaussQ(num);
    if (complex && rng.chance(1, 3)) c += GaussQ(0, rng.uniform(-2, 2));
    return c;
}

inline Monomial monomial(Rng& rng, const Chart& chart, const GenLimits& lim) {
    Monomial m = ScalarExpr::unit_monomial(chart);
    for (int a = 0; a < chart.dim(); ++a) {
        if (chart.is_periodic()) m.frequencies[a] = rng.uniform(-lim.max_freq, lim.max_freq);
        else m.exponents[a] = rng.chance(1, 2) ? rng.uniform(0, lim.max_power) : 0;
    }
    return m;
}

inline ScalarExpr scalar(Rng& rng, const Chart& chart, const GenLimits& lim = {}) {
    ScalarExpr out(chart);
    const int terms = rng.uniform(1, lim.max_terms);
    for (int t = 0; t < terms; ++t) out.accumulate(monomial(rng, chart, lim), coefficient(rng, lim.complex_coefficients));
    return out;
}

inline ScalarExpr nonzero_scalar(Rng& rng, const Chart& chart, const GenLimits& lim = {}) {
    for (;;) {
        ScalarExpr s = scalar(rng, chart, lim);
        if (!s.is_zero()) return s;
    }
}

/// Polynomial in z only on a complex affine chart.
inline ScalarExpr holomorphic_scalar(Rng& rng, const Chart& chart, const GenLimits& lim = {}) {
    if (chart.is_periodic()) return ScalarExpr::constant(chart, coefficient(rng, true));
    ScalarExpr out(chart);
    const int terms = rng.uniform(1, lim.max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m = ScalarExpr::unit_monomial(chart);
        for (int j = 0; j < chart.n(); ++j) m.exponents[j] = rng.uniform(0, lim.max_power);
        out.accumulate(std::move(m), coefficient(rng, true));
    }
    return out;
}

inline Form form(Rng& rng, const Chart& chart, int degree, const GenLimits& lim = {}) {
    Form out(chart, degree);
    if (degree < 0 || degree > chart.dim()) return out;
    const auto masks = masks_of_size(chart.dim(), degree);
    const int comps = rng.uniform(1, std::min<int>(2, static_cast<int>(masks.size())));
    for (int c = 0; c < comps; ++c) out.add(rng.pick(masks), scalar(rng, chart, lim));
    return out;
}

/// Random form of bidegree (p, q) on a complex chart.
inline Form bigraded_form(Rng& rng, const Chart& chart, Bidegree bd, const GenLimits& lim = {}) {
    Form out(chart, bd.p + bd.q);
    std::vector<Mask> masks;
    for (Mask I : masks_of_size(chart.dim(), bd.p + bd.q))
        if (bidegree_of(I, chart.n()) == bd) masks.push_back(I);
    if (masks.empty()) return out;
    const int comps = rng.uniform(1, std::min<int>(2, static_cast<int>(masks.size())));
    for (int c = 0; c < comps; ++c) out.add(rng.pick(masks), scalar(rng, chart, lim));
    return out;
}

inline PairForm pair(Rng& rng, const Chart& chart, int degree, const GenLimits& lim = {}) {
    return {form(rng, chart, degree, lim), form(rng, chart, degree - 1, lim)};
}

inline PairBigradedForm bigraded_pair(Rng& rng, const Chart& chart, Bidegree bd, const GenLimits& lim = {}) {
    return {BigradedForm(bigraded_form(rng, chart, bd, lim), bd),
            BigradedForm(bigraded_form(rng, chart, {bd.p, bd.q - 1}, lim), {bd.p, bd.q - 1})};
}

/// Closed p-form: d of a random (p-1)-form plus a constant-coefficient form.
inline Form closed_form(Rng& rng, const Chart& chart, int degree, const GenLimits& lim = {}) {
    Form out = ext_d(form(rng, chart, degree - 1, lim));
    if (degree >= 0 && degree <= chart.dim() && rng.chance(2, 3))
        out.add(rng.pick(masks_of_size(chart.dim(), degree)), ScalarExpr::constant(chart, coefficient(rng, lim.complex_coefficients)));
    return out;
}

inline VectorField field(Rng& rng, const Chart& chart, const GenLimits& lim = {}) {
    GenLimits small = lim;
    small.max_terms = 1;
    small.max_power = std::min(lim.max_power, 1);
    std::vector<ScalarExpr> comps;
    for (int a = 0; a < chart.dim(); ++a)
        comps.push_back(rng.chance(2, 3) ? scalar(rng, chart, small) : ScalarExpr(chart));
    return VectorField(chart, std::move(comps));
}

inline VectorField constant_field(Rng& rng, const Chart& chart) {
    std::vector<GaussQ> v;
    for (int a = 0; a < chart.dim(); ++a) v.push_back(rng.chance(2, 3) ? GaussQ(rng.uniform(-2, 2)) : GaussQ(0));
    return VectorField::constant(chart, v);
}

/// Commuting pair [X, Y] = 0: two constant fields on tori; on affine charts
/// also a multiple of the Euler field with a linear field.
inline std::pair<VectorField, VectorField> commuting_fields(Rng& rng, const Chart& chart) {
    if (chart.is_periodic() || rng.chance(1, 2)) return {constant_field(rng, chart), constant_field(rng, chart)};
    std::vector<ScalarExpr> euler;
    std::vector<ScalarExpr> linear;
    for (int a = 0; a < chart.dim(); ++a) {
        ScalarExpr l(chart);
        for (int b = 0; b < chart.dim(); ++b)
            if (rng.chance(1, 2)) l += ScalarExpr::variable(chart, b).scaled(GaussQ(rng.uniform(-2, 2)));
        linear.push_back(std::move(l));
    }
    const GaussQ s(rng.uniform(1, 2));
    for (int a = 0; a < chart.dim(); ++a) euler.push_back(ScalarExpr::variable(chart, a).scaled(s));
    return {VectorField(chart, std::move(euler)), VectorField(chart, std::move(linear))};
}

/// Holomorphic (1,0)-field: polynomial in z on affine charts, constant on tori.
inline VectorField holomorphic_field(Rng& rng, const Chart& chart, const GenLimits& lim = {}) {
    GenLimits small = lim;
    small.max_terms = 2;
    small.max_power = std::min(lim.max_power, 2);
    std::vector<ScalarExpr> z;
    for (int j = 0; j < chart.n(); ++j) z.push_back(holomorphic_scalar(rng, chart, small));
    return VectorField::holomorphic(chart, z);
}

/// Random element of GL(n, Z) as a product of elementary matrices.
inline IntMatrix unimodular(Rng& rng, int n, int steps = 3) {
    IntMatrix a(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) a[j][j] = 1;
    if (n == 1) {
        a[0][0] = rng.chance(1, 2) ? 1 : -1;
        return a;
    }
    for (int s = 0; s < steps; ++s) {
        const int r = rng.uniform(0, n - 1);
        int c = rng.uniform(0, n - 2);
        if (c >= r) ++c;
        const long m = rng.pick(std::vector<long>{-1, 1});
        for (int k = 0; k < n; ++k) a[r][k] += m * a[c][k];
    }
    if (rng.chance(1, 3)) std::swap(a[0], a[n - 1]);
    return a;
}

inline ChartMap torus_automorphism(Rng& rng, const Chart& torus) {
    return ChartMap::torus_linear(torus, torus, unimodular(rng, torus.dim()));
}

/// x -> A x + b on a real affine chart with A unimodular and b a small vector.
inline ChartMap affine_automorphism(Rng& rng, const Chart& chart) {
    const IntMatrix a = unimodular(rng, chart.dim());
    std::vector<ScalarExpr> comps;
    for (int r = 0; r < chart.dim(); ++r) {
        ScalarExpr c = ScalarExpr::constant(chart, GaussQ(rng.uniform(-1, 1)));
        for (int k = 0; k < chart.dim(); ++k)
            if (a[r][k] != 0) c += ScalarExpr::variable(chart, k).scaled(GaussQ(a[r][k]));
        comps.push_back(std::move(c));
    }
    return ChartMap::polynomial(chart, chart, std::move(comps));
}

/// Invertible map of the chart onto itself (torus or real affine).
inline ChartMap automorphism(Rng& rng, const Chart& chart) {
    return chart.is_periodic() ? torus_automorphism(rng, chart) : affine_automorphism(rng, chart);
}

/// Polynomial map between real affine charts with components of degree <= 2.
inline ChartMap polynomial_map(Rng& rng, const Chart& source, const Chart& target) {
    GenLimits lim;
    lim.max_terms = 2;
    std::vector<ScalarExpr> comps;
    for (int a = 0; a < target.dim(); ++a) comps.push_back(scalar(rng, source, lim));
    return ChartMap::polynomial(source, target, std::move(comps));
}

/// Integer-linear map between tori with nonzero determinant when square.
inline ChartMap torus_map(Rng& rng, const Chart& source, const Chart& target) {
    for (;;) {
        IntMatrix a(target.dim(), std::vector<long>(source.dim(), 0));
        for (auto& row : a)
            for (auto& v : row) v = rng.uniform(-2, 2);
        const ChartMap f = ChartMap::torus_linear(source, target, a);
        if (source.dim() != target.dim() || !determinant(f.frame_jacobian()).is_zero()) return f;
    }
}

/// Holomorphic map: polynomial in w on complex affine charts; multiplication
/// by a nonzero Gaussian integer on complex tori of dimension one.
inline ChartMap holomorphic_map(Rng& rng, const Chart& source, const Chart& target) {
    if (source.is_periodic()) {
        if (source.n() != 1 || target.n() != 1) throw std::invalid_argument("holomorphic_map: complex tori of dimension one");
        long m = 0;
        long k = 0;
        while (m == 0 && k == 0) {
            m = rng.uniform(-2, 2);
            k = rng.uniform(-2, 2);
        }
        return ChartMap::torus_linear(source, target, {{m, -k}, {k, m}});
    }
    GenLimits lim;
    lim.max_terms = 2;
    std::vector<ScalarExpr> comps;
    for (int j = 0; j < target.n(); ++j) comps.push_back(holomorphic_scalar(rng, source, lim));
    return ChartMap::polynomial(source, target, std::move(comps));
}

/// Biholomorphic affine map w -> a w + b on a complex affine chart (a unit Gaussian integer).
inline ChartMap biholomorphic_map(Rng& rng, const Chart& chart) {
    if (chart.is_periodic()) {
        const int u = rng.uniform(0, 3);
        const long c[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return ChartMap::torus_linear(chart, chart, {{c[u][0], -c[u][1]}, {c[u][1], c[u][0]}});
    }
    std::vector<ScalarExpr> comps;
    for (int j = 0; j < chart.n(); ++j)
        comps.push_back(ScalarExpr::variable(chart, j).scaled(rng.pick(std::vector<GaussQ>{GaussQ(1), GaussQ(2), GaussQ(1, 1), GaussQ(0, -1)})) +
                        ScalarExpr::constant(chart, GaussQ(rng.uniform(-1, 1), rng.uniform(-1, 1))));
    return ChartMap::polynomial(chart, chart, std::move(comps));
}

}  // namespace gen
}  // namespace pairdiff
