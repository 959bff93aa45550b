// Flat-metric Hodge theory on tori with the standard metric and coordinate
// orientation, plus the Lichnerowicz operators of a parallel 1-form.
#pragma once

#include "pairdiff/exterior.hpp"

namespace pairdiff {

namespace detail {

inline void require_torus(const Chart& c, const char* where) {
    if (!c.is_real_torus())
        throw ChartMismatch(std::string(where) + ": flat torus required, got " + c.to_string());
}

inline void require_constant_one_form(const Form& w, const char* where) {
    if (w.degree() != 1) throw PreconditionError(std::string(where) + ": 1-form required");
    for (const auto& [I, f] : w.components())
        if (!f.is_constant())
            throw PreconditionError(std::string(where) + ": 1-form must have constant coefficients");
}

}  // namespace detail

/// star(f dx^I) = sign(I, I^c) f dx^{I^c}.
inline Form hodge_star(const Form& a) {
    detail::require_torus(a.chart(), "hodge_star");
    const int n = a.chart().dim();
    const Mask full = (Mask{1} << n) - 1;
    Form out(a.chart(), n - a.degree());
    for (const auto& [I, f] : a.components()) {
        const Mask Ic = full & ~I;
        out.add(Ic, merge_sign(I, Ic) < 0 ? -f : f);
    }
    return out;
}

/// delta = (-1)^{np+n+1} star d star on p-forms.
inline Form codiff(const Form& a) {
    detail::require_torus(a.chart(), "codiff");
    const int n = a.chart().dim();
    const int p = a.degree();
    Form out = hodge_star(ext_d(hodge_star(a)));
    const int e = n * p + n + 1;
    return (e % 2 == 0) ? out : -out;
}

/// Hodge Laplacian d delta + delta d.
inline Form laplacian(const Form& a) {
    detail::require_torus(a.chart(), "laplacian");
    return ext_d(codiff(a)) + codiff(ext_d(a));
}

/// <a, b> = integral of a ^ star(conj b) over the unit-volume torus.
/// Linear in a, conjugate-linear in b.
inline GaussQ inner(const Form& a, const Form& b) {
    detail::require_torus(a.chart(), "inner");
    require_same_chart(a.chart(), b.chart(), "inner");
    if (a.degree() != b.degree()) throw std::invalid_argument("inner: degree mismatch");
    const int n = a.chart().dim();
    if (a.degree() < 0 || a.degree() > n) return GaussQ(0);
    const Form top = wedge(a, hodge_star(b.conj()));
    return torus_integral(top.component((Mask{1} << n) - 1));
}

/// Metric dual of a 1-form: U^j = w_j in orthonormal coordinates.
inline VectorField sharp(const Form& w) {
    detail::require_torus(w.chart(), "sharp");
    if (w.degree() != 1) throw PreconditionError("sharp: 1-form required");
    std::vector<ScalarExpr> comps;
    for (int j = 0; j < w.chart().dim(); ++j) comps.push_back(w.component(Mask{1} << j));
    return VectorField(w.chart(), std::move(comps));
}

/// e(w) a = w ^ a.
inline Form exterior_multiply(const Form& w, const Form& a) { return wedge(w, a); }

/// w(sharp w) = sum_j w_j^2 for a constant 1-form.
inline GaussQ norm_squared(const Form& w) {
    detail::require_constant_one_form(w, "norm_squared");
    GaussQ out(0);
    for (const auto& [I, f] : w.components()) out += f.constant_term() * f.constant_term();
    return out;
}

/// d_w a = d a + w ^ a.
inline Form lichnerowicz_d(const Form& w, const Form& a) {
    detail::require_torus(a.chart(), "lichnerowicz_d");
    detail::require_constant_one_form(w, "lichnerowicz_d");
    return ext_d(a) + wedge(w, a);
}

/// delta_w a = delta a + i_U a with U = sharp(w); zero on functions.
inline Form lichnerowicz_delta(const Form& w, const Form& a) {
    detail::require_torus(a.chart(), "lichnerowicz_delta");
    detail::require_constant_one_form(w, "lichnerowicz_delta");
    return codiff(a) + interior(sharp(w), a);
}

/// Delta_w = d_w delta_w + delta_w d_w.
inline Form lichnerowicz_laplacian(const Form& w, const Form& a) {
    return lichnerowicz_d(w, lichnerowicz_delta(w, a)) + lichnerowicz_delta(w, lichnerowicz_d(w, a));
}

}  // namespace pairdiff
