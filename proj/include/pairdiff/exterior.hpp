// Exterior calculus on a single chart: wedge, d, interior product, Lie
// derivative, pullback and pushforward.
#pragma once

#include "pairdiff/chart_map.hpp"
#include "pairdiff/form.hpp"

namespace pairdiff {

inline Form wedge(const Form& a, const Form& b) {
    require_same_chart(a.chart(), b.chart(), "wedge");
    Form out(a.chart(), a.degree() + b.degree());
    for (const auto& [I, f] : a.components()) {
        for (const auto& [J, g] : b.components()) {
            if ((I & J) != 0) continue;
            const int s = merge_sign(I, J);
            ScalarExpr fg = f * g;
            out.add(I | J, s < 0 ? -fg : fg);
        }
    }
    return out;
}

/// d(f dx^I) = sum_j d_j f dx^j ^ dx^I.
inline Form ext_d(const Form& a) {
    const Chart& chart = a.chart();
    Form out(chart, a.degree() + 1);
    for (const auto& [I, f] : a.components()) {
        for (int j = 0; j < chart.dim(); ++j) {
            const Mask e = Mask{1} << j;
            if ((I & e) != 0) continue;
            ScalarExpr df = partial(f, j);
            if (df.is_zero()) continue;
            out.add(I | e, merge_sign(e, I) < 0 ? -df : df);
        }
    }
    return out;
}

/// Contraction i_X a; an antiderivation of degree -1.
inline Form interior(const VectorField& X, const Form& a) {
    require_same_chart(X.chart(), a.chart(), "interior");
    Form out(a.chart(), a.degree() - 1);
    for (const auto& [I, f] : a.components()) {
        int position = 0;
        for (int axis : mask_axes(I)) {
            const ScalarExpr& xa = X[axis];
            if (!xa.is_zero()) {
                ScalarExpr c = xa * f;
                out.add(I & ~(Mask{1} << axis), (position & 1) ? -c : c);
            }
            ++position;
        }
    }
    return out;
}

/// Lie derivative by Cartan's formula L_X = d i_X + i_X d.
inline Form lie(const VectorField& X, const Form& a) {
    require_same_chart(X.chart(), a.chart(), "lie");
    return ext_d(interior(X, a)) + interior(X, ext_d(a));
}

/// f^* a for a form on the map's target; scalars pull back by composition and
/// basis 1-forms by the differential of the map.
inline Form pullback(const ChartMap& f, const Form& a) {
    require_same_chart(f.target(), a.chart(), "pullback");
    const Chart& src = f.source();
    Form out(src, a.degree());
    std::vector<Form> pulled_basis(f.target().dim());
    std::vector<bool> have(f.target().dim(), false);
    for (const auto& [I, g] : a.components()) {
        Form piece = Form::function(f.pull(g));
        for (int axis : mask_axes(I)) {
            if (!have[axis]) {
                pulled_basis[axis] = Form::one_form(src, f.pull_differential(axis));
                have[axis] = true;
            }
            piece = wedge(piece, pulled_basis[axis]);
        }
        out += piece;
    }
    return out;
}

/// f_* X for an invertible affine map: (f_* X)^a = sum_b J_ab X^b o f^{-1}.
inline VectorField pushforward(const ChartMap& f, const VectorField& X) {
    require_same_chart(f.source(), X.chart(), "pushforward");
    if (!f.invertible()) throw PreconditionError("pushforward: map is not invertible");
    const ChartMap inv = f.inverse();
    const DenseMatrix j = f.frame_jacobian();
    const Chart& tgt = f.target();
    std::vector<ScalarExpr> pulled;
    for (int b = 0; b < X.chart().dim(); ++b) pulled.push_back(inv.pull(X[b]));
    std::vector<ScalarExpr> comps;
    for (int a = 0; a < tgt.dim(); ++a) {
        ScalarExpr acc(tgt);
        for (int b = 0; b < X.chart().dim(); ++b)
            if (!j(a, b).is_zero()) acc += pulled[b].scaled(j(a, b));
        comps.push_back(std::move(acc));
    }
    return VectorField(tgt, std::move(comps));
}

}  // namespace pairdiff
