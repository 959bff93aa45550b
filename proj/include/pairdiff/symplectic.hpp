// Symplectic helpers: Hamiltonian fields of constant symplectic forms and the
// standard Liouville data on R^{2n}.
#pragma once

#include "pairdiff/exterior.hpp"

namespace pairdiff {

/// Skew matrix W(a, b) of a constant 2-form, so that w = sum_{a<b} W_ab dx^a ^ dx^b.
inline DenseMatrix two_form_matrix(const Form& w) {
    if (w.degree() != 2) throw PreconditionError("two_form_matrix: 2-form required");
    const int d = w.chart().dim();
    DenseMatrix out(d, d);
    for (const auto& [I, f] : w.components()) {
        if (!f.is_constant()) throw PreconditionError("two_form_matrix: coefficients must be constant");
        const auto axes = mask_axes(I);
        out(axes[0], axes[1]) = f.constant_term();
        out(axes[1], axes[0]) = -f.constant_term();
    }
    return out;
}

/// The unique X with i_X w = -d f for a constant nondegenerate 2-form w.
/// i_X w = sum_{a,b} X^a W_ab dx^b, so X = -(W^T)^{-1} grad f. The result is
/// verified symbolically before it is returned.
inline VectorField hamiltonian_field(const Form& w, const ScalarExpr& f) {
    require_same_chart(w.chart(), f.chart(), "hamiltonian_field");
    const int d = w.chart().dim();
    if (d % 2 != 0) throw PreconditionError("hamiltonian_field: chart must be even-dimensional");
    const DenseMatrix W = two_form_matrix(w);
    const auto inv = inverse(W.transpose());
    if (!inv) throw PreconditionError("hamiltonian_field: degenerate 2-form");
    std::vector<ScalarExpr> grad;
    for (int b = 0; b < d; ++b) grad.push_back(partial(f, b));
    std::vector<ScalarExpr> comps;
    for (int a = 0; a < d; ++a) {
        ScalarExpr acc(f.chart());
        for (int b = 0; b < d; ++b)
            if (!(*inv)(a, b).is_zero()) acc -= grad[b].scaled((*inv)(a, b));
        comps.push_back(std::move(acc));
    }
    VectorField X(f.chart(), std::move(comps));
    if (!(interior(X, w) == -ext_d(Form::function(f))))
        throw std::logic_error("hamiltonian_field: solution failed verification");
    return X;
}

/// Standard Liouville data on R^{2n} with coordinates (x^1..x^n, y^1..y^n):
/// w = sum dx^i ^ dy^i, theta = sum x^i dy^i, xi = sum x^i d/dx^i.
struct LiouvilleData {
    Form omega;
    Form theta;
    VectorField xi;
};

inline LiouvilleData standard_liouville(int n) {
    const Chart c = Chart::affine(2 * n);
    Form omega(c, 2);
    Form theta(c, 1);
    VectorField xi(c);
    std::vector<ScalarExpr> xi_comps(2 * n, ScalarExpr(c));
    for (int i = 0; i < n; ++i) {
        omega.add(mask_of({i, n + i}), ScalarExpr::constant(c, GaussQ(1)));
        theta.add(mask_of({n + i}), ScalarExpr::variable(c, i));
        xi_comps[i] = ScalarExpr::variable(c, i);
    }
    return {omega, theta, VectorField(c, std::move(xi_comps))};
}

}  // namespace pairdiff
