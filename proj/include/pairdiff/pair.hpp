// Pair forms (phi, psi) with deg psi = deg phi - 1 and the operators induced by
// a vector field, a 1-form, or a flat metric.
#pragma once

#include "pairdiff/hodge.hpp"

#include <utility>

namespace pairdiff {

class PairForm {
public:
    PairForm() = default;

    /// The zero pair of degree p.
    PairForm(Chart chart, int degree) : first_(chart, degree), second_(chart, degree - 1) {}

    PairForm(Form first, Form second) : first_(std::move(first)), second_(std::move(second)) {
        require_same_chart(first_.chart(), second_.chart(), "PairForm");
        if (second_.degree() != first_.degree() - 1)
            throw std::invalid_argument("PairForm: second slot must have degree one less than the first");
    }

    /// (phi, 0).
    static PairForm from_first(const Form& phi) { return {phi, Form(phi.chart(), phi.degree() - 1)}; }
    /// (0, psi).
    static PairForm from_second(const Form& psi) { return {Form(psi.chart(), psi.degree() + 1), psi}; }

    const Chart& chart() const { return first_.chart(); }
    int degree() const { return first_.degree(); }
    const Form& first() const { return first_; }
    const Form& second() const { return second_; }
    bool is_zero() const { return first_.is_zero() && second_.is_zero(); }

    PairForm operator-() const { return {-first_, -second_}; }
    PairForm& operator+=(const PairForm& o) {
        first_ += o.first_;
        second_ += o.second_;
        return *this;
    }
    PairForm& operator-=(const PairForm& o) {
        first_ -= o.first_;
        second_ -= o.second_;
        return *this;
    }
    friend PairForm operator+(PairForm a, const PairForm& b) { return a += b; }
    friend PairForm operator-(PairForm a, const PairForm& b) { return a -= b; }
    PairForm scaled(const GaussQ& s) const { return {first_.scaled(s), second_.scaled(s)}; }
    friend PairForm operator*(const GaussQ& s, const PairForm& a) { return a.scaled(s); }

    PairForm conj() const { return {first_.conj(), second_.conj()}; }

    friend bool operator==(const PairForm& a, const PairForm& b) {
        return a.first_ == b.first_ && a.second_ == b.second_;
    }

private:
    Form first_;
    Form second_;
};

inline int sign_power(int p) { return (p % 2 == 0) ? 1 : -1; }

/// (phi, psi) ^ (phi', psi') = (phi ^ phi', (-1)^p phi ^ psi' + psi ^ phi').
inline PairForm pair_wedge(const PairForm& a, const PairForm& b) {
    require_same_chart(a.chart(), b.chart(), "pair_wedge");
    Form second = wedge(a.first(), b.second());
    if (sign_power(a.degree()) < 0) second = -second;
    second += wedge(a.second(), b.first());
    return {wedge(a.first(), b.first()), std::move(second)};
}

/// d~_X(phi, psi) = (d phi, L_X phi - d psi).
inline PairForm d_tilde(const VectorField& X, const PairForm& a) {
    require_same_chart(X.chart(), a.chart(), "d_tilde");
    return {ext_d(a.first()), lie(X, a.first()) - ext_d(a.second())};
}

/// i~_X(phi, psi) = (i_X phi, -i_X psi).
inline PairForm i_tilde(const VectorField& X, const PairForm& a) {
    require_same_chart(X.chart(), a.chart(), "i_tilde");
    return {interior(X, a.first()), -interior(X, a.second())};
}

/// L~_X(phi, psi) = (L_X phi, L_X psi).
inline PairForm lie_tilde(const VectorField& X, const PairForm& a) {
    require_same_chart(X.chart(), a.chart(), "lie_tilde");
    return {lie(X, a.first()), lie(X, a.second())};
}

/// d~_eta(phi, psi) = (d phi - d eta ^ psi, -d psi).
inline PairForm d_eta(const Form& eta, const PairForm& a) {
    require_same_chart(eta.chart(), a.chart(), "d_eta");
    if (eta.degree() != 1) throw std::invalid_argument("d_eta: eta must be a 1-form");
    return {ext_d(a.first()) - wedge(ext_d(eta), a.second()), -ext_d(a.second())};
}

inline PairForm pair_pullback(const ChartMap& f, const PairForm& a) {
    return {pullback(f, a.first()), pullback(f, a.second())};
}

/// [phi] -> [(phi, i_X phi)] on a closed phi.
inline PairForm class_embed(const VectorField& X, const Form& phi) {
    require_same_chart(X.chart(), phi.chart(), "class_embed");
    if (!ext_d(phi).is_zero()) throw PreconditionError("class_embed: form is not closed");
    return {phi, interior(X, phi)};
}

namespace detail {
inline void require_d_tilde_closed(const VectorField& X, const PairForm& a, const char* where) {
    if (!d_tilde(X, a).is_zero())
        throw PreconditionError(std::string(where) + ": pair is not d~_X-closed");
}
}  // namespace detail

/// [(phi, psi)] -> [i_X phi - psi] on a d~_X-closed pair.
inline Form class_project(const VectorField& X, const PairForm& a) {
    require_same_chart(X.chart(), a.chart(), "class_project");
    detail::require_d_tilde_closed(X, a, "class_project");
    return interior(X, a.first()) - a.second();
}

/// (phi, psi) -> (phi, i_X phi - psi): the pair of de Rham cocycles.
inline std::pair<Form, Form> class_split(const VectorField& X, const PairForm& a) {
    require_same_chart(X.chart(), a.chart(), "class_split");
    detail::require_d_tilde_closed(X, a, "class_split");
    return {a.first(), interior(X, a.first()) - a.second()};
}

/// Inverse of class_split on cocycle representatives: (phi, h) -> (phi, i_X phi - h).
inline PairForm class_reverse(const VectorField& X, const Form& phi, const Form& h) {
    require_same_chart(X.chart(), phi.chart(), "class_reverse");
    if (!ext_d(phi).is_zero()) throw PreconditionError("class_reverse: first form is not closed");
    if (!ext_d(h).is_zero()) throw PreconditionError("class_reverse: second form is not closed");
    return {phi, interior(X, phi) - h};
}

/// alpha_{X,Y}(phi, psi) = (phi, i_{Y-X} phi + psi).
inline PairForm transfer(const VectorField& X, const VectorField& Y, const PairForm& a) {
    require_same_chart(X.chart(), a.chart(), "transfer");
    require_same_chart(Y.chart(), a.chart(), "transfer");
    return {a.first(), interior(Y - X, a.first()) + a.second()};
}

namespace detail {
inline void require_killing(const VectorField& U, const PairForm& a, const char* where) {
    require_torus(a.chart(), where);
    require_same_chart(U.chart(), a.chart(), where);
    if (!U.is_constant()) throw PreconditionError(std::string(where) + ": U must be constant");
}
}  // namespace detail

/// delta~_U(phi, psi) = (delta phi + L_U psi, -delta psi).
inline PairForm delta_tilde(const VectorField& U, const PairForm& a) {
    detail::require_killing(U, a, "delta_tilde");
    return {codiff(a.first()) + lie(U, a.second()), -codiff(a.second())};
}

/// (delta phi - L_U psi, -delta psi): the formal adjoint of d~_U for a
/// constant U, for which L_U is skew.
inline PairForm skew_delta_tilde(const VectorField& U, const PairForm& a) {
    detail::require_killing(U, a, "skew_delta_tilde");
    return {codiff(a.first()) - lie(U, a.second()), -codiff(a.second())};
}

/// (Delta phi + L_U^2 phi, Delta psi + L_U^2 psi).
inline PairForm laplacian_tilde_closed_form(const VectorField& U, const PairForm& a) {
    detail::require_killing(U, a, "laplacian_tilde_closed_form");
    return {laplacian(a.first()) + lie(U, lie(U, a.first())),
            laplacian(a.second()) + lie(U, lie(U, a.second()))};
}

/// Delta~_U = d~_U delta~_U + delta~_U d~_U, checked against the closed form.
inline PairForm laplacian_tilde(const VectorField& U, const PairForm& a) {
    detail::require_killing(U, a, "laplacian_tilde");
    PairForm out = d_tilde(U, delta_tilde(U, a)) + delta_tilde(U, d_tilde(U, a));
    if (!(out == laplacian_tilde_closed_form(U, a)))
        throw std::logic_error("laplacian_tilde: composite disagrees with (Delta + L_U^2)");
    return out;
}

/// <<a, b>> = <phi, phi'> + <psi, psi'>, conjugate-linear in b.
inline GaussQ pair_inner(const PairForm& a, const PairForm& b) {
    require_same_chart(a.chart(), b.chart(), "pair_inner");
    if (a.degree() != b.degree()) throw std::invalid_argument("pair_inner: degree mismatch");
    return inner(a.first(), b.first()) + inner(a.second(), b.second());
}

}  // namespace pairdiff
