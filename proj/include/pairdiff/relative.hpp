// Relative pair forms over a chart map f: M' -> M.
//   unprimed: (phi on M, psi on M') with deg psi = deg phi - 1
//   primed:   (phi on M', psi on M)  with deg psi = deg phi - 1
#pragma once

#include "pairdiff/pair.hpp"

#include <optional>

namespace pairdiff {

class RelPairForm {
public:
    RelPairForm() = default;

    RelPairForm(ChartMap map, Form first, Form second, bool primed = false)
        : map_(std::move(map)), first_(std::move(first)), second_(std::move(second)), primed_(primed) {
        require_same_chart(first_.chart(), primed_ ? map_.source() : map_.target(), "RelPairForm first");
        require_same_chart(second_.chart(), primed_ ? map_.target() : map_.source(), "RelPairForm second");
        if (second_.degree() != first_.degree() - 1)
            throw std::invalid_argument("RelPairForm: second slot must have degree one less than the first");
    }

    static RelPairForm zero(const ChartMap& map, int degree, bool primed = false) {
        const Chart& a = primed ? map.source() : map.target();
        const Chart& b = primed ? map.target() : map.source();
        return {map, Form(a, degree), Form(b, degree - 1), primed};
    }

    const ChartMap& map() const { return map_; }
    const Form& first() const { return first_; }
    const Form& second() const { return second_; }
    bool primed() const { return primed_; }
    int degree() const { return first_.degree(); }
    bool is_zero() const { return first_.is_zero() && second_.is_zero(); }

    RelPairForm operator-() const { return {map_, -first_, -second_, primed_}; }
    friend RelPairForm operator+(const RelPairForm& a, const RelPairForm& b) {
        a.check_compatible(b, "RelPairForm::+");
        return {a.map_, a.first_ + b.first_, a.second_ + b.second_, a.primed_};
    }
    friend RelPairForm operator-(const RelPairForm& a, const RelPairForm& b) { return a + (-b); }
    RelPairForm scaled(const GaussQ& s) const { return {map_, first_.scaled(s), second_.scaled(s), primed_}; }

    friend bool operator==(const RelPairForm& a, const RelPairForm& b) {
        return a.primed_ == b.primed_ && a.first_ == b.first_ && a.second_ == b.second_;
    }

    void check_compatible(const RelPairForm& o, const char* where) const {
        if (primed_ != o.primed_ || !(map_.source() == o.map_.source()) || !(map_.target() == o.map_.target()))
            throw ChartMismatch(std::string(where) + ": relative pairs over different maps");
    }

private:
    ChartMap map_;
    Form first_;
    Form second_;
    bool primed_ = false;
};

namespace detail {
inline void require_unprimed(const RelPairForm& a, const char* where) {
    if (a.primed()) throw std::invalid_argument(std::string(where) + ": unprimed relative pair required");
}
inline void require_primed(const RelPairForm& a, const char* where) {
    if (!a.primed()) throw std::invalid_argument(std::string(where) + ": primed relative pair required");
}
}  // namespace detail

/// d_{X,f}(phi, psi) = (d phi, L_X f^* phi - d psi), X on the source.
inline RelPairForm d_rel(const VectorField& X, const RelPairForm& a) {
    detail::require_unprimed(a, "d_rel");
    require_same_chart(X.chart(), a.map().source(), "d_rel");
    return {a.map(), ext_d(a.first()), lie(X, pullback(a.map(), a.first())) - ext_d(a.second())};
}

/// (phi, psi) ^_f (phi', psi') = (phi ^ phi', (-1)^p f^*phi ^ psi' + psi ^ f^*phi').
inline RelPairForm wedge_rel(const RelPairForm& a, const RelPairForm& b) {
    detail::require_unprimed(a, "wedge_rel");
    a.check_compatible(b, "wedge_rel");
    const ChartMap& f = a.map();
    Form second = wedge(pullback(f, a.first()), b.second());
    if (sign_power(a.degree()) < 0) second = -second;
    second += wedge(a.second(), pullback(f, b.first()));
    return {f, wedge(a.first(), b.first()), std::move(second)};
}

/// (phi, i_X f^* phi) for a closed phi on the target; verified to be
/// d_{X,f}-closed. With a primitive (d primitive = phi) the pair is also
/// verified to equal d_{X,f}(primitive, i_X f^* primitive + d zeta).
inline RelPairForm closed_pair(const VectorField& X, const ChartMap& f, const Form& phi,
                               const std::optional<Form>& primitive = std::nullopt,
                               const std::optional<Form>& zeta = std::nullopt) {
    require_same_chart(phi.chart(), f.target(), "closed_pair");
    require_same_chart(X.chart(), f.source(), "closed_pair");
    if (!ext_d(phi).is_zero()) throw PreconditionError("closed_pair: form is not closed");
    RelPairForm out(f, phi, interior(X, pullback(f, phi)));
    if (!d_rel(X, out).is_zero()) throw std::logic_error("closed_pair: result is not d_{X,f}-closed");
    if (primitive) {
        if (!(ext_d(*primitive) == phi)) throw PreconditionError("closed_pair: primitive does not satisfy d psi = phi");
        Form second = interior(X, pullback(f, *primitive));
        if (zeta) second += ext_d(*zeta);
        if (!(d_rel(X, RelPairForm(f, *primitive, second)) == out))
            throw std::logic_error("closed_pair: exact pair is not the image of its primitive");
    }
    return out;
}

/// d_{eta,f}(phi, psi) = (d phi - f^*(d eta ^ psi), -d psi) on primed pairs.
inline RelPairForm d_eta_rel(const Form& eta, const RelPairForm& a) {
    detail::require_primed(a, "d_eta_rel");
    require_same_chart(eta.chart(), a.map().target(), "d_eta_rel");
    if (eta.degree() != 1) throw std::invalid_argument("d_eta_rel: eta must be a 1-form");
    return {a.map(), ext_d(a.first()) - pullback(a.map(), wedge(ext_d(eta), a.second())),
            -ext_d(a.second()), true};
}

/// A primed pair over an invertible f read as an unprimed pair over f^{-1}.
inline RelPairForm as_inverse_relative(const RelPairForm& a) {
    detail::require_primed(a, "as_inverse_relative");
    return {a.map().inverse(), a.first(), a.second()};
}

/// alpha(psi) = (0, psi), psi on the source.
inline RelPairForm rel_alpha(const ChartMap& f, const Form& psi) {
    require_same_chart(psi.chart(), f.source(), "rel_alpha");
    return {f, Form(f.target(), psi.degree() + 1), psi};
}

/// beta(phi, psi) = phi.
inline Form rel_beta(const RelPairForm& a) {
    detail::require_unprimed(a, "rel_beta");
    return a.first();
}

/// mu(phi) = (phi, 0) in the primed complex, phi on the source.
inline RelPairForm rel_mu(const ChartMap& f, const Form& phi) {
    require_same_chart(phi.chart(), f.source(), "rel_mu");
    return {f, phi, Form(f.target(), phi.degree() - 1), true};
}

/// nu(phi, psi) = psi on primed pairs.
inline Form rel_nu(const RelPairForm& a) {
    detail::require_primed(a, "rel_nu");
    return a.second();
}

}  // namespace pairdiff
