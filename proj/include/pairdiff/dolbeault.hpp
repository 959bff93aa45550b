// (p,q)-forms on complex charts in the frame dz[j], dzb[j]; the splitting
// d = del + dbar and the pair operator dbar_X.
#pragma once

#include "pairdiff/relative.hpp"

namespace pairdiff {

struct Bidegree {
    int p = 0;
    int q = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Bidegree of a frame index set on a complex chart with n z-axes.
inline Bidegree bidegree_of(Mask I, int n) {
    const Mask low = (Mask{1} << n) - 1;
    return {mask_size(I & low), mask_size(I >> n)};
}

class BigradedForm {
public:
    BigradedForm() = default;

    BigradedForm(Form form, Bidegree bd) : form_(std::move(form)), bd_(bd) {
        if (!form_.chart().is_complex()) throw ChartMismatch("BigradedForm: complex chart required");
        if (form_.degree() != bd_.p + bd_.q) throw std::invalid_argument("BigradedForm: degree != p + q");
        for (const auto& [I, f] : form_.components())
            if (!(bidegree_of(I, form_.chart().n()) == bd_))
                throw std::invalid_argument("BigradedForm: component of the wrong bidegree");
    }

    /// Reads the bidegree off the components; zero forms need an explicit bidegree.
    static BigradedForm infer(const Form& form) {
        if (form.is_zero()) throw std::invalid_argument("BigradedForm::infer: zero form has no bidegree");
        return {form, bidegree_of(form.components().begin()->first, form.chart().n())};
    }

    static BigradedForm zero(Chart chart, Bidegree bd) { return {Form(chart, bd.p + bd.q), bd}; }

    const Form& form() const { return form_; }
    const Chart& chart() const { return form_.chart(); }
    Bidegree bidegree() const { return bd_; }
    bool is_zero() const { return form_.is_zero(); }

    friend bool operator==(const BigradedForm& a, const BigradedForm& b) {
        return a.bd_ == b.bd_ && a.form_ == b.form_;
    }

private:
    Form form_;
    Bidegree bd_;
};

namespace detail {

// Exterior derivative using only the frame axes in [lo, hi).
inline Form ext_d_axes(const Form& a, int lo, int hi) {
    Form out(a.chart(), a.degree() + 1);
    for (const auto& [I, f] : a.components()) {
        for (int j = lo; j < hi; ++j) {
            const Mask e = Mask{1} << j;
            if ((I & e) != 0) continue;
            ScalarExpr df = partial(f, j);
            if (df.is_zero()) continue;
            out.add(I | e, merge_sign(e, I) < 0 ? -df : df);
        }
    }
    return out;
}

inline void require_complex(const Chart& c, const char* where) {
    if (!c.is_complex()) throw ChartMismatch(std::string(where) + ": complex chart required");
}

}  // namespace detail

inline Form del(const Form& a) {
    detail::require_complex(a.chart(), "del");
    return detail::ext_d_axes(a, 0, a.chart().n());
}

inline Form dbar(const Form& a) {
    detail::require_complex(a.chart(), "dbar");
    return detail::ext_d_axes(a, a.chart().n(), a.chart().dim());
}

inline BigradedForm del(const BigradedForm& a) {
    return {del(a.form()), {a.bidegree().p + 1, a.bidegree().q}};
}

inline BigradedForm dbar(const BigradedForm& a) {
    return {dbar(a.form()), {a.bidegree().p, a.bidegree().q + 1}};
}

/// (del a, dbar a).
inline std::pair<BigradedForm, BigradedForm> split_d(const BigradedForm& a) { return {del(a), dbar(a)}; }

/// The same form written in real coordinates x[j], y[j].
inline Form to_real(const Form& a) {
    detail::require_complex(a.chart(), "to_real");
    return pullback(ChartMap::realification(a.chart()), a);
}

/// Pair of a (p,q)-form and a (p,q-1)-form.
class PairBigradedForm {
public:
    PairBigradedForm() = default;

    PairBigradedForm(BigradedForm first, BigradedForm second)
        : first_(std::move(first)), second_(std::move(second)) {
        require_same_chart(first_.chart(), second_.chart(), "PairBigradedForm");
        const Bidegree a = first_.bidegree();
        const Bidegree b = second_.bidegree();
        if (b.p != a.p || b.q != a.q - 1)
            throw std::invalid_argument("PairBigradedForm: second slot must have bidegree (p, q-1)");
    }

    static PairBigradedForm zero(Chart chart, Bidegree bd) {
        return {BigradedForm::zero(chart, bd), BigradedForm::zero(chart, {bd.p, bd.q - 1})};
    }

    const BigradedForm& first() const { return first_; }
    const BigradedForm& second() const { return second_; }
    Bidegree bidegree() const { return first_.bidegree(); }
    const Chart& chart() const { return first_.chart(); }
    bool is_zero() const { return first_.is_zero() && second_.is_zero(); }
    PairForm as_pair() const { return {first_.form(), second_.form()}; }

    friend bool operator==(const PairBigradedForm& a, const PairBigradedForm& b) {
        return a.first_ == b.first_ && a.second_ == b.second_;
    }

private:
    BigradedForm first_;
    BigradedForm second_;
};

namespace detail {
inline void require_holomorphic(const VectorField& X, const char* where) {
    if (!X.is_holomorphic()) throw PreconditionError(std::string(where) + ": vector field is not holomorphic");
}
}  // namespace detail

/// L_X on (p,q)-forms for a holomorphic X, acting through its (1,0)-part.
inline BigradedForm lie(const VectorField& X, const BigradedForm& a) {
    require_same_chart(X.chart(), a.chart(), "lie");
    detail::require_holomorphic(X, "lie");
    return {lie(X, a.form()), a.bidegree()};
}

/// i_X on (p,q)-forms for a (1,0)-field: bidegree (p-1, q).
inline BigradedForm interior(const VectorField& X, const BigradedForm& a) {
    require_same_chart(X.chart(), a.chart(), "interior");
    detail::require_holomorphic(X, "interior");
    return {interior(X, a.form()), {a.bidegree().p - 1, a.bidegree().q}};
}

/// dbar_X(phi, psi) = (dbar phi, L_X phi - dbar psi).
inline PairBigradedForm dbar_X(const VectorField& X, const PairBigradedForm& a) {
    require_same_chart(X.chart(), a.chart(), "dbar_X");
    detail::require_holomorphic(X, "dbar_X");
    const Bidegree bd = a.bidegree();
    return {dbar(a.first()),
            BigradedForm(lie(X, a.first().form()) - dbar(a.second().form()), bd)};
}

/// Graded-commutative product of bigraded pairs, via the pair wedge.
inline PairBigradedForm pair_wedge(const PairBigradedForm& a, const PairBigradedForm& b) {
    const PairForm w = pair_wedge(a.as_pair(), b.as_pair());
    const Bidegree bd{a.bidegree().p + b.bidegree().p, a.bidegree().q + b.bidegree().q};
    return {BigradedForm(w.first(), bd), BigradedForm(w.second(), {bd.p, bd.q - 1})};
}

namespace detail {
inline void require_relative_bidegrees(const RelPairForm& a, const char* where) {
    if (a.primed()) throw std::invalid_argument(std::string(where) + ": unprimed relative pair required");
    if (a.first().is_zero() || a.second().is_zero()) return;
    const Bidegree x = bidegree_of(a.first().components().begin()->first, a.first().chart().n());
    const Bidegree y = bidegree_of(a.second().components().begin()->first, a.second().chart().n());
    BigradedForm(a.first(), x);
    BigradedForm(a.second(), y);
    if (y.p != x.p || y.q != x.q - 1)
        throw std::invalid_argument(std::string(where) + ": slots must have bidegrees (p,q), (p,q-1)");
}
}  // namespace detail

/// dbar_{X,f}(phi, psi) = (dbar phi, L_X f^* phi - dbar psi) for a holomorphic
/// map f and a holomorphic X on its source.
inline RelPairForm dbar_X_rel(const VectorField& X, const RelPairForm& a) {
    const ChartMap& f = a.map();
    require_same_chart(X.chart(), f.source(), "dbar_X_rel");
    detail::require_holomorphic(X, "dbar_X_rel");
    if (!f.is_holomorphic()) throw PreconditionError("dbar_X_rel: map is not holomorphic");
    detail::require_relative_bidegrees(a, "dbar_X_rel");
    return {f, dbar(a.first()), lie(X, pullback(f, a.first())) - dbar(a.second())};
}

/// Witness for L_X phi = del(i_X phi) and dbar(i_X phi) = 0 on a closed phi.
struct LieExactness {
    Form contraction;  // i_X phi
    Form lie;          // L_X phi
    Form del_contraction;
    Form dbar_contraction;
    bool holds() const { return lie == del_contraction && dbar_contraction.is_zero(); }
};

inline LieExactness lie_exactness_check(const VectorField& X, const BigradedForm& phi) {
    require_same_chart(X.chart(), phi.chart(), "lie_exactness_check");
    detail::require_holomorphic(X, "lie_exactness_check");
    if (!ext_d(phi.form()).is_zero()) throw PreconditionError("lie_exactness_check: form is not closed");
    Form c = interior(X, phi.form());
    return {c, lie(X, phi.form()), del(c), dbar(c)};
}

}  // namespace pairdiff
