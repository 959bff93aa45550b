// Homogeneous differential forms and vector fields on a chart.
#pragma once

#include "pairdiff/scalar.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <vector>

namespace pairdiff {

/// A strictly increasing index set I, stored as a bit mask over frame axes.
using Mask = std::uint32_t;

inline int mask_size(Mask m) { return std::popcount(m); }

inline Mask mask_of(std::initializer_list<int> axes) {
    Mask m = 0;
    for (int a : axes) m |= Mask{1} << a;
    return m;
}

/// Axes of a mask in increasing order.
inline std::vector<int> mask_axes(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        int a = std::countr_zero(m);
        out.push_back(a);
        m &= m - 1;
    }
    return out;
}

/// Sign of the permutation sorting the concatenation (I, J) for disjoint I, J:
/// (-1)^{#{(i, j) : i in I, j in J, i > j}}.
inline int merge_sign(Mask I, Mask J) {
    int inversions = 0;
    Mask rest = J;
    while (rest != 0) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(I >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

/// All masks of a given size over `dim` axes, in increasing numeric order.
inline std::vector<Mask> masks_of_size(int dim, int size) {
    std::vector<Mask> out;
    if (size < 0 || size > dim) return out;
    for (Mask m = 0; m < (Mask{1} << dim); ++m)
        if (mask_size(m) == size) out.push_back(m);
    return out;
}

/// A homogeneous p-form sum_I f_I dx^I. Zero components are never stored.
/// Any degree is accepted; degrees outside [0, dim] only hold the zero form.
class Form {
public:
    using Components = std::map<Mask, ScalarExpr>;

    Form() = default;
    Form(Chart chart, int degree) : chart_(chart), degree_(degree) {}

    /// f dx^I.
    static Form monomial(const ScalarExpr& f, Mask I) {
        Form out(f.chart(), mask_size(I));
        out.add(I, f);
        return out;
    }

    /// dx^I with unit coefficient.
    static Form basis(Chart chart, Mask I) {
        return monomial(ScalarExpr::constant(chart, GaussQ(1)), I);
    }

    static Form function(const ScalarExpr& f) { return monomial(f, 0); }

    /// sum_j a_j dx^j.
    static Form one_form(Chart chart, const std::vector<ScalarExpr>& coeffs) {
        if (static_cast<int>(coeffs.size()) != chart.dim())
            throw ChartMismatch("Form::one_form: coefficient count does not match chart");
        Form out(chart, 1);
        for (int j = 0; j < chart.dim(); ++j) out.add(Mask{1} << j, coeffs[j]);
        return out;
    }

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    const Components& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

    ScalarExpr component(Mask I) const {
        auto it = components_.find(I);
        return it == components_.end() ? ScalarExpr(chart_) : it->second;
    }

    void add(Mask I, const ScalarExpr& f) {
        require_same_chart(chart_, f.chart(), "Form::add");
        if (mask_size(I) != degree_)
            throw std::invalid_argument("Form::add: index set size differs from degree");
        if (I >> chart_.dim() != 0) throw std::out_of_range("Form::add: index beyond chart");
        if (f.is_zero()) return;
        auto [it, inserted] = components_.try_emplace(I, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) components_.erase(it);
        }
    }

    Form operator-() const { return scaled(GaussQ(-1)); }

    Form& operator+=(const Form& o) {
        check_compatible(o, "Form::+");
        for (const auto& [I, f] : o.components_) add(I, f);
        return *this;
    }
    Form& operator-=(const Form& o) {
        check_compatible(o, "Form::-");
        for (const auto& [I, f] : o.components_) add(I, -f);
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }

    Form scaled(const GaussQ& s) const {
        Form out(chart_, degree_);
        if (s.is_zero()) return out;
        for (const auto& [I, f] : components_) out.components_.emplace(I, f.scaled(s));
        return out;
    }
    friend Form operator*(const GaussQ& s, const Form& a) { return a.scaled(s); }

    /// Multiplies every component by a function.
    friend Form operator*(const ScalarExpr& f, const Form& a) {
        require_same_chart(f.chart(), a.chart_, "Form::*");
        Form out(a.chart_, a.degree_);
        for (const auto& [I, g] : a.components_) out.add(I, f * g);
        return out;
    }

    Form conj() const {
        Form out(chart_, degree_);
        for (const auto& [I, f] : components_) {
            Mask J = I;
            if (chart_.is_complex()) {
                // conj(dz) = dzb: swap the two halves of the frame.
                const int n = chart_.n();
                const Mask low = (Mask{1} << n) - 1;
                J = ((I & low) << n) | ((I >> n) & low);
                out.add(J, f.conj().scaled(GaussQ(conj_reorder_sign(I, n))));
            } else {
                out.add(J, f.conj());
            }
        }
        return out;
    }

    /// Applies a coefficient transformation component-wise.
    Form map_coefficients(const std::function<ScalarExpr(const ScalarExpr&)>& fn) const {
        Form out(chart_, degree_);
        for (const auto& [I, f] : components_) {
            ScalarExpr g = fn(f);
            require_same_chart(chart_, g.chart(), "Form::map_coefficients");
            out.add(I, g);
        }
        return out;
    }

    friend bool operator==(const Form& a, const Form& b) {
        return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.components_ == b.components_;
    }

private:
    void check_compatible(const Form& o, const char* where) const {
        require_same_chart(chart_, o.chart_, where);
        if (degree_ != o.degree_)
            throw std::invalid_argument(std::string(where) + ": degree mismatch (" +
                                        std::to_string(degree_) + " vs " +
                                        std::to_string(o.degree_) + ")");
    }

    // Sign from reordering conj(dz^A ^ dzb^B) = dzb^A ^ dz^B into increasing
    // frame order dz^B ^ dzb^A.
    static int conj_reorder_sign(Mask I, int n) {
        const Mask low = (Mask{1} << n) - 1;
        const int a = mask_size(I & low);
        const int b = mask_size((I >> n) & low);
        return ((a * b) & 1) ? -1 : 1;
    }

    Chart chart_;
    int degree_ = 0;
    Components components_;
};

/// A vector field sum_a X^a d/dx^a in the chart frame. On complex charts a
/// holomorphic field is stored by its (1,0)-part: components on the z axes
/// depending on z only, zero components on the zb axes.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(Chart chart)
        : chart_(chart), components_(chart.dim(), ScalarExpr(chart)) {}
    VectorField(Chart chart, std::vector<ScalarExpr> components)
        : chart_(chart), components_(std::move(components)) {
        if (static_cast<int>(components_.size()) != chart_.dim())
            throw ChartMismatch("VectorField: component count does not match chart");
        for (const auto& c : components_) require_same_chart(chart_, c.chart(), "VectorField");
    }

    static VectorField constant(Chart chart, const std::vector<GaussQ>& values) {
        std::vector<ScalarExpr> comps;
        for (const auto& v : values) comps.push_back(ScalarExpr::constant(chart, v));
        return VectorField(chart, std::move(comps));
    }

    /// d/dx^axis.
    static VectorField coordinate(Chart chart, int axis) {
        ScalarExpr::check_axis(chart, axis);
        VectorField out(chart);
        out.components_[axis] = ScalarExpr::constant(chart, GaussQ(1));
        return out;
    }

    /// (1,0)-field sum_j a_j(z) d/dz[j] on a complex chart.
    static VectorField holomorphic(Chart chart, const std::vector<ScalarExpr>& z_components) {
        if (!chart.is_complex()) throw ChartMismatch("VectorField::holomorphic: real chart");
        if (static_cast<int>(z_components.size()) != chart.n())
            throw ChartMismatch("VectorField::holomorphic: need one component per z axis");
        VectorField out(chart);
        for (int j = 0; j < chart.n(); ++j) out.components_[j] = z_components[j];
        if (!out.is_holomorphic())
            throw PreconditionError("VectorField::holomorphic: components depend on zb");
        return out;
    }

    const Chart& chart() const { return chart_; }
    const std::vector<ScalarExpr>& components() const { return components_; }
    const ScalarExpr& operator[](int axis) const { return components_.at(axis); }

    bool is_zero() const {
        for (const auto& c : components_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_constant() const {
        for (const auto& c : components_)
            if (!c.is_constant()) return false;
        return true;
    }

    /// Complex charts only: zb components vanish and z components satisfy
    /// the Cauchy-Riemann equations d/dzb a = 0.
    bool is_holomorphic() const {
        if (!chart_.is_complex()) return false;
        const int n = chart_.n();
        for (int j = 0; j < n; ++j) {
            if (!components_[n + j].is_zero()) return false;
            for (int b = 0; b < n; ++b)
                if (!partial(components_[j], n + b).is_zero()) return false;
        }
        return true;
    }

    /// Directional derivative X(f) = sum_a X^a d_a f.
    ScalarExpr apply(const ScalarExpr& f) const {
        require_same_chart(chart_, f.chart(), "VectorField::apply");
        ScalarExpr out(chart_);
        for (int a = 0; a < chart_.dim(); ++a) {
            if (components_[a].is_zero()) continue;
            out += components_[a] * partial(f, a);
        }
        return out;
    }

    VectorField& operator+=(const VectorField& o) {
        require_same_chart(chart_, o.chart_, "VectorField::+");
        for (int a = 0; a < chart_.dim(); ++a) components_[a] += o.components_[a];
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        require_same_chart(chart_, o.chart_, "VectorField::-");
        for (int a = 0; a < chart_.dim(); ++a) components_[a] -= o.components_[a];
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

    VectorField scaled(const GaussQ& s) const {
        VectorField out(chart_);
        for (int a = 0; a < chart_.dim(); ++a) out.components_[a] = components_[a].scaled(s);
        return out;
    }

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    Chart chart_;
    std::vector<ScalarExpr> components_;
};

/// Lie bracket [X, Y]^a = X(Y^a) - Y(X^a) in the (holonomic) chart frame.
inline VectorField bracket(const VectorField& X, const VectorField& Y) {
    require_same_chart(X.chart(), Y.chart(), "bracket");
    std::vector<ScalarExpr> comps;
    for (int a = 0; a < X.chart().dim(); ++a) comps.push_back(X.apply(Y[a]) - Y.apply(X[a]));
    return VectorField(X.chart(), std::move(comps));
}

}  // namespace pairdiff
