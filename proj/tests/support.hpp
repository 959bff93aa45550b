#pragma once

#include "pairdiff.hpp"

#include <catch2/catch_amalgamated.hpp>

namespace testing {

using namespace pairdiff;

inline const Chart T1 = Chart::torus(1);
inline const Chart T2 = Chart::torus(2);
inline const Chart T3 = Chart::torus(3);
inline const Chart R1 = Chart::affine(1);
inline const Chart R2 = Chart::affine(2);
inline const Chart C1 = Chart::complex_affine(1);
inline const Chart CT1 = Chart::complex_torus(1);

inline ScalarExpr S(const Chart& c, const std::string& src) { return text::parse_scalar(c, src); }
inline Form F(const Chart& c, const std::string& src, std::optional<int> degree = std::nullopt) {
    return text::parse_form(c, src, degree);
}
inline VectorField V(const Chart& c, const std::string& src) { return text::parse_field(c, src); }
inline PairForm P(const Chart& c, const std::string& src, std::optional<int> degree = std::nullopt) {
    return text::parse_pair(c, src, degree);
}

// Sign of the permutation that sorts the concatenation of two index lists.
inline int concat_sign(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    int inversions = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] > all[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Componentwise map of a form's coefficients.
template <class Fn>
Form map_coefficients(const Form& a, Fn&& fn) {
    Form out(a.chart(), a.degree());
    for (const auto& [I, f] : a.components()) out += Form::monomial(fn(f), I);
    return out;
}

}  // namespace testing

namespace Catch {
template <>
struct StringMaker<pairdiff::Form> {
    static std::string convert(const pairdiff::Form& a) { return pairdiff::text::render(a); }
};
template <>
struct StringMaker<pairdiff::ScalarExpr> {
    static std::string convert(const pairdiff::ScalarExpr& a) { return pairdiff::text::render(a); }
};
template <>
struct StringMaker<pairdiff::PairForm> {
    static std::string convert(const pairdiff::PairForm& a) { return pairdiff::text::render(a); }
};
template <>
struct StringMaker<pairdiff::VectorField> {
    static std::string convert(const pairdiff::VectorField& a) { return pairdiff::text::render(a); }
};
template <>
struct StringMaker<pairdiff::GaussQ> {
    static std::string convert(const pairdiff::GaussQ& a) { return a.to_string(); }
};
}  // namespace Catch
