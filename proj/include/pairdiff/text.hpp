// Text rendering and parsing of scalars, forms, pairs and vector fields.
//
//   scalar  := "3/2*x[1]^2*e(1,-1)"   polynomial variables x[j] (real affine),
//              z[j], zb[j] (complex affine); e(k...) = exp(i<k,x>) on tori;
//              sin(<lin>), cos(<lin>) for an integer combination of x[j]
//   form    := "x[1]*dx[2] - dx[1]^dx[3]"   basis dx[j], or dz[j], dzb[j]
//   field   := "x[1]*d/dx[1] + 2*d/dx[2]"
//   pair    := "(phi | psi)"
#pragma once

#include "pairdiff/relative.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace pairdiff {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace text {

inline std::string render(const GaussQ& c) { return c.to_string(); }

namespace detail {

inline std::string render_monomial(const Chart& chart, const Monomial& m) {
    std::string out;
    for (int a = 0; a < chart.dim(); ++a) {
        if (m.exponents[a] == 0) continue;
        if (!out.empty()) out += "*";
        out += chart.variable_name(a);
        if (m.exponents[a] != 1) out += "^" + std::to_string(m.exponents[a]);
    }
    bool freq = false;
    for (int k : m.frequencies) freq = freq || k != 0;
    if (freq) {
        if (!out.empty()) out += "*";
        out += "e(";
        for (std::size_t j = 0; j < m.frequencies.size(); ++j)
            out += (j ? "," : "") + std::to_string(m.frequencies[j]);
        out += ")";
    }
    return out;
}

inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t j = 1; j < terms.size(); ++j) {
        const std::string& t = terms[j];
        if (!t.empty() && t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out;
}

// "c*body" with unit coefficients elided.
inline std::string scaled_body(const GaussQ& c, const std::string& body) {
    if (body.empty()) return c.to_string();
    if (c.is_one()) return body;
    if (c == GaussQ(-1)) return "-" + body;
    return c.to_string() + "*" + body;
}

// Coefficient in front of a basis token, parenthesised when it has several terms.
inline std::string coefficient_prefix(const ScalarExpr& f, const std::string& token);

}  // namespace detail

inline std::string render(const ScalarExpr& f) {
    std::vector<std::string> terms;
    for (const auto& [m, c] : f.terms()) terms.push_back(detail::scaled_body(c, detail::render_monomial(f.chart(), m)));
    return detail::join_terms(terms);
}

inline std::string detail::coefficient_prefix(const ScalarExpr& f, const std::string& token) {
    if (f.size() == 1) {
        const auto& [m, c] = *f.terms().begin();
        const std::string body = render_monomial(f.chart(), m);
        return scaled_body(c, body.empty() ? token : body + "*" + token);
    }
    return "(" + render(f) + ")*" + token;
}

inline std::string render(const Form& a) {
    std::vector<std::string> terms;
    for (const auto& [I, f] : a.components()) {
        if (I == 0) {
            terms.push_back(render(f));
            continue;
        }
        std::string basis;
        for (int axis : mask_axes(I)) basis += (basis.empty() ? "" : "^") + a.chart().differential_name(axis);
        terms.push_back(detail::coefficient_prefix(f, basis));
    }
    return detail::join_terms(terms);
}

inline std::string render(const VectorField& X) {
    std::vector<std::string> terms;
    for (int a = 0; a < X.chart().dim(); ++a)
        if (!X[a].is_zero()) terms.push_back(detail::coefficient_prefix(X[a], X.chart().derivation_name(a)));
    return detail::join_terms(terms);
}

inline std::string render(const PairForm& a) { return "(" + render(a.first()) + " | " + render(a.second()) + ")"; }

inline std::string render(const RelPairForm& a) {
    return "(" + render(a.first()) + " | " + render(a.second()) + ")";
}

namespace detail {

// Parsed value: an inhomogeneous form (keyed by frame index set) or a vector field.
struct Value {
    std::map<Mask, ScalarExpr> form;
    std::vector<ScalarExpr> field;  // empty unless the value is a vector field

    bool is_field() const { return !field.empty(); }
    bool is_scalar() const {
        if (is_field()) return false;
        for (const auto& [I, f] : form)
            if (I != 0) return false;
        return true;
    }
};

class Parser {
public:
    Parser(Chart chart, std::string src) : chart_(chart), src_(std::move(src)) {}

    Value parse_all() {
        Value v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at " + std::to_string(pos_) + " in \"" + src_ + "\": " + msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) neg = src_[pos_++] == '-';
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("integer too large");
        const long v = std::stol(src_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    int index() {
        expect('[');
        const long j = integer();
        expect(']');
        return static_cast<int>(j);
    }

    Value scalar(const ScalarExpr& f) {
        Value v;
        if (!f.is_zero()) v.form.emplace(0, f);
        return v;
    }

    ScalarExpr one() const { return ScalarExpr::constant(chart_, GaussQ(1)); }

    // Frame axis of a variable name with a 1-based index.
    int axis_of(const std::string& name, int j) {
        const int n = chart_.n();
        if (j < 1) fail("indices start at 1");
        if (name == "x") {
            if (chart_.is_complex() && !chart_.is_periodic()) fail("use z[j], zb[j] on complex charts");
            if (j > chart_.dim()) fail("index beyond chart");
            return j - 1;
        }
        if (!chart_.is_complex()) fail("complex variable on a real chart");
        if (j > n) fail("index beyond chart");
        return name == "z" ? j - 1 : n + j - 1;
    }

    static void add_into(Value& acc, const Value& v, bool negate) {
        for (const auto& [I, f] : v.form) {
            auto [it, inserted] = acc.form.try_emplace(I, negate ? -f : f);
            if (!inserted) it->second += negate ? -f : f;
        }
        if (v.is_field()) {
            if (acc.field.empty()) acc.field.assign(v.field.size(), ScalarExpr(v.field.front().chart()));
            for (std::size_t a = 0; a < v.field.size(); ++a) acc.field[a] += negate ? -v.field[a] : v.field[a];
        }
    }

    Value multiply(const Value& a, const Value& b) {
        if (a.is_field() && b.is_field()) fail("product of two vector fields");
        if (a.is_field() || b.is_field()) {
            const Value& fv = a.is_field() ? a : b;
            const Value& sv = a.is_field() ? b : a;
            if (!sv.is_scalar()) fail("vector field multiplied by a form");
            if (!fv.form.empty()) fail("mixed vector field and form");
            const ScalarExpr s = sv.form.empty() ? ScalarExpr(chart_) : sv.form.at(0);
            Value out;
            for (const auto& c : fv.field) out.field.push_back(s * c);
            return out;
        }
        Value out;
        for (const auto& [I, f] : a.form)
            for (const auto& [J, g] : b.form) {
                if ((I & J) != 0) continue;
                ScalarExpr fg = f * g;
                if (merge_sign(I, J) < 0) fg = -fg;
                auto [it, inserted] = out.form.try_emplace(I | J, fg);
                if (!inserted) it->second += fg;
            }
        return out;
    }

    Value expr() {
        Value acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        add_into(acc, term(), negate);
        for (;;) {
            if (accept('+')) add_into(acc, term(), false);
            else if (accept('-')) add_into(acc, term(), true);
            else return acc;
        }
    }

    Value term() {
        Value acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = multiply(acc, unary());
            } else if (peek('/') && !(pos_ + 1 < src_.size() && src_[pos_ + 1] == 'd')) {
                ++pos_;
                const Value d = unary();
                if (!d.is_scalar() || d.form.empty() || !d.form.at(0).is_constant())
                    fail("division by a non-constant");
                const GaussQ c = d.form.at(0).constant_term();
                Value inv = scalar(one().scaled(GaussQ(1) / c));
                acc = multiply(acc, inv);
            } else {
                return acc;
            }
        }
    }

    Value unary() {
        if (accept('-')) return multiply(scalar(one().scaled(GaussQ(-1))), unary());
        return power();
    }

    Value power() {
        Value acc = atom();
        while (accept('^')) {
            if (peek_digit()) {
                const long e = integer();
                if (!acc.is_scalar()) fail("power of a non-scalar");
                const ScalarExpr base = acc.form.empty() ? ScalarExpr(chart_) : acc.form.at(0);
                acc = scalar(base.pow(static_cast<int>(e)));
            } else {
                acc = multiply(acc, atom());
            }
        }
        return acc;
    }

    std::vector<int> frequencies() {
        expect('(');
        std::vector<int> k;
        do {
            k.push_back(static_cast<int>(integer()));
        } while (accept(','));
        expect(')');
        if (static_cast<int>(k.size()) != chart_.dim()) fail("frequency vector length differs from chart");
        return k;
    }

    // Integer combination of x[j] inside sin(...)/cos(...).
    std::vector<int> linear_argument() {
        expect('(');
        int depth = 1;
        const std::size_t start = pos_;
        while (pos_ < src_.size() && depth > 0) {
            if (src_[pos_] == '(') ++depth;
            if (src_[pos_] == ')') --depth;
            ++pos_;
        }
        if (depth != 0) fail("unbalanced parentheses");
        const std::string inner = src_.substr(start, pos_ - start - 1);
        Parser sub(Chart::affine(chart_.dim()), inner);
        const Value v = sub.parse_all();
        if (!v.is_scalar()) fail("trig argument must be a scalar");
        std::vector<int> k(chart_.dim(), 0);
        if (v.form.empty()) return k;
        for (const auto& [m, c] : v.form.at(0).terms()) {
            int total = 0;
            int axis = -1;
            for (int a = 0; a < chart_.dim(); ++a) {
                total += m.exponents[a];
                if (m.exponents[a] != 0) axis = a;
            }
            if (total != 1) fail("trig argument must be linear without constant term");
            if (!c.is_real() || !c.is_gaussian_integer()) fail("trig argument needs integer coefficients");
            k[axis] = static_cast<int>(c.re().get_num().get_si());
        }
        return k;
    }

    Value atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        if (accept('(')) {
            Value v = expr();
            expect(')');
            return v;
        }
        if (peek_digit()) {
            const long v = integer();
            return scalar(ScalarExpr::constant(chart_, GaussQ(v)));
        }
        const std::string id = identifier();
        if (id.empty()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        if (id == "i") return scalar(ScalarExpr::constant(chart_, GaussQ::i()));
        if (id == "x" || id == "z" || id == "zb") {
            const int axis = axis_of(id, index());
            if (chart_.is_periodic()) fail("polynomial variables are not allowed on tori");
            return scalar(ScalarExpr::variable(chart_, axis));
        }
        if (id == "dx" || id == "dz" || id == "dzb") {
            if (id == "dx" && chart_.is_complex()) fail("use dz[j], dzb[j] on complex charts");
            const int axis = axis_of(id.substr(1), index());
            Value v;
            v.form.emplace(Mask{1} << axis, one());
            return v;
        }
        if (id == "d" && accept('/')) {
            const std::string tail = identifier();
            if (tail != "dx" && tail != "dz" && tail != "dzb") fail("expected d/dx[j], d/dz[j] or d/dzb[j]");
            if (tail == "dx" && chart_.is_complex()) fail("use d/dz[j] on complex charts");
            const int axis = axis_of(tail.substr(1), index());
            Value v;
            v.field.assign(chart_.dim(), ScalarExpr(chart_));
            v.field[axis] = one();
            return v;
        }
        if (id == "e") {
            if (!chart_.is_periodic()) fail("e(...) requires a torus");
            return scalar(ScalarExpr::exponential(chart_, frequencies()));
        }
        if (id == "sin" || id == "cos") {
            if (!chart_.is_periodic()) fail("sin/cos require a torus");
            const std::vector<int> k = linear_argument();
            return scalar(id == "sin" ? trig::sin(chart_, k) : trig::cos(chart_, k));
        }
        fail("unknown identifier '" + id + "'");
    }

    Chart chart_;
    std::string src_;
    std::size_t pos_ = 0;
};

inline Form to_form(const Chart& chart, const Value& v, std::optional<int> degree, const std::string& src) {
    if (v.is_field()) throw ParseError("expected a form, got a vector field: \"" + src + "\"");
    std::optional<int> seen;
    for (const auto& [I, f] : v.form) {
        if (f.is_zero()) continue;
        if (seen && *seen != mask_size(I)) throw ParseError("inhomogeneous form: \"" + src + "\"");
        seen = mask_size(I);
    }
    if (seen && degree && *seen != *degree)
        throw ParseError("form \"" + src + "\" has degree " + std::to_string(*seen) + ", expected " +
                         std::to_string(*degree));
    Form out(chart, seen ? *seen : degree.value_or(0));
    for (const auto& [I, f] : v.form)
        if (!f.is_zero()) out.add(I, f);
    return out;
}

// Splits "(a | b)" at the top-level bar.
inline std::pair<std::string, std::string> split_pair(const std::string& src) {
    std::size_t l = src.find_first_not_of(" \t");
    std::size_t r = src.find_last_not_of(" \t");
    if (l == std::string::npos || src[l] != '(' || src[r] != ')') throw ParseError("expected \"(phi | psi)\"");
    int depth = 0;
    for (std::size_t j = l + 1; j < r; ++j) {
        if (src[j] == '(') ++depth;
        else if (src[j] == ')') --depth;
        else if (src[j] == '|' && depth == 0) return {src.substr(l + 1, j - l - 1), src.substr(j + 1, r - j - 1)};
    }
    throw ParseError("expected \"(phi | psi)\"");
}

}  // namespace detail

inline ScalarExpr parse_scalar(const Chart& chart, const std::string& src) {
    return detail::to_form(chart, detail::Parser(chart, src).parse_all(), 0, src).component(0);
}

/// Parses a homogeneous form; `degree` fixes the degree of a zero result and
/// is checked against nonzero ones.
inline Form parse_form(const Chart& chart, const std::string& src, std::optional<int> degree = std::nullopt) {
    return detail::to_form(chart, detail::Parser(chart, src).parse_all(), degree, src);
}

inline VectorField parse_field(const Chart& chart, const std::string& src) {
    const detail::Value v = detail::Parser(chart, src).parse_all();
    if (v.is_field()) {
        for (const auto& [I, f] : v.form)
            if (!f.is_zero()) throw ParseError("mixed vector field and form: \"" + src + "\"");
        return VectorField(chart, v.field);
    }
    if (v.form.empty()) return VectorField(chart);
    throw ParseError("expected a vector field: \"" + src + "\"");
}

inline PairForm parse_pair(const Chart& chart, const std::string& src, std::optional<int> degree = std::nullopt) {
    const auto [a, b] = detail::split_pair(src);
    Form first = parse_form(chart, a, degree);
    if (!degree && first.is_zero()) {
        const Form second = parse_form(chart, b);
        return {Form(chart, second.degree() + 1), second};
    }
    return {first, parse_form(chart, b, first.degree() - 1)};
}

}  // namespace text
}  // namespace pairdiff
