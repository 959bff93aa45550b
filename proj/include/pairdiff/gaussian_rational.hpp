// Exact arithmetic in Q(i).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace pairdiff {

/// A Gaussian rational re + im*i with exact GMP rationals.
class GaussQ {
public:
    GaussQ() = default;
    GaussQ(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussQ i() { return GaussQ(0, 1); }

    static GaussQ ratio(long num, long den) {
        if (den == 0) throw std::domain_error("GaussQ::ratio: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussQ(q, 0);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    /// True when both parts are integers.
    bool is_gaussian_integer() const {
        return re_.get_den() == 1 && im_.get_den() == 1;
    }

    GaussQ conj() const { return GaussQ(re_, -im_); }

    /// |z|^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussQ operator-() const { return GaussQ(-re_, -im_); }

    GaussQ& operator+=(const GaussQ& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussQ& operator-=(const GaussQ& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussQ& operator*=(const GaussQ& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussQ& operator/=(const GaussQ& o) {
        if (o.is_zero()) throw std::domain_error("GaussQ: division by zero");
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }

    friend bool operator==(const GaussQ& a, const GaussQ& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Renders "3/2", "-i", "3/2*i", "(1+2*i)". Locale independent.
    std::string to_string() const {
        if (sgn(im_) == 0) return re_.get_str();
        std::string imag;
        if (im_ == 1) {
            imag = "i";
        } else if (im_ == -1) {
            imag = "-i";
        } else {
            imag = im_.get_str() + "*i";
        }
        if (sgn(re_) == 0) return imag;
        std::string out = "(" + re_.get_str();
        if (sgn(im_) > 0) out += "+";
        out += imag + ")";
        return out;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Least common multiple of the denominators of both parts.
inline mpz_class denominator_lcm(const GaussQ& z) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), z.re().get_den_mpz_t(), z.im().get_den_mpz_t());
    return out;
}

}  // namespace pairdiff
