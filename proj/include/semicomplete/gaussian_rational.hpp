#pragma once

#include "semicomplete/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace semicomplete {

/// Gaussian rational a + b*i with exact Rational components; i*i = -1.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    /// i^m for any integer m (period 4).
    static GaussianRational i_power(long long m) {
        switch (((m % 4) + 4) % 4) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return GaussianRational(Rational(0), Rational(-1));
        }
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// Integer power by repeated squaring; negative exponents invert.
    GaussianRational pow(long long e) const {
        if (e < 0) return (GaussianRational(1) / *this).pow(-e);
        GaussianRational base = *this;
        GaussianRational acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    /// "a", "b*i", or "a+b*i" with exact rational parts.
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string im_part = (im_ == Rational(1))    ? "i"
                              : (im_ == Rational(-1)) ? "-i"
                                                      : im_.str() + "*i";
        if (re_.is_zero()) return im_part;
        if (im_.sign() > 0) return re_.str() + "+" + im_part;
        return re_.str() + im_part;  // im_part carries its own minus sign
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace semicomplete
