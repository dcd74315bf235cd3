#pragma once

// Exact Gaussian-rational coefficient type: re + im*i with arbitrary
// precision rational parts.  All engine arithmetic bottoms out here;
// nothing outside this header touches GMP types directly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fedosov {

using Rational = mpq_class;

class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const Rational& re) : re_(re), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar ratio(long num, long den);
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        // total order for canonical containers only; no algebraic meaning
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // Canonical rendering "a/b+c/d*i" (denominators positive, lowest terms).
    // Two equal values always render to the same bytes.
    std::string str() const;

    // Accepts the canonical form plus shorthands: "3", "-1/2", "2*i",
    // "1/2-3/4*i".  Throws std::invalid_argument on malformed input.
    static Scalar parse(const std::string& text);

private:
    Rational re_, im_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace fedosov
