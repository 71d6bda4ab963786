#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "zm/errors.hpp"

namespace zm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts. All measure
/// weights, spherical-function values and inner products live here; no
/// floating point enters any identity check.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |s|^2 = s * conj(s); always real.
    Rational norm() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(GaussianRational a) { return {-a.re, -a.im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

GaussianRational pow(const GaussianRational& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

/// Parses "3", "-5/7". Throws ParseError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Parses exact complex literals: "2", "5/3", "1+1i", "1-2i", "3/2+1/2i",
/// "i", "-i", "2i". Whitespace-free. Throws ParseError.
GaussianRational parse_gaussian(const std::string& text);

/// Canonical text form, inverse of parse_gaussian for canonical rationals.
std::string to_string(const GaussianRational& v);
std::string to_string(const Rational& v);

/// Decimal approximation (for CSV display columns only; never used in checks).
double to_double(const Rational& v);

std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

}  // namespace zm
