#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "entsub/errors.hpp"

namespace entsub {

/// Arbitrary-precision signed integer; all counting results use this type so
/// that no parameter combination can overflow.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept canonical (gcd-reduced, denominator
/// strictly positive) by the backend on every operation.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical string form "p/q" with q > 0 and gcd(|p|, q) == 1.
/// Integers render with an explicit "/1" so the format is uniform.
std::string rational_to_string(const Rational& r);

/// Parses "p/q" (or a bare integer "p"). Throws ParseError on anything else,
/// including a zero denominator.
Rational rational_from_string(const std::string& s);

/// Exact complex number with rational real and imaginary parts. This is the
/// coefficient field for every certified computation in the library.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(long long r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Exact division; throws RangeError on division by zero.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw RangeError("gaussian rational division by zero");
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

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
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
};

/// Squared modulus |z|^2 = re^2 + im^2, an exact rational.
inline Rational abs_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

} // namespace entsub
