#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ewkb {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Series exponent: a small reduced fraction, or +infinity for "no truncation".
class Exponent {
public:
    Exponent() = default;
    Exponent(std::int64_t num, std::int64_t den = 1);
    static Exponent infinity();
    static Exponent parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_inf() const { return inf_; }
    bool is_integer() const { return !inf_ && den_ == 1; }
    Rational to_rational() const;
    double to_double() const;
    std::string str() const;

    Exponent operator-() const;
    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    friend Exponent operator*(const Exponent& a, const Exponent& b);
    friend Exponent operator/(const Exponent& a, const Exponent& b);
    friend bool operator==(const Exponent& a, const Exponent& b) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    bool inf_ = false;
};

Exponent min(const Exponent& a, const Exponent& b);
Exponent max(const Exponent& a, const Exponent& b);

struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long v) : re(v), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);
    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

std::string to_string(const GaussRational& g);

// Exact root of a nonnegative rational if both num and den are perfect k-th powers.
bool exact_root(const Rational& q, unsigned long k, Rational& out);

}  // namespace ewkb
