#pragma once

#include <string>
#include <variant>

#include "ewkb/numeric.hpp"
#include "ewkb/rational.hpp"

namespace ewkb {

// Series coefficient: exact Gaussian rational, or a float complex at the working precision.
// Mixing the two yields a float coefficient.
class Coefficient {
public:
    Coefficient() : v_(GaussRational()) {}
    Coefficient(long v) : v_(GaussRational(v)) {}
    Coefficient(int v) : v_(GaussRational(static_cast<long>(v))) {}
    Coefficient(const Rational& q) : v_(GaussRational(q)) {}
    Coefficient(const GaussRational& g) : v_(g) {}
    Coefficient(const Complex& c) : v_(c) {}

    bool is_exact() const { return std::holds_alternative<GaussRational>(v_); }
    bool is_zero() const;
    const GaussRational& exact() const;
    Complex to_complex() const;
    // Decimal digits carried by a float coefficient (0 for exact).
    unsigned digits() const;

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    Coefficient& operator/=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
    friend bool operator==(const Coefficient& a, const Coefficient& b);

    // Magnitude as a double, for reports.
    double magnitude() const;
    std::string str() const;

private:
    std::variant<GaussRational, Complex> v_;
};

}  // namespace ewkb
