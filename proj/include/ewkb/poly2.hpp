#pragma once

#include <map>
#include <string>
#include <utility>

#include "ewkb/numeric.hpp"
#include "ewkb/rational.hpp"

namespace ewkb {

// Polynomial in (z, w) with rational coefficients; key (i, j) is z^i w^j.
class Poly2 {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rational>;

    Poly2() = default;
    explicit Poly2(Terms t);
    static Poly2 term(const Rational& c, int i, int j);
    static Poly2 constant(const Rational& c) { return term(c, 0, 0); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(int i, int j) const;
    int degree_w() const;

    Poly2 d_z() const;
    Poly2 d_w() const;
    // Antiderivative in w with zero constant.
    Poly2 int_w() const;
    // z -> s z
    Poly2 scale_z(const Rational& s) const;
    // Coefficient of w^j as a polynomial in z (returned with j = 0).
    Poly2 w_slice(int j) const;

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Rational& c, const Poly2& a);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.t_ == b.t_; }

    Complex evaluate(const Complex& z, const Complex& w) const;
    std::string str(const std::string& zname = "z", const std::string& wname = "w") const;

private:
    void prune();
    Terms t_;
};

// Exact division of univariate polynomials in z (w-degree 0). Returns false if the remainder is nonzero.
bool divide_in_z(const Poly2& num, const Poly2& den, Poly2& quot);

}  // namespace ewkb
