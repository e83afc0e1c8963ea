#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ewkb/coefficient.hpp"
#include "ewkb/rational.hpp"

namespace ewkb {

// Truncated series sum c_e z^e. Exponents live on (1/6)Z; WKB objects use (1/2)Z and the
// finer lattice only appears inside fractional powers. Terms at exponents >= trunc() are
// unknown; trunc() == infinity means the stored terms are the exact value.
class PuiseuxSeries {
public:
    using Terms = std::map<Exponent, Coefficient>;

    PuiseuxSeries() : trunc_(Exponent::infinity()) {}
    PuiseuxSeries(Terms terms, Exponent trunc);

    static PuiseuxSeries zero(Exponent trunc = Exponent::infinity());
    static PuiseuxSeries constant(const Coefficient& c, Exponent trunc = Exponent::infinity());
    static PuiseuxSeries monomial(const Coefficient& c, Exponent e,
                                  Exponent trunc = Exponent::infinity());
    // sum_k c[k] z^k
    static PuiseuxSeries polynomial(const std::vector<Coefficient>& c,
                                    Exponent trunc = Exponent::infinity());

    const Terms& terms() const { return terms_; }
    Exponent trunc() const { return trunc_; }
    // Lowest stored exponent; for a zero series, the truncation order (0 if exact zero).
    Exponent min_exp() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const;  // every coefficient exact
    bool is_taylor() const;  // integer exponents >= 0
    bool on_lattice(std::int64_t den) const;
    Coefficient coeff(const Exponent& e) const;  // throws if e >= trunc
    Coefficient leading() const;                 // throws on zero
    std::size_t size() const { return terms_.size(); }

    PuiseuxSeries truncated(const Exponent& t) const;
    PuiseuxSeries shifted(const Exponent& e) const;  // times z^e
    PuiseuxSeries scaled(const Coefficient& c) const;
    // Keep only exponents in [lo, hi).
    PuiseuxSeries slice(const Exponent& lo, const Exponent& hi) const;

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = *this + o; }
    PuiseuxSeries& operator-=(const PuiseuxSeries& o) { return *this = *this - o; }
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

    Complex evaluate(const Complex& z) const;
    std::string str() const;

private:
    Terms terms_;
    Exponent trunc_;
};

using TaylorSeries = PuiseuxSeries;

void require_taylor(const PuiseuxSeries& s, const std::string& what);

enum class ArithOp { add, sub, mul, div };
// `cap` bounds results that would otherwise be infinite expansions (e.g. 1/(1-z)).
PuiseuxSeries series_arith(const PuiseuxSeries& a, const PuiseuxSeries& b, ArithOp op,
                           std::optional<Exponent> cap = std::nullopt);
PuiseuxSeries inverse(const PuiseuxSeries& b, std::optional<Exponent> cap = std::nullopt);
PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b,
                     std::optional<Exponent> cap = std::nullopt);
PuiseuxSeries series_pow_rational(const PuiseuxSeries& a, const Rational& r,
                                  std::optional<Exponent> cap = std::nullopt);

PuiseuxSeries derive(const PuiseuxSeries& a);
PuiseuxSeries antiderive(const PuiseuxSeries& a);
enum class CalculusOp { derive, antiderive };
PuiseuxSeries series_calculus(const PuiseuxSeries& a, CalculusOp op);

// f(g(z)) for Taylor f and Taylor g with g(0) = 0.
PuiseuxSeries compose(const PuiseuxSeries& f, const PuiseuxSeries& g,
                      std::optional<Exponent> cap = std::nullopt);
// Compositional inverse by Lagrange inversion; `order` bounds the result when f is exact.
PuiseuxSeries series_compose_invert(const PuiseuxSeries& f, std::optional<int> order = std::nullopt);

// Schwarzian {f, z} = f'''/f' - (3/2)(f''/f')^2.
PuiseuxSeries schwarzian(const PuiseuxSeries& f, std::optional<Exponent> cap = std::nullopt);

// Largest coefficient magnitude (0 for the zero series).
double max_abs_coeff(const PuiseuxSeries& s);

}  // namespace ewkb
