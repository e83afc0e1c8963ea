#pragma once

#include <optional>
#include <vector>

#include "ewkb/puiseux.hpp"

namespace ewkb {

// Truncated power series in ε whose coefficients are series in z.
// Coefficient k multiplies ε^k; orders >= size() are unknown.
class EpsSeries {
public:
    EpsSeries() = default;
    explicit EpsSeries(std::vector<PuiseuxSeries> c) : c_(std::move(c)) {}
    static EpsSeries constant(const PuiseuxSeries& c0, int order);

    int order() const { return static_cast<int>(c_.size()); }
    const PuiseuxSeries& operator[](int k) const { return c_.at(k); }
    PuiseuxSeries& operator[](int k) { return c_.at(k); }
    const std::vector<PuiseuxSeries>& coeffs() const { return c_; }

    EpsSeries truncated(int order) const;
    // Apply a z-cap to every coefficient.
    EpsSeries z_truncated(const Exponent& cap) const;
    EpsSeries derive_z() const;
    // ε -> -ε
    EpsSeries flipped() const;
    // times ε^k (k >= 0)
    EpsSeries shifted(int k) const;
    EpsSeries scaled(const Coefficient& c) const;
    EpsSeries mul_z(const PuiseuxSeries& s) const;

    friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);

private:
    std::vector<PuiseuxSeries> c_;
};

// Products truncated at `cap` in z when given.
EpsSeries eps_mul(const EpsSeries& a, const EpsSeries& b, std::optional<Exponent> cap);
EpsSeries eps_inverse(const EpsSeries& a, std::optional<Exponent> cap = std::nullopt);
// exp(a) for a with a[0] == 0.
EpsSeries eps_exp(const EpsSeries& a, std::optional<Exponent> cap = std::nullopt);
// a^r with a[0] invertible.
EpsSeries eps_pow(const EpsSeries& a, const Rational& r, std::optional<Exponent> cap = std::nullopt);

}  // namespace ewkb
