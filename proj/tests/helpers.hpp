#pragma once

#include <random>
#include <vector>

#include "ewkb/puiseux.hpp"

namespace testing_util {

using ewkb::Coefficient;
using ewkb::Exponent;
using ewkb::PuiseuxSeries;
using ewkb::Rational;

inline PuiseuxSeries poly(std::initializer_list<Rational> c)
{
    std::vector<Coefficient> v;
    for (const auto& x : c) v.emplace_back(x);
    return PuiseuxSeries::polynomial(v);
}

inline PuiseuxSeries mono(const Rational& c, std::int64_t num, std::int64_t den = 1)
{
    return PuiseuxSeries::monomial(Coefficient(c), Exponent(num, den));
}

inline Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng)) / den(rng);
}

inline PuiseuxSeries random_poly(std::mt19937& rng, int degree)
{
    std::vector<Coefficient> v;
    for (int k = 0; k <= degree; ++k) v.emplace_back(random_rational(rng));
    return PuiseuxSeries::polynomial(v);
}

// Random exact series on the half-integer lattice, truncated at `trunc`.
inline PuiseuxSeries random_half_series(std::mt19937& rng, int lo2, int hi2, const Exponent& trunc)
{
    PuiseuxSeries::Terms t;
    for (int e2 = lo2; e2 < hi2; ++e2) {
        Rational c = random_rational(rng);
        if (c != 0) t.emplace(Exponent(e2, 2), Coefficient(c));
    }
    return PuiseuxSeries(std::move(t), trunc);
}

// equal stored terms, ignoring the truncation orders
inline bool same_terms(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a.terms() == b.terms(); }

inline bool all_zero(const std::vector<PuiseuxSeries>& v)
{
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace testing_util
