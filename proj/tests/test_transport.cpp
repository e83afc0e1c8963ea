#include <doctest.h>

#include <random>

#include "ewkb/errors.hpp"
#include "ewkb/transport.hpp"
#include "helpers.hpp"

using namespace ewkb;
using testing_util::mono;
using testing_util::poly;

TEST_SUITE("transport")
{
    TEST_CASE("F = 0 reproduces the Airy symbol")
    {
        auto t = transport_g(PuiseuxSeries::zero(Exponent(20)), 8);
        auto a = airy_symbol(8);
        for (int n = 0; n <= 8; ++n) CHECK(testing_util::same_terms(t.g[n], a.g[n]));
    }

    TEST_CASE("Riccati coefficients")
    {
        auto r = riccati_p(PuiseuxSeries::zero(Exponent(10)), 3);
        CHECK(testing_util::same_terms(r.p[0], mono(1, 1, 2)));
        CHECK(testing_util::same_terms(r.p[1], mono(Rational(1, 4), -1)));
        CHECK(testing_util::same_terms(r.p[2], mono(Rational(-5, 32), -5, 2)));
        // with F = c: p_2 = (c - 5/(16z²)) / (2 z^{1/2})
        Rational c(3, 7);
        auto rc = riccati_p(poly({c}), 2);
        CHECK(rc.p[2].coeff(Exponent(-1, 2)) == Coefficient(c / 2));
        CHECK(rc.p[2].coeff(Exponent(-5, 2)) == Coefficient(Rational(-5, 32)));
    }

    TEST_CASE("property: formal residual vanishes for random polynomial F")
    {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 6; ++trial) {
            auto F = testing_util::random_poly(rng, 3).truncated(Exponent(12));
            for (int sign : {1, -1}) {
                auto s = transport_g(F, 6, sign);
                CHECK(s.sign == sign);
                CHECK(testing_util::all_zero(wkb_residual(s, F)));
            }
        }
    }

    TEST_CASE("property: Riccati and transport are consistent")
    {
        std::mt19937 rng(8);
        for (int trial = 0; trial < 4; ++trial) {
            auto F = testing_util::random_poly(rng, 2).truncated(Exponent(12));
            auto rep = symbol_consistency(F, 6);
            CHECK(rep.exact_zero);
            CHECK(rep.max_residual == 0.0);
            CHECK(testing_util::all_zero(rep.odd_residual));
            CHECK(testing_util::all_zero(rep.symbol_residual));
        }
        auto rep0 = symbol_consistency(PuiseuxSeries::zero(Exponent(12)), 6);
        for (const auto& c : rep0.C) CHECK((c == Coefficient(0) || c == Coefficient(1)));
    }

    TEST_CASE("a wrong symbol leaves a residual")
    {
        auto F = poly({1}).truncated(Exponent(10));
        auto s = transport_g(PuiseuxSeries::zero(Exponent(10)), 4);
        CHECK_FALSE(testing_util::all_zero(wkb_residual(s, F)));
    }

    TEST_CASE("non-Taylor F is rejected")
    {
        CHECK_THROWS_AS(transport_g(mono(1, 1, 2), 3), ValidationError);
        CHECK_THROWS_AS(riccati_p(mono(1, -1), 3), ValidationError);
    }
}
