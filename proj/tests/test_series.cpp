#include <doctest.h>

#include <random>

#include "ewkb/errors.hpp"
#include "ewkb/eps_series.hpp"
#include "ewkb/pade.hpp"
#include "ewkb/poly2.hpp"
#include "ewkb/puiseux.hpp"
#include "ewkb/series_json.hpp"
#include "helpers.hpp"

using namespace ewkb;
using testing_util::mono;
using testing_util::poly;

TEST_SUITE("series")
{
    TEST_CASE("arithmetic examples")
    {
        CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
        auto geo = inverse(poly({1, -1}), Exponent(5));
        CHECK(geo == PuiseuxSeries(poly({1, 1, 1, 1, 1}).terms(), Exponent(5)));
        CHECK(mono(1, 1, 2) * mono(1, 1, 2) == mono(1, 1));
        CHECK_THROWS_AS(divide(poly({1}), PuiseuxSeries::zero(Exponent(3))), DivisionByZeroSeries);
    }

    TEST_CASE("truncation is pessimistic")
    {
        auto a = poly({1, 2, 3}).truncated(Exponent(3));
        auto b = mono(1, -1, 2) + poly({0, 1}).truncated(Exponent(2));
        // a * b: leading exponents 0 and -1/2; known up to min(3 - 1/2, 2 + 0)
        CHECK((a * b).trunc() == Exponent(2));
        CHECK_THROWS_AS(a.coeff(Exponent(3)), ValidationError);
    }

    TEST_CASE("rational powers")
    {
        auto r = series_pow_rational(poly({1, 2}), Rational(1, 2), Exponent(3));
        CHECK(r == PuiseuxSeries(poly({1, 1, Rational(-1, 2)}).terms(), Exponent(3)));
        auto s = series_pow_rational(poly({0, 1, 1}), Rational(2, 3), Exponent(8, 3));
        PuiseuxSeries::Terms t{{Exponent(2, 3), Coefficient(1)}, {Exponent(5, 3), Coefficient(Rational(2, 3))},
                               {Exponent(8, 3) - Exponent(1), Coefficient(0)}};
        CHECK(s.coeff(Exponent(2, 3)) == Coefficient(1));
        CHECK(s.coeff(Exponent(5, 3)) == Coefficient(Rational(2, 3)));
        auto s3 = series_pow_rational(poly({0, 1, 1}), Rational(2, 3), Exponent(11, 3));
        CHECK(s3.coeff(Exponent(8, 3)) == Coefficient(Rational(-1, 9)));
        auto a = poly({3, -1, 4}).truncated(Exponent(6));
        CHECK(series_pow_rational(a, Rational(1)) == a);
        CHECK_THROWS_AS(series_pow_rational(mono(1, 1), Rational(1, 4)), LatticeError);
    }

    TEST_CASE("calculus")
    {
        CHECK(derive(mono(1, 1, 2)) == mono(Rational(1, 2), -1, 2));
        CHECK(antiderive(mono(1, -5, 2)) == mono(Rational(-2, 3), -3, 2));
        CHECK_THROWS_AS(antiderive(mono(1, -1)), LogObstruction);
    }

    TEST_CASE("compositional inverse")
    {
        auto id = series_compose_invert(poly({0, 1}), 6);
        CHECK(id == PuiseuxSeries(poly({0, 1}).terms(), Exponent(7)));
        auto g = series_compose_invert(poly({0, 1, 1}), 4);
        CHECK(g == PuiseuxSeries(poly({0, 1, -1, 2, -5}).terms(), Exponent(5)));
        Rational v2(-3, 5);
        auto gv = series_compose_invert(poly({0, 1, v2}), 3);
        CHECK(gv.coeff(Exponent(2)) == Coefficient(-v2));
        CHECK(gv.coeff(Exponent(3)) == Coefficient(2 * v2 * v2));
        CHECK_THROWS_AS(series_compose_invert(poly({0, 0, 1}), 4), ValidationError);
    }

    TEST_CASE("property: ring axioms on random exact series")
    {
        std::mt19937 rng(1234);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = testing_util::random_half_series(rng, -2, 6, Exponent(4));
            auto b = testing_util::random_half_series(rng, 0, 7, Exponent(9, 2));
            auto c = testing_util::random_half_series(rng, -1, 5, Exponent(3));
            auto l = (a * b) * c, r = a * (b * c);
            CHECK(l.trunc() == r.trunc());
            CHECK((l - r).is_zero());
            auto d1 = a * (b + c), d2 = a * b + a * c;
            CHECK((d1 - d2).truncated(min(d1.trunc(), d2.trunc())).is_zero());
            CHECK(a + b == b + a);
        }
    }

    TEST_CASE("property: power round trip")
    {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 10; ++trial) {
            auto a = testing_util::random_poly(rng, 4);
            if (a.coeff(Exponent(0)).is_zero()) continue;
            a = (a * a).truncated(Exponent(8));  // positive-square leading term keeps the root rational
            auto r = series_pow_rational(a, Rational(1, 2));
            auto back = series_pow_rational(r, Rational(2));
            CHECK((back - a).is_zero());
            CHECK(back.trunc() == a.trunc());
        }
    }

    TEST_CASE("property: compose with the inverse gives the identity")
    {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            auto f = testing_util::random_poly(rng, 4) * poly({0, 1});
            if (f.coeff(Exponent(1)).is_zero()) continue;
            auto g = series_compose_invert(f, 7);
            auto fg = compose(f, g);
            CHECK((fg - poly({0, 1})).is_zero());
            CHECK(fg.trunc() == Exponent(8));
        }
    }

    TEST_CASE("property: derive undoes antiderive")
    {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = testing_util::random_half_series(rng, -7, 9, Exponent(5));
            PuiseuxSeries::Terms t;
            for (const auto& [e, c] : a.terms())
                if (e != Exponent(-1)) t.emplace(e, c);
            PuiseuxSeries b(std::move(t), a.trunc());
            CHECK(derive(antiderive(b)) == b);
        }
    }

    TEST_CASE("eps series inverse and exp")
    {
        EpsSeries a(std::vector<PuiseuxSeries>{poly({1}), mono(1, 1), mono(2, 2)});
        auto inv = eps_inverse(a);
        auto one = a * inv;
        CHECK(one[0] == poly({1}));
        CHECK(one[1].is_zero());
        CHECK(one[2].is_zero());
        EpsSeries b(std::vector<PuiseuxSeries>{PuiseuxSeries::zero(), poly({1}), PuiseuxSeries::zero()});
        auto e = eps_exp(b);
        CHECK(e[2] == poly({Rational(1, 2)}));
    }

    TEST_CASE("json round trip and the bare-list form")
    {
        auto s = (mono(Rational(-5, 48), -3, 2) + poly({Rational(2, 7)})).truncated(Exponent(3, 2));
        CHECK(series_from_json(series_to_json(s)) == s);
        auto f = PuiseuxSeries::monomial(Coefficient(complex_from(0.25, -1.5)), Exponent(1, 2), Exponent(2));
        auto back = series_from_json(series_to_json(f));
        CHECK(back.trunc() == f.trunc());
        CHECK(to_double(abs(back.coeff(Exponent(1, 2)).to_complex() - f.coeff(Exponent(1, 2)).to_complex())) < 1e-25);
        auto v = parse_series_arg(R"([["1",[1,0]],["2",["1/2",0]]])");
        CHECK(v == poly({0, 1, Rational(1, 2)}));
        CHECK_THROWS_AS(parse_series_arg("[[\"1\""), ValidationError);
    }

    TEST_CASE("pade reproduces a rational function")
    {
        // 1/(1 - x/2) has the exact [0/1] approximant
        std::vector<Complex> c;
        for (int k = 0; k < 6; ++k) c.push_back(complex_from(std::pow(0.5, k)));
        Pade p = pade_approximant(c, 1, 1);
        Complex x = complex_from(0.3);
        CHECK(to_double(abs(p(x) - Real(1) / (Real(1) - x.real() / 2))) < 1e-25);
        auto poles = p.poles();
        bool near2 = false;
        for (const auto& r : poles) near2 = near2 || to_double(abs(r - complex_from(2.0))) < 1e-20;
        CHECK(near2);
        // exp(x) [2/2] = (1 + x/2 + x²/12) / (1 - x/2 + x²/12)
        std::vector<Complex> e;
        Real f(1);
        for (int k = 0; k < 5; ++k) {
            e.push_back(Complex(Real(1) / f));
            f *= k + 1;
        }
        Pade pe = pade_approximant(e, 2, 2);
        Real x2("0.5");
        Real expect = (1 + x2 / 2 + x2 * x2 / 12) / (1 - x2 / 2 + x2 * x2 / 12);
        CHECK(to_double(abs(pe(Complex(x2)) - expect)) < 1e-25);
    }

    TEST_CASE("poly2 basics")
    {
        Poly2 p = Poly2::term(3, 1, 2) + Poly2::term(-1, 0, 1);
        CHECK(p.d_z() == Poly2::term(3, 0, 2));
        CHECK(p.d_w() == Poly2::term(6, 1, 1) + Poly2::term(-1, 0, 0));
        CHECK(p.int_w().d_w() == p);
        Poly2 q;
        CHECK(divide_in_z(Poly2::term(1, 2, 0) - Poly2::term(1, 0, 0), Poly2::term(1, 1, 0) - Poly2::term(1, 0, 0), q));
        CHECK(q == Poly2::term(1, 1, 0) + Poly2::term(1, 0, 0));
    }
}
