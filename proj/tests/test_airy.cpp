#include <doctest.h>

#include "ewkb/airy.hpp"
#include "ewkb/errors.hpp"
#include "helpers.hpp"
#include "oracles/airy_maclaurin.hpp"

using namespace ewkb;

namespace {

double rel(const Complex& a, const Complex& b) { return to_double(abs(a - b) / abs(b)); }

Complex polar_c(double r, double t) { return complex_from(r * std::cos(t), r * std::sin(t)); }

}  // namespace

TEST_SUITE("airy")
{
    TEST_CASE("symbol coefficients")
    {
        auto A = airy_symbol(6);
        CHECK(A.order() == 6);
        CHECK(A.g[0] == PuiseuxSeries::constant(Coefficient(1)));
        CHECK(A.g[1].coeff(Exponent(-3, 2)) == Coefficient(Rational(-5, 48)));
        CHECK(A.g[2].coeff(Exponent(-3)) == Coefficient(Rational(385, 4608)));
        for (int n = 0; n <= 6; ++n) {
            CHECK(A.g[n].terms().size() == 1);
            Real exact = real_from(A.g[n].coeff(Exponent(-3 * n, 2)).exact().re);
            CHECK(to_double(abs(exact - oracle::airy_alpha_gamma(n))) < 1e-25);
        }
    }

    TEST_CASE("flipped symbol and Borel minor")
    {
        auto A = airy_symbol(5);
        auto B = A.flipped();
        CHECK(B.sign == -1);
        for (int n = 0; n <= 5; ++n) CHECK(B.g[n] == (n % 2 ? -A.g[n] : A.g[n]));
        auto m = borel_minor(A);
        REQUIRE(m.coeffs.size() == 5);
        Rational fact(1);
        for (int n = 1; n <= 5; ++n) {
            if (n > 1) fact *= n - 1;
            CHECK(m.coeffs[n - 1] == A.g[n].scaled(Coefficient(Rational(1) / fact)));
        }
    }

    TEST_CASE("contour integral against the Maclaurin oracle")
    {
        PrecisionScope ps(50);
        const Complex eps = complex_from(0.1);
        const double pi = M_PI;
        for (Complex z : {complex_from(1.0), polar_c(1, pi / 3), complex_from(-1.0), complex_from(-0.5, -0.7),
                          polar_c(0.8, 2 * pi / 3), complex_from(0.3, 0.2)}) {
            auto c = airy_contour(z, eps);
            CHECK(rel(c.value, oracle::airy_contour_reference(z, eps)) < 1e-10);
        }
        // complex ε
        const Complex ec = polar_c(0.1, 0.4);
        auto c = airy_contour(complex_from(0.7, 0.1), ec);
        CHECK(rel(c.value, oracle::airy_contour_reference(complex_from(0.7, 0.1), ec)) < 1e-10);
    }

    TEST_CASE("polyline and steepest descent agree")
    {
        const Complex eps = complex_from(0.05);
        for (Complex z : {polar_c(1, M_PI / 3), complex_from(-1.0)}) {
            auto a = airy_contour(z, eps);
            auto b = airy_contour(z, eps, ContourSpec::polyline({}));
            CHECK(rel(b.value, a.value) < 1e-15);
        }
    }

    TEST_CASE("property: conjugate symmetry and reality on L0")
    {
        const Complex eps = complex_from(0.08);
        for (Complex z : {complex_from(0.4, 0.3), complex_from(-0.9, 0.2), complex_from(0.1, -1.1)}) {
            auto a = airy_contour(z, eps).value;
            auto b = airy_contour(conj(z), eps).value;
            CHECK(rel(conj(b), a) < 1e-20);
        }
        for (double x : {0.2, 1.0, 1.7}) {
            auto v = airy_contour(complex_from(x), eps).value;
            CHECK(to_double(abs(v.imag())) < 1e-20 * to_double(abs(v.real())));
            CHECK(v.real() > 0);
        }
    }

    TEST_CASE("Borel-Pade-Laplace sum matches the contour integral")
    {
        for (double e : {0.1, 0.05}) {
            const Complex z = complex_from(1.0), eps = complex_from(e);
            auto c = airy_contour(z, eps);
            auto b = airy_borel_sum(z, eps, 24, 12, 12);
            CHECK(rel(b.value, c.value) < 1e-18);
        }
        auto c = airy_contour(polar_c(1, 0.5), complex_from(0.05));
        auto b = airy_borel_sum(polar_c(1, 0.5), complex_from(0.05), 24, 12, 12);
        CHECK(rel(b.value, c.value) < 1e-15);
    }

    TEST_CASE("Stokes jump on L1")
    {
        const Complex eps = complex_from(0.05);
        auto j = stokes_jump(polar_c(0.8, 2 * M_PI / 3), eps, 24);
        CHECK(j.rel_error < 1e-6);
        CHECK(to_double(abs(j.jump)) > 0);
        // off the line the lateral sums coincide
        auto off = stokes_jump(polar_c(0.8, M_PI / 3), eps, 24);
        CHECK(to_double(abs(off.jump) / abs(off.reference)) < 1e-20);
    }

    TEST_CASE("input validation")
    {
        CHECK_THROWS_AS(airy_symbol(-1), ValidationError);
        CHECK_THROWS_AS(airy_contour(complex_from(1.0), complex_from(0.0)), ValidationError);
    }
}
