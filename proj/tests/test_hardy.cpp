#include <doctest.h>

#include <cmath>
#include <random>

#include "ewkb/airy.hpp"
#include "ewkb/hardy.hpp"
#include "helpers.hpp"

using namespace ewkb;

namespace {

double eval(const std::vector<Rational>& p, double t)
{
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

Poly2 term(const Rational& c, int i, int j) { return Poly2::term(c, i, j); }

}  // namespace

TEST_SUITE("hardy")
{
    TEST_CASE("polynomials")
    {
        CHECK(hardy_polynomial(0) == std::vector<Rational>{1});
        CHECK(hardy_polynomial(2) == std::vector<Rational>{1, 0, 2});
        CHECK(hardy_polynomial(3) == std::vector<Rational>{0, 3, 0, 4});
    }

    TEST_CASE("property: hyperbolic identity")
    {
        std::mt19937 rng(21);
        std::uniform_real_distribution<double> d(-1.5, 1.5);
        for (int trial = 0; trial < 20; ++trial) {
            const double q = d(rng);
            for (int m = 0; m <= 9; ++m) {
                const double expect = m % 2 ? std::sinh(m * q) : std::cosh(m * q);
                CHECK(eval(hardy_polynomial(m), std::sinh(q)) == doctest::Approx(expect).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("S and T for small n")
    {
        auto p1 = hardy_S_T(1);
        CHECK(p1.S == term(Rational(8, 3), 0, 3) + term(-2, 1, 1));
        CHECK(p1.T == term(Rational(1, 2), 0, 0));
        auto p2 = hardy_S_T(2);
        CHECK(p2.S == term(4, 0, 4) + term(-4, 1, 2) + term(Rational(1, 2), 2, 0));
        CHECK(p2.T == term(1, 0, 1));
        auto p3 = hardy_S_T(3);
        CHECK(p3.S == term(Rational(32, 5), 0, 5) + term(-8, 1, 3) + term(2, 2, 1));
        CHECK(p3.T == term(2, 0, 2) + term(Rational(-1, 2), 1, 0));
    }

    TEST_CASE("property: identities and quasi-homogeneity")
    {
        for (int n = 1; n <= 8; ++n) {
            auto id = hardy_identities(hardy_S_T(n));
            CHECK(id.first.is_zero());
            CHECK(id.second.is_zero());
            CHECK(id.quasi_homogeneous);
        }
        auto p = hardy_S_T(2);
        p.T = p.T + term(1, 0, 0);
        CHECK_FALSE(hardy_identities(p).holds());
    }

    TEST_CASE("n = 1 is half the Airy integral")
    {
        const Complex eps = complex_from(0.1);
        for (Complex z : {complex_from(0.5), complex_from(-0.3, 0.4)}) {
            auto phi = hardy_phi_eval(1, z, eps);
            Complex airy = airy_normalization(eps) * airy_contour(z, eps).value;
            CHECK(to_double(abs(phi.value - airy / Real(2)) / abs(airy)) < 1e-15);
        }
    }

    TEST_CASE("reversed orientation flips the sign")
    {
        ContourSpec rev;
        rev.reversed = true;
        auto a = hardy_phi_eval(2, complex_from(0.4), complex_from(0.1));
        auto b = hardy_phi_eval(2, complex_from(0.4), complex_from(0.1), rev);
        CHECK(to_double(abs(a.value + b.value) / abs(a.value)) < 1e-20);
    }

    TEST_CASE("differential equation")
    {
        const Complex eps = complex_from(0.1);
        for (int n : {1, 2, 3}) {
            auto r = hardy_ode_residual(n, complex_from(0.4, 0.1), eps);
            CHECK(r.relative < 1e-10);
        }
        // the first-power form does not hold
        CHECK(hardy_ode_residual(2, complex_from(0.4, 0.1), eps, 1).relative > 0.1);
    }
}
