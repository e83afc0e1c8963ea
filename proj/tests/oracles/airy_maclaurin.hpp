#pragma once

// Test-only reference values that share no code with the library's evaluation paths.

#include <mpfr.h>

#include "ewkb/numeric.hpp"

namespace oracle {

using ewkb::Complex;
using ewkb::Real;

inline Real gamma_fn(const Real& x)
{
    Real r;
    mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

// Ai(x) = c1 f(x) - c2 g(x) with the two Maclaurin solutions of y'' = xy.
// Cancels badly for large |x|; callers raise the precision first.
inline Complex airy_ai(const Complex& x)
{
    const Real third = Real(1) / 3;
    const Real c1 = pow(Real(3), -2 * third) / gamma_fn(2 * third);
    const Real c2 = pow(Real(3), -third) / gamma_fn(third);
    const Complex x3 = x * x * x;
    Complex f(1), g = x, tf(1), tg = x;
    const Real eps = pow(Real(10), -static_cast<long>(ewkb::precision()) - 5);
    for (long k = 1; k < 100000; ++k) {
        tf *= x3 / Real((3 * k - 1) * (3 * k));
        tg *= x3 / Real((3 * k) * (3 * k + 1));
        f += tf;
        g += tg;
        if (abs(tf) < eps * abs(f) && abs(tg) < eps * abs(g)) break;
    }
    return c1 * f - c2 * g;
}

// 2√π ε^{-1/6} Ai(z ε^{-2/3}), principal powers
inline Complex airy_contour_reference(const Complex& z, const Complex& eps)
{
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    Complex e16 = exp(log(eps) / Real(6));
    Complex x = z / (e16 * e16 * e16 * e16);
    return Real(2) * sqrt(pi) / e16 * airy_ai(x);
}

// α_n of the Airy symbol from Γ: (-3/4)^n Γ(n+1/6)Γ(n+5/6) / (n! Γ(1/6)Γ(5/6)), z^{-3n/2} stripped
inline Real airy_alpha_gamma(int n)
{
    const Real s1 = Real(1) / 6, s5 = Real(5) / 6;
    Real v = gamma_fn(n + s1) * gamma_fn(n + s5) / (gamma_fn(s1) * gamma_fn(s5) * gamma_fn(Real(n + 1)));
    return pow(Real(-3) / 4, n) * v;
}

}  // namespace oracle
