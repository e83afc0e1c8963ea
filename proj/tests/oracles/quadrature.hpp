#pragma once

// Composite Gauss-Legendre on straight segments, nodes by Newton on P_n.

#include <mpfr.h>

#include <functional>
#include <vector>

#include "ewkb/numeric.hpp"

namespace oracle {

using ewkb::Complex;
using ewkb::Real;

struct GL {
    std::vector<Real> x, w;
};

inline GL gauss_legendre_nodes(int n)
{
    GL r;
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    const Real tol = pow(Real(10), -static_cast<long>(ewkb::precision()) + 2);
    for (int i = 1; i <= n; ++i) {
        Real x = cos(pi * (i - Real(0.25)) / (n + Real(0.5)));
        Real dp;
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        r.x.push_back(x);
        r.w.push_back(2 / ((1 - x * x) * dp * dp));
    }
    return r;
}

// ∫ f along a -> b split into `pieces` equal panels
inline Complex segment_integral(const std::function<Complex(const Complex&)>& f, const Complex& a, const Complex& b,
                                int pieces, const GL& rule)
{
    Complex acc(0, 0);
    const Complex h = (b - a) / Real(pieces);
    for (int p = 0; p < pieces; ++p) {
        Complex mid = a + h * (Real(p) + Real(0.5));
        for (std::size_t i = 0; i < rule.x.size(); ++i) acc += rule.w[i] * f(mid + h * rule.x[i] / Real(2));
    }
    return acc * h / Real(2);
}

}  // namespace oracle
