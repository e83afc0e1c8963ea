#pragma once

#include <vector>

#include "ewkb/contour.hpp"
#include "ewkb/poly2.hpp"
#include "ewkb/rational.hpp"

namespace ewkb {

// P_0 = 1, P_1 = t, P_{m+1} = P_{m-1} + 2t P_m: cosh(mq) = P_m(sinh q) for even m,
// sinh(mq) = P_m(sinh q) for odd m. Coefficients in increasing powers of t.
std::vector<Rational> hardy_polynomial(int m);

// Q_m(z, ẑ) = z^{m/2} P_m(ẑ/√z); Poly2 keys are (power of z, power of ẑ).
Poly2 hardy_Q(int m);

// S_n = (2/(n+2)) Q_{n+2}(-z, ẑ) and T_n with (∂_z S)² = T ∂_ẑS + zⁿ, ∂_z²S = ∂_ẑT.
struct HardyPair {
    int n = 0;
    Poly2 S, T;
};
HardyPair hardy_S_T(int n);

struct HardyIdentities {
    Poly2 first;   // (∂_z S)² - T ∂_ẑS - zⁿ
    Poly2 second;  // ∂_z²S - ∂_ẑT
    bool quasi_homogeneous = true;  // S(λ²z, λẑ) = λ^{n+2} S(z, ẑ)
    bool holds() const { return first.is_zero() && second.is_zero() && quasi_homogeneous; }
};
HardyIdentities hardy_identities(const HardyPair& p);

// Φ_n(z, ε) = ∫ e^{-S_n(z,ẑ)/ε} dẑ. Default path: polyline from the valley at -2π/(n+2)
// through 0 to the valley at +2π/(n+2) (for arg ε = 0).
LaplaceResult hardy_phi_eval(int n, const Complex& z, const Complex& eps, const ContourSpec& spec = {});

struct HardyOdeCheck {
    Complex phi;
    Complex phi_zz;      // five-point central difference
    Complex residual;    // ε^p Φ'' - zⁿ Φ
    double relative = 0; // |residual| / max(|ε^p Φ''|, |zⁿ Φ|)
};
// eps_power = 2 is the equation Φ_n satisfies; eps_power = 1 is the first-power variant, which does not hold.
HardyOdeCheck hardy_ode_residual(int n, const Complex& z, const Complex& eps, int eps_power = 2,
                                 double step = 1e-4, const ContourSpec& spec = {});

}  // namespace ewkb
