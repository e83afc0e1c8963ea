#pragma once

#include <vector>

#include "ewkb/contour.hpp"
#include "ewkb/eps_series.hpp"
#include "ewkb/pade.hpp"

namespace ewkb {

// e^{-σ(2/3)z^{3/2}/ε} z^{p} Σ_n g_n(z) ε^n, branches principal (positive on z > 0).
struct WKBSymbol {
    int sign = 1;
    Rational prefactor_exp{-1, 4};
    EpsSeries g;  // g[0] .. g[N]

    int order() const { return g.order() - 1; }
    // ε -> -ε: the other basis element.
    WKBSymbol flipped() const;
    Complex prefactor(const Complex& z, const Complex& eps) const;
};

// coeffs[n-1] = g_n / (n-1)!, the coefficient of ξ^{n-1}.
struct BorelMinor {
    std::vector<PuiseuxSeries> coeffs;
};
BorelMinor borel_minor(const WKBSymbol& s);

// A_bkw through ε^N, exact.
WKBSymbol airy_symbol(int N);

// i√(πε): the factor between ∫e^{-S/ε}dẑ over the Airy contour and 2√π ε^{-1/6} Ai(zε^{-2/3}).
Complex airy_normalization(const Complex& eps);

// 2√π ε^{-1/6} Ai(z ε^{-2/3}) from the contour integral ∫ e^{-(zẑ-ẑ³/3)/ε} dẑ.
LaplaceResult airy_contour(const Complex& z, const Complex& eps, const ContourSpec& spec = {});

struct BorelOptions {
    int L = -1, M = -1;     // Padé degrees; -1 picks ⌊N/2⌋
    double theta = 0;       // ray direction in the ξ-plane
    double tolerance = 0;   // quadrature; 0 picks 10^{-(digits-8)}
    double pole_tol = 1e-8; // relative distance below which a Padé pole counts as on the ray
};

// Borel-Padé-Laplace sum of `sym` at fixed (z, ε) using g_0..g_N, prefactor included.
LaplaceResult borel_sum(const WKBSymbol& sym, const Complex& z, const Complex& eps, int N,
                        const BorelOptions& opt = {});
LaplaceResult airy_borel_sum(const Complex& z, const Complex& eps, int N, int L, int M,
                             double theta = 0);

struct StokesJump {
    Complex below, above;  // lateral sums with the ray turned by -δ and +δ
    Complex jump;          // below - above
    Complex predicted;     // -i times the sum of the flipped symbol on the plain ray
    Complex reference;     // sum of `sym` on the plain ray when it can be computed, else `below`
    double rel_error = 0;  // |jump - predicted| / |predicted|
    double est_error = 0;
};
// Jump of sym's Borel sum across the ray direction `theta`.
StokesJump stokes_jump(const WKBSymbol& sym, const Complex& z, const Complex& eps, int N,
                       double delta = 0.17453292519943295, const BorelOptions& opt = {});
// Airy case: A⁺ at z (on L₁ for a nonzero jump).
StokesJump stokes_jump(const Complex& z, const Complex& eps, int N);

}  // namespace ewkb
