#pragma once

#include <vector>

#include "ewkb/airy.hpp"

namespace ewkb {

// Elementary formal solution of Φ'' - (z/ε²)Φ = FΦ: g_0 = 1 and zero integration constants.
// sign = -1 gives the ε -> -ε partner.
WKBSymbol transport_g(const PuiseuxSeries& F, int N, int sign = 1);

struct RiccatiExpansion {
    std::vector<PuiseuxSeries> p;  // p_0 .. p_N
};
// P² - εP' = z + ε²F, p_0 = z^{1/2}.
RiccatiExpansion riccati_p(const PuiseuxSeries& F, int N);

struct ConsistencyReport {
    int N = 0;
    // p_{2k+1} against half the coefficients of P_even'/P_even
    std::vector<PuiseuxSeries> odd_residual;
    // C(ε) fixed from the z^0 terms, then g_k - [C·B]_k
    std::vector<Coefficient> C;
    std::vector<PuiseuxSeries> symbol_residual;
    double max_residual = 0;
    bool exact_zero = true;
};
ConsistencyReport symbol_consistency(const PuiseuxSeries& F, int N);

// z^{1/4} e^{σ(2/3)z^{3/2}/ε} (Φ'' - (z/ε²)Φ - FΦ) for the given symbol, coefficient of ε^k
// for k = -1 .. order-1.
std::vector<PuiseuxSeries> wkb_residual(const WKBSymbol& s, const PuiseuxSeries& F);

}  // namespace ewkb
