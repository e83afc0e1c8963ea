#pragma once

#include <vector>

#include "ewkb/airy.hpp"
#include "ewkb/eps_series.hpp"
#include "ewkb/puiseux.hpp"

namespace ewkb {

// z(q) = ((3/2)∫_0^q √V)^{2/3} through q^N. Needs V(0) = 0, V'(0) = 1.
PuiseuxSeries liouville_map(const PuiseuxSeries& V, int N);

// F(z) = (z / 2V(q)) {z, q} at q = q(z), through z^N.
PuiseuxSeries induced_potential_F(const PuiseuxSeries& V, int N);

// s(z, ε) = Σ s_k ε^k with s s'² - (ε²/2){s, z} = z + ε²F.
struct ReductionSeries {
    std::vector<PuiseuxSeries> s;  // s_0 = z, each s_k kept through z^N_z
    int N_eps = 0;
    int N_z = 0;
};
ReductionSeries reduce_to_airy(const PuiseuxSeries& F, int N_eps, int N_z);

// s s'² - (ε²/2){s, ·} - rhs, ε-orders 0 .. size-1. Terms beyond each coefficient's
// truncation are unknown.
std::vector<PuiseuxSeries> master_residual(const std::vector<PuiseuxSeries>& s,
                                           const std::vector<PuiseuxSeries>& rhs);
// rhs = z + ε²F
std::vector<PuiseuxSeries> master_residual(const ReductionSeries& red, const PuiseuxSeries& F);

// Φ = a A + b εA' with a, b power series in ε whose coefficients are integer-exponent series in z.
// Φ must share e^{-(2/3)z^{3/2}/ε} z^{-1/4} with A.
struct BasisDecomposition {
    std::vector<PuiseuxSeries> a, b;  // ε^0 .. ε^N
    bool holomorphic = true;          // every a_k, b_k has integer exponents >= 0
    bool reconstructs = true;         // a α + b β equals the input through ε^N
    // max |coefficient| of a_k and b_k, for eyeballing growth in k (not asserted)
    std::vector<double> a_size, b_size;
};
BasisDecomposition airy_basis_decomposition(const WKBSymbol& phi, int N);

// εA' as a symbol with the same exponential and prefactor as A (g_0 = -z^{1/2}).
WKBSymbol airy_derivative_symbol(int N);

struct PipelineResult {
    PuiseuxSeries z_of_q;
    PuiseuxSeries F;
    ReductionSeries canonical;
    std::vector<PuiseuxSeries> s_of_q;  // s_k(z(q))
    // σσ'² - (ε²/2){σ, q} - V for σ = s(z(q), ε), ε-orders 0 .. N
    std::vector<PuiseuxSeries> residual;
};
PipelineResult schrodinger_pipeline(const PuiseuxSeries& V, int N, int N_z = 10);

// Integer exponents >= 0 on every stored term.
bool is_holomorphic(const PuiseuxSeries& s);

}  // namespace ewkb
