#pragma once

#include <string>
#include <vector>

#include "ewkb/contour.hpp"
#include "ewkb/poly2.hpp"
#include "ewkb/puiseux.hpp"

namespace ewkb {

// ψ(z, x) = Σ_n a_n(z) x^n, each a_n kept through z^Nz.
struct BivariateSeries {
    std::vector<PuiseuxSeries> a;
    int Nx = 0;
    int Nz = 0;
};

// x²ψ_xx + (4xz - 2x²)ψ_xz + x²ψ_zz + (2x - 4z)ψ_z - x²Fψ = 0, a_0 = 1, a_1 = h.
// For n >= 2: n a_n + 4z a_n' = G/(n-1), G = -a_{n-2}'' + 2(n-2) a_{n-1}' + F a_{n-2}.
// This route applies ∫_0^1 u^{n-1} G(u⁴z) du as z^m -> z^m/(n+4m).
BivariateSeries pde_taylor(const PuiseuxSeries& F, const PuiseuxSeries& h, int Nx, int Nz);
// Same recursion solved as the first-order ODE 4z a' + n a = G/(n-1) by undetermined coefficients.
BivariateSeries pde_taylor_direct(const PuiseuxSeries& F, const PuiseuxSeries& h, int Nx, int Nz);

struct PdeResidual {
    std::vector<PuiseuxSeries> coeffs;  // coefficient of x^n, n = 0..Nx
    double max_abs = 0;
    int worst_n = -1;
    bool exact_zero = true;
};
PdeResidual pde_residual(const BivariateSeries& psi, const PuiseuxSeries& F);

struct RadiusReport {
    double r0 = 0, r1 = 0, d0 = 0, R = 0;
    double r_prime = 0;
    double M = 0;
};
RadiusReport convergence_radius(double r0, double r1, double R, double F_norm, double h_norm);

// M (e|x|(α_k|x| + 3r_1) / (r_0 d_0 (1-s)))^k with α_k = 1 + r_0 d_0 (1-s) ‖F‖ / k.
double iteration_bound(int k, double x_abs, double s, double M, double F_norm, double r0,
                       double d0, double r1);

// max |f| on the circle |z| = radius (maximum modulus), by sampling.
double sup_norm(const PuiseuxSeries& f, double radius, int samples = 256);
// max |p(z, x)| over |z| = rz, |x| = rx (z is the first variable of Poly2).
double sup_norm(const Poly2& p, double rz, double rx, int samples = 64);

// Picard differences δ_0 .. δ_kmax of the integral equation for φ = (ψ - 1)/x:
// θ_0 = h + ∫_0^1du ∫_0^{ux} F(zu⁴) dt,
// θ_{k+1} = θ_0 + 2x ∫_0^1 u ∂_zθ_k(zu⁴, ux) du - ∫_0^1du ∫_0^{ux} L(u,t)θ_k(t) dt.
// Polynomial F and h only (exact). Poly2 keys are (power of z, power of x).
std::vector<Poly2> picard_deltas(const PuiseuxSeries& F, const PuiseuxSeries& h, int kmax);

struct PsiValue {
    Complex value;
    double tail = 0;   // estimate of the dropped terms
    double rho = 0;    // root-test estimate of |a_n x^n|^{1/n} over the upper half of the orders
    bool divergent = false;
};

// Evaluates ψ(z, ·) at a fixed z with the a_n(z) precomputed.
class PsiEvaluator {
public:
    PsiEvaluator(const BivariateSeries& psi, const Complex& z);
    PsiValue operator()(const Complex& x) const;
    // 1 / limsup |a_n(z)|^{1/n} over the retained orders (infinite when the tail vanishes).
    double radius_x() const { return radius_; }

private:
    std::vector<Complex> c_;
    double radius_;
};

PsiValue psi_eval(const BivariateSeries& psi, const Complex& z, const Complex& x);

struct ConfluentOptions {
    int Nx = 30;
    int Nz = 30;
    double domain_fraction = 0.8;  // cut the path at |x| = fraction × estimated radius in x
};

// ∫ e^{-S(z,ẑ)/ε} ψ(z, z - ẑ²) dẑ over the Airy contour.
LaplaceResult confluent_eval(const PuiseuxSeries& F, const PuiseuxSeries& h, const Complex& z,
                             const Complex& eps, const ContourSpec& spec = {},
                             const ConfluentOptions& opt = {});
LaplaceResult confluent_eval(const BivariateSeries& psi, const Complex& z, const Complex& eps,
                             const ContourSpec& spec = {}, double domain_fraction = 0.8);

struct DecompositionRow {
    Complex eps;
    Complex confluent;
    Complex one_term;  // i√(πε) s(Φ⁺)
    Complex two_term;  // one_term ∓ √(πε) s(Φ⁻) in S₂; equals one_term elsewhere
    double rel_one = 0;
    double rel_two = 0;
};
struct DecompositionReport {
    std::string sector;
    std::vector<DecompositionRow> rows;
};
struct DecompositionOptions {
    int N = 24;                  // WKB orders for the Borel sums
    ConfluentOptions confluent;
};
// `sector` is "S1", "S2" or "S-1"; z must lie in it.
DecompositionReport local_decomposition(const PuiseuxSeries& F, const PuiseuxSeries& h,
                                        const Complex& z, const std::vector<Complex>& eps_grid,
                                        const std::string& sector,
                                        const DecompositionOptions& opt = {});

}  // namespace ewkb
