#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ewkb/numeric.hpp"

namespace ewkb {

struct LaplaceResult {
    Complex value;
    double est_error = 0;
    int nodes_used = 0;
};

// Integration path in the ẑ-plane. The default is the steepest-descent path through the
// saddles; a polyline gives an explicit truncated path.
struct ContourSpec {
    enum class Kind { steepest_descent, polyline };
    Kind kind = Kind::steepest_descent;
    std::vector<Complex> path;   // polyline nodes, in order
    int nodes_per_segment = 24;  // Gauss-Legendre panel size
    double tolerance = 0;        // relative; 0 picks 10^{-(digits-8)}
    bool reversed = false;

    static ContourSpec polyline(std::vector<Complex> nodes);
    double tol() const;
};

using Integrand = std::function<Complex(const Complex&)>;

// Adaptive Gauss-Legendre along a polyline; each segment starts as `pieces` panels.
LaplaceResult integrate_polyline(const Integrand& f, const std::vector<Complex>& path, int nodes,
                                 double tol, int pieces = 16);

// Truncated polyline through the origin along two valleys of e^{-c ẑ^d / ε} (c > 0):
// from valley `from` to valley `to`, valley k centred at (arg ε + 2πk)/d (+π/d if c < 0).
std::vector<Complex> valley_polyline(int degree, bool negative_lead, const Complex& eps, int from,
                                     int to, const Real& radius);

// ∫ e^{-S(z,ẑ)/ε} amp(ẑ) dẑ with S = zẑ - ẑ³/3, from the valley at arg ẑ = -π/3 to the
// valley at +π/3 (directions for ε > 0; they turn by arg(ε)/3 otherwise).
// `inside` bounds the amplitude's domain: the path is cut where it returns false.
struct CubicContourInfo {
    std::vector<int> saddle_weights;  // coefficients of the paths through +√z and -√z
    double rotation = 0;              // geometry rotation used to step off a Stokes line
    double tail = 0;                  // truncation estimate from `inside`
};
LaplaceResult cubic_contour_integral(const Complex& z, const Complex& eps, const Integrand& amp,
                                     const ContourSpec& spec,
                                     const std::function<bool(const Complex&)>& inside = {},
                                     CubicContourInfo* info = nullptr);

// (1/ε) ∫_0^{∞·e^{iθ}} e^{-ξ/ε} B(ξ) dξ. Gauss-Laguerre with node doubling; falls back to
// Gauss-Legendre panels when doubling stalls (poles close to the ray).
LaplaceResult laplace_ray(const Integrand& B, const Complex& eps, const Real& theta, double tol);

}  // namespace ewkb
