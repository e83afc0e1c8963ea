#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ewkb/puiseux.hpp"

namespace ewkb {

// Sector convention for direction α: with rays L₀, L₁, L₋₁ at arg z = 2α/3, 2α/3 + 2π/3,
// 2α/3 - 2π/3, S₁ lies between L₀ and L₁ (counterclockwise), S₂ between L₁ and L₋₁,
// S₋₁ between L₋₁ and L₀.
enum class Sector { S1, S2, Sm1, L0, L1, Lm1 };

std::string sector_name(Sector s);
bool is_line(Sector s);
const char* sector_convention();

struct StokesLine {
    int branch = 0;
    std::vector<std::complex<double>> nodes;
    bool escaped = false;  // stopped at the region boundary
};

struct StokesDiagram {
    double alpha = 0;
    std::vector<std::complex<double>> turning_points;
    std::vector<StokesLine> lines;
    std::map<std::string, std::string> sector_labels;
    double max_node_residual = 0;  // max |Im e^{-iα} W(q)| over the nodes
};

// Rays arg z = 2α/3 + 2πk/3, k = 0, 1, -1, written out to |z| = extent.
StokesDiagram canonical_stokes_lines(double alpha, double extent = 2.0, int nodes = 21);
// Ray angles normalized to (-π, π].
std::vector<double> canonical_ray_angles(double alpha);

// Throws ValidationError at z = 0; ON_LINE within `tol` radians.
Sector classify_sector(const std::complex<double>& z, double alpha, double tol = 1e-9);

struct TraceOptions {
    double step = 0.01;
    double extent = 3.0;          // stop when |q| exceeds this
    double region_radius = 0;     // analyticity region |q| < region_radius; 0 means no limit
    int max_steps = 100000;
    double tol = 1e-12;           // corrector tolerance on Im e^{-iα} W
    bool throw_on_escape = false; // TraceEscape instead of flagging the line
};

// Curves Im e^{-iα} ∫_0^q √V = 0 leaving the simple turning point q = 0.
StokesDiagram potential_stokes_curves(const PuiseuxSeries& V, double alpha,
                                      const TraceOptions& opt = {});

// Im e^{-iα} ∫_0^q √V dt along the straight segment, by substitution t = q s² and
// Gauss-Legendre; √V continued from √t near 0. Independent of the tracer.
double stokes_condition(const PuiseuxSeries& V, const std::complex<double>& q, double alpha);

}  // namespace ewkb
