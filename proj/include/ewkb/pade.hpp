#pragma once

#include <vector>

#include "ewkb/numeric.hpp"

namespace ewkb {

// [L/M] Padé approximant p/q with q(0) = 1.
struct Pade {
    std::vector<Complex> p;  // degree <= L
    std::vector<Complex> q;  // degree <= M

    Complex operator()(const Complex& x) const { return horner(p, x) / horner(q, x); }
    std::vector<Complex> poles() const { return poly_roots(q); }
};

// Needs c.size() >= L + M + 1. Throws NumericError on a singular Toeplitz block.
Pade pade_approximant(const std::vector<Complex>& c, int L, int M);

// Dense complex solve with partial pivoting; throws NumericError when singular.
std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b);

}  // namespace ewkb
