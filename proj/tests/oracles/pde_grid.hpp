#pragma once

// Direct solve of the singular PDE on the monomial grid x^n z^m:
// (n-1)(n+4m) c[n][m] = 2(n-2)(m+1) c[n-1][m+1] - (m+1)(m+2) c[n-2][m+2] + Σ_j F_j c[n-2][m-j].
// Plain GMP rationals, no series types.

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

inline Grid pde_grid(const std::vector<mpq_class>& F, const std::vector<mpq_class>& h, int Nx, int Nz)
{
    const int M = Nz + 2 * Nx + 2;  // room for the m+2 shifts
    Grid c(Nx + 1, std::vector<mpq_class>(M + 1, 0));
    c[0][0] = 1;
    if (Nx >= 1)
        for (int m = 0; m < static_cast<int>(h.size()) && m <= M; ++m) c[1][m] = h[m];
    for (int n = 2; n <= Nx; ++n)
        for (int m = 0; m <= M - 2 * (n - 1); ++m) {
            mpq_class r = 0;
            if (m + 1 <= M) r += mpq_class(2 * (n - 2) * (m + 1)) * c[n - 1][m + 1];
            if (m + 2 <= M) r -= mpq_class((m + 1) * (m + 2)) * c[n - 2][m + 2];
            for (int j = 0; j < static_cast<int>(F.size()) && j <= m; ++j) r += F[j] * c[n - 2][m - j];
            c[n][m] = r / mpq_class((n - 1) * (n + 4 * m));
            c[n][m].canonicalize();
        }
    return c;
}

}  // namespace oracle
