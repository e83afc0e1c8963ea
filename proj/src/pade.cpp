#include "ewkb/pade.hpp"

#include <string>
#include <utility>

#include "ewkb/errors.hpp"

namespace ewkb {

std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b)
{
    const std::size_t n = b.size();
    Real scale = 0;
    for (const auto& row : a)
        for (const auto& v : row)
            if (abs(v) > scale) scale = abs(v);
    const Real tiny = scale * eps_real();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        if (abs(a[piv][col]) <= tiny) throw NumericError("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            Complex f = a[r][col] / a[col][col];
            if (f == Complex(0, 0)) continue;
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

Pade pade_approximant(const std::vector<Complex>& c, int L, int M)
{
    if (L < 0 || M < 0) throw ValidationError("Padé degrees must be nonnegative");
    if (static_cast<int>(c.size()) < L + M + 1)
        throw ValidationError("Padé [" + std::to_string(L) + "/" + std::to_string(M) + "] needs " +
                              std::to_string(L + M + 1) + " coefficients");
    auto coef = [&](int k) { return k < 0 ? Complex(0, 0) : c[k]; };
    Pade r;
    r.q.assign(M + 1, Complex(0, 0));
    r.q[0] = Complex(1, 0);
    if (M > 0) {
        // sum_{j=1}^M q_j c_{k-j} = -c_k,  k = L+1..L+M
        std::vector<std::vector<Complex>> a(M, std::vector<Complex>(M));
        std::vector<Complex> b(M);
        for (int i = 0; i < M; ++i) {
            int k = L + 1 + i;
            for (int j = 1; j <= M; ++j) a[i][j - 1] = coef(k - j);
            b[i] = -coef(k);
        }
        std::vector<Complex> q = solve_linear(std::move(a), std::move(b));
        for (int j = 1; j <= M; ++j) r.q[j] = q[j - 1];
    }
    r.p.assign(L + 1, Complex(0, 0));
    for (int k = 0; k <= L; ++k)
        for (int j = 0; j <= std::min(k, M); ++j) r.p[k] += r.q[j] * coef(k - j);
    return r;
}

}  // namespace ewkb
