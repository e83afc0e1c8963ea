#include "ewkb/hardy.hpp"

#include "ewkb/errors.hpp"

namespace ewkb {

std::vector<Rational> hardy_polynomial(int m)
{
    if (m < 0) throw ValidationError("hardy_polynomial needs m >= 0");
    std::vector<Rational> prev{Rational(1)}, cur{Rational(0), Rational(1)};
    if (m == 0) return prev;
    for (int k = 1; k < m; ++k) {
        std::vector<Rational> next(cur.size() + 1, Rational(0));
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] += prev[i];
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly2 hardy_Q(int m)
{
    // P_m has the parity of m, so z^{(m-k)/2} ẑ^k is a monomial
    auto P = hardy_polynomial(m);
    Poly2::Terms t;
    for (int k = 0; k <= m; ++k)
        if (P[k] != 0) t[{(m - k) / 2, k}] = P[k];
    return Poly2(std::move(t));
}

HardyPair hardy_S_T(int n)
{
    if (n < 1) throw ValidationError("hardy_S_T needs n >= 1");
    HardyPair p;
    p.n = n;
    Poly2 S = hardy_Q(n + 2).scale_z(Rational(-1));
    p.S = (Rational(2) / (n + 2)) * S;
    // T = ∫_0^ẑ ∂_z²S dẑ + c(z), c fixed by the first identity on the top ẑ-slice
    Poly2 Sz = p.S.d_z(), Sw = p.S.d_w();
    Poly2 T0 = Sz.d_z().int_w();
    Poly2 R = Sz * Sz - T0 * Sw - Poly2::term(Rational(1), n, 0);
    const int d = Sw.degree_w();
    Poly2 c;
    if (!divide_in_z(R.w_slice(d), Sw.w_slice(d), c))
        throw NumericError("Hardy pair: integration constant is not polynomial in z");
    p.T = T0 + c;
    if (!hardy_identities(p).holds()) throw NumericError("Hardy identities fail for n = " + std::to_string(n));
    return p;
}

HardyIdentities hardy_identities(const HardyPair& p)
{
    HardyIdentities id;
    Poly2 Sz = p.S.d_z();
    id.first = Sz * Sz - p.T * p.S.d_w() - Poly2::term(Rational(1), p.n, 0);
    id.second = Sz.d_z() - p.T.d_w();
    for (const auto& [k, c] : p.S.terms())
        if (2 * k.first + k.second != p.n + 2) id.quasi_homogeneous = false;
    return id;
}

namespace {

// S_n(z, ·) as coefficients in ẑ
std::vector<Complex> slices_at(const Poly2& S, const Complex& z)
{
    std::vector<Complex> c(S.degree_w() + 1, Complex(0, 0));
    for (const auto& [k, v] : S.terms()) c[k.second] += real_from(v) * pow(z, k.first);
    return c;
}

}  // namespace

LaplaceResult hardy_phi_eval(int n, const Complex& z, const Complex& eps, const ContourSpec& spec)
{
    if (!(eps.real() > 0)) throw ValidationError("hardy_phi_eval needs Re(eps) > 0");
    HardyPair p = hardy_S_T(n);
    const auto c = slices_at(p.S, z);
    const double tol = spec.tol();
    std::vector<Complex> path = spec.path;
    if (spec.kind != ContourSpec::Kind::polyline || path.empty()) {
        // |lead| R^{n+2} covers ln(1/tol) + 30 e-folds, plus the scale √|z| of the lower terms
        Real lead = abs(c.back());
        Real R = pow(abs(eps) * (-log(Real(tol)) + 30) / lead, Real(1) / (n + 2)) + 2 * sqrt(abs(z)) + 1;
        path = valley_polyline(n + 2, false, eps, -1, 1, R);
    }
    auto f = [&](const Complex& w) {
        Complex s(0, 0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * w + *it;
        return exp(-s / eps);
    };
    LaplaceResult r = integrate_polyline(f, path, spec.nodes_per_segment, tol);
    if (spec.reversed) r.value = -r.value;
    return r;
}

HardyOdeCheck hardy_ode_residual(int n, const Complex& z, const Complex& eps, int eps_power, double step,
                                 const ContourSpec& spec)
{
    if (eps_power != 1 && eps_power != 2) throw ValidationError("eps_power must be 1 or 2");
    if (!(step > 0)) throw ValidationError("stencil step must be positive");
    const Real h(step);
    Complex v[5];
    for (int k = -2; k <= 2; ++k) v[k + 2] = hardy_phi_eval(n, z + Complex(h * k, 0), eps, spec).value;
    HardyOdeCheck out;
    out.phi = v[2];
    out.phi_zz = (-v[0] + Real(16) * v[1] - Real(30) * v[2] + Real(16) * v[3] - v[4]) / (Real(12) * h * h);
    Complex lhs = (eps_power == 2 ? eps * eps : eps) * out.phi_zz;
    Complex rhs = pow(z, n) * out.phi;
    out.residual = lhs - rhs;
    Real scale = std::max(abs(lhs), abs(rhs));
    out.relative = scale > 0 ? to_double(abs(out.residual) / scale) : 0.0;
    return out;
}

}  // namespace ewkb
