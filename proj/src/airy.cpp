#include "ewkb/airy.hpp"

#include <cmath>

#include "ewkb/errors.hpp"

namespace ewkb {

WKBSymbol WKBSymbol::flipped() const
{
    WKBSymbol r = *this;
    r.sign = -sign;
    r.g = g.flipped();
    return r;
}

Complex WKBSymbol::prefactor(const Complex& z, const Complex& eps) const
{
    Complex act = Real(-sign) * Real(2) / Real(3) * cpow(z, Rational(3, 2)) / eps;
    return exp(act) * cpow(z, prefactor_exp);
}

BorelMinor borel_minor(const WKBSymbol& s)
{
    BorelMinor m;
    Rational fact = 1;
    for (int n = 1; n <= s.order(); ++n) {
        if (n > 1) fact *= n - 1;
        m.coeffs.push_back(s.g[n].scaled(Coefficient(Rational(1) / fact)));
    }
    return m;
}

WKBSymbol airy_symbol(int N)
{
    if (N < 0) throw ValidationError("airy_symbol needs N >= 0");
    // α_n = α_{n-1} (-3/4)(n - 5/6)(n - 1/6)/n, so the Γ quotient never leaves Q
    std::vector<PuiseuxSeries> g;
    Rational a = 1;
    g.push_back(PuiseuxSeries::constant(Coefficient(1)));
    for (int n = 1; n <= N; ++n) {
        a *= Rational(-3, 4) * (Rational(n) - Rational(5, 6)) * (Rational(n) - Rational(1, 6)) / n;
        g.push_back(PuiseuxSeries::monomial(Coefficient(a), Exponent(-3 * n, 2)));
    }
    WKBSymbol s;
    s.g = EpsSeries(std::move(g));
    return s;
}

Complex airy_normalization(const Complex& eps)
{
    return Complex(0, 1) * sqrt(pi_real()) * csqrt(eps);
}

LaplaceResult airy_contour(const Complex& z, const Complex& eps, const ContourSpec& spec)
{
    LaplaceResult r = cubic_contour_integral(z, eps, [](const Complex&) { return Complex(1, 0); }, spec);
    Complex norm = airy_normalization(eps);
    r.value /= norm;
    r.est_error /= to_double(abs(norm));
    return r;
}

LaplaceResult borel_sum(const WKBSymbol& sym, const Complex& z, const Complex& eps, int N,
                        const BorelOptions& opt)
{
    if (N < 0 || N > sym.order())
        throw ValidationError("borel_sum: N must lie in [0, " + std::to_string(sym.order()) + "]");
    int L = opt.L < 0 ? N / 2 : opt.L;
    int M = opt.M < 0 ? N / 2 : opt.M;
    if (L + M > N) throw ValidationError("borel_sum: need N >= L + M");
    if (z == Complex(0, 0)) throw ValidationError("borel_sum: z = 0 is the turning point");

    // B(ξ) = Σ g_n ξ^n / n!, so (1/ε)∫e^{-ξ/ε}B = Σ g_n ε^n; B' is the minor.
    std::vector<Complex> c;
    Real fact = 1;
    for (int n = 0; n <= L + M; ++n) {
        if (n > 0) fact *= n;
        c.push_back(sym.g[n].evaluate(z) / fact);
    }
    Pade p = pade_approximant(c, L, M);

    const Real theta(opt.theta);
    const Complex dir(cos(theta), sin(theta));
    for (const Complex& rho : p.poles()) {
        Complex w = rho / dir;
        Real d = w.real() > 0 ? abs(w.imag()) : abs(rho);
        Real scale = abs(rho) > 1 ? abs(rho) : Real(1);
        if (d < Real(opt.pole_tol) * scale)
            throw PoleOnRay("Padé pole at ξ = (" + format_real(rho.real(), 8) + ", " +
                            format_real(rho.imag(), 8) + ") lies on the integration ray");
    }
    double tol = opt.tolerance > 0 ? opt.tolerance : std::pow(10.0, -static_cast<double>(precision()) + 8);
    LaplaceResult r = laplace_ray([&](const Complex& xi) { return p(xi); }, eps, theta, tol);
    Complex pre = sym.prefactor(z, eps);
    r.value *= pre;
    r.est_error *= to_double(abs(pre));
    return r;
}

LaplaceResult airy_borel_sum(const Complex& z, const Complex& eps, int N, int L, int M, double theta)
{
    BorelOptions o;
    o.L = L;
    o.M = M;
    o.theta = theta;
    return borel_sum(airy_symbol(N), z, eps, N, o);
}

StokesJump stokes_jump(const WKBSymbol& sym, const Complex& z, const Complex& eps, int N,
                       double delta, const BorelOptions& opt)
{
    StokesJump out;
    BorelOptions lo = opt, hi = opt;
    lo.theta = opt.theta - delta;
    hi.theta = opt.theta + delta;
    LaplaceResult b = borel_sum(sym, z, eps, N, lo);
    LaplaceResult a = borel_sum(sym, z, eps, N, hi);
    WKBSymbol other = sym.flipped();
    LaplaceResult m = borel_sum(other, z, eps, N, opt);
    out.below = b.value;
    out.above = a.value;
    out.jump = b.value - a.value;
    out.predicted = Complex(0, -1) * m.value;
    try {
        out.reference = borel_sum(sym, z, eps, N, opt).value;
    } catch (const NumericError&) {
        out.reference = b.value;
    }
    Real den = abs(out.predicted);
    out.rel_error = den > 0 ? to_double(abs(out.jump - out.predicted) / den) : 0.0;
    out.est_error = b.est_error + a.est_error + m.est_error;
    return out;
}

StokesJump stokes_jump(const Complex& z, const Complex& eps, int N)
{
    return stokes_jump(airy_symbol(N), z, eps, N);
}

}  // namespace ewkb
