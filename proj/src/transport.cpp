#include "ewkb/transport.hpp"

#include "ewkb/errors.hpp"

namespace ewkb {

namespace {

const Exponent kHalf(1, 2);

PuiseuxSeries z_pow(const Rational& c, const Exponent& e)
{
    return PuiseuxSeries::monomial(Coefficient(c), e);
}

// g'' - g'/(2z) + (5/16) g/z² - F g
PuiseuxSeries transport_operator(const PuiseuxSeries& g, const PuiseuxSeries& F)
{
    PuiseuxSeries d1 = derive(g);
    PuiseuxSeries d2 = derive(d1);
    return d2 - d1.shifted(Exponent(-1)).scaled(Coefficient(Rational(1, 2))) +
           g.shifted(Exponent(-2)).scaled(Coefficient(Rational(5, 16))) - F * g;
}

void scan(const PuiseuxSeries& s, ConsistencyReport& r)
{
    if (!s.is_exact()) r.exact_zero = false;
    for (const auto& [e, c] : s.terms()) {
        (void)e;
        if (!c.is_zero()) r.exact_zero = false;
    }
    double m = max_abs_coeff(s);
    if (m > r.max_residual) r.max_residual = m;
}

}  // namespace

WKBSymbol transport_g(const PuiseuxSeries& F, int N, int sign)
{
    require_taylor(F, "F");
    if (N < 0) throw ValidationError("transport_g needs N >= 0");
    if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
    // 2σ z^{1/2} g'_{n+1} = g_n'' - g_n'/(2z) + (5/16) g_n/z² - F g_n
    const PuiseuxSeries inv = z_pow(Rational(sign, 2), -kHalf);
    std::vector<PuiseuxSeries> g{PuiseuxSeries::constant(Coefficient(1))};
    for (int n = 0; n < N; ++n) {
        PuiseuxSeries rhs = inv * transport_operator(g[n], F);
        g.push_back(antiderive(rhs));
    }
    WKBSymbol s;
    s.sign = sign;
    s.g = EpsSeries(std::move(g));
    return s;
}

RiccatiExpansion riccati_p(const PuiseuxSeries& F, int N)
{
    require_taylor(F, "F");
    if (N < 0) throw ValidationError("riccati_p needs N >= 0");
    const PuiseuxSeries half_inv = z_pow(Rational(1, 2), -kHalf);  // 1/(2p_0)
    RiccatiExpansion r;
    r.p.push_back(z_pow(1, kHalf));
    for (int n = 0; n < N; ++n) {
        PuiseuxSeries rhs = derive(r.p[n]);
        for (int j = 1; j <= n; ++j) rhs -= r.p[j] * r.p[n + 1 - j];
        if (n == 1) rhs += F;
        r.p.push_back(half_inv * rhs);
    }
    return r;
}

ConsistencyReport symbol_consistency(const PuiseuxSeries& F, int N)
{
    ConsistencyReport rep;
    rep.N = N;
    if (N < 2) return rep;
    RiccatiExpansion rp = riccati_p(F, N);
    WKBSymbol sym = transport_g(F, N);

    // (i) P_odd = (ε/2) P_even'/P_even
    std::vector<PuiseuxSeries> even(N + 1, PuiseuxSeries::zero());
    for (int k = 0; k <= N; k += 2) even[k] = rp.p[k];
    EpsSeries Pe(even);
    EpsSeries Q = eps_mul(Pe.derive_z(), eps_inverse(Pe), std::nullopt);
    for (int k = 1; k <= N; k += 2) {
        PuiseuxSeries d = rp.p[k] - Q[k - 1].scaled(Coefficient(Rational(1, 2)));
        scan(d, rep);
        rep.odd_residual.push_back(d);
    }

    // (ii) g = C(ε) exp(-Σ ε^{2k-1} I_{2k}) (1 + Σ (p_{2k}/p_0) ε^{2k})^{-1/2}
    const PuiseuxSeries inv_p0 = z_pow(1, -kHalf);
    std::vector<PuiseuxSeries> expo(N + 1, PuiseuxSeries::zero()), ratio(N + 1, PuiseuxSeries::zero());
    ratio[0] = PuiseuxSeries::constant(Coefficient(1));
    for (int k = 2; k <= N; k += 2) {
        expo[k - 1] = -antiderive(rp.p[k]);
        ratio[k] = rp.p[k] * inv_p0;
    }
    EpsSeries B = eps_mul(eps_exp(EpsSeries(expo)), eps_pow(EpsSeries(ratio), Rational(-1, 2)), std::nullopt);

    for (int k = 0; k <= N; ++k) {
        PuiseuxSeries acc = sym.g[k];
        for (int j = 0; j < k; ++j) acc -= B[k - j].scaled(rep.C[j]);
        Coefficient ck = acc.trunc() > Exponent(0) ? acc.coeff(Exponent(0)) : Coefficient(0);
        rep.C.push_back(ck);
        PuiseuxSeries d = acc - B[0].scaled(ck);
        scan(d, rep);
        rep.symbol_residual.push_back(d);
    }
    return rep;
}

std::vector<PuiseuxSeries> wkb_residual(const WKBSymbol& s, const PuiseuxSeries& F)
{
    std::vector<PuiseuxSeries> out;
    const PuiseuxSeries two_sqrt = z_pow(Rational(2 * s.sign), kHalf);
    int n = s.g.order();
    for (int k = -1; k + 1 < n; ++k) {
        PuiseuxSeries r = PuiseuxSeries::zero();
        if (k >= 0) r = transport_operator(s.g[k], F);
        r -= two_sqrt * derive(s.g[k + 1]);
        out.push_back(r);
    }
    return out;
}

}  // namespace ewkb
