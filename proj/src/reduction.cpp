#include "ewkb/reduction.hpp"

#include <algorithm>

#include "ewkb/errors.hpp"
#include "ewkb/transport.hpp"

namespace ewkb {

namespace {

void check_turning_point(const PuiseuxSeries& V)
{
    require_taylor(V, "V");
    if (V.trunc() <= Exponent(1))
        throw ValidationError("V must be known through its linear term");
    if (!V.coeff(Exponent(0)).is_zero())
        throw NotSimpleTurningPoint("V(0) must vanish");
    if (!(V.coeff(Exponent(1)) == Coefficient(1)))
        throw NotSimpleTurningPoint("V'(0) must equal 1");
}

PuiseuxSeries z_series() { return PuiseuxSeries::monomial(Coefficient(1), Exponent(1)); }

EpsSeries pad(std::vector<PuiseuxSeries> c, int order)
{
    c.resize(order, PuiseuxSeries::zero());
    return EpsSeries(std::move(c));
}

// s s'² - (ε²/2){s, ·} as an ε-series of the same order as s
EpsSeries master_lhs(const EpsSeries& s, std::optional<Exponent> cap)
{
    const int K = s.order();
    EpsSeries d1 = s.derive_z(), d2 = d1.derive_z(), d3 = d2.derive_z();
    EpsSeries lhs = eps_mul(s, eps_mul(d1, d1, cap), cap);
    if (K <= 2) return lhs;
    EpsSeries inv = eps_inverse(d1.truncated(K - 2), cap);
    EpsSeries r2 = eps_mul(d2.truncated(K - 2), inv, cap);
    EpsSeries r3 = eps_mul(d3.truncated(K - 2), inv, cap);
    EpsSeries schw = r3 - eps_mul(r2, r2, cap).scaled(Coefficient(Rational(3, 2)));
    return lhs - schw.shifted(2).scaled(Coefficient(Rational(1, 2)));
}

double max_magnitude(const PuiseuxSeries& s)
{
    double m = 0;
    for (const auto& [e, c] : s.terms()) m = std::max(m, c.magnitude());
    return m;
}

}  // namespace

bool is_holomorphic(const PuiseuxSeries& s)
{
    for (const auto& [e, c] : s.terms())
        if (e.den() != 1 || e.num() < 0) return false;
    return true;
}

PuiseuxSeries liouville_map(const PuiseuxSeries& V, int N)
{
    if (N < 1) throw ValidationError("liouville_map needs N >= 1");
    check_turning_point(V);
    // (3/2)∫_0^q √V = q^{3/2} m(q), m = Σ r_k 3/(2k+3) q^k with Σ r_k q^k = √(V/q)
    PuiseuxSeries r = series_pow_rational(V.shifted(Exponent(-1)), Rational(1, 2), Exponent(N));
    PuiseuxSeries::Terms t;
    for (const auto& [e, c] : r.terms()) t.emplace(e, c * Coefficient(Rational(3) / (2 * e.num() + 3)));
    PuiseuxSeries m(std::move(t), r.trunc());
    return series_pow_rational(m, Rational(2, 3), Exponent(N)).shifted(Exponent(1));
}

PuiseuxSeries induced_potential_F(const PuiseuxSeries& V, int N)
{
    if (N < 0) throw ValidationError("induced_potential_F needs N >= 0");
    const Exponent cap(N + 1);
    PuiseuxSeries zq = liouville_map(V, N + 3);
    PuiseuxSeries S = schwarzian(zq, cap);
    // z/(2V) = (z/q) / (2 V/q)
    PuiseuxSeries G = divide(zq.shifted(Exponent(-1)), V.shifted(Exponent(-1)), cap) * S;
    G = G.scaled(Coefficient(Rational(1, 2))).truncated(cap);
    PuiseuxSeries qz = series_compose_invert(zq, N + 1);
    return compose(G, qz, cap);
}

std::vector<PuiseuxSeries> master_residual(const std::vector<PuiseuxSeries>& s,
                                           const std::vector<PuiseuxSeries>& rhs)
{
    const int K = static_cast<int>(s.size());
    EpsSeries lhs = master_lhs(EpsSeries(s), std::nullopt);
    EpsSeries r = lhs - pad(rhs, K);
    return r.coeffs();
}

std::vector<PuiseuxSeries> master_residual(const ReductionSeries& red, const PuiseuxSeries& F)
{
    std::vector<PuiseuxSeries> rhs{z_series()};
    if (red.s.size() > 2) {
        rhs.push_back(PuiseuxSeries::zero());
        rhs.push_back(F);
    }
    return master_residual(red.s, rhs);
}

ReductionSeries reduce_to_airy(const PuiseuxSeries& F, int N_eps, int N_z)
{
    if (N_eps < 0 || N_z < 0) throw ValidationError("reduction orders must be nonnegative");
    require_taylor(F, "F");
    // derivatives cost up to three z-orders per two ε-orders
    const Exponent cap(N_z + 1 + 2 * N_eps);
    const int K = N_eps + 1;
    std::vector<PuiseuxSeries> rhs(K, PuiseuxSeries::zero());
    rhs[0] = z_series();
    if (K > 2) rhs[2] = F.truncated(cap);
    std::vector<PuiseuxSeries> s(K, PuiseuxSeries::zero());
    s[0] = z_series();
    for (int k = 1; k < K; ++k) {
        EpsSeries cur = pad(std::vector<PuiseuxSeries>(s.begin(), s.begin() + k), k + 1);
        PuiseuxSeries R = (master_lhs(cur, cap) - pad(rhs, k + 1))[k];
        // 2z s_k' + s_k = -R_k, coefficient-wise (2m+1) c_m = -R_{k,m}
        PuiseuxSeries::Terms t;
        for (const auto& [e, c] : R.terms()) {
            if (e.den() != 1 || e.num() < 0)
                throw LogObstruction("order " + std::to_string(k) + " forces a non-holomorphic term z^" + e.str());
            t.emplace(e, -c / Coefficient(Rational(2 * e.num() + 1)));
        }
        s[k] = PuiseuxSeries(std::move(t), R.trunc());
        if (k % 2 == 1 && !s[k].is_zero())
            throw LogObstruction("odd order " + std::to_string(k) + " of the reduction is nonzero");
    }
    ReductionSeries out;
    out.N_eps = N_eps;
    out.N_z = N_z;
    for (int k = 0; k < K; ++k) out.s.push_back(k == 0 ? s[0] : s[k].truncated(Exponent(N_z + 1)));
    return out;
}

WKBSymbol airy_derivative_symbol(int N)
{
    // ε∂_z (e^{-(2/3)z^{3/2}/ε} z^{-1/4} α) = e^{..} z^{-1/4} (-z^{1/2}α + ε(α' - α/(4z)))
    WKBSymbol A = airy_symbol(N);
    const PuiseuxSeries root = PuiseuxSeries::monomial(Coefficient(1), Exponent(1, 2));
    const PuiseuxSeries quarter = PuiseuxSeries::monomial(Coefficient(Rational(1, 4)), Exponent(-1));
    std::vector<PuiseuxSeries> b;
    for (int k = 0; k <= N; ++k) {
        PuiseuxSeries v = -(root * A.g[k]);
        if (k > 0) v = v + derive(A.g[k - 1]) - quarter * A.g[k - 1];
        b.push_back(v);
    }
    WKBSymbol out = A;
    out.g = EpsSeries(std::move(b));
    return out;
}

BasisDecomposition airy_basis_decomposition(const WKBSymbol& phi, int N)
{
    if (N < 0) throw ValidationError("decomposition order must be nonnegative");
    if (phi.order() < N)
        throw ValidationError("symbol carries " + std::to_string(phi.order()) + " orders, need " +
                              std::to_string(N));
    if (phi.sign != 1 || phi.prefactor_exp != Rational(-1, 4))
        throw ValidationError("symbol must share the exponential and prefactor of A_bkw");
    EpsSeries alpha = airy_symbol(N).g;
    EpsSeries beta = airy_derivative_symbol(N).g;
    // α_k lives on z^{-3k/2}Z and β_k on z^{1/2-3k/2}Z, so for holomorphic a, b each ε-order
    // splits into integer and half-integer exponents: a triangular system with diagonal (1, -z^{1/2}).
    const PuiseuxSeries inv_root = PuiseuxSeries::monomial(Coefficient(-1), Exponent(-1, 2));
    if (!(alpha[0] == PuiseuxSeries::constant(Coefficient(1))))
        throw NumericError("unexpected leading Airy coefficient");
    if (beta[0].is_zero()) throw NumericError("degenerate Wronskian in the Airy basis");

    BasisDecomposition out;
    for (int k = 0; k <= N; ++k) {
        PuiseuxSeries rem = phi.g[k];
        for (int j = 0; j < k; ++j) rem = rem - out.a[j] * alpha[k - j] - out.b[j] * beta[k - j];
        PuiseuxSeries::Terms ti, th;
        for (const auto& [e, c] : rem.terms()) (e.den() == 1 ? ti : th).emplace(e, c);
        out.a.emplace_back(std::move(ti), rem.trunc());
        out.b.push_back(inv_root * PuiseuxSeries(std::move(th), rem.trunc()));
        out.holomorphic = out.holomorphic && is_holomorphic(out.a[k]) && is_holomorphic(out.b[k]);
        out.a_size.push_back(max_magnitude(out.a[k]));
        out.b_size.push_back(max_magnitude(out.b[k]));
    }
    EpsSeries rec = EpsSeries(out.a) * alpha + EpsSeries(out.b) * beta;
    for (int k = 0; k <= N; ++k) out.reconstructs = out.reconstructs && rec[k] == phi.g[k];
    return out;
}

PipelineResult schrodinger_pipeline(const PuiseuxSeries& V, int N, int N_z)
{
    if (N < 0 || N_z < 0) throw ValidationError("pipeline orders must be nonnegative");
    PipelineResult out;
    const int zcap = N_z + 2 * N + 4;
    out.z_of_q = liouville_map(V, zcap);
    out.F = induced_potential_F(V, zcap);
    ReductionSeries full = reduce_to_airy(out.F, N, zcap - 2 * N - 1);
    out.canonical = full;
    for (auto& sk : out.canonical.s) sk = sk.truncated(Exponent(N_z + 1));
    out.canonical.N_z = N_z;
    out.canonical.s[0] = z_series();
    for (const auto& sk : full.s) out.s_of_q.push_back(compose(sk, out.z_of_q, Exponent(zcap - 2 * N)));
    std::vector<PuiseuxSeries> rhs{V};
    out.residual = master_residual(out.s_of_q, rhs);
    for (auto& r : out.residual) r = r.truncated(Exponent(N_z + 1));
    for (auto& sk : out.s_of_q) sk = sk.truncated(Exponent(N_z + 1));
    return out;
}

}  // namespace ewkb
