#include "ewkb/pde.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "ewkb/airy.hpp"
#include "ewkb/errors.hpp"
#include "ewkb/stokes.hpp"
#include "ewkb/transport.hpp"

namespace ewkb {

namespace {

void check_orders(int Nx, int Nz)
{
    if (Nx < 0 || Nz < 0) throw ValidationError("orders must be nonnegative");
}

// G = -a_{n-2}'' + 2(n-2) a_{n-1}' + F a_{n-2}
PuiseuxSeries pde_source(const std::vector<PuiseuxSeries>& a, int n, const PuiseuxSeries& F,
                         const Exponent& cap)
{
    PuiseuxSeries g = -derive(derive(a[n - 2])) +
                      derive(a[n - 1]).scaled(Coefficient(static_cast<long>(2 * (n - 2)))) +
                      (F * a[n - 2]).truncated(cap);
    return g.truncated(cap);
}

template <class Solve>
BivariateSeries pde_recursion(const PuiseuxSeries& F, const PuiseuxSeries& h, int Nx, int Nz,
                              Solve solve)
{
    require_taylor(F, "F");
    require_taylor(h, "h");
    check_orders(Nx, Nz);
    // a_n at z^m depends on data up to z^{m+n}; carry that much and cut at the end
    const Exponent cap(Nz + 1 + 2 * Nx);
    const Exponent out(Nz + 1);
    const PuiseuxSeries Fc = F.truncated(cap);
    std::vector<PuiseuxSeries> a{PuiseuxSeries::constant(Coefficient(1))};
    if (Nx >= 1) a.push_back(h.truncated(cap));
    for (int n = 2; n <= Nx; ++n) a.push_back(solve(pde_source(a, n, Fc, cap), n));
    BivariateSeries psi;
    for (auto& s : a) psi.a.push_back(s.truncated(out));
    psi.Nx = Nx;
    psi.Nz = Nz;
    return psi;
}

}  // namespace

BivariateSeries pde_taylor(const PuiseuxSeries& F, const PuiseuxSeries& h, int Nx, int Nz)
{
    return pde_recursion(F, h, Nx, Nz, [](const PuiseuxSeries& G, int n) {
        PuiseuxSeries::Terms t;
        for (const auto& [e, c] : G.terms()) {
            Rational m = e.to_rational();
            Rational w = 1 / ((n + 4 * m) * (n - 1));
            t.emplace(e, c * Coefficient(w));
        }
        return PuiseuxSeries(std::move(t), G.trunc());
    });
}

BivariateSeries pde_taylor_direct(const PuiseuxSeries& F, const PuiseuxSeries& h, int Nx, int Nz)
{
    return pde_recursion(F, h, Nx, Nz, [](const PuiseuxSeries& G, int n) {
        // 4z a' + n a = G/(n-1): match coefficients from the bottom up
        PuiseuxSeries rhs = G.scaled(Coefficient(Rational(1, n - 1)));
        auto op = [n](const PuiseuxSeries& a) {
            return derive(a).shifted(Exponent(1)).scaled(Coefficient(4)) +
                   a.scaled(Coefficient(static_cast<long>(n)));
        };
        PuiseuxSeries a = PuiseuxSeries::zero(rhs.trunc());
        for (const auto& [e, c] : rhs.terms()) {
            (void)c;
            PuiseuxSeries resid = rhs - op(a);
            Coefficient need = resid.coeff(e);
            if (need.is_zero()) continue;
            Coefficient diag = op(PuiseuxSeries::monomial(Coefficient(1), e)).coeff(e);
            a += PuiseuxSeries::monomial(need / diag, e, rhs.trunc());
        }
        return a;
    });
}

PdeResidual pde_residual(const BivariateSeries& psi, const PuiseuxSeries& F)
{
    PdeResidual r;
    auto a = [&](int n) {
        if (n < 0 || n >= static_cast<int>(psi.a.size())) return PuiseuxSeries::zero();
        return psi.a[n];
    };
    const PuiseuxSeries z = PuiseuxSeries::monomial(Coefficient(1), Exponent(1));
    for (int n = 0; n <= psi.Nx; ++n) {
        // n(n-1)a_n + 4z(n-1)a_n' - 2(n-2)a_{n-1}' + a_{n-2}'' - F a_{n-2}
        PuiseuxSeries e = a(n).scaled(Coefficient(static_cast<long>(n * (n - 1)))) +
                          (z * derive(a(n))).scaled(Coefficient(static_cast<long>(4 * (n - 1)))) -
                          derive(a(n - 1)).scaled(Coefficient(static_cast<long>(2 * (n - 2)))) +
                          derive(derive(a(n - 2))) - F * a(n - 2);
        double m = max_abs_coeff(e);
        if (!e.is_zero()) r.exact_zero = false;
        if (m > r.max_abs) {
            r.max_abs = m;
            r.worst_n = n;
        }
        r.coeffs.push_back(std::move(e));
    }
    return r;
}

RadiusReport convergence_radius(double r0, double r1, double R, double F_norm, double h_norm)
{
    if (!(r0 > 0) || !(r1 > r0)) throw ValidationError("need 0 < r0 < r1");
    if (!(R > 0)) throw ValidationError("need R > 0");
    if (F_norm < 0 || h_norm < 0) throw ValidationError("norms must be nonnegative");
    RadiusReport rep;
    rep.r0 = r0;
    rep.r1 = r1;
    rep.R = R;
    rep.d0 = r1 - r0;
    const double e = std::exp(1.0);
    double formula = (3 * r1 / (2 * e)) * (-1 + std::sqrt(1 + 4 * r0 * rep.d0 / (9 * e * r1 * r1)));
    rep.r_prime = std::min(formula, R);
    rep.M = h_norm + (R / 2) * F_norm;
    return rep;
}

double iteration_bound(int k, double x_abs, double s, double M, double F_norm, double r0,
                       double d0, double r1)
{
    if (k < 0) throw ValidationError("k must be nonnegative");
    if (!(s >= 0 && s < 1)) throw ValidationError("s must lie in [0, 1)");
    if (k == 0) return M;
    const double denom = r0 * d0 * (1 - s);
    const double alpha = 1 + denom * F_norm / k;
    const double base = std::exp(1.0) * x_abs * (alpha * x_abs + 3 * r1) / denom;
    return M * std::pow(base, k);
}

double sup_norm(const PuiseuxSeries& f, double radius, int samples)
{
    double best = 0;
    for (int i = 0; i < samples; ++i) {
        double t = 2 * M_PI * i / samples;
        Complex z(Real(radius * std::cos(t)), Real(radius * std::sin(t)));
        double v = to_double(abs(f.evaluate(z)));
        if (v > best) best = v;
    }
    return best;
}

double sup_norm(const Poly2& p, double rz, double rx, int samples)
{
    std::vector<std::tuple<int, int, double>> terms;
    for (const auto& [k, c] : p.terms()) terms.emplace_back(k.first, k.second, c.get_d());
    double best = 0;
    for (int i = 0; i < samples; ++i) {
        std::complex<double> z = std::polar(rz, 2 * M_PI * i / samples);
        for (int j = 0; j < samples; ++j) {
            std::complex<double> x = std::polar(rx, 2 * M_PI * (j + 0.5) / samples);
            std::complex<double> acc = 0;
            for (const auto& [a, b, c] : terms) acc += c * std::pow(z, a) * std::pow(x, b);
            best = std::max(best, std::abs(acc));
        }
    }
    return best;
}

std::vector<Poly2> picard_deltas(const PuiseuxSeries& F, const PuiseuxSeries& h, int kmax)
{
    require_taylor(F, "F");
    require_taylor(h, "h");
    if (!F.trunc().is_inf() || !h.trunc().is_inf() || !F.is_exact() || !h.is_exact())
        throw ValidationError("picard_deltas needs exact polynomial F and h");
    auto to_poly = [](const PuiseuxSeries& s) {
        Poly2::Terms t;
        for (const auto& [e, c] : s.terms()) {
            if (!c.exact().is_real()) throw ValidationError("picard_deltas needs real coefficients");
            t[{static_cast<int>(e.num()), 0}] = c.exact().re;
        }
        return Poly2(std::move(t));
    };
    const Poly2 Fp = to_poly(F);
    // θ_0 = h + x Σ F_m z^m / (4m + 2)
    Poly2::Terms t0 = to_poly(h).terms();
    for (const auto& [k, c] : Fp.terms()) t0[{k.first, 1}] += c / (4 * k.first + 2);
    const Poly2 theta0{t0};

    auto step = [&](const Poly2& th) {
        Poly2::Terms t = theta0.terms();
        for (const auto& [k, c] : th.terms()) {
            const int m = k.first, n = k.second;
            // 2x∫u ∂θ(zu⁴, ux) du minus the 2∂θ part of L
            if (m >= 1)
                t[{m - 1, n + 1}] += c * Rational(2 * m * n) / ((n + 1) * (n + 4 * m - 2));
            // t ∂²θ part of L
            if (m >= 2)
                t[{m - 2, n + 2}] -= c * Rational(m * (m - 1)) / ((n + 2) * (n + 4 * m - 5));
            // -t F θ part of L
            for (const auto& [kf, cf] : Fp.terms()) {
                const int j = kf.first;
                t[{j + m, n + 2}] += c * cf / ((n + 2) * (n + 4 * (j + m) + 3));
            }
        }
        return Poly2(std::move(t));
    };

    std::vector<Poly2> deltas{theta0};
    Poly2 prev = theta0;
    for (int k = 1; k <= kmax; ++k) {
        Poly2 next = step(prev);
        deltas.push_back(next - prev);
        prev = next;
    }
    return deltas;
}

PsiEvaluator::PsiEvaluator(const BivariateSeries& psi, const Complex& z)
{
    for (const auto& s : psi.a) c_.push_back(s.evaluate(z));
    double rho = 0;
    const int N = static_cast<int>(c_.size()) - 1;
    for (int n = std::max(1, N / 2); n <= N; ++n) {
        double m = to_double(abs(c_[n]));
        if (m > 0) rho = std::max(rho, std::pow(m, 1.0 / n));
    }
    radius_ = rho > 0 ? 1 / rho : std::numeric_limits<double>::infinity();
}

PsiValue PsiEvaluator::operator()(const Complex& x) const
{
    PsiValue v;
    v.value = horner(c_, x);
    const int N = static_cast<int>(c_.size()) - 1;
    if (N < 1) return v;
    const double ax = to_double(abs(x));
    double rho = 0, last = 0;
    for (int n = std::max(1, N / 2); n <= N; ++n) {
        double m = to_double(abs(c_[n])) * std::pow(ax, n);
        if (m > 0) rho = std::max(rho, std::pow(m, 1.0 / n));
        if (n >= N - 1) last = std::max(last, m);
    }
    v.rho = rho;
    v.divergent = rho >= 1;
    v.tail = rho < 1 ? last * rho / (1 - rho) : std::numeric_limits<double>::infinity();
    return v;
}

PsiValue psi_eval(const BivariateSeries& psi, const Complex& z, const Complex& x)
{
    return PsiEvaluator(psi, z)(x);
}

LaplaceResult confluent_eval(const BivariateSeries& psi, const Complex& z, const Complex& eps,
                             const ContourSpec& spec, double domain_fraction)
{
    PsiEvaluator ev(psi, z);
    const double xmax = domain_fraction * ev.radius_x();
    double worst = 0;
    auto amp = [&](const Complex& zh) {
        Complex x = z - zh * zh;
        PsiValue v = ev(x);
        if (v.divergent) throw DomainExit("ψ series diverges on the contour");
        double w = v.tail * to_double(abs(exp(-(z * zh - zh * zh * zh / Real(3)) / eps)));
        if (w > worst) worst = w;
        return v.value;
    };
    std::function<bool(const Complex&)> inside;
    if (std::isfinite(xmax))
        inside = [&](const Complex& zh) { return to_double(abs(z - zh * zh)) <= xmax; };
    LaplaceResult r = cubic_contour_integral(z, eps, amp, spec, inside);
    // dropped ψ terms, weighted by the path's Gaussian width
    r.est_error += worst * 4 * std::sqrt(to_double(abs(eps)));
    return r;
}

LaplaceResult confluent_eval(const PuiseuxSeries& F, const PuiseuxSeries& h, const Complex& z,
                             const Complex& eps, const ContourSpec& spec, const ConfluentOptions& opt)
{
    BivariateSeries psi = pde_taylor(F, h, opt.Nx, opt.Nz);
    return confluent_eval(psi, z, eps, spec, opt.domain_fraction);
}

DecompositionReport local_decomposition(const PuiseuxSeries& F, const PuiseuxSeries& h,
                                        const Complex& z, const std::vector<Complex>& eps_grid,
                                        const std::string& sector, const DecompositionOptions& opt)
{
    Sector want;
    if (sector == "S1")
        want = Sector::S1;
    else if (sector == "S2")
        want = Sector::S2;
    else if (sector == "S-1")
        want = Sector::Sm1;
    else
        throw ValidationError("sector must be S1, S2 or S-1");
    Sector got = classify_sector(to_cdouble(z), 0.0);
    if (got != want)
        throw ValidationError("z lies in " + sector_name(got) + ", not " + sector);

    BivariateSeries psi = pde_taylor(F, h, opt.confluent.Nx, opt.confluent.Nz);
    WKBSymbol plus = transport_g(F, opt.N, 1);
    WKBSymbol minus = transport_g(F, opt.N, -1);
    DecompositionReport rep;
    rep.sector = sector;
    for (const Complex& eps : eps_grid) {
        DecompositionRow row;
        row.eps = eps;
        row.confluent = confluent_eval(psi, z, eps, {}, opt.confluent.domain_fraction).value;
        Complex root = sqrt(pi_real()) * csqrt(eps);
        row.one_term = Complex(0, 1) * root * borel_sum(plus, z, eps, opt.N).value;
        row.two_term = row.one_term;
        if (want == Sector::S2) {
            // the recessive partner enters with opposite signs on the two sides of the cut
            Complex m = root * borel_sum(minus, z, eps, opt.N).value;
            row.two_term += z.imag() >= 0 ? -m : m;
        }
        Real den = abs(row.confluent);
        row.rel_one = to_double(abs(row.one_term - row.confluent) / den);
        row.rel_two = to_double(abs(row.two_term - row.confluent) / den);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace ewkb
