// One PASS/FAIL line per acceptance criterion, at 60 digits.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ewkb/airy.hpp"
#include "ewkb/hardy.hpp"
#include "ewkb/pde.hpp"
#include "ewkb/reduction.hpp"
#include "ewkb/stokes.hpp"
#include "ewkb/transport.hpp"

using namespace ewkb;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

Rational rnd(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng)) / den(rng);
}

PuiseuxSeries rnd_poly(std::mt19937& rng, int deg)
{
    std::vector<Coefficient> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(rnd(rng));
    return PuiseuxSeries::polynomial(c);
}

PuiseuxSeries poly(std::initializer_list<Rational> c)
{
    std::vector<Coefficient> v;
    for (const auto& x : c) v.emplace_back(x);
    return PuiseuxSeries::polynomial(v);
}

bool all_zero(const std::vector<PuiseuxSeries>& v)
{
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Complex polar_c(double r, double t) { return complex_from(r * std::cos(t), r * std::sin(t)); }

double rel(const Complex& a, const Complex& b) { return to_double(abs(a - b) / abs(b)); }

// exact solve of a square rational system, no pivoting problems on a tensor Vandermonde
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (A[p][c] == 0) ++p;
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Rational f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t c = 0; c < n; ++c) b[c] /= A[c][c];
    return b;
}

Outcome airy_coefficients()
{
    Outcome o;
    const int N = 30;
    auto t = transport_g(PuiseuxSeries::zero(Exponent(4 * N)), N);
    // α_n = (-3/4)^n Π_{k<n} (k + 1/6)(k + 5/6) / n!
    Rational a(1);
    int bad = -1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) a *= Rational(-3, 4) * (Rational(n - 1) + Rational(1, 6)) * (Rational(n - 1) + Rational(5, 6)) / n;
        const auto& g = t.g[n];
        if (g.terms().size() != 1 || !(g.coeff(Exponent(-3 * n, 2)) == Coefficient(a))) bad = n;
    }
    o.pass = bad < 0 && t.g[1].coeff(Exponent(-3, 2)) == Coefficient(Rational(-5, 48)) &&
             t.g[2].coeff(Exponent(-3)) == Coefficient(Rational(385, 4608));
    o.detail = bad < 0 ? "n <= 30 exact" : "mismatch at n = " + std::to_string(bad);
    return o;
}

Outcome borel_vs_contour()
{
    Outcome o;
    double prev = 1;
    std::ostringstream d;
    for (double e : {0.1, 0.05, 0.02}) {
        const Complex z = complex_from(1.0), eps = complex_from(e);
        double r = rel(airy_borel_sum(z, eps, 24, 12, 12).value, airy_contour(z, eps).value);
        o.pass = o.pass && r < 1e-8 && r < prev;
        prev = r;
        d << "eps=" << e << ":" << sci(r) << " ";
    }
    o.detail = d.str();
    return o;
}

Outcome stokes_jump_check()
{
    Outcome o;
    const Complex eps = complex_from(0.05);
    auto on = stokes_jump(polar_c(0.8, 2 * M_PI / 3), eps, 24);
    auto off = stokes_jump(polar_c(0.8, M_PI / 3), eps, 24);
    double r_off = to_double(abs(off.jump) / abs(off.reference));
    o.pass = on.rel_error < 1e-4 && r_off < 1e-8;
    o.detail = "on L1 " + sci(on.rel_error) + ", off-line " + sci(r_off);
    return o;
}

Outcome pde_routes()
{
    Outcome o;
    std::mt19937 rng(4);
    for (int trial = 0; trial < 3; ++trial) {
        auto F = rnd_poly(rng, 3), h = rnd_poly(rng, 2);
        auto A = pde_taylor(F, h, 20, 20), B = pde_taylor_direct(F, h, 20, 20);
        for (int n = 0; n <= 20; ++n) o.pass = o.pass && A.a[n] == B.a[n];
        o.pass = o.pass && pde_residual(A, F).exact_zero;
    }
    o.detail = o.pass ? "3 random (F, h), Nx = Nz = 20, exact" : "routes differ";
    return o;
}

Outcome pde_closed_forms()
{
    Outcome o;
    const Rational lam(2, 3);
    auto E = pde_taylor(poly({lam * lam}), poly({lam}), 20, 4);
    Rational p(1), f(1);
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) {
            p *= lam;
            f *= n;
        }
        o.pass = o.pass && E.a[n].terms() == poly({p / f}).terms();
    }
    auto Z = pde_taylor(PuiseuxSeries::monomial(Coefficient(lam * lam), Exponent(1)), PuiseuxSeries::zero(), 4, 4);
    o.pass = o.pass && Z.a[2].terms() == PuiseuxSeries::monomial(Coefficient(lam * lam / 6), Exponent(1)).terms();
    auto C = pde_taylor(poly({0, 1}), PuiseuxSeries::zero(), 40, 40);
    auto v = psi_eval(C, complex_from(0.2), complex_from(0.1));
    Real x("0.1"), z("0.2");
    double err = to_double(abs(v.value - Complex(cosh(x * sqrt(3 * z + x) / 3))));
    o.pass = o.pass && err < 1e-10;
    o.detail = "cosh check " + sci(err);
    return o;
}

Outcome radius_check()
{
    Outcome o;
    auto rep = convergence_radius(1, 2, 10, 0, 0);
    const double expect = 3 / M_E * (-1 + std::sqrt(1 + 1 / (9 * M_E)));
    double err = std::abs(rep.r_prime - expect);
    o.pass = err < 1e-12;
    std::mt19937 rng(60);
    double worst = 1e300;
    for (int trial = 0; trial < 3; ++trial) {
        auto psi = pde_taylor(rnd_poly(rng, 2), rnd_poly(rng, 1), 30, 30);
        for (double r : {0.0, 0.5, 1.0})
            for (int k = 0; k < (r == 0 ? 1 : 8); ++k) {
                Complex z = polar_c(r, 2 * M_PI * k / 8);
                PsiEvaluator ev(psi, z);
                worst = std::min(worst, ev.radius_x());
                auto val = ev(complex_from(rep.r_prime));
                o.pass = o.pass && !val.divergent && val.rho * rep.r_prime < 1;
            }
    }
    o.pass = o.pass && worst >= rep.r_prime;
    o.detail = "r' = " + sci(rep.r_prime) + " (err " + sci(err) + "), min root-test radius " + sci(worst);
    return o;
}

Outcome sector_decomposition()
{
    Outcome o;
    const auto zero = PuiseuxSeries::zero();
    std::vector<Complex> grid;
    for (double e : {0.1, 0.08, 0.06, 0.04, 0.02}) grid.push_back(complex_from(e));
    auto d1 = local_decomposition(zero, zero, complex_from(0.3, 0.4), grid, "S1");
    double worst = 0;
    for (const auto& r : d1.rows) worst = std::max(worst, r.rel_one);
    auto d2 = local_decomposition(zero, zero, polar_c(0.8, 0.9 * M_PI), {complex_from(0.05)}, "S2");
    const auto& r2 = d2.rows[0];
    o.pass = worst < 1e-6 && r2.rel_two * 10 <= r2.rel_one;
    o.detail = "S1 worst " + sci(worst) + "; S2 one-term " + sci(r2.rel_one) + ", two-term " + sci(r2.rel_two);
    return o;
}

Outcome schwarzian_F0()
{
    Outcome o;
    auto F0 = [](const Rational& v2, const Rational& v3) {
        auto V = poly({0, 1, v2, v3}).truncated(Exponent(10));
        return induced_potential_F(V, 1).coeff(Exponent(0)).exact().re;
    };
    // interpolate on v2^i v3^j, i, j <= 3, then test the fit at fresh points
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            std::vector<Rational> row;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Rational m(1);
                    for (int k = 0; k < i; ++k) m *= p;
                    for (int k = 0; k < j; ++k) m *= q;
                    row.push_back(m);
                }
            A.push_back(row);
            b.push_back(F0(p, q));
        }
    auto c = solve_exact(A, b);
    bool shape = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational want = (i == 0 && j == 1) ? Rational(3, 7) : (i == 2 && j == 0) ? Rational(-9, 35) : Rational(0);
            shape = shape && c[4 * i + j] == want;
        }
    std::mt19937 rng(8);
    bool fresh = true;
    for (int t = 0; t < 5; ++t) {
        Rational v2 = rnd(rng), v3 = rnd(rng);
        fresh = fresh && F0(v2, v3) == Rational(3, 7) * v3 - Rational(9, 35) * v2 * v2;
    }
    bool spot = F0(Rational(1, 2), 0) == Rational(-9, 140);
    o.pass = shape && fresh && spot;
    o.detail = std::string("fit ") + (shape ? "3/7 v3 - 9/35 v2^2" : "unexpected") + ", F(0) at v2=1/2: " +
               to_string(F0(Rational(1, 2), 0));
    return o;
}

Outcome reduction_check()
{
    Outcome o;
    std::mt19937 rng(9);
    const Rational c(2, 7), l2(9, 25);
    std::vector<PuiseuxSeries> Fs{PuiseuxSeries::zero(), poly({c}),
                                  PuiseuxSeries::monomial(Coefficient(l2), Exponent(1)), rnd_poly(rng, 3)};
    for (const auto& F : Fs) o.pass = o.pass && all_zero(master_residual(reduce_to_airy(F, 8, 6), F));
    auto r = reduce_to_airy(poly({c}), 8, 6);
    bool exact_s = r.s[0].terms() == poly({0, 1}).terms() && r.s[2].terms() == poly({c}).terms();
    for (int k = 1; k <= 8; ++k)
        if (k != 2) exact_s = exact_s && r.s[k].is_zero();
    o.pass = o.pass && exact_s;
    o.detail = std::string("residual zero through eps^8 for 4 F; s = z + c eps^2: ") + (exact_s ? "yes" : "no");
    return o;
}

Outcome basis_check()
{
    Outcome o;
    auto d = airy_basis_decomposition(transport_g(poly({Rational(2, 7)}).truncated(Exponent(30)), 6), 6);
    bool a0 = d.a[0].coeff(Exponent(0)) == Coefficient(1);
    o.pass = d.holomorphic && d.reconstructs && a0 && d.b[0].is_zero();
    o.detail = std::string("holomorphic ") + (d.holomorphic ? "yes" : "no") + ", reconstructs " +
               (d.reconstructs ? "yes" : "no");
    return o;
}

Outcome hardy_check()
{
    Outcome o;
    for (int n = 1; n <= 8; ++n) o.pass = o.pass && hardy_identities(hardy_S_T(n)).holds();
    auto t = [](const Rational& c, int i, int j) { return Poly2::term(c, i, j); };
    bool table = hardy_S_T(1).S == t(Rational(8, 3), 0, 3) + t(-2, 1, 1) && hardy_S_T(1).T == t(Rational(1, 2), 0, 0) &&
                 hardy_S_T(2).S == t(4, 0, 4) + t(-4, 1, 2) + t(Rational(1, 2), 2, 0) &&
                 hardy_S_T(2).T == t(1, 0, 1) &&
                 hardy_S_T(3).S == t(Rational(32, 5), 0, 5) + t(-8, 1, 3) + t(2, 2, 1) &&
                 hardy_S_T(3).T == t(2, 0, 2) + t(Rational(-1, 2), 1, 0);
    o.pass = o.pass && table;
    o.detail = std::string("n <= 8 exact; table ") + (table ? "matches" : "differs");
    return o;
}

Outcome stokes_trace()
{
    Outcome o;
    auto V = poly({0, 1, Rational(1, 2)});
    auto d = potential_stokes_curves(V, 0);
    double worst = 0;
    std::size_t nodes = 0;
    for (const auto& l : d.lines)
        for (const auto& q : l.nodes)
            if (q != std::complex<double>(0, 0)) {
                worst = std::max(worst, std::abs(stokes_condition(V, q, 0)));
                ++nodes;
            }
    auto rays = canonical_ray_angles(0);
    bool exact = rays[0] == 0.0 && rays[1] == 2 * M_PI / 3 && rays[2] == -2 * M_PI / 3;
    o.pass = worst < 1e-10 && exact;
    o.detail = std::to_string(nodes) + " nodes, worst " + sci(worst) + "; rays " + (exact ? "exact" : "off");
    return o;
}

}  // namespace

int main()
{
    set_precision(60);
    std::vector<Criterion> all{
        {1, "Airy coefficient identity", 1, airy_coefficients},
        {2, "Borel-Pade sum vs contour integral", 10, borel_vs_contour},
        {3, "Stokes jump", 30, stokes_jump_check},
        {4, "PDE routes agree", 5, pde_routes},
        {5, "closed-form PDE examples", 5, pde_closed_forms},
        {6, "convergence radius", 10, radius_check},
        {7, "sector decomposition", 60, sector_decomposition},
        {8, "Schwarzian F(0)", 2, schwarzian_F0},
        {9, "reduction to Airy", 5, reduction_check},
        {10, "Airy-basis decomposition", 5, basis_check},
        {11, "Hardy identities", 2, hardy_check},
        {12, "Stokes tracing", 10, stokes_trace},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = o.pass && secs < c.limit_s;
        if (!ok) ++failed;
        char head[128];
        std::snprintf(head, sizeof head, "%s  %2d  %-36s %7.3f s (limit %g s)  ", ok ? "PASS" : "FAIL", c.id,
                      c.name.c_str(), secs, c.limit_s);
        std::cout << head << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
