#include "ewkb/numeric.hpp"

#include <cstdlib>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "ewkb/errors.hpp"

namespace ewkb {

unsigned precision() { return Real::default_precision(); }

void set_precision(unsigned digits)
{
    if (digits < kMinDigits) throw ValidationError("precision must be at least 15 digits");
    Real::default_precision(digits);
}

unsigned precision_from_env()
{
    const char* env = std::getenv("TP_PRECISION");
    if (!env || !*env) return kDefaultDigits;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < static_cast<long>(kMinDigits) || v > 100000)
        throw ValidationError(std::string("TP_PRECISION must be an integer >= 15, got '") + env + "'");
    return static_cast<unsigned>(v);
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(precision()) { set_precision(digits); }
PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real real_from(const Rational& q)
{
    Real n(q.get_num().get_mpz_t());
    Real d(q.get_den().get_mpz_t());
    return n / d;
}

Complex complex_from(const GaussRational& g) { return Complex(real_from(g.re), real_from(g.im)); }

Complex complex_from(double re, double im) { return Complex(Real(re), Real(im)); }

Real pi_real()
{
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real eps_real()
{
    return pow(Real(10), -static_cast<int>(precision()));
}

Complex cpow(const Complex& z, const Rational& e)
{
    if (z.real() == 0 && z.imag() == 0) {
        if (sgn(e) > 0) return Complex(0, 0);
        if (sgn(e) == 0) return Complex(1, 0);
        throw ValidationError("negative power of zero");
    }
    Real r = sqrt(z.real() * z.real() + z.imag() * z.imag());
    Real th = atan2(z.imag(), z.real());
    Real ee = real_from(e);
    Real mag = exp(ee * log(r));
    Real ang = ee * th;
    return Complex(mag * cos(ang), mag * sin(ang));
}

Complex csqrt(const Complex& z) { return cpow(z, Rational(1, 2)); }

std::string format_real(const Real& x, unsigned digits)
{
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << std::scientific << x;
    return os.str();
}

double to_double(const Real& x) { return x.convert_to<double>(); }

std::complex<double> to_cdouble(const Complex& z)
{
    return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

namespace {

std::mutex g_rule_mutex;
std::map<std::tuple<char, int, unsigned>, QuadratureRule> g_rules;

QuadratureRule make_legendre(int n)
{
    QuadratureRule q;
    q.nodes.resize(n);
    q.weights.resize(n);
    const Real tol = eps_real() * 10;
    const Real pi = pi_real();
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        Real pp;
        for (int it = 0; it < 100; ++it) {
            Real p1 = 1, p2 = 0;
            for (int j = 0; j < n; ++j) {
                Real p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) * x * p2 - j * p3) / (j + 1);
            }
            pp = n * (x * p1 - p2) / (x * x - 1);
            Real dx = p1 / pp;
            x -= dx;
            if (abs(dx) < tol) {
                // one more evaluation for the weight at the converged node
                p1 = 1, p2 = 0;
                for (int j = 0; j < n; ++j) {
                    Real p3 = p2;
                    p2 = p1;
                    p1 = ((2 * j + 1) * x * p2 - j * p3) / (j + 1);
                }
                pp = n * (x * p1 - p2) / (x * x - 1);
                break;
            }
        }
        Real w = 2 / ((1 - x * x) * pp * pp);
        q.nodes[i] = -x;
        q.nodes[n - 1 - i] = x;
        q.weights[i] = w;
        q.weights[n - 1 - i] = w;
    }
    return q;
}

// Returns (L_n(x), L_{n-1}(x)).
std::pair<Real, Real> laguerre_pair(int n, const Real& x)
{
    Real p1 = 1, p2 = 0;
    for (int j = 1; j <= n; ++j) {
        Real p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1 - x) * p2 - (j - 1) * p3) / j;
    }
    return {p1, p2};
}

QuadratureRule make_laguerre(int n)
{
    QuadratureRule q;
    q.nodes.resize(n);
    q.weights.resize(n);
    const Real tol = eps_real() * 10;
    Real z = 0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = Real(3) / (1 + Real(2.4) * n);
        } else if (i == 1) {
            z += Real(15) / (1 + Real(2.5) * n);
        } else {
            Real ai = i - 1;
            z += ((1 + Real(2.55) * ai) / (Real(1.9) * ai)) * (z - q.nodes[i - 2]);
        }
        Real deriv;
        for (int it = 0; it < 200; ++it) {
            auto [ln, lm] = laguerre_pair(n, z);
            deriv = n * (ln - lm) / z;
            Real dz = ln / deriv;
            z -= dz;
            if (abs(dz) < tol * (1 + abs(z))) break;
        }
        auto [ln, lm] = laguerre_pair(n, z);
        deriv = n * (ln - lm) / z;
        q.nodes[i] = z;
        q.weights[i] = 1 / (z * deriv * deriv);
    }
    return q;
}

const QuadratureRule& cached(char kind, int n)
{
    if (n < 1) throw ValidationError("quadrature needs at least one node");
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto key = std::make_tuple(kind, n, precision());
    auto it = g_rules.find(key);
    if (it != g_rules.end()) return it->second;
    QuadratureRule r = kind == 'L' ? make_legendre(n) : make_laguerre(n);
    return g_rules.emplace(key, std::move(r)).first->second;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) { return cached('L', n); }
const QuadratureRule& gauss_laguerre(int n) { return cached('G', n); }

Complex horner(const std::vector<Complex>& c, const Complex& x)
{
    Complex acc(0, 0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs)
{
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex(0, 0)) c.pop_back();
    if (c.size() <= 1) return {};
    int deg = static_cast<int>(c.size()) - 1;
    std::vector<Complex> d(deg);
    for (int k = 1; k <= deg; ++k) d[k - 1] = c[k] * Real(k);

    // Cauchy-type bound for the initial circle
    Real lead = abs(c.back());
    Real radius = 0;
    for (int k = 0; k < deg; ++k) {
        Real b = pow(abs(c[k]) / lead, Real(1) / (deg - k));
        if (b > radius) radius = b;
    }
    radius = 2 * radius + Real(1) / 1000;

    std::vector<Complex> z(deg);
    const Real pi = pi_real();
    for (int k = 0; k < deg; ++k) {
        Real ang = 2 * pi * k / deg + Real(0.4);
        z[k] = Complex(radius * cos(ang), radius * sin(ang));
    }
    const Real tol = eps_real() * 100;
    // clustered roots of ill-conditioned polynomials stall above tol; stop when progress does
    Real best = -1;
    int stall = 0;
    for (int it = 0; it < 2000; ++it) {
        Real worst = 0;
        for (int k = 0; k < deg; ++k) {
            Complex p = horner(c, z[k]);
            Complex dp = horner(d, z[k]);
            if (p == Complex(0, 0)) continue;
            Complex ratio = p / dp;
            Complex s(0, 0);
            for (int j = 0; j < deg; ++j)
                if (j != k) s += Complex(1, 0) / (z[k] - z[j]);
            Complex w = ratio / (Complex(1, 0) - ratio * s);
            z[k] -= w;
            Real rel = abs(w) / (1 + abs(z[k]));
            if (rel > worst) worst = rel;
        }
        if (worst < tol) break;
        if (worst > Real(1e-12)) continue;
        if (best < 0 || worst < best / 2) {
            best = worst;
            stall = 0;
        } else if (++stall > 12) {
            break;
        }
    }
    return z;
}

}  // namespace ewkb
