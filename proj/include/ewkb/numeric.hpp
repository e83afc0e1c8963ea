#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "ewkb/rational.hpp"

namespace ewkb {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Complex = std::complex<Real>;

constexpr unsigned kDefaultDigits = 30;
constexpr unsigned kMinDigits = 15;

// Working precision in decimal digits. Process-wide; set it before starting threads.
unsigned precision();
void set_precision(unsigned digits);
// TP_PRECISION if set and valid, else kDefaultDigits.
unsigned precision_from_env();

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real real_from(const Rational& q);
Complex complex_from(const GaussRational& g);
Complex complex_from(double re, double im = 0.0);
Real pi_real();
Real eps_real();  // 10^{-digits}

// Principal branch: arg in (-pi, pi].
Complex cpow(const Complex& z, const Rational& e);
Complex csqrt(const Complex& z);

std::string format_real(const Real& x, unsigned digits);
double to_double(const Real& x);
std::complex<double> to_cdouble(const Complex& z);

struct QuadratureRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

// Nodes on [-1, 1]. Cached per (n, precision).
const QuadratureRule& gauss_legendre(int n);
// Weight e^{-x} on [0, inf). Cached per (n, precision).
const QuadratureRule& gauss_laguerre(int n);

// All complex roots of sum c[k] x^k (Aberth iteration).
std::vector<Complex> poly_roots(const std::vector<Complex>& c);

Complex horner(const std::vector<Complex>& c, const Complex& x);

}  // namespace ewkb
