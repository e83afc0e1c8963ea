#include "ewkb/coefficient.hpp"

#include "ewkb/errors.hpp"

namespace ewkb {

bool Coefficient::is_zero() const
{
    if (auto g = std::get_if<GaussRational>(&v_)) return g->is_zero();
    const auto& c = std::get<Complex>(v_);
    return c.real() == 0 && c.imag() == 0;
}

const GaussRational& Coefficient::exact() const
{
    if (auto g = std::get_if<GaussRational>(&v_)) return *g;
    throw ValidationError("float coefficient has no exact value");
}

Complex Coefficient::to_complex() const
{
    if (auto g = std::get_if<GaussRational>(&v_)) return complex_from(*g);
    return std::get<Complex>(v_);
}

unsigned Coefficient::digits() const
{
    if (is_exact()) return 0;
    return std::get<Complex>(v_).real().precision();
}

Coefficient Coefficient::operator-() const
{
    if (auto g = std::get_if<GaussRational>(&v_)) return Coefficient(-*g);
    return Coefficient(-std::get<Complex>(v_));
}

Coefficient& Coefficient::operator+=(const Coefficient& o)
{
    if (is_exact() && o.is_exact())
        std::get<GaussRational>(v_) += std::get<GaussRational>(o.v_);
    else
        v_ = to_complex() + o.to_complex();
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o)
{
    if (is_exact() && o.is_exact())
        std::get<GaussRational>(v_) -= std::get<GaussRational>(o.v_);
    else
        v_ = to_complex() - o.to_complex();
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o)
{
    if (is_exact() && o.is_exact())
        std::get<GaussRational>(v_) *= std::get<GaussRational>(o.v_);
    else
        v_ = to_complex() * o.to_complex();
    return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o)
{
    if (o.is_zero()) throw DivisionByZeroSeries("division by zero coefficient");
    if (is_exact() && o.is_exact())
        std::get<GaussRational>(v_) /= std::get<GaussRational>(o.v_);
    else
        v_ = to_complex() / o.to_complex();
    return *this;
}

bool operator==(const Coefficient& a, const Coefficient& b)
{
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    if (a.is_exact() != b.is_exact()) return false;
    return std::get<Complex>(a.v_) == std::get<Complex>(b.v_);
}

double Coefficient::magnitude() const
{
    if (auto g = std::get_if<GaussRational>(&v_)) {
        double re = g->re.get_d(), im = g->im.get_d();
        return std::hypot(re, im);
    }
    return to_double(abs(std::get<Complex>(v_)));
}

std::string Coefficient::str() const
{
    if (auto g = std::get_if<GaussRational>(&v_)) return to_string(*g);
    const auto& c = std::get<Complex>(v_);
    unsigned d = c.real().precision();
    return "(" + format_real(c.real(), d) + ", " + format_real(c.imag(), d) + ")";
}

}  // namespace ewkb
