#include "ewkb/eps_series.hpp"

#include <algorithm>

#include "ewkb/errors.hpp"

namespace ewkb {

namespace {

PuiseuxSeries capped(PuiseuxSeries s, const std::optional<Exponent>& cap)
{
    return cap ? s.truncated(*cap) : s;
}

}  // namespace

EpsSeries EpsSeries::constant(const PuiseuxSeries& c0, int order)
{
    std::vector<PuiseuxSeries> c(std::max(order, 0), PuiseuxSeries::zero());
    if (order > 0) c[0] = c0;
    return EpsSeries(std::move(c));
}

EpsSeries EpsSeries::truncated(int order) const
{
    std::vector<PuiseuxSeries> c(c_.begin(), c_.begin() + std::clamp(order, 0, this->order()));
    return EpsSeries(std::move(c));
}

EpsSeries EpsSeries::z_truncated(const Exponent& cap) const
{
    std::vector<PuiseuxSeries> c;
    for (const auto& s : c_) c.push_back(s.truncated(cap));
    return EpsSeries(std::move(c));
}

EpsSeries EpsSeries::derive_z() const
{
    std::vector<PuiseuxSeries> c;
    for (const auto& s : c_) c.push_back(derive(s));
    return EpsSeries(std::move(c));
}

EpsSeries EpsSeries::flipped() const
{
    std::vector<PuiseuxSeries> c = c_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return EpsSeries(std::move(c));
}

EpsSeries EpsSeries::shifted(int k) const
{
    std::vector<PuiseuxSeries> c(k, PuiseuxSeries::zero());
    c.insert(c.end(), c_.begin(), c_.end());
    return EpsSeries(std::move(c));
}

EpsSeries EpsSeries::scaled(const Coefficient& f) const
{
    std::vector<PuiseuxSeries> c;
    for (const auto& s : c_) c.push_back(s.scaled(f));
    return EpsSeries(std::move(c));
}

EpsSeries EpsSeries::mul_z(const PuiseuxSeries& s) const
{
    std::vector<PuiseuxSeries> c;
    for (const auto& x : c_) c.push_back(x * s);
    return EpsSeries(std::move(c));
}

EpsSeries operator+(const EpsSeries& a, const EpsSeries& b)
{
    int n = std::min(a.order(), b.order());
    std::vector<PuiseuxSeries> c;
    for (int k = 0; k < n; ++k) c.push_back(a[k] + b[k]);
    return EpsSeries(std::move(c));
}

EpsSeries operator-(const EpsSeries& a, const EpsSeries& b)
{
    int n = std::min(a.order(), b.order());
    std::vector<PuiseuxSeries> c;
    for (int k = 0; k < n; ++k) c.push_back(a[k] - b[k]);
    return EpsSeries(std::move(c));
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) { return eps_mul(a, b, std::nullopt); }

EpsSeries eps_mul(const EpsSeries& a, const EpsSeries& b, std::optional<Exponent> cap)
{
    int n = std::min(a.order(), b.order());
    std::vector<PuiseuxSeries> c;
    for (int k = 0; k < n; ++k) {
        PuiseuxSeries s = PuiseuxSeries::zero();
        for (int j = 0; j <= k; ++j) {
            if (a[j].is_zero() && a[j].trunc().is_inf()) continue;
            if (b[k - j].is_zero() && b[k - j].trunc().is_inf()) continue;
            s = s + capped(a[j] * b[k - j], cap);
        }
        c.push_back(capped(s, cap));
    }
    return EpsSeries(std::move(c));
}

EpsSeries eps_inverse(const EpsSeries& a, std::optional<Exponent> cap)
{
    if (a.order() == 0) return a;
    PuiseuxSeries inv0 = inverse(a[0], cap);
    std::vector<PuiseuxSeries> y{inv0};
    for (int k = 1; k < a.order(); ++k) {
        PuiseuxSeries s = PuiseuxSeries::zero();
        for (int j = 1; j <= k; ++j) s = s + capped(a[j] * y[k - j], cap);
        y.push_back(capped(-(s * inv0), cap));
    }
    return EpsSeries(std::move(y));
}

EpsSeries eps_exp(const EpsSeries& a, std::optional<Exponent> cap)
{
    if (a.order() == 0) return a;
    if (!a[0].is_zero()) throw ValidationError("eps_exp needs a vanishing ε^0 coefficient");
    // k y_k = sum_{j=1}^k j a_j y_{k-j}
    std::vector<PuiseuxSeries> y{PuiseuxSeries::constant(Coefficient(1))};
    for (int k = 1; k < a.order(); ++k) {
        PuiseuxSeries s = PuiseuxSeries::zero();
        for (int j = 1; j <= k; ++j) s = s + capped(a[j] * y[k - j], cap).scaled(Coefficient(static_cast<long>(j)));
        y.push_back(capped(s.scaled(Coefficient(Rational(1, k))), cap));
    }
    return EpsSeries(std::move(y));
}

EpsSeries eps_pow(const EpsSeries& a, const Rational& r, std::optional<Exponent> cap)
{
    if (a.order() == 0) return a;
    PuiseuxSeries inv0 = inverse(a[0], cap);
    std::vector<PuiseuxSeries> y{series_pow_rational(a[0], r, cap)};
    const Rational r1 = r + 1;
    for (int k = 1; k < a.order(); ++k) {
        PuiseuxSeries s = PuiseuxSeries::zero();
        for (int j = 1; j <= k; ++j) {
            Rational f = r1 * j - k;
            if (sgn(f) == 0) continue;
            s = s + capped(a[j] * y[k - j], cap).scaled(Coefficient(f));
        }
        y.push_back(capped((s * inv0).scaled(Coefficient(Rational(1, k))), cap));
    }
    return EpsSeries(std::move(y));
}

}  // namespace ewkb
