#include "ewkb/puiseux.hpp"

#include <numeric>
#include <sstream>

#include "ewkb/errors.hpp"

namespace ewkb {

namespace {

constexpr std::int64_t kLattice = 6;

void check_lattice(const Exponent& e)
{
    if (!e.is_inf() && kLattice % e.den() != 0)
        throw LatticeError("exponent " + e.str() + " is not on the (1/6)Z lattice");
}

// Lowest exponent any possibly-nonzero term can have.
Exponent low_bound(const PuiseuxSeries& s)
{
    if (!s.is_zero()) return s.terms().begin()->first;
    return s.trunc();
}

std::int64_t lcm_den(const PuiseuxSeries& s, const Exponent& base)
{
    std::int64_t l = 1;
    for (const auto& [e, c] : s.terms()) l = std::lcm(l, (e - base).den());
    return l;
}

Complex ipow(Complex w, std::int64_t k)
{
    if (k < 0) {
        w = Complex(1, 0) / w;
        k = -k;
    }
    Complex r(1, 0);
    while (k) {
        if (k & 1) r *= w;
        w *= w;
        k >>= 1;
    }
    return r;
}

Coefficient coeff_pow_int(const Coefficient& c, long k)
{
    Coefficient base = k < 0 ? Coefficient(1) / c : c;
    unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k);
    Coefficient r(1);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Coefficient coeff_pow_rational(const Coefficient& c, const Rational& r)
{
    if (r.get_den() == 1) return coeff_pow_int(c, r.get_num().get_si());
    if (c.is_exact()) {
        const GaussRational& g = c.exact();
        if (g.is_real() && sgn(g.re) > 0) {
            Rational root;
            if (r.get_den().fits_ulong_p() && exact_root(g.re, r.get_den().get_ui(), root))
                return coeff_pow_int(Coefficient(root), r.get_num().get_si());
        }
    }
    return Coefficient(cpow(c.to_complex(), r));
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(Terms terms, Exponent trunc) : trunc_(trunc)
{
    check_lattice(trunc_);
    for (auto& [e, c] : terms) {
        check_lattice(e);
        if (e >= trunc_ || c.is_zero()) continue;
        terms_.emplace(e, std::move(c));
    }
}

PuiseuxSeries PuiseuxSeries::zero(Exponent trunc) { return PuiseuxSeries({}, trunc); }

PuiseuxSeries PuiseuxSeries::constant(const Coefficient& c, Exponent trunc)
{
    return monomial(c, Exponent(0), trunc);
}

PuiseuxSeries PuiseuxSeries::monomial(const Coefficient& c, Exponent e, Exponent trunc)
{
    Terms t;
    t.emplace(e, c);
    return PuiseuxSeries(std::move(t), trunc);
}

PuiseuxSeries PuiseuxSeries::polynomial(const std::vector<Coefficient>& c, Exponent trunc)
{
    Terms t;
    for (std::size_t k = 0; k < c.size(); ++k) t.emplace(Exponent(static_cast<std::int64_t>(k)), c[k]);
    return PuiseuxSeries(std::move(t), trunc);
}

Exponent PuiseuxSeries::min_exp() const
{
    if (!terms_.empty()) return terms_.begin()->first;
    return trunc_.is_inf() ? Exponent(0) : trunc_;
}

bool PuiseuxSeries::is_exact() const
{
    for (const auto& [e, c] : terms_)
        if (!c.is_exact()) return false;
    return true;
}

bool PuiseuxSeries::is_taylor() const
{
    for (const auto& [e, c] : terms_)
        if (!e.is_integer() || e.num() < 0) return false;
    return true;
}

bool PuiseuxSeries::on_lattice(std::int64_t den) const
{
    for (const auto& [e, c] : terms_)
        if (den % e.den() != 0) return false;
    return true;
}

Coefficient PuiseuxSeries::coeff(const Exponent& e) const
{
    if (e >= trunc_) throw ValidationError("coefficient of z^" + e.str() + " is beyond the truncation order " + trunc_.str());
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient() : it->second;
}

Coefficient PuiseuxSeries::leading() const
{
    if (terms_.empty()) throw DivisionByZeroSeries("series has no nonzero term within its truncation window");
    return terms_.begin()->second;
}

PuiseuxSeries PuiseuxSeries::truncated(const Exponent& t) const
{
    PuiseuxSeries r = *this;
    if (t < r.trunc_) {
        r.trunc_ = t;
        r.terms_.erase(r.terms_.lower_bound(t), r.terms_.end());
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::shifted(const Exponent& e) const
{
    Terms t;
    for (const auto& [k, c] : terms_) t.emplace(k + e, c);
    return PuiseuxSeries(std::move(t), trunc_ + e);
}

PuiseuxSeries PuiseuxSeries::scaled(const Coefficient& c) const
{
    Terms t;
    if (!c.is_zero())
        for (const auto& [k, v] : terms_) t.emplace(k, v * c);
    return PuiseuxSeries(std::move(t), trunc_);
}

PuiseuxSeries PuiseuxSeries::slice(const Exponent& lo, const Exponent& hi) const
{
    Terms t;
    for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first < hi; ++it) t.emplace(it->first, it->second);
    return PuiseuxSeries(std::move(t), trunc_);
}

PuiseuxSeries PuiseuxSeries::operator-() const { return scaled(Coefficient(-1)); }

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    PuiseuxSeries r;
    r.trunc_ = min(a.trunc_, b.trunc_);
    r.terms_ = a.terms_;
    r.terms_.erase(r.terms_.lower_bound(r.trunc_), r.terms_.end());
    for (const auto& [e, c] : b.terms_) {
        if (e >= r.trunc_) break;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    PuiseuxSeries r;
    r.trunc_ = min(a.trunc_ + low_bound(b), b.trunc_ + low_bound(a));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e = ea + eb;
            if (e >= r.trunc_) break;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_.emplace(e, ca * cb);
            else
                it->second += ca * cb;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second.is_zero())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    if (a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

Complex PuiseuxSeries::evaluate(const Complex& z) const
{
    if (terms_.empty()) return Complex(0, 0);
    std::int64_t l = 1;
    for (const auto& [e, c] : terms_) l = std::lcm(l, e.den());
    bool at_zero = z.real() == 0 && z.imag() == 0;
    if (at_zero) {
        if (terms_.begin()->first < Exponent(0)) throw ValidationError("series has a pole at z = 0");
        return coeff(Exponent(0)).to_complex();
    }
    Complex w = l == 1 ? z : cpow(z, Rational(1, static_cast<long>(l)));
    Complex acc(0, 0);
    for (const auto& [e, c] : terms_) acc += c.to_complex() * ipow(w, e.num() * (l / e.den()));
    return acc;
}

std::string PuiseuxSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e != Exponent(0)) os << "*z^" << e.str();
    }
    if (first) os << "0";
    if (!trunc_.is_inf()) os << " + O(z^" << trunc_.str() << ")";
    return os.str();
}

void require_taylor(const PuiseuxSeries& s, const std::string& what)
{
    if (!s.is_taylor()) throw ValidationError(what + " must be a Taylor series (integer exponents >= 0)");
}

PuiseuxSeries inverse(const PuiseuxSeries& b, std::optional<Exponent> cap)
{
    if (b.is_zero()) throw DivisionByZeroSeries("division by a series with zero leading term within its truncation window");
    const Exponent v = b.terms().begin()->first;
    const Coefficient c = b.terms().begin()->second;
    if (b.size() == 1 && b.trunc().is_inf()) {
        auto r = PuiseuxSeries::monomial(Coefficient(1) / c, -v);
        return cap ? r.truncated(*cap) : r;
    }
    Exponent res_trunc = b.trunc().is_inf() ? Exponent::infinity() : b.trunc() - v - v;
    if (cap) res_trunc = min(res_trunc, *cap);
    if (res_trunc.is_inf())
        throw ValidationError("inverse of a multi-term exact series needs a truncation order");
    std::int64_t l = std::lcm(lcm_den(b, v), (res_trunc + v).den());
    Exponent rel = res_trunc + v;  // relative truncation
    if (rel <= Exponent(0)) return PuiseuxSeries::zero(res_trunc);
    // number of relative lattice steps t^k with k/l < rel
    std::int64_t K = (rel.num() * l + rel.den() - 1) / rel.den();
    std::vector<Coefficient> u(K), y(K);
    Coefficient cinv = Coefficient(1) / c;
    for (const auto& [e, coef] : b.terms()) {
        Exponent d = e - v;
        std::int64_t k = d.num() * (l / d.den());
        if (k > 0 && k < K) u[k] = coef * cinv;
    }
    y[0] = Coefficient(1);
    for (std::int64_t k = 1; k < K; ++k) {
        Coefficient s;
        for (std::int64_t j = 1; j <= k; ++j)
            if (!u[j].is_zero() && !y[k - j].is_zero()) s -= u[j] * y[k - j];
        y[k] = s;
    }
    PuiseuxSeries::Terms t;
    for (std::int64_t k = 0; k < K; ++k)
        if (!y[k].is_zero()) t.emplace(-v + Exponent(k, l), y[k] * cinv);
    return PuiseuxSeries(std::move(t), res_trunc);
}

PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b, std::optional<Exponent> cap)
{
    if (b.is_zero()) throw DivisionByZeroSeries("division by a series with zero leading term within its truncation window");
    std::optional<Exponent> inv_cap;
    if (cap) inv_cap = *cap - low_bound(a);
    if (!a.trunc().is_inf()) {
        Exponent need = a.trunc() - low_bound(a) - b.terms().begin()->first;
        inv_cap = inv_cap ? min(*inv_cap, need) : need;
    }
    if (b.size() == 1 && b.trunc().is_inf()) inv_cap.reset();
    PuiseuxSeries r = a * inverse(b, inv_cap);
    return cap ? r.truncated(*cap) : r;
}

PuiseuxSeries series_arith(const PuiseuxSeries& a, const PuiseuxSeries& b, ArithOp op,
                           std::optional<Exponent> cap)
{
    PuiseuxSeries r;
    switch (op) {
    case ArithOp::add: r = a + b; break;
    case ArithOp::sub: r = a - b; break;
    case ArithOp::mul: r = a * b; break;
    case ArithOp::div: return divide(a, b, cap);
    }
    return cap ? r.truncated(*cap) : r;
}

PuiseuxSeries series_pow_rational(const PuiseuxSeries& a, const Rational& r, std::optional<Exponent> cap)
{
    if (a.is_zero()) throw DivisionByZeroSeries("power of a series with zero leading term within its truncation window");
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) throw ValidationError("exponent too large");
    const Exponent re(r.get_num().get_si(), r.get_den().get_si());
    const Exponent v = a.terms().begin()->first;
    const Coefficient c = a.terms().begin()->second;
    Exponent lead = v * re;
    if (kLattice % lead.den() != 0)
        throw LatticeError("leading exponent " + lead.str() + " of the power is not on the exponent lattice");
    if (r == 1) return cap ? a.truncated(*cap) : a;
    if (sgn(r) == 0) {
        auto one = PuiseuxSeries::constant(Coefficient(1), a.trunc().is_inf() ? Exponent::infinity() : a.trunc() - v);
        return cap ? one.truncated(*cap) : one;
    }
    Coefficient cr = coeff_pow_rational(c, r);
    if (a.size() == 1 && a.trunc().is_inf()) {
        auto m = PuiseuxSeries::monomial(cr, lead);
        return cap ? m.truncated(*cap) : m;
    }
    if (a.trunc().is_inf() && r.get_den() == 1 && sgn(r) > 0) {
        // exact polynomial power by repeated squaring
        PuiseuxSeries base = a, acc = PuiseuxSeries::constant(Coefficient(1));
        unsigned long n = r.get_num().get_ui();
        while (n) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return cap ? acc.truncated(*cap) : acc;
    }
    Exponent res_trunc = a.trunc().is_inf() ? Exponent::infinity() : lead + (a.trunc() - v);
    if (cap) res_trunc = min(res_trunc, *cap);
    if (res_trunc.is_inf()) throw ValidationError("power of a multi-term exact series needs a truncation order");
    Exponent rel = res_trunc - lead;
    if (rel <= Exponent(0)) return PuiseuxSeries::zero(res_trunc);
    std::int64_t l = std::lcm(lcm_den(a, v), rel.den());
    std::int64_t K = (rel.num() * l + rel.den() - 1) / rel.den();
    std::vector<Coefficient> w(K), y(K);
    Coefficient cinv = Coefficient(1) / c;
    for (const auto& [e, coef] : a.terms()) {
        Exponent d = e - v;
        std::int64_t k = d.num() * (l / d.den());
        if (k > 0 && k < K) w[k] = coef * cinv;
    }
    // J.C.P. Miller recurrence for (1 + w)^r
    y[0] = Coefficient(1);
    const Rational r1 = r + 1;
    for (std::int64_t k = 1; k < K; ++k) {
        Coefficient s;
        for (std::int64_t j = 1; j <= k; ++j) {
            if (w[j].is_zero() || y[k - j].is_zero()) continue;
            Rational f = r1 * Rational(static_cast<long>(j)) - Rational(static_cast<long>(k));
            s += Coefficient(f) * w[j] * y[k - j];
        }
        y[k] = s / Coefficient(Rational(static_cast<long>(k)));
    }
    PuiseuxSeries::Terms t;
    for (std::int64_t k = 0; k < K; ++k)
        if (!y[k].is_zero()) t.emplace(lead + Exponent(k, l), y[k] * cr);
    return PuiseuxSeries(std::move(t), res_trunc);
}

PuiseuxSeries derive(const PuiseuxSeries& a)
{
    PuiseuxSeries::Terms t;
    for (const auto& [e, c] : a.terms()) {
        if (e == Exponent(0)) continue;
        t.emplace(e - Exponent(1), c * Coefficient(e.to_rational()));
    }
    return PuiseuxSeries(std::move(t), a.trunc().is_inf() ? a.trunc() : a.trunc() - Exponent(1));
}

PuiseuxSeries antiderive(const PuiseuxSeries& a)
{
    PuiseuxSeries::Terms t;
    for (const auto& [e, c] : a.terms()) {
        if (e == Exponent(-1))
            throw LogObstruction("antiderivative of a series with nonzero z^-1 coefficient (" + c.str() + ")");
        Exponent e1 = e + Exponent(1);
        t.emplace(e1, c / Coefficient(e1.to_rational()));
    }
    return PuiseuxSeries(std::move(t), a.trunc() + Exponent(1));
}

PuiseuxSeries series_calculus(const PuiseuxSeries& a, CalculusOp op)
{
    return op == CalculusOp::derive ? derive(a) : antiderive(a);
}

PuiseuxSeries compose(const PuiseuxSeries& f, const PuiseuxSeries& g, std::optional<Exponent> cap)
{
    require_taylor(f, "outer series of a composition");
    require_taylor(g, "inner series of a composition");
    if (!g.is_zero() && g.terms().begin()->first == Exponent(0))
        throw ValidationError("inner series of a composition must vanish at 0");
    Exponent vg = low_bound(g);
    if (vg.is_inf()) {
        // g == 0 exactly
        if (f.trunc() <= Exponent(0)) return PuiseuxSeries::zero(Exponent(0));
        auto r = PuiseuxSeries::constant(f.coeff(Exponent(0)));
        return cap ? r.truncated(*cap) : r;
    }
    Exponent tr = f.trunc().is_inf() ? Exponent::infinity() : f.trunc() * vg;
    if (cap) tr = min(tr, *cap);
    if (f.is_zero()) return PuiseuxSeries::zero(tr);
    std::int64_t K = f.terms().rbegin()->first.num();
    if (!tr.is_inf()) {
        // terms f_k g^k with k*vg >= tr cannot contribute
        std::int64_t kmax = static_cast<std::int64_t>(tr.to_double() / vg.to_double()) + 1;
        K = std::min(K, kmax);
    }
    PuiseuxSeries acc = PuiseuxSeries::constant(f.coeff(Exponent(K)));
    for (std::int64_t k = K - 1; k >= 0; --k) {
        acc = acc * g;
        if (!tr.is_inf()) acc = acc.truncated(tr);
        acc = acc + PuiseuxSeries::constant(f.coeff(Exponent(k)));
    }
    return acc.truncated(tr);
}

PuiseuxSeries series_compose_invert(const PuiseuxSeries& f, std::optional<int> order)
{
    require_taylor(f, "series to invert");
    if (f.trunc() <= Exponent(1) || f.coeff(Exponent(0)) != Coefficient())
        throw ValidationError("series to invert must satisfy f(0) = 0 with known linear term");
    if (f.coeff(Exponent(1)).is_zero()) throw ValidationError("f'(0) = 0: series is not invertible as a formal map");
    Exponent tr = f.trunc();
    if (order) tr = min(tr, Exponent(*order + 1));
    if (tr.is_inf()) throw ValidationError("inverting an exact series needs an order");
    std::int64_t N = tr.num() / tr.den();
    if (tr.den() != 1) N += 1;
    // phi = q / f(q), known up to q^{N-1}
    PuiseuxSeries phi = inverse(f.shifted(Exponent(-1)), Exponent(N - 1));
    PuiseuxSeries::Terms t;
    PuiseuxSeries pw = PuiseuxSeries::constant(Coefficient(1));
    for (std::int64_t n = 1; n < N; ++n) {
        pw = pw * phi;
        Coefficient gn = pw.coeff(Exponent(n - 1)) / Coefficient(Rational(static_cast<long>(n)));
        t.emplace(Exponent(n), gn);
    }
    return PuiseuxSeries(std::move(t), Exponent(N));
}

PuiseuxSeries schwarzian(const PuiseuxSeries& f, std::optional<Exponent> cap)
{
    PuiseuxSeries d1 = derive(f), d2 = derive(d1), d3 = derive(d2);
    PuiseuxSeries r2 = divide(d2, d1, cap);
    PuiseuxSeries r3 = divide(d3, d1, cap);
    PuiseuxSeries s = r3 - (r2 * r2).scaled(Coefficient(Rational(3, 2)));
    return cap ? s.truncated(*cap) : s;
}

double max_abs_coeff(const PuiseuxSeries& s)
{
    double m = 0;
    for (const auto& [e, c] : s.terms()) m = std::max(m, c.magnitude());
    return m;
}

}  // namespace ewkb
