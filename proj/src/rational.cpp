#include "ewkb/rational.hpp"

#include <limits>
#include <numeric>

#include "ewkb/errors.hpp"

namespace ewkb {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

Rational parse_decimal(const std::string& s)
{
    // [-]digits[.digits][e[+-]digits]
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_dot = false, any = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any = true;
            if (seen_dot) --scale;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any) throw ValidationError("malformed rational: '" + s + "'");
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw ValidationError("malformed rational: '" + s + "'");
        std::string ex = s.substr(i + 1);
        if (ex.empty()) throw ValidationError("malformed rational: '" + s + "'");
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(ex, &used);
        } catch (const std::exception&) {
            throw ValidationError("malformed rational: '" + s + "'");
        }
        if (used != ex.size()) throw ValidationError("malformed rational: '" + s + "'");
        scale += e;
    }
    mpz_class m(digits, 10);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale < 0 ? Rational(m, p) : Rational(m * p);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    std::string s = trim(text);
    if (s.empty()) throw ValidationError("empty rational");
    auto slash = s.find('/');
    if (slash == std::string::npos) return parse_decimal(s);
    std::string a = trim(s.substr(0, slash)), b = trim(s.substr(slash + 1));
    auto integral = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) return false;
        for (; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') return false;
        return true;
    };
    if (!integral(a) || !integral(b)) throw ValidationError("malformed rational: '" + text + "'");
    if (a[0] == '+') a.erase(0, 1);
    if (b[0] == '+') b.erase(0, 1);
    mpz_class n(a, 10), d(b, 10);
    if (d == 0) throw ValidationError("zero denominator: '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Exponent::Exponent(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw ValidationError("exponent with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

Exponent Exponent::infinity()
{
    Exponent e;
    e.inf_ = true;
    return e;
}

Exponent Exponent::parse(const std::string& text)
{
    std::string s = trim(text);
    if (s == "inf" || s == "+inf" || s == "infinity") return infinity();
    Rational q = parse_rational(s);
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw ValidationError("exponent out of range: " + s);
    return Exponent(q.get_num().get_si(), q.get_den().get_si());
}

Rational Exponent::to_rational() const
{
    if (inf_) throw ValidationError("infinite exponent has no rational value");
    Rational q(static_cast<long>(num_), static_cast<long>(den_));
    q.canonicalize();
    return q;
}

double Exponent::to_double() const
{
    if (inf_) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Exponent::str() const
{
    if (inf_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Exponent Exponent::operator-() const
{
    if (inf_) throw ValidationError("negating infinite exponent");
    return Exponent(-num_, den_);
}

Exponent operator+(const Exponent& a, const Exponent& b)
{
    if (a.inf_ || b.inf_) return Exponent::infinity();
    return Exponent(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Exponent operator-(const Exponent& a, const Exponent& b)
{
    if (b.inf_) throw ValidationError("subtracting infinite exponent");
    if (a.inf_) return a;
    return Exponent(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Exponent operator*(const Exponent& a, const Exponent& b)
{
    if (a.inf_ || b.inf_) throw ValidationError("multiplying infinite exponent");
    return Exponent(a.num_ * b.num_, a.den_ * b.den_);
}

Exponent operator/(const Exponent& a, const Exponent& b)
{
    if (a.inf_ || b.inf_ || b.num_ == 0) throw ValidationError("bad exponent division");
    return Exponent(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b)
{
    if (a.inf_ || b.inf_) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Exponent min(const Exponent& a, const Exponent& b) { return a < b ? a : b; }
Exponent max(const Exponent& a, const Exponent& b) { return a < b ? b : a; }

GaussRational& GaussRational::operator+=(const GaussRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o)
{
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o)
{
    if (o.is_zero()) throw DivisionByZeroSeries("division by zero coefficient");
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re /= o.re;
        return *this;
    }
    Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string to_string(const GaussRational& g)
{
    if (g.is_real()) return to_string(g.re);
    return "(" + to_string(g.re) + (sgn(g.im) < 0 ? " - " : " + ") + to_string(abs(g.im)) + "i)";
}

bool exact_root(const Rational& q, unsigned long k, Rational& out)
{
    if (sgn(q) < 0) return false;
    mpz_class n, d;
    if (!mpz_root(n.get_mpz_t(), q.get_num().get_mpz_t(), k)) return false;
    if (!mpz_root(d.get_mpz_t(), q.get_den().get_mpz_t(), k)) return false;
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

}  // namespace ewkb
