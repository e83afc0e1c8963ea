#include "ewkb/poly2.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "ewkb/errors.hpp"

namespace ewkb {

Poly2::Poly2(Terms t) : t_(std::move(t)) { prune(); }

void Poly2::prune()
{
    for (auto it = t_.begin(); it != t_.end();) {
        if (sgn(it->second) == 0)
            it = t_.erase(it);
        else
            ++it;
    }
}

Poly2 Poly2::term(const Rational& c, int i, int j)
{
    Terms t;
    t[{i, j}] = c;
    return Poly2(std::move(t));
}

Rational Poly2::coeff(int i, int j) const
{
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

int Poly2::degree_w() const
{
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

Poly2 Poly2::d_z() const
{
    Terms t;
    for (const auto& [k, c] : t_)
        if (k.first > 0) t[{k.first - 1, k.second}] += c * k.first;
    return Poly2(std::move(t));
}

Poly2 Poly2::d_w() const
{
    Terms t;
    for (const auto& [k, c] : t_)
        if (k.second > 0) t[{k.first, k.second - 1}] += c * k.second;
    return Poly2(std::move(t));
}

Poly2 Poly2::int_w() const
{
    Terms t;
    for (const auto& [k, c] : t_) t[{k.first, k.second + 1}] += c / (k.second + 1);
    return Poly2(std::move(t));
}

Poly2 Poly2::scale_z(const Rational& s) const
{
    Terms t;
    for (const auto& [k, c] : t_) {
        Rational p = 1;
        for (int i = 0; i < k.first; ++i) p *= s;
        t[k] = c * p;
    }
    return Poly2(std::move(t));
}

Poly2 Poly2::w_slice(int j) const
{
    Terms t;
    for (const auto& [k, c] : t_)
        if (k.second == j) t[{k.first, 0}] = c;
    return Poly2(std::move(t));
}

Poly2 Poly2::operator-() const { return Rational(-1) * *this; }

Poly2 operator+(const Poly2& a, const Poly2& b)
{
    Poly2::Terms t = a.t_;
    for (const auto& [k, c] : b.t_) t[k] += c;
    return Poly2(std::move(t));
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b)
{
    Poly2::Terms t;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) t[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return Poly2(std::move(t));
}

Poly2 operator*(const Rational& c, const Poly2& a)
{
    Poly2::Terms t;
    if (sgn(c) != 0)
        for (const auto& [k, v] : a.t_) t[k] = v * c;
    return Poly2(std::move(t));
}

Complex Poly2::evaluate(const Complex& z, const Complex& w) const
{
    Complex acc(0, 0);
    for (const auto& [k, c] : t_) {
        Complex m(real_from(c), 0);
        for (int i = 0; i < k.first; ++i) m *= z;
        for (int j = 0; j < k.second; ++j) m *= w;
        acc += m;
    }
    return acc;
}

std::string Poly2::str(const std::string& zname, const std::string& wname) const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest w-degree first, like the usual tables
    std::vector<std::pair<Key, Rational>> items(t_.begin(), t_.end());
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.first.second != y.first.second) return x.first.second > y.first.second;
        return x.first.first < y.first.first;
    });
    for (const auto& [k, c] : items) {
        Rational a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool unit = a == 1 && (k.first || k.second);
        if (!unit) os << to_string(a);
        auto var = [&](const std::string& n, int p) {
            if (p == 0) return;
            if (!unit) os << "*";
            os << n;
            if (p > 1) os << "^" << p;
            unit = false;
        };
        var(wname, k.second);
        var(zname, k.first);
    }
    return os.str();
}

bool divide_in_z(const Poly2& num, const Poly2& den, Poly2& quot)
{
    auto to_vec = [](const Poly2& p) {
        std::vector<Rational> v;
        for (const auto& [k, c] : p.terms()) {
            if (k.second != 0) throw ValidationError("divide_in_z expects polynomials in z only");
            if (static_cast<int>(v.size()) <= k.first) v.resize(k.first + 1);
            v[k.first] = c;
        }
        return v;
    };
    std::vector<Rational> n = to_vec(num), d = to_vec(den);
    while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
    if (d.empty()) throw DivisionByZeroSeries("polynomial division by zero");
    Poly2::Terms q;
    while (n.size() >= d.size()) {
        while (!n.empty() && sgn(n.back()) == 0) n.pop_back();
        if (n.size() < d.size()) break;
        std::size_t shift = n.size() - d.size();
        Rational f = n.back() / d.back();
        q[{static_cast<int>(shift), 0}] = f;
        for (std::size_t k = 0; k < d.size(); ++k) n[k + shift] -= f * d[k];
        n.pop_back();
    }
    for (const auto& c : n)
        if (sgn(c) != 0) return false;
    quot = Poly2(std::move(q));
    return true;
}

}  // namespace ewkb
