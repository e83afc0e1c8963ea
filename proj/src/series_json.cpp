#include "ewkb/series_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ewkb/errors.hpp"

namespace ewkb {

namespace {

std::string float_text(const Real& x)
{
    // enough digits to round-trip at the carried precision
    return "~" + format_real(x, x.precision() + 5);
}

json part_to_json(const Rational& q) { return to_string(q); }

}  // namespace

json coefficient_to_json(const Coefficient& c)
{
    if (c.is_exact()) return json::array({part_to_json(c.exact().re), part_to_json(c.exact().im)});
    Complex z = c.to_complex();
    return json::array({float_text(z.real()), float_text(z.imag())});
}

Coefficient coefficient_from_json(const json& j)
{
    json pair = j;
    if (!j.is_array()) pair = json::array({j, 0});
    if (pair.size() != 2) throw ValidationError("coefficient must be [re, im]");
    bool exact = true;
    Rational qre, qim;
    Real fre, fim;
    auto read = [&](const json& v, Rational& q, Real& f) {
        if (v.is_number_integer()) {
            q = Rational(v.dump());
            f = real_from(q);
        } else if (v.is_number_float()) {
            exact = false;
            f = Real(v.get<double>());
        } else if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (!s.empty() && s[0] == '~') {
                exact = false;
                try {
                    f = Real(s.substr(1));
                } catch (const std::exception&) {
                    throw ValidationError("malformed float coefficient: '" + s + "'");
                }
            } else {
                q = parse_rational(s);
                f = real_from(q);
            }
        } else {
            throw ValidationError("coefficient parts must be numbers or strings");
        }
    };
    read(pair[0], qre, fre);
    read(pair[1], qim, fim);
    if (exact) return Coefficient(GaussRational(qre, qim));
    return Coefficient(Complex(fre, fim));
}

json series_to_json(const PuiseuxSeries& s)
{
    json j;
    j["min_exp"] = s.min_exp().str();
    j["trunc"] = s.trunc().str();
    json coeffs = json::array();
    for (const auto& [e, c] : s.terms()) coeffs.push_back(json::array({e.str(), coefficient_to_json(c)}));
    j["coeffs"] = coeffs;
    return j;
}

PuiseuxSeries series_from_json(const json& j)
{
    const json* coeffs = nullptr;
    Exponent trunc = Exponent::infinity();
    std::optional<Exponent> min_exp;
    if (j.is_array()) {
        coeffs = &j;
    } else if (j.is_object()) {
        if (!j.contains("coeffs")) throw ValidationError("series JSON needs a \"coeffs\" array");
        coeffs = &j.at("coeffs");
        if (j.contains("trunc")) {
            const json& t = j.at("trunc");
            trunc = t.is_string() ? Exponent::parse(t.get<std::string>()) : Exponent::parse(t.dump());
        }
        if (j.contains("min_exp")) {
            const json& m = j.at("min_exp");
            min_exp = m.is_string() ? Exponent::parse(m.get<std::string>()) : Exponent::parse(m.dump());
        }
    } else {
        throw ValidationError("series JSON must be an object or an array");
    }
    if (!coeffs->is_array()) throw ValidationError("\"coeffs\" must be an array");
    PuiseuxSeries::Terms terms;
    for (const auto& item : *coeffs) {
        if (!item.is_array() || item.size() != 2) throw ValidationError("each term must be [exponent, [re, im]]");
        const json& ej = item[0];
        Exponent e = ej.is_string() ? Exponent::parse(ej.get<std::string>()) : Exponent::parse(ej.dump());
        if (e.is_inf()) throw ValidationError("term exponent cannot be infinite");
        if (e >= trunc) throw ValidationError("term z^" + e.str() + " lies at or beyond trunc " + trunc.str());
        if (min_exp && e < *min_exp) throw ValidationError("term z^" + e.str() + " lies below min_exp " + min_exp->str());
        Coefficient c = coefficient_from_json(item[1]);
        auto it = terms.find(e);
        if (it == terms.end())
            terms.emplace(e, c);
        else
            it->second += c;
    }
    return PuiseuxSeries(std::move(terms), trunc);
}

json eps_series_to_json(const EpsSeries& e)
{
    json arr = json::array();
    for (const auto& s : e.coeffs()) arr.push_back(series_to_json(s));
    return arr;
}

PuiseuxSeries parse_series_arg(const std::string& arg)
{
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\n");
    if (first == std::string::npos) throw ValidationError("empty series argument");
    if (arg[first] != '[' && arg[first] != '{') {
        std::ifstream in(arg);
        if (!in) throw ValidationError("cannot read series file '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed series JSON: ") + e.what());
    }
    return series_from_json(j);
}

json complex_to_json(const Complex& z)
{
    auto num = [](const Real& x) -> json {
        double d = to_double(x);
        if (!std::isfinite(d)) return nullptr;
        return d;
    };
    return json::array({num(z.real()), num(z.imag())});
}

Complex complex_from_json(const json& j)
{
    if (j.is_number()) return Complex(Real(j.get<double>()), Real(0));
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("complex value must be a number or [re, im]");
    return Complex(Real(j[0].get<double>()), Real(j[1].get<double>()));
}

}  // namespace ewkb
