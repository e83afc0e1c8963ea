#include "ewkb/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ewkb/airy.hpp"
#include "ewkb/errors.hpp"
#include "ewkb/hardy.hpp"
#include "ewkb/pde.hpp"
#include "ewkb/reduction.hpp"
#include "ewkb/stokes.hpp"
#include "ewkb/transport.hpp"

namespace ewkb {

Complex parse_complex(const std::string& text)
{
    auto part = [&](const std::string& s) {
        std::string t = s;
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
        if (t.empty()) throw ValidationError("malformed complex number '" + text + "'");
        char* end = nullptr;
        std::strtod(t.c_str(), &end);
        if (*end != '\0') throw ValidationError("malformed complex number '" + text + "'");
        return Real(t);
    };
    auto comma = text.find(',');
    if (comma == std::string::npos) return Complex(part(text), Real(0));
    return Complex(part(text.substr(0, comma)), part(text.substr(comma + 1)));
}

json poly2_to_json(const Poly2& p)
{
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back(json::array({to_string(c), json::array({k.first, k.second})}));
    return terms;
}

namespace {

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

class Csv {
public:
    explicit Csv(const std::string& path) : path_(path) {}
    bool enabled() const { return !path_.empty(); }
    void header(const std::vector<std::string>& cols) { rows_.push_back(join(cols)); }
    void row(const std::vector<double>& vals)
    {
        std::vector<std::string> s;
        for (double v : vals) s.push_back(fmt(v));
        rows_.push_back(join(s));
    }
    void write() const
    {
        if (!enabled()) return;
        std::ofstream f(path_);
        if (!f) throw ValidationError("cannot write plot data to '" + path_ + "'");
        for (const auto& r : rows_) f << r << "\n";
    }

private:
    static std::string join(const std::vector<std::string>& v)
    {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
        return out;
    }
    std::string path_;
    std::vector<std::string> rows_;
};

std::pair<int, int> parse_pair(const std::string& text, const std::string& what)
{
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream is(text);
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof())
        throw ValidationError(what + " must be given as 'a,b', got '" + text + "'");
    return {a, b};
}

void require_nonneg(int v, const std::string& what)
{
    if (v < 0) throw ValidationError(what + " must be nonnegative");
}

json point_json(const Complex& z, const Complex& eps, const LaplaceResult& r)
{
    json j;
    j["z"] = complex_to_json(z);
    j["eps"] = complex_to_json(eps);
    j["value"] = complex_to_json(r.value);
    j["est_error"] = r.est_error;
    return j;
}

ContourSpec contour_from_arg(const std::string& arg)
{
    if (arg.empty() || arg == "default") return {};
    std::ifstream in(arg);
    if (!in) throw ValidationError("cannot read contour file '" + arg + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed contour JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() < 2) throw ValidationError("contour file must list at least two [re, im] nodes");
    std::vector<Complex> nodes;
    for (const auto& p : j) nodes.push_back(complex_from_json(p));
    return ContourSpec::polyline(std::move(nodes));
}

json meta_json(double tol)
{
    json m;
    m["precision"] = precision();
    m["tolerance"] = tol > 0 ? tol : ContourSpec{}.tol();
    return m;
}

// ---- verify ------------------------------------------------------------------------------

PuiseuxSeries random_poly(std::mt19937& rng, int degree)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::vector<Coefficient> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(Rational(num(rng)) / den(rng));
    return PuiseuxSeries::polynomial(c);
}

bool all_zero(const std::vector<PuiseuxSeries>& v)
{
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

using Check = std::pair<std::string, std::function<std::string()>>;  // empty string means pass

std::vector<Check> identity_checks()
{
    std::vector<Check> c;
    c.emplace_back("airy_symbol_equals_transport", [] {
        auto A = airy_symbol(30);
        auto g = transport_g(PuiseuxSeries::zero(), 30);
        for (int n = 0; n <= 30; ++n)
            if (!(A.g[n] == g.g[n])) return "mismatch at n = " + std::to_string(n);
        return std::string();
    });
    c.emplace_back("riccati_symbol_consistency", [] {
        for (auto F : {PuiseuxSeries::zero(), PuiseuxSeries::constant(Coefficient(Rational(2, 7))),
                       PuiseuxSeries::polynomial({Coefficient(Rational(1, 3)), Coefficient(-2), Coefficient(1)})}) {
            auto rep = symbol_consistency(F, 4);
            if (!rep.exact_zero) return "residual " + fmt(rep.max_residual) + " for F = " + F.str();
        }
        return std::string();
    });
    c.emplace_back("transport_residual", [] {
        auto F = PuiseuxSeries::polynomial({Coefficient(Rational(1, 2)), Coefficient(0), Coefficient(-3)});
        return all_zero(wkb_residual(transport_g(F, 6), F)) ? std::string() : std::string("nonzero residual");
    });
    c.emplace_back("pde_two_routes", [] {
        std::mt19937 rng(7);
        auto F = random_poly(rng, 3), h = random_poly(rng, 2);
        auto a = pde_taylor(F, h, 12, 12), b = pde_taylor_direct(F, h, 12, 12);
        for (int n = 0; n <= 12; ++n)
            if (!(a.a[n] == b.a[n])) return "mismatch at x^" + std::to_string(n);
        return pde_residual(a, F).exact_zero ? std::string() : std::string("PDE residual nonzero");
    });
    c.emplace_back("pde_closed_form_exponential", [] {
        Rational lam(3, 5);
        auto psi = pde_taylor(PuiseuxSeries::constant(Coefficient(lam * lam)), PuiseuxSeries::constant(Coefficient(lam)), 12, 4);
        Rational term(1);
        for (int n = 0; n <= 12; ++n) {
            if (n > 0) term = term * lam / n;
            if (!(psi.a[n].truncated(Exponent(5)) == PuiseuxSeries::constant(Coefficient(term), Exponent(5))))
                return "a_" + std::to_string(n) + " = " + psi.a[n].str();
        }
        return std::string();
    });
    c.emplace_back("reduction_master_relation", [] {
        std::mt19937 rng(11);
        for (auto F : {PuiseuxSeries::zero(), PuiseuxSeries::constant(Coefficient(Rational(-3, 4))), random_poly(rng, 3)}) {
            auto red = reduce_to_airy(F, 8, 6);
            if (!all_zero(master_residual(red, F))) return "residual nonzero for F = " + F.str();
        }
        auto red = reduce_to_airy(PuiseuxSeries::constant(Coefficient(Rational(-3, 4))), 8, 6);
        for (int k = 1; k <= 8; ++k) {
            bool ok = k == 2 ? red.s[k].coeff(Exponent(0)) == Coefficient(Rational(-3, 4)) && red.s[k].size() == 1
                             : red.s[k].is_zero();
            if (!ok) return "F = c gives s_" + std::to_string(k) + " = " + red.s[k].str();
        }
        return std::string();
    });
    c.emplace_back("schwarzian_F0", [] {
        for (auto [v2, v3] : {std::pair{Rational(1, 2), Rational(0)}, {Rational(-2, 3), Rational(5, 7)}, {Rational(4), Rational(-1, 9)}}) {
            auto V = PuiseuxSeries::polynomial({Coefficient(0), Coefficient(1), Coefficient(v2), Coefficient(v3)});
            auto F = induced_potential_F(V, 2);
            Rational want = Rational(3, 7) * v3 - Rational(9, 35) * v2 * v2;
            if (!(F.coeff(Exponent(0)) == Coefficient(want))) return "F(0) = " + F.coeff(Exponent(0)).str();
        }
        return std::string();
    });
    c.emplace_back("liouville_defining_identity", [] {
        auto V = PuiseuxSeries::polynomial({Coefficient(0), Coefficient(1), Coefficient(Rational(1, 2)), Coefficient(Rational(-2, 5))});
        const int N = 8;
        auto z = liouville_map(V, N);
        // z(q)^{3/2} = (3/2) ∫_0^q √V, both as q^{3/2} times a Taylor series
        auto lhs = series_pow_rational(z, Rational(3, 2), Exponent(2 * N + 1, 2));
        auto root = series_pow_rational(V, Rational(1, 2), Exponent(2 * N - 1, 2));
        auto rhs = antiderive(root).scaled(Coefficient(Rational(3, 2)));
        auto d = (lhs - rhs);
        return d.is_zero() ? std::string() : "difference " + d.str();
    });
    c.emplace_back("airy_basis_decomposition", [] {
        auto bd = airy_basis_decomposition(transport_g(PuiseuxSeries::constant(Coefficient(Rational(2, 7))), 6), 6);
        if (!bd.reconstructs) return std::string("reconstruction fails");
        if (!bd.holomorphic) return std::string("non-holomorphic coefficient");
        return std::string();
    });
    c.emplace_back("hardy_identities", [] {
        for (int n = 1; n <= 8; ++n)
            if (!hardy_identities(hardy_S_T(n)).holds()) return "fails at n = " + std::to_string(n);
        auto S1 = hardy_S_T(1);
        Poly2 want = Poly2::term(Rational(8, 3), 0, 3) + Poly2::term(Rational(-2), 1, 1);
        if (!(S1.S == want) || !(S1.T == Poly2::constant(Rational(1, 2)))) return std::string("S_1, T_1 differ from the table");
        return std::string();
    });
    c.emplace_back("series_json_round_trip", [] {
        auto s = transport_g(PuiseuxSeries::constant(Coefficient(Rational(2, 7))), 3).g[3].truncated(Exponent(1));
        return series_from_json(series_to_json(s)) == s ? std::string() : std::string("round trip differs");
    });
    return c;
}

std::vector<Check> numeric_checks()
{
    std::vector<Check> c;
    c.emplace_back("borel_vs_contour", [] {
        Complex z(1), eps(Real("0.1"));
        auto b = airy_borel_sum(z, eps, 24, 12, 12);
        auto o = airy_contour(z, eps);
        double rel = to_double(abs(b.value - o.value) / abs(o.value));
        return rel < 1e-8 ? std::string() : "relative error " + fmt(rel);
    });
    c.emplace_back("stokes_jump", [] {
        Complex z(Real("-0.4"), Real("0.8") * sqrt(Real(3)) / 2);
        auto j = stokes_jump(z, Complex(Real("0.05")), 24);
        return j.rel_error < 1e-4 ? std::string() : "relative error " + fmt(j.rel_error);
    });
    c.emplace_back("hardy_phi1_airy_ratio", [] {
        Complex z(Real("0.7"), Real("0.2")), eps(Real("0.1"));
        Complex ratio = hardy_phi_eval(1, z, eps).value / (airy_normalization(eps) * airy_contour(z, eps).value);
        double d = to_double(abs(ratio - Complex(Real("0.5"))));
        return d < 1e-8 ? std::string() : "ratio off by " + fmt(d);
    });
    c.emplace_back("stokes_trace", [] {
        auto V = PuiseuxSeries::polynomial({Coefficient(0), Coefficient(1), Coefficient(Rational(1, 2))});
        auto d = potential_stokes_curves(V, 0.0);
        double worst = 0;
        for (const auto& l : d.lines)
            for (const auto& q : l.nodes)
                if (q != std::complex<double>(0, 0)) worst = std::max(worst, std::abs(stokes_condition(V, q, 0.0)));
        return worst < 1e-10 ? std::string() : "independent residual " + fmt(worst);
    });
    return c;
}

}  // namespace

std::vector<VerifyCheck> verify_suite(const std::string& suite)
{
    std::vector<Check> checks;
    if (suite == "identities" || suite == "all") checks = identity_checks();
    if (suite == "numeric" || suite == "all") {
        auto n = numeric_checks();
        checks.insert(checks.end(), n.begin(), n.end());
    }
    if (checks.empty()) throw ValidationError("unknown suite '" + suite + "' (identities, numeric, all)");
    std::vector<VerifyCheck> out;
    for (const auto& [name, fn] : checks) {
        VerifyCheck v;
        v.name = name;
        try {
            v.detail = fn();
            v.pass = v.detail.empty();
        } catch (const std::exception& e) {
            v.detail = e.what();
        }
        out.push_back(v);
    }
    return out;
}

namespace {

struct Common {
    std::string out_path;
    std::string plot_path;
    int digits = 0;
};

void emit(const json& j, const Common& c, std::ostream& out)
{
    if (c.out_path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(c.out_path);
    if (!f) throw ValidationError("cannot write '" + c.out_path + "'");
    f << j.dump(2) << "\n";
}

json points_or_single(json arr)
{
    if (arr.size() == 1) return arr[0];
    json j;
    j["points"] = std::move(arr);
    return j;
}

PuiseuxSeries series_or_zero(const std::string& s) { return s.empty() ? PuiseuxSeries::zero() : parse_series_arg(s); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact WKB analysis toolkit: Airy model, transport, singular PDE, reduction, Stokes geometry"};
    app.set_help_flag("--help", "print help");  // -h would clash with --h
    app.require_subcommand(1);
    Common common;
    app.add_option("--precision", common.digits, "decimal digits for float arithmetic (default TP_PRECISION or 30)");
    app.add_option("--out", common.out_path, "write JSON here instead of stdout");
    app.add_option("--plot-data", common.plot_path, "write plot-ready CSV here");

    // airy
    auto* airy = app.add_subcommand("airy", "Borel-Pade sum of A_bkw against the contour integral");
    std::string a_z;
    std::vector<std::string> a_eps;
    int a_orders = 24;
    std::string a_pade;
    double a_theta = 0;
    airy->add_option("--z", a_z, "z as re or re,im")->required();
    airy->add_option("--eps", a_eps, "eps (repeatable)")->required();
    airy->add_option("--orders", a_orders, "WKB orders N");
    airy->add_option("--pade", a_pade, "Pade degrees L,M (default N/2,N/2)");
    airy->add_option("--theta", a_theta, "Laplace ray direction");

    // transport
    auto* transport = app.add_subcommand("transport", "transport recursion g_n and Riccati consistency");
    std::string t_F;
    int t_orders = 6, t_sign = 1;
    transport->add_option("--F", t_F, "F as series JSON or file (default 0)");
    transport->add_option("--orders", t_orders, "orders N");
    transport->add_option("--sign", t_sign, "+1 or -1");

    // pde
    auto* pde = app.add_subcommand("pde", "bivariate Taylor solution of the singular PDE");
    std::string p_F, p_h, p_orders = "10,10", p_radius;
    pde->add_option("--F", p_F, "F (default 0)");
    pde->add_option("--h", p_h, "h (default 0)");
    pde->add_option("--orders", p_orders, "Nx,Nz");
    pde->add_option("--radius", p_radius, "r0,r1,R: report the convergence radius r'");

    // confluent
    auto* conf = app.add_subcommand("confluent", "contour integral of e^{-S/eps} psi");
    std::string c_F, c_h, c_z, c_orders = "30,30", c_contour = "default", c_sector;
    std::vector<std::string> c_eps;
    conf->add_option("--F", c_F, "F (default 0)");
    conf->add_option("--h", c_h, "h (default 0)");
    conf->add_option("--z", c_z, "z")->required();
    conf->add_option("--eps", c_eps, "eps (repeatable)")->required();
    conf->add_option("--orders", c_orders, "Nx,Nz");
    conf->add_option("--contour", c_contour, "default or a JSON file of [re, im] nodes");
    conf->add_option("--decompose", c_sector, "compare with the WKB sums in sector S1, S2 or S-1");

    // borel
    auto* borel = app.add_subcommand("borel", "Borel-Pade-Laplace sum of a transport symbol");
    std::string b_F, b_z, b_pade;
    std::vector<std::string> b_eps;
    int b_orders = 24, b_sign = 1;
    double b_theta = 0;
    bool b_jump = false;
    borel->add_option("--F", b_F, "F (default 0)");
    borel->add_option("--z", b_z, "z")->required();
    borel->add_option("--eps", b_eps, "eps (repeatable)")->required();
    borel->add_option("--orders", b_orders, "N");
    borel->add_option("--pade", b_pade, "L,M");
    borel->add_option("--theta", b_theta, "ray direction");
    borel->add_option("--sign", b_sign, "+1 or -1");
    borel->add_flag("--jump", b_jump, "lateral jump across the ray instead of the plain sum");

    // stokes
    auto* stokes = app.add_subcommand("stokes", "Stokes curves and sector classification");
    std::string s_V = "builtin:canonical";
    double s_alpha = 0, s_extent = 3.0, s_step = 0.01, s_region = 0;
    std::vector<std::string> s_classify;
    stokes->add_option("--V", s_V, "potential series JSON, or builtin:canonical");
    stokes->add_option("--alpha", s_alpha, "direction alpha");
    stokes->add_option("--extent", s_extent, "trace out to |q| = extent");
    stokes->add_option("--step", s_step, "trace step");
    stokes->add_option("--region", s_region, "analyticity radius of V (0: none)");
    stokes->add_option("--classify", s_classify, "z to classify (repeatable)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Liouville transform and reduction to the Airy equation");
    std::string r_V, r_F;
    int r_orders = 6, r_nz = 8;
    reduce->add_option("--V", r_V, "Schrodinger potential with V(0)=0, V'(0)=1");
    reduce->add_option("--F", r_F, "canonical F instead of V");
    reduce->add_option("--orders", r_orders, "eps orders");
    reduce->add_option("--nz", r_nz, "z orders kept");

    // hardy
    auto* hardy = app.add_subcommand("hardy", "Hardy polynomials S_n, T_n and Phi_n");
    int h_n = 1, h_power = 2;
    std::vector<std::string> h_eval;
    bool h_reversed = false;
    hardy->add_option("--n", h_n, "n >= 1")->required();
    hardy->add_option("--eval", h_eval, "z eps")->expected(2);
    hardy->add_option("--eps-power", h_power, "1 or 2: power of eps in the ODE residual");
    hardy->add_flag("--reversed", h_reversed, "reverse the path orientation");

    // verify
    auto* verify = app.add_subcommand("verify", "built-in self checks");
    std::string v_suite = "identities";
    verify->add_option("--suite", v_suite, "identities, numeric or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (common.digits < 0) throw ValidationError("precision must be at least 15 digits");
        set_precision(common.digits ? static_cast<unsigned>(common.digits) : precision_from_env());
        Csv csv(common.plot_path);
        json result;

        if (airy->parsed()) {
            require_nonneg(a_orders, "orders");
            int L = -1, M = -1;
            if (!a_pade.empty()) std::tie(L, M) = parse_pair(a_pade, "--pade");
            Complex z = parse_complex(a_z);
            csv.header({"z_re", "z_im", "eps_re", "eps_im", "value_re", "value_im", "oracle_re", "oracle_im", "rel_error"});
            json pts = json::array();
            for (const auto& e : a_eps) {
                Complex eps = parse_complex(e);
                LaplaceResult b = airy_borel_sum(z, eps, a_orders, L, M, a_theta);
                LaplaceResult o = airy_contour(z, eps);
                double rel = to_double(abs(b.value - o.value) / abs(o.value));
                json j = point_json(z, eps, b);
                j["oracle"] = complex_to_json(o.value);
                j["oracle_est_error"] = o.est_error;
                j["rel_error"] = rel;
                pts.push_back(j);
                csv.row({to_double(z.real()), to_double(z.imag()), to_double(eps.real()), to_double(eps.imag()),
                         to_double(b.value.real()), to_double(b.value.imag()), to_double(o.value.real()),
                         to_double(o.value.imag()), rel});
            }
            result = points_or_single(pts);
            result["orders"] = a_orders;
            result["meta"] = meta_json(0);
        } else if (transport->parsed()) {
            require_nonneg(t_orders, "orders");
            if (t_sign != 1 && t_sign != -1) throw ValidationError("--sign must be 1 or -1");
            PuiseuxSeries F = series_or_zero(t_F);
            WKBSymbol g = transport_g(F, t_orders, t_sign);
            result["F"] = series_to_json(F);
            result["sign"] = t_sign;
            result["g"] = eps_series_to_json(g.g);
            ConsistencyReport rep = symbol_consistency(F, t_orders);
            json cj;
            cj["exact_zero"] = rep.exact_zero;
            cj["max_residual"] = rep.max_residual;
            json C = json::array();
            for (const auto& x : rep.C) C.push_back(coefficient_to_json(x));
            cj["C"] = C;
            result["consistency"] = cj;
            csv.header({"n", "max_abs_coeff"});
            for (int n = 0; n <= t_orders; ++n) csv.row({double(n), max_abs_coeff(g.g[n])});
        } else if (pde->parsed()) {
            auto [Nx, Nz] = parse_pair(p_orders, "--orders");
            PuiseuxSeries F = series_or_zero(p_F), h = series_or_zero(p_h);
            BivariateSeries psi = pde_taylor(F, h, Nx, Nz);
            PdeResidual res = pde_residual(psi, F);
            result["Nx"] = Nx;
            result["Nz"] = Nz;
            json a = json::array();
            for (const auto& s : psi.a) a.push_back(series_to_json(s));
            result["a"] = a;
            result["residual"] = {{"exact_zero", res.exact_zero}, {"max_abs", res.max_abs}, {"worst_n", res.worst_n}};
            if (!p_radius.empty()) {
                std::istringstream is(p_radius);
                double r0 = 0, r1 = 0, R = 0;
                char c1 = 0, c2 = 0;
                if (!(is >> r0 >> c1 >> r1 >> c2 >> R) || c1 != ',' || c2 != ',')
                    throw ValidationError("--radius must be r0,r1,R");
                RadiusReport rr = convergence_radius(r0, r1, R, sup_norm(F, R), sup_norm(h, R));
                result["radius"] = {{"r0", rr.r0}, {"r1", rr.r1}, {"R", rr.R}, {"d0", rr.d0}, {"M", rr.M}, {"r_prime", rr.r_prime}};
            }
            csv.header({"n", "max_abs_coeff"});
            for (int n = 0; n <= Nx; ++n) csv.row({double(n), max_abs_coeff(psi.a[n])});
        } else if (conf->parsed()) {
            auto [Nx, Nz] = parse_pair(c_orders, "--orders");
            require_nonneg(Nx, "Nx");
            require_nonneg(Nz, "Nz");
            PuiseuxSeries F = series_or_zero(c_F), h = series_or_zero(c_h);
            Complex z = parse_complex(c_z);
            ContourSpec spec = contour_from_arg(c_contour);
            std::vector<Complex> grid;
            for (const auto& e : c_eps) grid.push_back(parse_complex(e));
            json pts = json::array();
            csv.header({"eps_re", "eps_im", "value_re", "value_im", "est_error"});
            BivariateSeries psi = pde_taylor(F, h, Nx, Nz);
            for (const auto& eps : grid) {
                LaplaceResult r = confluent_eval(psi, z, eps, spec);
                pts.push_back(point_json(z, eps, r));
                csv.row({to_double(eps.real()), to_double(eps.imag()), to_double(r.value.real()),
                         to_double(r.value.imag()), r.est_error});
            }
            result = points_or_single(pts);
            if (!c_sector.empty()) {
                DecompositionOptions opt;
                opt.confluent.Nx = Nx;
                opt.confluent.Nz = Nz;
                DecompositionReport rep = local_decomposition(F, h, z, grid, c_sector, opt);
                json rows = json::array();
                for (const auto& r : rep.rows)
                    rows.push_back({{"eps", complex_to_json(r.eps)}, {"confluent", complex_to_json(r.confluent)},
                                    {"one_term", complex_to_json(r.one_term)}, {"two_term", complex_to_json(r.two_term)},
                                    {"rel_one", r.rel_one}, {"rel_two", r.rel_two}});
                result["decomposition"] = {{"sector", rep.sector}, {"convention", sector_convention()}, {"rows", rows}};
            }
            result["meta"] = meta_json(spec.tolerance);
        } else if (borel->parsed()) {
            require_nonneg(b_orders, "orders");
            if (b_sign != 1 && b_sign != -1) throw ValidationError("--sign must be 1 or -1");
            PuiseuxSeries F = series_or_zero(b_F);
            WKBSymbol sym = transport_g(F, b_orders, b_sign);
            BorelOptions opt;
            if (!b_pade.empty()) std::tie(opt.L, opt.M) = parse_pair(b_pade, "--pade");
            opt.theta = b_theta;
            Complex z = parse_complex(b_z);
            const bool airy_case = F.is_zero() && b_sign == 1;
            json pts = json::array();
            csv.header({"eps_re", "eps_im", "value_re", "value_im", "est_error"});
            for (const auto& e : b_eps) {
                Complex eps = parse_complex(e);
                if (b_jump) {
                    StokesJump j = stokes_jump(sym, z, eps, b_orders, 0.17453292519943295, opt);
                    pts.push_back({{"z", complex_to_json(z)}, {"eps", complex_to_json(eps)},
                                   {"below", complex_to_json(j.below)}, {"above", complex_to_json(j.above)},
                                   {"jump", complex_to_json(j.jump)}, {"predicted", complex_to_json(j.predicted)},
                                   {"reference", complex_to_json(j.reference)}, {"rel_error", j.rel_error},
                                   {"est_error", j.est_error}});
                    csv.row({to_double(eps.real()), to_double(eps.imag()), to_double(j.jump.real()),
                             to_double(j.jump.imag()), j.est_error});
                    continue;
                }
                LaplaceResult r = borel_sum(sym, z, eps, b_orders, opt);
                json j = point_json(z, eps, r);
                if (airy_case) {
                    LaplaceResult o = airy_contour(z, eps);
                    j["oracle"] = complex_to_json(o.value);
                    j["rel_error"] = to_double(abs(r.value - o.value) / abs(o.value));
                }
                pts.push_back(j);
                csv.row({to_double(eps.real()), to_double(eps.imag()), to_double(r.value.real()),
                         to_double(r.value.imag()), r.est_error});
            }
            result = points_or_single(pts);
            result["meta"] = meta_json(opt.tolerance);
        } else if (stokes->parsed()) {
            StokesDiagram d;
            double indep = 0;
            if (s_V == "builtin:canonical") {
                d = canonical_stokes_lines(s_alpha, s_extent);
            } else {
                PuiseuxSeries V = parse_series_arg(s_V);
                TraceOptions opt;
                opt.extent = s_extent;
                opt.step = s_step;
                opt.region_radius = s_region;
                d = potential_stokes_curves(V, s_alpha, opt);
                for (const auto& l : d.lines)
                    for (const auto& q : l.nodes)
                        if (q != std::complex<double>(0, 0)) indep = std::max(indep, std::abs(stokes_condition(V, q, s_alpha)));
            }
            result["alpha"] = s_alpha;
            result["convention"] = sector_convention();
            result["rays"] = canonical_ray_angles(s_alpha);
            json lines = json::array();
            csv.header({"q_re", "q_im", "branch_id"});
            for (const auto& l : d.lines) {
                const auto& e = l.nodes.back();
                lines.push_back({{"branch", l.branch}, {"nodes", l.nodes.size()},
                                 {"end", json::array({e.real(), e.imag()})}, {"escaped", l.escaped}});
                for (const auto& q : l.nodes) csv.row({q.real(), q.imag(), double(l.branch)});
            }
            result["lines"] = lines;
            result["max_node_residual"] = d.max_node_residual;
            result["max_independent_residual"] = indep;
            json cls = json::array();
            for (const auto& s : s_classify) {
                Complex z = parse_complex(s);
                cls.push_back({{"z", complex_to_json(z)}, {"sector", sector_name(classify_sector(to_cdouble(z), s_alpha))}});
            }
            if (!cls.empty()) result["classify"] = cls;
        } else if (reduce->parsed()) {
            require_nonneg(r_orders, "orders");
            require_nonneg(r_nz, "nz");
            if (r_V.empty() == r_F.empty()) throw ValidationError("give exactly one of --V and --F");
            ReductionSeries red;
            PuiseuxSeries F;
            if (!r_V.empty()) {
                PuiseuxSeries V = parse_series_arg(r_V);
                PipelineResult p = schrodinger_pipeline(V, r_orders, r_nz);
                F = p.F.truncated(Exponent(r_nz + 1));
                red = p.canonical;
                result["V"] = series_to_json(V);
                result["z_of_q"] = series_to_json(p.z_of_q.truncated(Exponent(r_nz + 1)));
                json sq = json::array();
                for (const auto& s : p.s_of_q) sq.push_back(series_to_json(s));
                result["s_of_q"] = sq;
                double worst = 0;
                for (const auto& r : p.residual) worst = std::max(worst, max_abs_coeff(r));
                result["q_residual_max"] = worst;
            } else {
                F = parse_series_arg(r_F);
                red = reduce_to_airy(F, r_orders, r_nz);
            }
            result["F"] = series_to_json(F);
            result["F0"] = complex_to_json(F.coeff(Exponent(0)).to_complex());
            json s = json::array();
            for (const auto& sk : red.s) s.push_back(series_to_json(sk));
            result["s"] = s;
            auto res = master_residual(red, F);
            double worst = 0;
            for (const auto& r : res) worst = std::max(worst, max_abs_coeff(r));
            result["residual_max"] = worst;
            csv.header({"k", "max_abs_s_k"});
            for (std::size_t k = 0; k < red.s.size(); ++k) csv.row({double(k), max_abs_coeff(red.s[k])});
        } else if (hardy->parsed()) {
            if (h_n < 1) throw ValidationError("--n must be >= 1");
            HardyPair p = hardy_S_T(h_n);
            json P = json::array();
            for (const auto& c : hardy_polynomial(h_n + 2)) P.push_back(to_string(c));
            result["n"] = h_n;
            result["P"] = P;
            result["S"] = poly2_to_json(p.S);
            result["T"] = poly2_to_json(p.T);
            result["variables"] = json::array({"z", "zhat"});
            result["identities"] = hardy_identities(p).holds();
            if (!h_eval.empty()) {
                Complex z = parse_complex(h_eval[0]), eps = parse_complex(h_eval[1]);
                ContourSpec spec;
                spec.reversed = h_reversed;
                LaplaceResult r = hardy_phi_eval(h_n, z, eps, spec);
                HardyOdeCheck chk = hardy_ode_residual(h_n, z, eps, h_power, 1e-4, spec);
                json e = point_json(z, eps, r);
                e["ode_eps_power"] = h_power;
                e["ode_residual_relative"] = chk.relative;
                result["eval"] = e;
                csv.header({"z_re", "z_im", "value_re", "value_im", "ode_residual_relative"});
                csv.row({to_double(z.real()), to_double(z.imag()), to_double(r.value.real()), to_double(r.value.imag()),
                         chk.relative});
            }
        } else if (verify->parsed()) {
            auto checks = verify_suite(v_suite);
            json arr = json::array();
            bool ok = true;
            csv.header({"index", "pass"});
            int i = 0;
            for (const auto& c : checks) {
                arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                ok = ok && c.pass;
                csv.row({double(i++), c.pass ? 1.0 : 0.0});
            }
            result["suite"] = v_suite;
            result["checks"] = arr;
            result["pass"] = ok;
            emit(result, common, out);
            csv.write();
            return ok ? 0 : 3;
        }
        emit(result, common, out);
        csv.write();
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ewkb
