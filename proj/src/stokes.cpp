#include "ewkb/stokes.hpp"

#include <cmath>

#include "ewkb/errors.hpp"

namespace ewkb {

namespace {

using cd = std::complex<double>;

double wrap(double a)
{
    while (a > M_PI) a -= 2 * M_PI;
    while (a <= -M_PI) a += 2 * M_PI;
    return a;
}

std::vector<cd> double_coeffs(const PuiseuxSeries& V)
{
    require_taylor(V, "V");
    std::vector<cd> c;
    for (const auto& [e, v] : V.terms()) {
        auto k = static_cast<std::size_t>(e.num());
        if (c.size() <= k) c.resize(k + 1);
        c[k] = to_cdouble(v.to_complex());
    }
    return c;
}

cd poly_eval(const std::vector<cd>& c, cd q)
{
    cd acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
    return acc;
}

// V(q)/q for V(0) = 0
cd poly_eval_div_q(const std::vector<cd>& c, cd q)
{
    cd acc = 0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * q + c[k];
    return acc;
}

// √ closest to `prev`
cd continued_sqrt(cd v, cd prev)
{
    cd r = std::sqrt(v);
    return std::abs(r - prev) <= std::abs(r + prev) ? r : -r;
}

const std::vector<std::pair<double, double>>& gl_double(int n)
{
    static thread_local std::map<int, std::vector<std::pair<double, double>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const QuadratureRule& q = gauss_legendre(n);
    std::vector<std::pair<double, double>> r;
    for (int i = 0; i < n; ++i) r.emplace_back(to_double(q.nodes[i]), to_double(q.weights[i]));
    return cache.emplace(n, std::move(r)).first->second;
}

}  // namespace

std::string sector_name(Sector s)
{
    switch (s) {
    case Sector::S1: return "S1";
    case Sector::S2: return "S2";
    case Sector::Sm1: return "S-1";
    case Sector::L0: return "L0";
    case Sector::L1: return "L1";
    case Sector::Lm1: return "L-1";
    }
    return "?";
}

bool is_line(Sector s) { return s == Sector::L0 || s == Sector::L1 || s == Sector::Lm1; }

const char* sector_convention()
{
    return "L0, L1, L-1 at arg z = 2a/3, 2a/3 + 2pi/3, 2a/3 - 2pi/3; S1 between L0 and L1 "
           "(counterclockwise), S2 between L1 and L-1, S-1 between L-1 and L0";
}

std::vector<double> canonical_ray_angles(double alpha)
{
    const double base = 2 * alpha / 3;
    return {wrap(base), wrap(base + 2 * M_PI / 3), wrap(base - 2 * M_PI / 3)};
}

StokesDiagram canonical_stokes_lines(double alpha, double extent, int nodes)
{
    StokesDiagram d;
    d.alpha = alpha;
    d.turning_points = {cd(0, 0)};
    auto ang = canonical_ray_angles(alpha);
    const int branch_id[3] = {0, 1, -1};
    for (int k = 0; k < 3; ++k) {
        StokesLine line;
        line.branch = branch_id[k];
        for (int i = 0; i < nodes; ++i) line.nodes.push_back(std::polar(extent * i / (nodes - 1), ang[k]));
        d.lines.push_back(std::move(line));
    }
    d.sector_labels = {{"S1", "between L0 and L1"}, {"S2", "between L1 and L-1"},
                       {"S-1", "between L-1 and L0"}};
    return d;
}

Sector classify_sector(const std::complex<double>& z, double alpha, double tol)
{
    if (z == cd(0, 0)) throw ValidationError("z = 0 is the turning point");
    double t = wrap(std::arg(z) - 2 * alpha / 3);
    const double third = 2 * M_PI / 3;
    if (std::abs(t) < tol) return Sector::L0;
    if (std::abs(t - third) < tol) return Sector::L1;
    if (std::abs(t + third) < tol) return Sector::Lm1;
    if (t > 0 && t < third) return Sector::S1;
    if (t < 0 && t > -third) return Sector::Sm1;
    return Sector::S2;
}

double stokes_condition(const PuiseuxSeries& V, const std::complex<double>& q, double alpha)
{
    const auto c = double_coeffs(V);
    if (c.empty() || std::abs(c[0]) != 0.0) throw ValidationError("V(0) must vanish");
    if (c.size() < 2 || c[1] == cd(0, 0)) throw NotSimpleTurningPoint("V'(0) must be nonzero");
    // ∫_0^q √V dt = 2 q^{3/2} ∫_0^1 s² √(V(qs²)/(qs²)) ds
    const auto& rule = gl_double(80);
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, w] : rule) pts.emplace_back((x + 1) / 2, w / 2);
    std::sort(pts.begin(), pts.end());
    cd root = std::sqrt(c[1]);
    cd acc = 0;
    for (const auto& [s, w] : pts) {
        cd t = q * s * s;
        root = continued_sqrt(poly_eval_div_q(c, t), root);
        acc += w * s * s * root;
    }
    cd W = 2.0 * std::pow(q, 1.5) * acc;
    return (std::exp(cd(0, -alpha)) * W).imag();
}

StokesDiagram potential_stokes_curves(const PuiseuxSeries& V, double alpha, const TraceOptions& opt)
{
    const auto c = double_coeffs(V);
    if (c.empty() || std::abs(c[0]) != 0.0) throw ValidationError("V(0) must vanish");
    if (c.size() < 2 || c[1] == cd(0, 0)) throw NotSimpleTurningPoint("V'(0) must be nonzero");
    if (!(opt.step > 0) || !(opt.extent > 0)) throw ValidationError("trace step and extent must be positive");

    StokesDiagram d;
    d.alpha = alpha;
    d.turning_points = {cd(0, 0)};
    d.sector_labels = {{"S1", "between the curves leaving 0 near L0 and L1"},
                       {"S2", "between the curves leaving 0 near L1 and L-1"},
                       {"S-1", "between the curves leaving 0 near L-1 and L0"}};
    const cd rot = std::exp(cd(0, -alpha));
    const cd sq1 = std::sqrt(c[1]);
    const auto& rule = gl_double(12);

    // ∫_a^b √V with √V continued from `root` at a; updates `root` to the value at b
    auto segment = [&](cd a, cd b, cd& root) {
        cd acc = 0;
        cd r = root;
        cd half = (b - a) / 2.0, mid = (a + b) / 2.0;
        std::vector<std::pair<double, double>> pts(rule.begin(), rule.end());
        std::sort(pts.begin(), pts.end());
        for (const auto& [x, w] : pts) {
            r = continued_sqrt(poly_eval(c, mid + half * x), r);
            acc += w * r;
        }
        root = continued_sqrt(poly_eval(c, b), r);
        return acc * half;
    };

    const double start_r = std::min(opt.step, 1e-3);
    const int branch_id[3] = {0, 1, -1};
    for (int k = 0; k < 3; ++k) {
        StokesLine line;
        line.branch = branch_id[k];
        line.nodes.push_back(cd(0, 0));
        // local form W ≈ (2/3) √V'(0) q^{3/2}
        double th = (2.0 / 3.0) * (alpha - std::arg(sq1)) + 2 * M_PI * branch_id[k] / 3;
        cd q = std::polar(start_r, th);
        cd root = sq1 * std::sqrt(q);
        // W from the first terms of the local expansion √V = √(V'(0) q) (1 + V''(0)q/(4V'(0)) + ...)
        cd W = (2.0 / 3.0) * sq1 * std::pow(q, 1.5);
        if (c.size() > 2) W += (2.0 / 5.0) * sq1 * (c[2] / (2.0 * c[1])) * std::pow(q, 2.5);
        cd dir = q / std::abs(q);
        for (int step = 0; step < opt.max_steps; ++step) {
            // corrector: δq = -i Im(g)/g', g = e^{-iα}W
            for (int it = 0; it < 50; ++it) {
                double im = (rot * W).imag();
                if (std::abs(im) < opt.tol) break;
                cd dq = cd(0, -1) * im / (rot * root);
                W += segment(q, q + dq, root);
                q += dq;
            }
            double resid = std::abs((rot * W).imag());
            d.max_node_residual = std::max(d.max_node_residual, resid);
            line.nodes.push_back(q);
            if (std::abs(q) >= opt.extent) break;
            if (opt.region_radius > 0 && std::abs(q) >= opt.region_radius) {
                if (opt.throw_on_escape)
                    throw TraceEscape("Stokes curve leaves the analyticity region |q| < " +
                                      std::to_string(opt.region_radius));
                line.escaped = true;
                break;
            }
            if (std::abs(poly_eval(c, q)) < 1e-8) break;  // reached another turning point
            // predictor along e^{-iα}√V dq real, continuing the current direction
            cd u = std::conj(rot * root);
            u /= std::abs(u);
            if ((u * std::conj(dir)).real() < 0) u = -u;
            dir = u;
            cd next = q + opt.step * u;
            W += segment(q, next, root);
            q = next;
        }
        d.lines.push_back(std::move(line));
    }
    return d;
}

}  // namespace ewkb
