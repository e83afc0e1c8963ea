#include "ewkb/contour.hpp"

#include <array>
#include <cmath>
#include <optional>

#include "ewkb/errors.hpp"

namespace ewkb {

ContourSpec ContourSpec::polyline(std::vector<Complex> nodes)
{
    ContourSpec s;
    s.kind = Kind::polyline;
    s.path = std::move(nodes);
    return s;
}

double ContourSpec::tol() const
{
    if (tolerance > 0) return tolerance;
    return std::pow(10.0, -static_cast<double>(precision()) + 8);
}

namespace {

struct Panel {
    Complex a, b;
    int depth;
};

Complex gauss_panel(const Integrand& f, const Complex& a, const Complex& b, int n)
{
    const QuadratureRule& q = gauss_legendre(n);
    Complex half = (b - a) / Real(2), mid = (a + b) / Real(2);
    Complex acc(0, 0);
    for (int i = 0; i < n; ++i) acc += q.weights[i] * f(mid + half * q.nodes[i]);
    return acc * half;
}

Real abs_panel(const Integrand& f, const Complex& a, const Complex& b, int n)
{
    const QuadratureRule& q = gauss_legendre(n);
    Complex half = (b - a) / Real(2), mid = (a + b) / Real(2);
    Real acc = 0;
    for (int i = 0; i < n; ++i) acc += q.weights[i] * abs(f(mid + half * q.nodes[i]));
    return acc * abs(half);
}

}  // namespace

LaplaceResult integrate_polyline(const Integrand& f, const std::vector<Complex>& path, int nodes,
                                 double tol, int pieces)
{
    if (path.size() < 2) throw ValidationError("polyline needs at least two nodes");
    if (nodes < 2) throw ValidationError("need at least two nodes per panel");
    if (pieces < 1) pieces = 1;
    LaplaceResult out;
    out.value = Complex(0, 0);

    // rough L1 scale from a fixed subdivision
    Real total_len = 0, l1 = 0;
    std::vector<Panel> work;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const Complex a = path[k], b = path[k + 1];
        total_len += abs(b - a);
        for (int i = 0; i < pieces; ++i) {
            Complex pa = a + (b - a) * Real(i) / Real(pieces);
            Complex pb = a + (b - a) * Real(i + 1) / Real(pieces);
            l1 += abs_panel(f, pa, pb, nodes);
            out.nodes_used += nodes;
            work.push_back({pa, pb, 0});
        }
    }
    if (total_len == 0) return out;
    const Real floor_abs = Real(tol) * (l1 > 0 ? l1 : Real(1));

    Real err = 0;
    const int max_depth = 30;
    const long max_panels = 4000;
    long panels = 0;
    bool ok = true;
    while (!work.empty()) {
        if (++panels > max_panels)
            throw ContourFailure("adaptive quadrature exhausted its panel budget");
        Panel p = work.back();
        work.pop_back();
        Complex i1 = gauss_panel(f, p.a, p.b, nodes);
        Complex i2 = gauss_panel(f, p.a, p.b, 2 * nodes);
        out.nodes_used += 3 * nodes;
        Real diff = abs(i2 - i1);
        Real allowed = floor_abs * abs(p.b - p.a) / total_len;
        if (diff <= allowed || p.depth >= max_depth) {
            if (diff > allowed) ok = false;
            out.value += i2;
            err += diff;
            continue;
        }
        Complex m = (p.a + p.b) / Real(2);
        work.push_back({m, p.b, p.depth + 1});
        work.push_back({p.a, m, p.depth + 1});
    }
    out.est_error = to_double(err);
    if (!ok) throw ContourFailure("adaptive quadrature did not reach tolerance (est " +
                                  format_real(err, 6) + ")");
    return out;
}

std::vector<Complex> valley_polyline(int degree, bool negative_lead, const Complex& eps, int from,
                                     int to, const Real& radius)
{
    const Real pi = pi_real();
    auto dir = [&](int k) {
        Real ang = (arg(eps) + 2 * pi * k + (negative_lead ? pi : Real(0))) / degree;
        return Complex(radius * cos(ang), radius * sin(ang));
    };
    return {dir(from), Complex(0, 0), dir(to)};
}

namespace {

struct PathSingular {};

// Steepest-descent path through saddle s of S = zẑ - ẑ³/3:
// S(ẑ) - S(s) = g τ², ẑ = s + τ v(τ), with s v² + τ v³/3 + g = 0.
class DescentPath {
public:
    DescentPath(const Complex& s, const Complex& g) : s_(s), g_(g)
    {
        v0_ = csqrt(-g / s);
    }

    // v and dẑ/dτ at τ = sign·k·h for k = 0..K (stops early if `inside` fails).
    struct Node {
        Complex zhat, dz;
    };
    std::vector<Node> march(int sign, const Real& h, int K,
                            const std::function<bool(const Complex&)>& inside) const
    {
        std::vector<Node> out;
        Complex v = v0_;
        Real tau = 0;
        out.push_back({s_, v});
        int sub = static_cast<int>(ceil(h / Real(0.05)).convert_to<long>());
        if (sub < 1) sub = 1;
        Real dt = sign * h / sub;
        for (int k = 1; k <= K; ++k) {
            for (int j = 0; j < sub; ++j) {
                v = step(v, tau, dt);
                tau += dt;
            }
            Complex zh = s_ + Complex(tau, 0) * v;
            if (inside && !inside(zh)) break;
            out.push_back({zh, v + Complex(tau, 0) * dvdt(v, tau)});
        }
        return out;
    }

    // Far end of the path in direction sign, for valley classification.
    Complex far_end(int sign, const Real& tmax) const
    {
        Complex v = v0_;
        Real tau = 0;
        Real dt = Real(0.05);
        const Real target = 8 * (abs(s_) + 1);
        while (abs(Complex(tau, 0) * v) < target) {
            if (abs(tau) > tmax * 100) break;
            Real step_len = abs(tau) * Real(0.05);
            if (step_len < dt) step_len = dt;
            v = step(v, tau, sign * step_len);
            tau += sign * step_len;
        }
        return s_ + Complex(tau, 0) * v;
    }

    const Complex& saddle() const { return s_; }

private:
    Complex fval(const Complex& v, const Real& tau) const
    {
        return s_ * v * v + Complex(tau, 0) * v * v * v / Real(3) + g_;
    }
    Complex fder(const Complex& v, const Real& tau) const
    {
        return Real(2) * s_ * v + Complex(tau, 0) * v * v;
    }
    Complex dvdt(const Complex& v, const Real& tau) const
    {
        return -(v * v * v / Real(3)) / fder(v, tau);
    }

    Complex step(const Complex& v, const Real& tau, const Real& dt) const
    {
        // midpoint predictor, Newton corrector
        Complex k1 = dvdt(v, tau);
        Complex vm = v + Complex(dt / 2, 0) * k1;
        Complex pred = v + Complex(dt, 0) * dvdt(vm, tau + dt / 2);
        Real t1 = tau + dt;
        Complex w = pred;
        const Real tol = eps_real() * 10;
        bool conv = false;
        for (int it = 0; it < 60; ++it) {
            Complex d = fder(w, t1);
            if (abs(d) < Real(0.02) * abs(s_ * w)) throw PathSingular{};
            Complex dw = fval(w, t1) / d;
            w -= dw;
            if (abs(dw) <= tol * abs(w)) {
                conv = true;
                break;
            }
        }
        if (!conv || abs(w - pred) > Real(0.2) * abs(v)) throw PathSingular{};
        // the other saddle is a branch point of v(τ)
        if (abs(s_ + Complex(t1, 0) * w + s_) < Real(0.02) * abs(s_)) throw PathSingular{};
        return w;
    }

    Complex s_, g_, v0_;
};

int nearest_valley(const Complex& zhat, const Complex& eps)
{
    const Real pi = pi_real();
    Real best = 10;
    int idx = -1;
    for (int k = 0; k < 3; ++k) {
        Real c = (arg(eps) + pi + 2 * pi * k) / 3;
        Real d = arg(zhat * Complex(cos(c), -sin(c)));
        d = abs(d);
        if (d < best) {
            best = d;
            idx = k;
        }
    }
    if (best > pi / 6) throw PathSingular{};
    return idx;
}

}  // namespace

LaplaceResult cubic_contour_integral(const Complex& z, const Complex& eps, const Integrand& amp,
                                     const ContourSpec& spec,
                                     const std::function<bool(const Complex&)>& inside,
                                     CubicContourInfo* info)
{
    if (!(eps.real() > 0)) throw ValidationError("contour integrals need Re(eps) > 0");
    const double tol = spec.tol();
    const Real ln_tol = -log(Real(tol));
    auto S = [&](const Complex& zh) { return z * zh - zh * zh * zh / Real(3); };
    const Real sgn = spec.reversed ? Real(-1) : Real(1);

    if (spec.kind == ContourSpec::Kind::polyline || abs(z) < Real(1e-8)) {
        std::vector<Complex> path = spec.path;
        if (spec.kind != ContourSpec::Kind::polyline || path.empty()) {
            Real R = cbrt(3 * abs(eps) * (ln_tol + 30)) + 2 * sqrt(abs(z)) + 1;
            path = valley_polyline(3, true, eps, 2, 0, R);
        }
        if (inside)
            for (const auto& p : path)
                if (!inside(p)) throw DomainExit("contour node leaves the amplitude's domain");
        auto f = [&](const Complex& zh) { return exp(-S(zh) / eps) * amp(zh); };
        LaplaceResult r = integrate_polyline(f, path, spec.nodes_per_segment, tol);
        r.value *= sgn;
        if (info) *info = CubicContourInfo{{}, 0, 0};
        return r;
    }

    const Complex s0 = csqrt(z);
    const std::array<double, 5> rotations{0.0, 0.3, -0.3, 0.6, -0.6};
    for (double rot : rotations) {
        const Complex g = eps * Complex(Real(std::cos(rot)), Real(std::sin(rot)));
        const Real decay = Real(std::cos(rot));
        const Real T = sqrt((ln_tol + 25) / decay);
        try {
            std::array<DescentPath, 2> paths{DescentPath(s0, g), DescentPath(-s0, g)};
            std::array<std::array<int, 2>, 2> ends{};
            for (int p = 0; p < 2; ++p) {
                ends[p][0] = nearest_valley(paths[p].far_end(-1, T), eps);
                ends[p][1] = nearest_valley(paths[p].far_end(+1, T), eps);
                if (ends[p][0] == ends[p][1]) throw PathSingular{};
            }
            // c₊(e_b₊ - e_a₊) + c₋(e_b₋ - e_a₋) = e_0 - e_2
            std::optional<std::array<int, 2>> weights;
            for (int cp = -1; cp <= 1 && !weights; ++cp)
                for (int cm = -1; cm <= 1 && !weights; ++cm) {
                    std::array<int, 3> v{0, 0, 0};
                    v[ends[0][1]] += cp;
                    v[ends[0][0]] -= cp;
                    v[ends[1][1]] += cm;
                    v[ends[1][0]] -= cm;
                    if (v[0] == 1 && v[1] == 0 && v[2] == -1) weights = std::array<int, 2>{cp, cm};
                }
            if (!weights) throw PathSingular{};

            LaplaceResult out;
            Complex prev;
            bool have_prev = false;
            Real tail_total = 0;
            for (int level = 0; level < 10; ++level) {
                const Real h = Real(0.5) / (1 << level);
                const int K = static_cast<int>(ceil(T / h).convert_to<long>());
                Complex total(0, 0);
                Real l1 = 0;
                tail_total = 0;
                for (int p = 0; p < 2; ++p) {
                    int w = (*weights)[p];
                    if (w == 0) continue;
                    const Complex pref = exp(-S(paths[p].saddle()) / eps);
                    const Complex gq = g / eps;
                    Complex acc(0, 0);
                    for (int side : {-1, 1}) {
                        auto nodes = paths[p].march(side, h, K, inside);
                        for (std::size_t k = (side < 0 ? 1 : 0); k < nodes.size(); ++k) {
                            Real tau = side * h * Real(static_cast<long>(k));
                            Complex val = exp(-gq * tau * tau) * amp(nodes[k].zhat) * nodes[k].dz;
                            acc += val;
                            l1 += abs(val) * abs(pref);
                            out.nodes_used += 1;
                        }
                        if (static_cast<int>(nodes.size()) <= K) {
                            // cut by the domain: Gaussian tail beyond the last node
                            Real te = h * Real(static_cast<long>(nodes.size() - 1));
                            Complex last = exp(-gq * te * te) * amp(nodes.back().zhat) * nodes.back().dz;
                            Real fac = te > Real(0.5) ? 1 / (2 * te * decay) : Real(1);
                            tail_total += abs(last) * fac * abs(pref);
                        }
                    }
                    total += Real(w) * pref * acc * h;
                }
                l1 *= h;
                if (have_prev) {
                    Real diff = abs(total - prev);
                    Real scale = abs(total);
                    if (scale < l1 * eps_real() * 100) scale = l1 * eps_real() * 100;
                    // a domain cut limits the attainable accuracy to the dropped tail
                    if (diff <= Real(tol) * scale + 2 * tail_total) {
                        if (tail_total > Real(1e-3) * abs(total))
                            throw DomainExit("steepest-descent path leaves the amplitude's domain before decaying");
                        out.value = sgn * total;
                        out.est_error = to_double(diff + tail_total);
                        if (info) *info = CubicContourInfo{{(*weights)[0], (*weights)[1]}, rot, to_double(tail_total)};
                        return out;
                    }
                }
                prev = total;
                have_prev = true;
            }
            throw ContourFailure("trapezoid refinement did not converge on the descent path");
        } catch (const PathSingular&) {
            continue;
        }
    }
    throw ContourFailure("no regular steepest-descent geometry found near a Stokes configuration");
}

LaplaceResult laplace_ray(const Integrand& B, const Complex& eps, const Real& theta, double tol)
{
    const Complex dir(cos(theta), sin(theta));
    const Complex kappa = dir / eps;
    const Real a = kappa.real();
    if (!(a > 0)) throw ValidationError("Laplace ray must lie in the half-plane Re(ξ/ε) > 0");
    const Real b = kappa.imag();
    // (1/ε)∫ e^{-ξ/ε}B dξ = (κ/a) ∫_0^∞ e^{-u} e^{-i b u / a} B(u e^{iθ}/a) du
    auto g = [&](const Real& u) {
        Real ph = -b * u / a;
        return Complex(cos(ph), sin(ph)) * B(dir * (u / a));
    };
    const Complex front = kappa / a;
    LaplaceResult out;
    Complex prev;
    for (int n = 32; n <= 256; n *= 2) {
        const QuadratureRule& q = gauss_laguerre(n);
        Complex acc(0, 0);
        for (int i = 0; i < n; ++i) acc += q.weights[i] * g(q.nodes[i]);
        out.nodes_used += n;
        if (n > 32) {
            Real diff = abs(acc - prev);
            if (diff <= Real(tol) * abs(acc)) {
                out.value = front * acc;
                out.est_error = to_double(diff * abs(front));
                return out;
            }
        }
        prev = acc;
    }
    // Gauss-Legendre panels on [0, U]
    const Real U = -log(Real(tol)) + 60;
    auto f = [&](const Complex& u) { return exp(-u.real()) * g(u.real()); };
    std::vector<Complex> path;
    const int segs = static_cast<int>(ceil(U / 4).convert_to<long>());
    for (int i = 0; i <= segs; ++i) path.push_back(Complex(U * i / segs, 0));
    LaplaceResult r = integrate_polyline(f, path, 32, tol, 1);
    out.value = front * r.value;
    out.est_error = to_double(abs(front) * (Real(r.est_error) + exp(-U) * abs(g(U))));
    out.nodes_used += r.nodes_used;
    return out;
}

}  // namespace ewkb
