#include "levy/kernel.hpp"

#include "levy/quadrature.hpp"
#include "levy/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace levy {

namespace {

constexpr double pi = std::numbers::pi;

struct Reduced {
    double y;      // |x| / scale
    double scale;  // kappa t^{1/(2s)}
    double alpha;  // 2s
};

Reduced reduce(const KernelPoint& p)
{
    const double s = p.s.value();
    const double scale = p.kappa * std::pow(p.t, 1.0 / (2.0 * s));
    return {std::abs(p.x) / scale, scale, 2.0 * s};
}

struct Integral {
    double value;
    double error;
};

std::vector<double> uniform_breaks(double upper, double width, int max_subdivisions)
{
    const int cap = std::max(1, max_subdivisions / 2);
    int n = static_cast<int>(std::ceil(upper / width));
    n = std::clamp(n, 1, cap);
    std::vector<double> br(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        br[static_cast<std::size_t>(i)] = upper * i / n;
    return br;
}

void require_converged(const quad::QuadResult& r, const char* what, double to_u)
{
    if (!r.converged)
        throw QuadratureError(std::string(what) + ": subdivision budget exhausted", r.value * to_u,
                              r.abs_error * to_u);
}

// bound on int_c^inf exp(-theta^alpha) for alpha >= 1, c >= 1
double decay_tail(double c, double alpha, double damp)
{
    return std::exp(-damp * std::pow(c, alpha)) / (damp * alpha * std::pow(c, alpha - 1.0));
}

double decay_cutoff(double alpha, double damp, double tau)
{
    double c = std::max(1.0, std::pow(std::log(1.0 / tau) / damp, 1.0 / alpha));
    while (decay_tail(c, alpha, damp) > tau)
        c *= 1.05;
    return c;
}

// I(y) = int_0^inf exp(-theta^alpha) cos(y theta) dtheta on the real axis
Integral direct_integral(const Reduced& r, const QuadratureSpec& q)
{
    const double tol = q.abs_tol * pi * r.scale;
    const double tau = std::max(1e-3 * tol, std::numeric_limits<double>::min());
    const bool fixed = q.frequency_cutoff.kind == FrequencyCutoff::Kind::Fixed;
    const double theta_fixed = 2.0 * pi * r.scale * q.frequency_cutoff.value;

    if (r.alpha < 1.0) {
        if (r.y != 0.0)
            throw DomainError("kernel: real-axis route needs s >= 1/2 unless x = 0");
        // v = theta^alpha turns the integrand into a Gamma density
        const double a = 1.0 / r.alpha - 1.0;
        double vcut = fixed ? std::pow(theta_fixed, r.alpha) : std::max(2.0 * a + 1.0, std::log(1.0 / tau));
        auto vtail = [&](double v) { return 2.0 * std::exp(-v) * std::pow(v, a) / r.alpha; };
        if (!fixed)
            while (vtail(vcut) > tau)
                vcut *= 1.05;
        auto f = [&](double v) { return std::exp(-v) * std::pow(v, a) / r.alpha; };
        const auto br = uniform_breaks(vcut, 1.0, q.max_subdivisions);
        const auto res = quad::integrate(f, std::span<const double>(br), tol, q.rel_tol, q.max_subdivisions);
        require_converged(res, "kernel quadrature", 1.0 / (pi * r.scale));
        return {res.value, res.abs_error + (vcut > 2.0 * a ? vtail(vcut) : 1.0)};
    }

    const double cut = fixed ? theta_fixed : decay_cutoff(r.alpha, 1.0, tau);
    const double trunc = cut >= 1.0 ? decay_tail(cut, r.alpha, 1.0) : 1.0;
    const double y = r.y;
    const double alpha = r.alpha;
    auto f = [y, alpha](double th) { return std::exp(-std::pow(th, alpha)) * std::cos(y * th); };
    const double width = y > 0.0 ? std::min(1.0, pi / (2.0 * y)) : 1.0;
    const auto br = uniform_breaks(cut, width, q.max_subdivisions);
    const auto res = quad::integrate(f, std::span<const double>(br), tol, q.rel_tol, q.max_subdivisions);
    require_converged(res, "kernel quadrature", 1.0 / (pi * r.scale));
    return {res.value, res.abs_error + trunc};
}

// Same integral on theta = r e^{i phi}; the cosine becomes a decaying exponential.
Integral contour_integral(const Reduced& r, const QuadratureSpec& q)
{
    if (!(r.y > 0.0))
        throw DomainError("kernel: rotated route needs x != 0");
    const double tol = q.abs_tol * pi * r.scale;
    const double tau = std::max(1e-3 * tol, std::numeric_limits<double>::min());
    const double alpha = r.alpha;
    const double y = r.y;
    const double phi = pi / (4.0 * std::max(alpha, 1.0));
    const double sp = std::sin(phi), cp = std::cos(phi);
    const double ca = std::cos(alpha * phi), sa = std::sin(alpha * phi);

    const double ys = y * sp;
    double R = std::max(std::log(1.0 / (tau * ys)) / ys, 1.0 / ys);
    if (alpha >= 1.0)
        R = std::min(R, decay_cutoff(alpha, ca, tau));
    const double trunc = std::exp(-ys * R) / ys;

    auto f = [=](double rr) {
        const double ra = std::pow(rr, alpha);
        return std::exp(-ra * ca - ys * rr) * std::cos(phi + y * rr * cp - ra * sa);
    };
    const double width = std::min(R / 16.0, pi / (2.0 * y * cp));
    const auto br = uniform_breaks(R, width, q.max_subdivisions);
    const auto res = quad::integrate(f, std::span<const double>(br), tol, q.rel_tol, q.max_subdivisions);
    require_converged(res, "kernel contour quadrature", 1.0 / (pi * r.scale));
    return {res.value, res.abs_error + trunc};
}

KernelValue finish(const Integral& I, const Reduced& r, KernelMode mode)
{
    const double to_u = 1.0 / (pi * r.scale);
    return {I.value * to_u, I.error * to_u, mode};
}

} // namespace

void QuadratureSpec::validate() const
{
    if (!(abs_tol >= 1e-14) || !(rel_tol >= 1e-14))
        throw DomainError("quadrature spec: tolerances must be >= 1e-14");
    if (max_subdivisions < 16)
        throw DomainError("quadrature spec: max_subdivisions must be >= 16");
    if (frequency_cutoff.kind == FrequencyCutoff::Kind::Fixed && !(frequency_cutoff.value > 0.0))
        throw DomainError("quadrature spec: fixed frequency cutoff must be > 0");
}

void KernelPoint::validate() const
{
    if (!std::isfinite(x))
        throw DomainError("kernel point: x not finite");
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainError("kernel point: requires t > 0");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw DomainError("kernel point: requires kappa > 0");
}

double kappa_s(FractionalExponent s)
{
    const double v = s.value();
    if (v >= 1.0)
        throw DivergenceError("kappa_s diverges as s -> 1");
    const double h = specfun::h_of_s(s).value;
    return std::exp(-std::log(h) / (2.0 * v)) / (2.0 * pi);
}

double kappa_s_gamma_form(FractionalExponent s)
{
    const double v = s.value();
    if (v >= 1.0)
        throw DivergenceError("kappa_s diverges as s -> 1");
    if (v == 0.5)
        throw DomainError("kappa_s gamma form is indeterminate at s = 1/2");
    const double inner = -specfun::cos_pi(v) * specfun::gamma(-2.0 * v).value / specfun::zeta(1.0 + 2.0 * v).value;
    return std::pow(inner, 1.0 / (2.0 * v));
}

double kappa_for(KappaMode mode, FractionalExponent s)
{
    return mode == KappaMode::Unit ? 1.0 : kappa_s(s);
}

KernelValue u_eval_route(const KernelPoint& p, KernelMode route, const QuadratureSpec& q)
{
    p.validate();
    q.validate();
    const Reduced r = reduce(p);
    switch (route) {
    case KernelMode::Direct:
        return finish(direct_integral(r, q), r, KernelMode::Direct);
    case KernelMode::Contour:
        return finish(contour_integral(r, q), r, KernelMode::Contour);
    case KernelMode::TailLaw: {
        if (r.y == 0.0)
            throw DomainError("kernel: tail law undefined at x = 0");
        const double s = p.s.value();
        const double lead = tail_coefficient(p.s, p.t, p.kappa) / std::pow(std::abs(p.x), 1.0 + 2.0 * s);
        const double a = r.alpha;
        // next two terms of the asymptotic series; the first of them vanishes at s = 1/2
        const double ly = std::log(r.y);
        const double second = std::exp(specfun::log_gamma(2.0 * a + 1.0) - (2.0 * a + 1.0) * ly) *
                              std::abs(specfun::sin_pi(a)) / 2.0;
        const double third = std::exp(specfun::log_gamma(3.0 * a + 1.0) - (3.0 * a + 1.0) * ly) *
                             std::abs(specfun::sin_pi(1.5 * a)) / 6.0;
        return {lead, (second + third) / (pi * r.scale), KernelMode::TailLaw};
    }
    }
    throw DomainError("kernel: unknown route");
}

KernelValue u_eval_quadrature(const KernelPoint& p, const QuadratureSpec& q)
{
    p.validate();
    const Reduced r = reduce(p);
    const bool direct = r.y == 0.0 || (r.alpha >= 1.0 && r.y <= tail_law_threshold);
    return u_eval_route(p, direct ? KernelMode::Direct : KernelMode::Contour, q);
}

KernelValue u_eval(const KernelPoint& p, const QuadratureSpec& q)
{
    p.validate();
    if (reduce(p).y > tail_law_threshold)
        return u_eval_route(p, KernelMode::TailLaw, q);
    return u_eval_quadrature(p, q);
}

double u_origin_closed(FractionalExponent s, double t, double kappa)
{
    if (!(t > 0.0) || !(kappa > 0.0))
        throw DomainError("u_origin_closed: requires t > 0 and kappa > 0");
    const double v = s.value();
    return specfun::gamma(1.0 / (2.0 * v)).value / (2.0 * pi * kappa * v * std::pow(t, 1.0 / (2.0 * v)));
}

double tail_coefficient(FractionalExponent s, double t, double kappa)
{
    if (!(t > 0.0) || !(kappa > 0.0))
        throw DomainError("tail_coefficient: requires t > 0 and kappa > 0");
    const double v = s.value();
    return std::pow(kappa, 2.0 * v) * t * specfun::gamma(1.0 + 2.0 * v).value * specfun::sin_pi(v) / pi;
}

} // namespace levy
