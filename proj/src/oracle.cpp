#include "levy/oracle.hpp"

#include "levy/grid.hpp"
#include "levy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace levy {

namespace {

constexpr double pi = std::numbers::pi;

OracleReport make_report(double oracle, double closed, double err)
{
    OracleReport r;
    r.oracle_value = oracle;
    r.closed_value = closed;
    r.rel_diff = std::abs(oracle - closed) / std::max(std::abs(closed), 1e-300);
    r.quadrature_error_estimate = err;
    return r;
}

void require(const quad::QuadResult& r, const char* what)
{
    if (!r.converged)
        throw QuadratureError(what, r.value, r.abs_error);
}

std::vector<double> geometric_breaks(double a, double b, double first, double ratio)
{
    std::vector<double> br{a};
    for (double x = a + first; x < b; x = a + (x - a) * ratio)
        br.push_back(x);
    br.push_back(b);
    return br;
}

} // namespace

QuadratureSpec oracle_quadrature()
{
    QuadratureSpec q;
    q.abs_tol = 1e-13;
    q.rel_tol = 1e-11;
    return q;
}

OracleReport oracle_phi0(FractionalExponent s, double kappa, double T, const QuadratureSpec& q)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("oracle_phi0: requires s > 1/2");
    q.validate();
    // t = tau^p removes the t^{-1/(2s)} endpoint singularity
    const double p = 2.0 * v / (2.0 * v - 1.0);
    const double tau_max = std::pow(T, 1.0 / p);
    double worst_rel = 0.0;
    auto f = [&](double tau) {
        if (tau <= 0.0)
            tau = 1e-300;
        const double t = std::pow(tau, p);
        const auto u = u_eval_quadrature(KernelPoint{0.0, t, s, kappa}, q);
        worst_rel = std::max(worst_rel, u.error_estimate / std::abs(u.value));
        return u.value * p * std::pow(tau, p - 1.0);
    };
    const auto r = quad::integrate(f, 0.0, tau_max, 0.0, 1e-12, 256);
    require(r, "oracle_phi0: t-integral did not converge");
    const double closed = phi0(s, kappa, T).value;
    return make_report(r.value, closed, r.abs_error + worst_rel * std::abs(r.value));
}

OracleReport oracle_moment(FractionalExponent s, double kappa, double T, const QuadratureSpec& q, double Y)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("oracle_moment: requires s > 1/2 (moment diverges otherwise)");
    q.validate();
    if (Y <= 0.0)
        Y = std::max(400.0, 20.0 * kappa);
    double err_acc = 0.0;
    auto f = [&](double y) {
        const auto u = u_eval_quadrature(KernelPoint{y, 1.0, s, kappa}, q);
        err_acc = std::max(err_acc, u.error_estimate * y);
        return y * u.value;
    };
    auto br = geometric_breaks(0.0, Y, 0.25 * kappa, 1.5);
    const auto r = quad::integrate(f, std::span<const double>(br), 1e-12, 1e-10, 4096);
    require(r, "oracle_moment: y-integral did not converge");
    const double c = tail_coefficient(s, 1.0, kappa);
    const double tail = c * std::pow(Y, 1.0 - 2.0 * v) / (2.0 * v - 1.0);
    const double M = 2.0 * (r.value + tail);
    const double ell = M * std::pow(T, (1.0 + 2.0 * v) / (2.0 * v)) * 2.0 * v / (1.0 + 2.0 * v);
    const double closed = mean_displacement(s, kappa, T);
    const double scale = ell / M;
    auto rep = make_report(ell, closed, scale * 2.0 * (r.abs_error + err_acc * Y));
    rep.tail_correction = 2.0 * tail * scale;
    return rep;
}

OracleReport oracle_remote(FractionalExponent s, double kappa, double L, double T, const QuadratureSpec& q)
{
    if (!(L > 0.0) || !(T > 0.0) || !(kappa > 0.0))
        throw DomainError("oracle_remote: requires kappa, L, T > 0");
    q.validate();
    double err_acc = 0.0;
    auto f = [&](double t) {
        if (t <= 0.0)
            return 0.0;
        const auto u = u_eval_quadrature(KernelPoint{L, t, s, kappa}, q);
        err_acc = std::max(err_acc, u.error_estimate);
        return u.value;
    };
    auto br = geometric_breaks(0.0, T, T * 1e-6, 4.0);
    const auto r = quad::integrate(f, std::span<const double>(br), 0.0, 1e-10, 2048);
    require(r, "oracle_remote: t-integral did not converge");
    const double closed = remote_success_approx(s, kappa, L, T);
    return make_report(r.value, closed, r.abs_error + err_acc * T);
}

LatticeReport oracle_lattice(FractionalExponent s, double lambda, double t, int n_terms)
{
    if (!(lambda > 0.0) || !(t > 0.0))
        throw DomainError("oracle_lattice: requires lambda, t > 0");
    if (n_terms < 1)
        throw DomainError("oracle_lattice: n_terms must be positive");
    const double v = s.value();
    QuadratureSpec q;
    q.abs_tol = 1e-12;
    q.rel_tol = 1e-11;

    LatticeReport rep;
    const double phys = grid::lattice_physical_sum(s, lambda, t, n_terms, q);
    // remainder k > n from the tail law, midpoint-integral estimate
    const double c = tail_coefficient(s, t, 1.0);
    const double p = 1.0 + 2.0 * v;
    const double tail = 2.0 * c / std::pow(lambda, p) * std::pow(n_terms + 0.5, 1.0 - p) / (p - 1.0);
    if (tail > 1e-6 * phys)
        throw QuadratureError("oracle_lattice: physical-side tail exceeds tolerance", phys, tail);
    const double physical = phys + tail;
    rep.physical_terms = 2 * n_terms + 1;
    rep.physical_tail = tail;

    // frequency side, stop when a term falls below 1e-16 of the running sum
    double freq = 1.0;  // k = 0
    int k = 1;
    for (; k <= n_terms; ++k) {
        const double term = 2.0 * std::exp(-std::pow(2.0 * pi * k / lambda, 2.0 * v) * t);
        freq += term;
        if (term < 1e-16 * freq)
            break;
    }
    if (k > n_terms)
        throw QuadratureError("oracle_lattice: frequency series not converged within n_terms", freq / lambda, 0.0);
    freq /= lambda;
    rep.frequency_terms = 2 * k + 1;

    const double err = 2.0 * n_terms * q.abs_tol + 1e-3 * tail;
    rep.poisson = make_report(physical, freq, err);
    rep.reduction = make_report(freq, u_origin_closed(s, t, 1.0), 0.0);
    return rep;
}

} // namespace levy
