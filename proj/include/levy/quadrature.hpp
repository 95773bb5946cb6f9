#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace levy::quad {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452322, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed xgk nodes
inline constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk21(F& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double rk = fc * wgk[10];
    double rg = 0.0;
    double resabs = std::abs(rk);
    std::array<double, 10> f1{}, f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = h * xgk[j];
        f1[j] = f(c - dx);
        f2[j] = f(c + dx);
        const double s = f1[j] + f2[j];
        rk += wgk[j] * s;
        resabs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1)
            rg += wg[j / 2] * s;
    }
    const double mean = 0.5 * rk;
    double resasc = wgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    const double ah = std::abs(h);
    resabs *= ah;
    resasc *= ah;
    double err = std::abs((rk - rg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);
    return {a, b, rk * h, err};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod over [breaks.front(), breaks.back()],
// starting from the given breakpoints. Stops when the summed estimate is
// below max(abs_tol, rel_tol*|I|) or the panel budget is exhausted.
template <class F>
QuadResult integrate(F&& f, std::span<const double> breaks, double abs_tol, double rel_tol, int max_intervals)
{
    QuadResult out;
    if (breaks.size() < 2)
        return out;
    std::priority_queue<detail::Panel> heap;
    double total = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const auto p = detail::gk21(f, breaks[i], breaks[i + 1]);
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    int count = static_cast<int>(heap.size());
    while (err > std::max(abs_tol, rel_tol * std::abs(total)) && count < max_intervals) {
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            break;
        heap.pop();
        const auto l = detail::gk21(f, worst.a, mid);
        const auto r = detail::gk21(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    // recompute sums to drop accumulated drift
    total = 0.0;
    err = 0.0;
    auto& c = heap;
    std::vector<detail::Panel> panels;
    panels.reserve(c.size());
    while (!c.empty()) {
        panels.push_back(c.top());
        c.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    for (const auto& p : panels) {
        total += p.value;
        err += p.error;
    }
    out.value = total;
    out.abs_error = err;
    out.intervals = count;
    out.converged = err <= std::max(abs_tol, rel_tol * std::abs(total));
    return out;
}

template <class F>
QuadResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol, int max_intervals)
{
    const std::array<double, 2> br{a, b};
    return integrate(std::forward<F>(f), std::span<const double>(br), abs_tol, rel_tol, max_intervals);
}

} // namespace levy::quad
