#include "levy/verify.hpp"

#include "levy/functionals.hpp"
#include "levy/kernel.hpp"
#include "levy/optimize.hpp"
#include "levy/oracle.hpp"
#include "levy/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace levy {

namespace {

constexpr double pi = std::numbers::pi;
namespace sf = specfun;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct Suite {
    std::vector<CheckLine> lines;

    void abs(std::string id, double expected, double got, double tol)
    {
        lines.push_back({std::move(id), expected, got, tol, std::abs(got - expected) <= tol});
    }
    void rel(std::string id, double expected, double got, double tol)
    {
        const double d = std::abs(got - expected) / std::max(std::abs(expected), 1e-300);
        lines.push_back({std::move(id), expected, got, tol, d <= tol});
    }
    void holds(std::string id, bool ok) { lines.push_back({std::move(id), 1.0, ok ? 1.0 : 0.0, 0.0, ok}); }
    void suite(const SuiteReport& r)
    {
        for (const auto& g : r.rungs)
            holds(claim_name(r.claim) + ": " + g.label, g.pass);
    }
};

template <class F>
double fd(F f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

void specfun_suite(Suite& S)
{
    S.rel("gamma(0.5)", std::sqrt(pi), sf::gamma(0.5).value, 1e-14);
    S.abs("digamma(1)", -sf::euler_gamma, sf::digamma(1.0).value, 1e-14);
    S.abs("digamma(3)-ln2-lnpi", -0.9150927, sf::digamma(3.0).value - std::log(2.0) - std::log(pi), 1e-7);
    S.rel("zeta(2)", pi * pi / 6.0, sf::zeta(2.0).value, 1e-14);
    S.rel("zeta(-1)", -1.0 / 12.0, sf::zeta(-1.0).value, 1e-14);
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double z = 0.1 * i;
        worst = std::max(worst, std::abs(sf::gamma(z).value * sf::gamma(1.0 - z).value * sf::sin_pi(z) / pi - 1.0));
    }
    S.abs("reflection max rel", 0.0, worst, 1e-11);
    worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double z = 0.1 * i;
        worst = std::max(worst, std::abs(sf::gamma(z + 1.0).value / (z * sf::gamma(z).value) - 1.0));
    }
    S.abs("recurrence max rel", 0.0, worst, 1e-12);
    for (double x : {0.55, 0.7, 0.9, 1.0})
        S.abs("psi-Z identity x=" + num(x), sf::digamma(x).value, -sf::euler_gamma - 1.0 / x - sf::harmonic_z(x).value,
              1e-9);
    bool zrange = true, hdec = true, hrange = true;
    double hworst = 0.0, hprev = 1e300;
    for (int i = 1; i < 100; ++i) {
        const double s = 0.5 + 0.5 * i / 100.0;
        const double z = sf::harmonic_z(1.0 / (2.0 * s)).value;
        zrange = zrange && z > -pi * pi / 6.0 && z <= 0.0;
        const double h = sf::h_of_s(FractionalExponent(s)).value;
        const double prod = std::pow(2.0, 1.0 - 2.0 * s) * std::pow(pi, -2.0 * s - 1.0) * sf::sin_pi(s) *
                            sf::gamma(1.0 + 2.0 * s).value * sf::zeta(1.0 + 2.0 * s).value;
        hworst = std::max(hworst, std::abs(h / prod - 1.0));
        hdec = hdec && h < hprev;
        hrange = hrange && h > 0.0 && h <= 1.0 / 3.0;
        hprev = h;
    }
    S.holds("Z(1/(2s)) in (-pi^2/6, 0]", zrange);
    S.abs("h two-form max rel", 0.0, hworst, 1e-10);
    S.holds("h decreasing on (1/2,1)", hdec);
    S.holds("h in (0,1/3]", hrange);
    S.rel("h(1/2)", 1.0 / 6.0, sf::h_of_s(FractionalExponent(0.5)).value, 1e-14);
    for (double z : {2.5, 3.0, 4.0})
        S.rel("zeta' vs FD z=" + num(z), fd([](double x) { return sf::zeta(x).value; }, z, 1e-5),
              sf::zeta_prime(z).value, 1e-6);
}

// x^{1+2s} u(x,1) at x, 2x, 4x, two Richardson passes with exponents 2s and 4s
double tail_extrapolated(FractionalExponent s, double x0)
{
    const double a = 2.0 * s.value();
    const auto q = oracle_quadrature();
    auto g = [&](double x) { return std::pow(x, 1.0 + a) * u_eval_quadrature({x, 1.0, s, 1.0}, q).value; };
    const double g1 = g(x0), g2 = g(2.0 * x0), g4 = g(4.0 * x0);
    const double r1 = std::pow(2.0, a);
    const double h1 = (r1 * g2 - g1) / (r1 - 1.0);
    const double h2 = (r1 * g4 - g2) / (r1 - 1.0);
    const double r2 = std::pow(2.0, 2.0 * a);
    return (r2 * h2 - h1) / (r2 - 1.0);
}

void kernel_suite(Suite& S)
{
    const QuadratureSpec q;
    S.abs("u(0,1) s=1/2", 1.0 / pi, u_eval({0.0, 1.0, FractionalExponent(0.5), 1.0}, q).value, 1e-8);
    S.abs("u(0,1) s=1", 0.5 / std::sqrt(pi), u_eval({0.0, 1.0, FractionalExponent(1.0), 1.0}, q).value, 1e-8);
    S.abs("u(1,2) s=1/2", 2.0 / (5.0 * pi), u_eval({1.0, 2.0, FractionalExponent(0.5), 1.0}, q).value, 1e-8);
    S.rel("kappa_1/2", 3.0 / pi, kappa_s(FractionalExponent(0.5)), 1e-12);
    double worst = 0.0;
    for (int i = 0; i < 49; ++i) {
        const FractionalExponent s(0.51 + 0.01 * i);
        worst = std::max(worst, std::abs(kappa_s_gamma_form(s) / kappa_s(s) - 1.0));
    }
    S.abs("kappa two-form max rel", 0.0, worst, 1e-10);
    for (double s : {0.6, 0.75, 0.9}) {
        const FractionalExponent fs(s);
        S.rel("tail law s=" + num(s), tail_coefficient(fs, 1.0, 1.0), tail_extrapolated(fs, 20.0), 1e-3);
    }
    for (double s : {0.6, 0.75, 0.9}) {
        const FractionalExponent fs(s);
        S.rel("u(0,t) closed s=" + num(s), u_origin_closed(fs, 1.0, 1.0), u_eval({0.0, 1.0, fs, 1.0}, q).value,
              1e-8);
    }
}

void appendix_a1(Suite& S)
{
    for (auto [s, T] : {std::pair{0.6, 10.0}, {0.75, 100.0}, {0.9, 5.0}}) {
        auto f = [T = T](double x) { return eval_functional({Family::E, 1}, FractionalExponent(x), {T, 1.0}).value; };
        S.rel("dE1/ds vs FD s=" + num(s) + " T=" + num(T), fd(f, s, 1e-6), dE1_ds(FractionalExponent(s), T), 1e-5);
        S.rel("dE1/ds Z-form s=" + num(s), dE1_ds(FractionalExponent(s), T), dE1_ds_z_form(FractionalExponent(s), T),
              1e-10);
    }
    S.holds("dE1/ds < 0 near 1/2 at T=1e5", dE1_ds(FractionalExponent(0.5 + 1e-3), 1e5) < 0.0);
    S.abs("sbar_T at lnT=10", 0.5 * (8.0 + sf::euler_gamma) / (7.0 + sf::euler_gamma), sbar_T(std::exp(10.0)), 1e-14);
    S.suite(asymptotic_suite(Claim::UNST));
}

void appendix_a2(Suite& S)
{
    double worst = 0.0;
    for (double s : {0.55, 0.65, 0.75, 0.85, 0.95})
        for (double T : {1.0, 1e3}) {
            const FractionalExponent fs(s);
            const double e1 = eval_functional({Family::E, 1}, fs, {T, 1.0}).value;
            const double e2 = eval_functional({Family::E, 2}, fs, {T, 1.0}).value;
            const double h = sf::h_of_s(fs).value;
            worst = std::max(worst, std::abs(e2 / (2.0 * pi * std::pow(h, 1.0 / (2.0 * s)) * e1) - 1.0));
        }
    S.abs("E2 = 2 pi h^(1/2s) E1 max rel", 0.0, worst, 1e-11);
    {
        auto e2 = [](double s) { return eval_functional({Family::E, 2}, FractionalExponent(s), {1.0, 1.0}).value; };
        S.holds("E2 -> 0 as s -> 1", e2(1.0 - 1e-2) > e2(1.0 - 1e-4) && e2(1.0 - 1e-4) > e2(1.0 - 1e-8) &&
                                         e2(1.0 - 1e-8) < 1e-3 * e2(0.75) && e2(1.0) == 0.0);
    }
    S.suite(asymptotic_suite(Claim::UNST2));
}

void appendix_a3(Suite& S)
{
    S.rel("bracket_G1 lower L=1e6", 1.0 / (8.0 * std::log(1e6)), bracket_G1(1e6).first, 1e-14);
    const auto b3 = bracket_G1(1e3), b6 = bracket_G1(1e6), b9 = bracket_G1(1e9);
    S.holds("bracket_G1 ends decrease", b3.first > b6.first && b6.first > b9.first && b3.second > b6.second &&
                                            b6.second > b9.second);
    S.suite(asymptotic_suite(Claim::SLL1));
    S.suite(asymptotic_suite(Claim::SLL1K));
}

void appendix_a4(Suite& S)
{
    bool agree = true;
    for (double s : {0.6, 0.75, 0.9})
        for (double L : {10.0, 1e3}) {
            auto g = [L](double x) { return eval_functional({Family::G, 3}, FractionalExponent(x), {1.0, L}).value; };
            const double d = fd(g, s, 1e-6);
            const double p = P_G3(FractionalExponent(s), L, 1.0);
            agree = agree && ((d > 0.0) == (p > 0.0));
        }
    S.holds("P sign = dG3/ds sign on grid", agree);
    S.holds("P > 0 at s=0.51, L=1e6", P_G3(FractionalExponent(0.51), 1e6, 1.0) > 0.0);
    S.holds("P < 0 at s=0.9, L=1e6", P_G3(FractionalExponent(0.9), 1e6, 1.0) < 0.0);
    const auto e4 = bracket_G3(std::exp(4.0));
    S.abs("bracket_G3 L=e^4 lower", 0.5 + 0.5 / 8.0, e4.first, 1e-14);
    S.abs("bracket_G3 L=e^4 upper", 0.5 + 1.5 / 8.0, e4.second, 1e-14);
    S.suite(asymptotic_suite(Claim::SLL));
}

void appendix_a5(Suite& S)
{
    const double lstar = 1.768198;
    S.abs("m(1) = -ln L*", -std::log(lstar), m_of_s(FractionalExponent(1.0)), 1e-5);
    S.holds("m -> -inf at 1/2", m_of_s(FractionalExponent(0.5 + 1e-6)) < -1e5);
    S.abs("Laurent m+1/(2s-1)-gamma at 0.505", 0.0, m_of_s(FractionalExponent(0.505)) + 1.0 / 0.01 - sf::euler_gamma,
          0.1);
    bool inc = true;
    double prev = -1e300;
    for (int i = 1; i <= 100; ++i) {
        const double m = m_of_s(FractionalExponent(0.5 + 0.005 * i));
        inc = inc && m > prev && m < 0.0;
        prev = m;
    }
    S.holds("m negative and increasing", inc);
    double prev_s = 1.0;
    for (double L : {10.0, 1e2, 1e4, 1e8}) {
        const auto c = solve_sL_G4(L);
        S.abs("m(s_L)+lnL L=" + num(L), 0.0, c.residual, 1e-8);
        S.holds("s_L decreasing at L=" + num(L), c.s_star < prev_s);
        prev_s = c.s_star;
    }
    S.holds("s_L(1e8) < 0.53", solve_sL_G4(1e8).s_star < 0.53);
    bool fd_ok = true;
    {
        auto g = [](double x) { return eval_functional({Family::G, 4}, FractionalExponent(x), {1.0, 4.0}).value; };
        fd_ok = std::abs(fd(g, 0.7, 1e-6) / dG4_ds(FractionalExponent(0.7), 4.0, 1.0) - 1.0) < 1e-5;
    }
    S.holds("dG4/ds vs FD at (0.7,4,1)", fd_ok);
    S.suite(asymptotic_suite(Claim::ASOG4));
}

void bifurcations(Suite& S)
{
    const auto t = find_Tstar();
    S.abs("T* closed form", 2.145248182, t.closed_form.critical_value, 1e-6);
    S.abs("T* sign change vs closed (rel)", 0.0, t.rel_gap(), 1e-6);
    S.holds("dE4 at 1/2 > 0 at 1.01 T*", dE4_at_half(1.01 * t.closed_form.critical_value) > 0.0);
    S.holds("dE4 at 1/2 < 0 at 0.99 T*", dE4_at_half(0.99 * t.closed_form.critical_value) < 0.0);
    const auto l = find_Lstar();
    S.abs("L* closed form", 1.768198, l.closed_form.critical_value, 1e-5);
    S.abs("L* onset bisection vs closed", l.closed_form.critical_value, l.sign_change.critical_value, 1e-4);
    S.suite(asymptotic_suite(Claim::E3switch));
    S.suite(asymptotic_suite(Claim::E4switch));
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"all",        "specfun",    "kernel",     "appendixA1", "appendixA2",
                                                   "appendixA3", "appendixA4", "appendixA5", "bifurcations"};
    return names;
}

std::vector<CheckLine> run_suite(std::string_view suite)
{
    Suite S;
    const bool all = suite == "all";
    bool known = all;
    auto want = [&](std::string_view n) {
        const bool w = all || suite == n;
        known = known || suite == n;
        return w;
    };
    if (want("specfun")) specfun_suite(S);
    if (want("kernel")) kernel_suite(S);
    if (want("appendixA1")) appendix_a1(S);
    if (want("appendixA2")) appendix_a2(S);
    if (want("appendixA3")) appendix_a3(S);
    if (want("appendixA4")) appendix_a4(S);
    if (want("appendixA5")) appendix_a5(S);
    if (want("bifurcations")) bifurcations(S);
    if (!known)
        throw DomainError("unknown verification suite '" + std::string(suite) + "'");
    return S.lines;
}

std::string format_check(const CheckLine& c)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s expected=%.12g got=%.12g tol=%g %s", c.id.c_str(), c.expected, c.got, c.tol,
                  c.pass ? "PASS" : "FAIL");
    return buf;
}

} // namespace levy
