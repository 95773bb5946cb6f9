#include "levy/functionals.hpp"

#include "levy/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace levy {

namespace {

constexpr double pi = std::numbers::pi;
const double ln_pi = std::log(pi);
const double ln_2pi = std::log(2.0 * pi);

using specfun::log_gamma;

double ln_zeta(double z) { return std::log(specfun::zeta(z).value); }

// ln h(s); -inf at s = 1 where h vanishes
double ln_h(double s) { return std::log(specfun::h_of_s(FractionalExponent(s)).value); }

double ln_sin_pi(double s) { return std::log(specfun::sin_pi(s)); }

[[noreturn]] void domain_fail(const FunctionalId& id, double s, const char* need)
{
    throw DomainError(id.name() + ": s=" + std::to_string(s) + " outside " + need);
}

double ln_e(int j, double s, double T)
{
    const double lT = std::log(T);
    const double a = 2.0 * s;
    const double base = log_gamma(1.0 / a) - lT / a - std::log(a - 1.0);
    switch (j) {
    case 1: return base - ln_pi;
    case 2: return std::log(2.0) + ln_h(s) / a + base;
    case 3: return ln_zeta(1.0 + a) + base - ln_pi - ln_zeta(a);
    case 4: return std::log(2.0) + ln_zeta(1.0 + a) + ln_h(s) / a + base - ln_zeta(a);
    case 5:
        return std::log(1.0 + a) + log_gamma(1.0 / a) - std::log(2.0 * a) - std::log(a - 1.0) - lT / s -
               log_gamma((a - 1.0) / a);
    case 6:
        return 2.0 * ln_pi + ln_h(s) / s + std::log(1.0 + a) + log_gamma(1.0 / a) - std::log(s) -
               std::log(a - 1.0) - lT / s - log_gamma((a - 1.0) / a);
    }
    throw DomainError("E index out of range");
}

double ln_g5_core(double s)
{
    const double a = 2.0 * s;
    return log_gamma(2.0 + a) + ln_sin_pi(s) - std::log(8.0) - log_gamma((a - 1.0) / a);
}

// ln of the kappa_s^{2s-1} factor carried by G6 / g6
double ln_g6_factor(double s)
{
    const double a = 2.0 * s;
    return (a - 1.0) / a * (-a * ln_2pi - ln_h(s));
}

double ln_g(int j, double s, double L, double T)
{
    const double lT = std::log(T);
    const double lL = std::log(L);
    const double a = 2.0 * s;
    switch (j) {
    case 1: return lT + log_gamma(1.0 + a) + ln_sin_pi(s) - ln_2pi - (1.0 + a) * lL;
    case 2: return lT - std::log(4.0) - (1.0 + a) * lL - ln_zeta(1.0 + a);
    case 3: return lT + ln_zeta(1.0 + a) + log_gamma(1.0 + a) + ln_sin_pi(s) - ln_2pi - (1.0 + a) * lL - ln_zeta(a);
    case 4: return lT - std::log(4.0) - (1.0 + a) * lL - ln_zeta(a);
    case 5: return (a - 1.0) / a * lT - (1.0 + a) * lL + ln_g5_core(s);
    case 6:
        if (s == 1.0)
            return -std::numeric_limits<double>::infinity();
        return (a - 1.0) / a * lT - (1.0 + a) * lL + ln_g5_core(s) + ln_g6_factor(s);
    }
    throw DomainError("G index out of range");
}

void check_finite_domain(const FunctionalId& id, double s)
{
    if (!(s > 0.0 && s <= 1.0))
        domain_fail(id, s, "(0,1]");
    if (id.domain_lo() == 0.5 && !(s > 0.5))
        domain_fail(id, s, "(1/2,1]");
}

} // namespace

void ScenarioParams::validate() const
{
    if (!(T > 0.0) || !std::isfinite(T))
        throw DomainError("scenario: requires T > 0");
    if (!(L > 0.0) || !std::isfinite(L))
        throw DomainError("scenario: requires L > 0");
}

FunctionalId::FunctionalId(Family f, int i) : family(f), index(i)
{
    if (i < 1 || i > 6)
        throw DomainError("functional index must be in 1..6");
    if (f == Family::GConstrained && i != 5 && i != 6)
        throw DomainError("constrained functional index must be 5 or 6");
}

FunctionalId FunctionalId::parse(std::string_view name)
{
    if (name == "g5c")
        return {Family::GConstrained, 5};
    if (name == "g6c")
        return {Family::GConstrained, 6};
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '6') {
        const int i = name[1] - '0';
        switch (name[0]) {
        case 'E': return {Family::E, i};
        case 'G': return {Family::G, i};
        case 'H': return {Family::H, i};
        default: break;
        }
    }
    throw DomainError("unknown functional '" + std::string(name) + "'");
}

std::string FunctionalId::name() const
{
    const std::string n = std::to_string(index);
    switch (family) {
    case Family::E: return "E" + n;
    case Family::G: return "G" + n;
    case Family::H: return "H" + n;
    case Family::GConstrained: return "g" + n + "c";
    }
    return "?";
}

double FunctionalId::domain_lo() const
{
    if (family == Family::G && index <= 2)
        return 0.0;
    return 0.5;
}

bool FunctionalId::infinite_below_half() const
{
    return family == Family::E && index <= 2;
}

bool FunctionalId::uses_L() const
{
    return family == Family::G || family == Family::H;
}

FunctionalValue phi0(FractionalExponent s, double kappa, double T)
{
    if (!(kappa > 0.0) || !(T > 0.0))
        throw DomainError("phi0: requires kappa > 0 and T > 0");
    const double v = s.value();
    if (v <= 0.5)
        return FunctionalValue::positive_infinity();
    const double a = 2.0 * v;
    const double lv = (a - 1.0) / a * std::log(T) + log_gamma(1.0 / a) - ln_pi - std::log(kappa) - std::log(a - 1.0);
    return {std::exp(lv), false, true};
}

double mean_displacement(FractionalExponent s, double kappa, double T)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("mean_displacement: requires s > 1/2");
    if (!(kappa > 0.0) || !(T > 0.0))
        throw DomainError("mean_displacement: requires kappa > 0 and T > 0");
    const double a = 2.0 * v;
    return std::exp(std::log(4.0 * kappa * v) + (1.0 + a) / a * std::log(T) + log_gamma((a - 1.0) / a) - ln_pi -
                    std::log(1.0 + a));
}

double ell_bar(FractionalExponent s, double T)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("ell_bar: requires s > 1/2");
    if (!(T > 0.0))
        throw DomainError("ell_bar: requires T > 0");
    return T * specfun::zeta(2.0 * v).value / specfun::zeta(1.0 + 2.0 * v).value;
}

double remote_success_approx(FractionalExponent s, double kappa, double L, double T)
{
    if (!(kappa > 0.0) || !(L > 0.0) || !(T > 0.0))
        throw DomainError("remote_success_approx: requires kappa, L, T > 0");
    const double v = s.value();
    const double a = 2.0 * v;
    return std::pow(kappa, a) * T * T * specfun::gamma(1.0 + a).value * specfun::sin_pi(v) /
           (2.0 * pi * std::pow(L, 1.0 + a));
}

double log_functional(FunctionalId id, double s, const ScenarioParams& p)
{
    p.validate();
    check_finite_domain(id, s);
    switch (id.family) {
    case Family::E: return ln_e(id.index, s, p.T);
    case Family::G: return ln_g(id.index, s, p.L, p.T);
    case Family::H: return std::log(std::exp(ln_e(id.index, s, p.T)) + std::exp(ln_g(id.index, s, p.L, p.T)));
    case Family::GConstrained:
        if (id.index == 6 && s == 1.0)
            return -std::numeric_limits<double>::infinity();
        return ln_g5_core(s) + (id.index == 6 ? ln_g6_factor(s) : 0.0);
    }
    throw DomainError("unknown family");
}

FunctionalValue eval_functional(FunctionalId id, FractionalExponent s, const ScenarioParams& p)
{
    p.validate();
    const double v = s.value();
    if (id.infinite_below_half() && v <= 0.5)
        return FunctionalValue::positive_infinity();
    check_finite_domain(id, v);
    if (id.family == Family::H) {
        const double e = eval_functional({Family::E, id.index}, s, p).value;
        const double g = eval_functional({Family::G, id.index}, s, p).value;
        return {e + g, false, true};
    }
    const double val = std::exp(log_functional(id, v, p));
    return {val, false, val >= 0.0};
}

double constrained_g(int index, FractionalExponent s)
{
    return eval_functional(FunctionalId(Family::GConstrained, index), s, ScenarioParams{}).value;
}

double dE1_ds(FractionalExponent s, double T)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("dE1_ds: requires s > 1/2");
    const double a = 2.0 * v;
    const double lc = log_gamma(1.0 / a) - ln_2pi - std::log(T) / a - 2.0 * std::log(a - 1.0) - 2.0 * std::log(v);
    const double bracket = (a - 1.0) * std::log(T) - 4.0 * v * v - (a - 1.0) * specfun::digamma(1.0 / a).value;
    return bracket * std::exp(lc);
}

double dE1_ds_z_form(FractionalExponent s, double T)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("dE1_ds: requires s > 1/2");
    const double a = 2.0 * v;
    const double lc = log_gamma(1.0 / a) - ln_2pi - std::log(T) / a - 2.0 * std::log(a - 1.0) - 2.0 * std::log(v);
    const double bracket = (a - 1.0) * (std::log(T) + specfun::euler_gamma) - a +
                           (a - 1.0) * specfun::harmonic_z(1.0 / a).value;
    return bracket * std::exp(lc);
}

double dE4_at_half(double T)
{
    if (!(T > 0.0))
        throw DomainError("dE4_at_half: requires T > 0");
    return std::log(T) + std::log(6.0) + 12.0 * specfun::zeta_prime(-1.0).value +
           6.0 / (pi * pi) * specfun::zeta_prime(2.0).value;
}

double dG4_ds(FractionalExponent s, double L, double T)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("dG4_ds: requires s > 1/2");
    const double z = specfun::zeta(2.0 * v).value;
    return -T / (2.0 * std::pow(L, 1.0 + 2.0 * v) * z) * (std::log(L) + specfun::zeta_prime(2.0 * v).value / z);
}

double P_G3(FractionalExponent s, double L, double T)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("P_G3: requires s > 1/2");
    if (!(L > 0.0) || !(T > 0.0))
        throw DomainError("P_G3: requires L, T > 0");
    const double sn = specfun::sin_pi(v);
    const double cs = specfun::cos_pi(v);
    const double z1 = specfun::zeta(1.0 + 2.0 * v).value;
    const double dz1 = specfun::zeta_prime(1.0 + 2.0 * v).value;
    const double psi = specfun::digamma(1.0 + 2.0 * v).value;
    return z1 * (-std::log(L) * sn + 0.5 * pi * cs + sn * psi) + sn * dz1 - z1 * sn * m_of_s(s);
}

double m_of_s(FractionalExponent s)
{
    const double v = s.value();
    if (v <= 0.5)
        throw DomainError("m_of_s: requires s > 1/2");
    return specfun::zeta_prime(2.0 * v).value / specfun::zeta(2.0 * v).value;
}

} // namespace levy
