#include "levy/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace levy::specfun {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double ln2 = std::numbers::ln2;
const double ln_pi = std::log(pi);
const double half_ln_2pi = 0.5 * std::log(2.0 * pi);

// Lanczos, g = 7, n = 9
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,      676.5203681218851,      -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6,  1.5056327351493116e-7};

bool near_nonpositive_integer(double z)
{
    return z <= pole_tolerance && std::abs(z - std::round(z)) < pole_tolerance;
}

double lanczos_series(double zm1)
{
    double a = lanczos_c[0];
    for (std::size_t i = 1; i < lanczos_c.size(); ++i)
        a += lanczos_c[i] / (zm1 + static_cast<double>(i));
    return a;
}

// Gamma for z >= 0.5
double gamma_right(double z)
{
    const double zm1 = z - 1.0;
    const double t = zm1 + lanczos_g + 0.5;
    const double a = lanczos_series(zm1);
    const double e = zm1 + 0.5;
    if (e < 140.0)
        return std::sqrt(2.0 * pi) * std::pow(t, e) * std::exp(-t) * a;
    const double h = std::pow(t, 0.5 * e);
    return std::sqrt(2.0 * pi) * (h * std::exp(-t)) * h * a;
}

double log_gamma_right(double z)
{
    const double zm1 = z - 1.0;
    const double t = zm1 + lanczos_g + 0.5;
    return half_ln_2pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_series(zm1));
}

// Borwein's algorithm 2 for the alternating (eta) series.
constexpr int eta_terms = 30;

struct EtaWeights {
    std::array<double, eta_terms> w{};  // (d_k - d_n)/d_n, k = 0..n-1
    EtaWeights()
    {
        const int n = eta_terms;
        std::array<double, eta_terms + 1> d{};
        double term = 1.0;
        double acc = term;
        d[0] = acc;
        for (int i = 1; i <= n; ++i) {
            term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1.0));
            acc += term;
            d[i] = acc;
        }
        for (int k = 0; k < n; ++k)
            w[k] = (d[k] - d[n]) / d[n];
    }
};

double eta(double z)
{
    static const EtaWeights weights;
    double sum = 0.0;
    for (int k = eta_terms - 1; k >= 0; --k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * weights.w[k] * std::pow(static_cast<double>(k + 1), -z);
    }
    return -sum;
}

// z >= 0, z != 1
SpecFunResult zeta_right(double z)
{
    const double denom = -std::expm1((1.0 - z) * ln2);  // 1 - 2^{1-z}
    const double v = eta(z) / denom;
    const double err = (64.0 * eps) * std::abs(v) * (1.0 + 1.0 / std::abs(denom));
    return {v, err};
}

// derivative of zeta by Euler-Maclaurin with N = 16
constexpr int em_n = 16;
constexpr std::array<double, 12> bernoulli_even = {
    1.0 / 6.0,           -1.0 / 30.0,         1.0 / 42.0,
    -1.0 / 30.0,         5.0 / 66.0,          -691.0 / 2730.0,
    7.0 / 6.0,           -3617.0 / 510.0,     43867.0 / 798.0,
    -174611.0 / 330.0,   854513.0 / 138.0,    -236364091.0 / 2730.0};

double zeta_prime_em(double z)
{
    const double n = em_n;
    const double ln_n = std::log(n);
    double acc = 0.0;
    for (int k = 2; k < em_n; ++k) {
        const double lk = std::log(static_cast<double>(k));
        acc -= lk * std::exp(-z * lk);
    }
    const double n_pow = std::exp(-z * ln_n);  // N^{-z}
    const double zm1 = z - 1.0;
    acc += n * n_pow * (-ln_n / zm1 - 1.0 / (zm1 * zm1));
    acc -= 0.5 * ln_n * n_pow;

    // P_j(z) = z(z+1)...(z+2j-2) with derivative, coefficient B_2j/(2j)!
    double p = z;
    double dp = 1.0;
    double fact = 2.0;
    double npow = n_pow / n;  // N^{-z-1}
    for (std::size_t j = 1; j <= bernoulli_even.size(); ++j) {
        if (j > 1) {
            const double a = z + static_cast<double>(2 * j - 3);
            const double b = z + static_cast<double>(2 * j - 2);
            dp = dp * a * b + p * (a + b);
            p = p * a * b;
            const double jj = 2.0 * static_cast<double>(j);
            fact *= jj * (jj - 1.0);
            npow /= n * n;
        }
        acc += bernoulli_even[j - 1] / fact * (dp - ln_n * p) * npow;
    }
    return acc;
}

} // namespace

double sin_pi(double x)
{
    if (x == std::floor(x))
        return 0.0;
    double r = std::remainder(x, 2.0);  // [-1, 1]
    double sign = 1.0;
    if (r < 0.0) {
        r = -r;
        sign = -1.0;
    }
    if (r > 0.5)
        r = 1.0 - r;
    return sign * std::sin(pi * r);
}

double cos_pi(double x)
{
    return sin_pi(x + 0.5);
}

SpecFunResult gamma(RealArg arg)
{
    const double z = arg.value();
    if (near_nonpositive_integer(z))
        throw PoleError("gamma: pole at z=" + std::to_string(z));
    if (z >= 0.5) {
        const double v = gamma_right(z);
        return {v, std::abs(v) * 4.0 * eps * (4.0 + std::abs(z))};
    }
    const double s = sin_pi(z);
    const double g = gamma_right(1.0 - z);
    const double v = pi / (s * g);
    const double dist = std::abs(z - std::round(z));
    return {v, std::abs(v) * 4.0 * eps * (4.0 + std::abs(z) + 1.0 / dist)};
}

double log_gamma(double x)
{
    if (!std::isfinite(x))
        throw DomainError("log_gamma: argument is not finite");
    if (near_nonpositive_integer(x))
        throw PoleError("log_gamma: pole at x=" + std::to_string(x));
    if (x >= 0.5)
        return log_gamma_right(x);
    return ln_pi - std::log(std::abs(sin_pi(x))) - log_gamma_right(1.0 - x);
}

SpecFunResult digamma(RealArg arg)
{
    double x = arg.value();
    if (near_nonpositive_integer(x))
        throw PoleError("digamma: pole at x=" + std::to_string(x));
    double acc = 0.0;
    double mag = 0.0;
    if (x < 0.0) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        const double c = pi * cos_pi(x) / sin_pi(x);
        acc -= c;
        mag += std::abs(c);
        x = 1.0 - x;
    }
    while (x < 10.0) {
        acc -= 1.0 / x;
        mag += 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    const double series =
        r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12.0))))));
    const double v = acc + std::log(x) - 0.5 / x - series;
    mag += std::abs(std::log(x));
    return {v, 8.0 * eps * (mag + std::abs(v)) + 1e-16};
}

SpecFunResult zeta(RealArg arg)
{
    const double z = arg.value();
    if (std::abs(z - 1.0) < pole_tolerance)
        throw PoleError("zeta: pole at z=1");
    if (z >= 0.0)
        return zeta_right(z);
    // functional equation: zeta(z) = 2^z pi^{z-1} sin(pi z/2) Gamma(1-z) zeta(1-z)
    const double sp = sin_pi(0.5 * z);
    if (sp == 0.0)
        return {0.0, 0.0};
    const auto g = gamma(1.0 - z);
    const auto zr = zeta_right(1.0 - z);
    const double a = std::pow(2.0, z) * std::pow(pi, z - 1.0) * sp * g.value;
    const double v = a * zr.value;
    const double rel = g.abs_error_estimate / std::abs(g.value) + zr.abs_error_estimate / std::abs(zr.value) +
                       8.0 * eps * (2.0 + std::abs(z));
    return {v, std::abs(v) * rel};
}

SpecFunResult zeta_prime(RealArg arg)
{
    const double z = arg.value();
    if (std::abs(z - 1.0) < pole_tolerance)
        throw PoleError("zeta_prime: pole at z=1");
    if (z >= 0.0) {
        const double v = zeta_prime_em(z);
        const double scale = 1.0 + 1.0 / ((z - 1.0) * (z - 1.0));
        return {v, 64.0 * eps * (std::abs(v) + scale)};
    }
    // d/dz [A(z) zeta(1-z)] with A = 2^z pi^{z-1} sin(pi z/2) Gamma(1-z)
    const double w = 1.0 - z;
    const auto g = gamma(w);
    const auto zr = zeta_right(w);
    const double zpr = zeta_prime_em(w);
    const double base = std::pow(2.0, z) * std::pow(pi, z - 1.0) * g.value;
    const double sp = sin_pi(0.5 * z);
    const double cp = cos_pi(0.5 * z);
    const double psi = digamma(w).value;
    const double a = base * sp;
    const double da = base * (sp * (ln2 + ln_pi - psi) + 0.5 * pi * cp);
    const double v = da * zr.value - a * zpr;
    const double mag = std::abs(da * zr.value) + std::abs(a * zpr);
    return {v, 64.0 * eps * (2.0 + std::abs(z)) * mag};
}

SpecFunResult harmonic_z(RealArg arg)
{
    const double x = arg.value();
    if (!(x > -1.0))
        throw DomainError("harmonic_z: requires x > -1, got " + std::to_string(x));
    constexpr int n = 64;
    double acc = 0.0;
    double mag = 0.0;
    for (int k = 1; k < n; ++k) {
        const double term = -x / (k * (k + x));
        acc += term;
        mag += std::abs(term);
    }
    // Euler-Maclaurin tail for f(k) = 1/(k+x) - 1/k
    const double N = n;
    const double a = N + x;
    const double f = -x / (N * a);
    const double f1 = -1.0 / (a * a) + 1.0 / (N * N);
    const double f3 = -6.0 / std::pow(a, 4) + 6.0 / std::pow(N, 4);
    const double f5 = -120.0 / std::pow(a, 6) + 120.0 / std::pow(N, 6);
    const double f7 = -5040.0 / std::pow(a, 8) + 5040.0 / std::pow(N, 8);
    const double tail = -std::log1p(x / N) + 0.5 * f - f1 / 12.0 + f3 / 720.0 - f5 / 30240.0 + f7 / 1209600.0;
    const double v = acc + tail;
    return {v, 8.0 * eps * (mag + std::abs(tail)) + std::abs(x) * 1e-3 / std::pow(N, 10)};
}

SpecFunResult h_of_s(FractionalExponent s)
{
    const auto z = zeta(-2.0 * s.value());
    return {-2.0 * z.value, 2.0 * z.abs_error_estimate};
}

} // namespace levy::specfun
