#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "levy/specfun.hpp"

#include <cmath>
#include <numbers>
#include <random>

#ifdef LEVY_HAVE_BOOST
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#endif

using namespace levy;
namespace sf = levy::specfun;
constexpr double pi = std::numbers::pi;

static double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// eta(z) by plain partial sums averaged over consecutive terms (repeated Euler averaging)
static double eta_oracle(double z)
{
    constexpr int n = 60;
    double partial[n];
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) {
        acc += ((k % 2) ? 1.0 : -1.0) * std::pow(k, -z);
        partial[k - 1] = acc;
    }
    int m = n;
    for (int pass = 0; pass < 40; ++pass, --m)
        for (int i = 0; i + 1 < m; ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    return partial[0];
}

TEST_CASE("gamma anchors")
{
    CHECK(sf::gamma(1.0).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(sf::gamma(0.5).value, 1.772453850905516) < 1e-14);
    CHECK(rel(sf::gamma(4.0).value, 6.0) < 1e-14);
}

TEST_CASE("gamma poles")
{
    for (double z : {0.0, -1.0, -2.0, -7.0})
        CHECK_THROWS_AS(sf::gamma(z), PoleError);
    CHECK_THROWS_AS(sf::gamma(-3.0 + 1e-15), PoleError);
    CHECK_NOTHROW(sf::gamma(-3.0 + 1e-9));
}

TEST_CASE("RealArg rejects non-finite")
{
    CHECK_THROWS_AS(sf::gamma(std::nan("")), DomainError);
    CHECK_THROWS_AS(sf::zeta(INFINITY), DomainError);
}

TEST_CASE("reflection and recurrence")
{
    for (int i = 1; i <= 9; ++i) {
        const double z = 0.1 * i;
        CHECK(std::abs(sf::gamma(z).value * sf::gamma(1.0 - z).value * sf::sin_pi(z) / pi - 1.0) < 1e-11);
    }
    for (int i = 1; i <= 200; ++i) {
        const double z = 0.05 * i;
        CHECK(rel(sf::gamma(z + 1.0).value, z * sf::gamma(z).value) < 1e-12);
    }
}

TEST_CASE("gamma error estimate is honest on [-10,30]")
{
    // Stirling with recurrence as the reference: Gamma(x) = Gamma(x+n)/(x(x+1)...(x+n-1))
    auto stirling = [](double x) {
        double shift = 1.0;
        while (x < 40.0) {
            shift *= x;
            x += 1.0;
        }
        const double lg = (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * pi) + 1.0 / (12.0 * x) -
                          1.0 / (360.0 * x * x * x) + 1.0 / (1260.0 * std::pow(x, 5)) - 1.0 / (1680.0 * std::pow(x, 7));
        return std::exp(lg) / shift;
    };
    for (double z = 0.05; z < 30.0; z += 0.173) {
        const auto g = sf::gamma(z);
        CHECK(rel(g.value, stirling(z)) < 1e-12);
    }
}

#ifdef LEVY_HAVE_BOOST
TEST_CASE("gamma, digamma, zeta against boost")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> zg(-10.0, 30.0);
    for (int i = 0; i < 400; ++i) {
        const double z = zg(rng);
        if (std::abs(z - std::round(z)) < 1e-6 && z <= 0.0)
            continue;
        const auto g = sf::gamma(z);
        const double b = boost::math::tgamma(z);
        CHECK(rel(g.value, b) < 1e-12);
        CHECK(std::abs(g.value - b) <= g.abs_error_estimate + 4e-16 * std::abs(b));
    }
    std::uniform_real_distribution<double> xg(1e-3, 30.0);
    for (int i = 0; i < 400; ++i) {
        const double x = xg(rng);
        const double b = boost::math::digamma(x);
        if (std::abs(b) < 1e-3)
            continue;
        CHECK(rel(sf::digamma(x).value, b) < 1e-10);
    }
    std::uniform_real_distribution<double> zz(-9.0, 12.0);
    for (int i = 0; i < 400; ++i) {
        const double z = zz(rng);
        if (std::abs(z - 1.0) < 1e-3)
            continue;
        const double b = boost::math::zeta(z);
        CHECK(std::abs(sf::zeta(z).value - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}
#endif

TEST_CASE("digamma anchors")
{
    CHECK(std::abs(sf::digamma(1.0).value + 0.577215664901533) < 1e-14);
    CHECK(std::abs(sf::digamma(0.5).value + 1.963510026021423) < 1e-14);
    CHECK(std::abs(sf::digamma(3.0).value - std::log(2.0) - std::log(pi) + 0.9150927) < 1e-7);
    CHECK_THROWS_AS(sf::digamma(-2.0), PoleError);
    // reflection branch
    CHECK(std::abs(sf::digamma(-0.5).value - (sf::digamma(1.5).value + 0.0)) < 1e-13);  // cot(-pi/2) = 0
}

TEST_CASE("zeta anchors and pole")
{
    CHECK(rel(sf::zeta(2.0).value, pi * pi / 6.0) < 1e-14);
    CHECK(rel(sf::zeta(-1.0).value, -1.0 / 12.0) < 1e-14);
    CHECK(rel(sf::zeta(3.0).value, eta_oracle(3.0) / (1.0 - 0.25)) < 1e-13);
    CHECK(sf::zeta(-2.0).value == 0.0);
    CHECK(sf::zeta(0.0).value == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS(sf::zeta(1.0), PoleError);
    CHECK_THROWS_AS(sf::zeta(1.0 + 1e-15), PoleError);
    CHECK_THROWS_AS(sf::zeta_prime(1.0), PoleError);
}

TEST_CASE("zeta on (0,1) from the eta series")
{
    for (double z : {0.25, 0.5, 0.75, 0.9})
        CHECK(rel(sf::zeta(z).value, eta_oracle(z) / (1.0 - std::pow(2.0, 1.0 - z))) < 1e-11);
}

TEST_CASE("zeta_prime against finite differences")
{
    auto fd = [](double z) { return (sf::zeta(z + 1e-5).value - sf::zeta(z - 1e-5).value) / 2e-5; };
    for (double z : {2.5, 3.0, 4.0, 1.5, 0.5, -0.5, -1.0, -1.7})
        CHECK(rel(sf::zeta_prime(z).value, fd(z)) < 1e-6);
}

TEST_CASE("zeta_prime anchors through the bifurcation constants")
{
    const double zp2 = sf::zeta_prime(2.0).value;
    CHECK(std::abs(std::exp(-zp2 / sf::zeta(2.0).value) - 1.768198) < 1e-5);
    const double t = std::exp(-std::log(6.0) - 12.0 * sf::zeta_prime(-1.0).value - 6.0 / (pi * pi) * zp2);
    CHECK(std::abs(t - 2.145248182) < 1e-6);
    // zeta'(0) = -ln(2 pi)/2
    CHECK(std::abs(sf::zeta_prime(0.0).value + 0.5 * std::log(2.0 * pi)) < 1e-13);
    // zeta'(-2) = -zeta(3)/(4 pi^2)
    CHECK(rel(sf::zeta_prime(-2.0).value, -sf::zeta(3.0).value / (4.0 * pi * pi)) < 1e-12);
}

TEST_CASE("harmonic Z")
{
    CHECK(std::abs(sf::harmonic_z(1.0).value + 1.0) < 1e-14);
    CHECK(std::abs(sf::harmonic_z(0.5).value - (2.0 * std::log(2.0) - 2.0)) < 1e-14);
    CHECK(sf::harmonic_z(0.0).value == 0.0);
    CHECK_THROWS_AS(sf::harmonic_z(-1.0), DomainError);
    for (double x : {0.55, 0.7, 0.9, 1.0, 3.5, -0.4})
        CHECK(std::abs(sf::digamma(x).value - (-sf::euler_gamma - 1.0 / x - sf::harmonic_z(x).value)) < 1e-9);
    for (int i = 1; i < 100; ++i) {
        const double s = 0.5 + 0.005 * i;
        const double z = sf::harmonic_z(1.0 / (2.0 * s)).value;
        CHECK(z > -pi * pi / 6.0);
        CHECK(z <= 0.0);
    }
}

TEST_CASE("h(s)")
{
    CHECK(std::abs(sf::h_of_s(FractionalExponent(0.5)).value - 1.0 / 6.0) < 1e-15);
    CHECK(sf::h_of_s(FractionalExponent(1.0)).value == 0.0);
    CHECK(sf::h_of_s(FractionalExponent(0.999)).value < 1e-3);
    double prev = 1.0;
    for (int i = 1; i < 100; ++i) {
        const double s = 0.5 + 0.005 * i;
        const double h = sf::h_of_s(FractionalExponent(s)).value;
        const double prod = std::pow(2.0, 1.0 - 2.0 * s) * std::pow(pi, -2.0 * s - 1.0) * std::sin(pi * s) *
                            std::tgamma(1.0 + 2.0 * s) * sf::zeta(1.0 + 2.0 * s).value;
        CHECK(rel(h, prod) < 1e-10);
        CHECK(h < prev);
        CHECK(h > 0.0);
        CHECK(h <= 1.0 / 3.0);
        prev = h;
    }
}

TEST_CASE("sin_pi and cos_pi exact zeros")
{
    CHECK(sf::sin_pi(3.0) == 0.0);
    CHECK(sf::cos_pi(0.5) == 0.0);
    CHECK(sf::cos_pi(-1.5) == 0.0);
    CHECK(std::abs(sf::sin_pi(0.25) - std::sqrt(0.5)) < 3e-16);
    CHECK(std::abs(sf::sin_pi(-1.75) - std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("log_gamma")
{
    for (double x : {0.1, 0.5, 1.0, 2.5, 10.0, 100.0, 1e4})
        CHECK(std::abs(sf::log_gamma(x) - std::lgamma(x)) < 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
    CHECK(std::abs(sf::log_gamma(-2.5) - std::lgamma(-2.5)) < 1e-13);
    CHECK_THROWS_AS(sf::log_gamma(-4.0), PoleError);
}
