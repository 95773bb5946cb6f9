#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "levy/quadrature.hpp"

#include <cmath>
#include <vector>

using namespace levy::quad;

TEST_CASE("Kronrod rule integrates monomials exactly up to degree 31")
{
    for (int d = 0; d <= 31; ++d) {
        auto f = [d](double x) { return std::pow(x, d); };
        auto p = detail::gk21(f, -1.0, 1.0);
        const double exact = (d % 2) ? 0.0 : 2.0 / (d + 1);
        CHECK(std::abs(p.value - exact) < 1e-14);
    }
    auto f32 = [](double x) { return std::pow(x, 32); };
    CHECK(std::abs(detail::gk21(f32, -1.0, 1.0).value - 2.0 / 33.0) > 1e-12);
}

TEST_CASE("embedded Gauss rule is exact to degree 19")
{
    // the error estimate collapses to roundoff when both rules are exact
    for (int d = 0; d <= 19; ++d) {
        auto f = [d](double x) { return std::pow(x + 0.3, d); };
        auto p = detail::gk21(f, 0.0, 1.0);
        const double exact = (std::pow(1.3, d + 1) - std::pow(0.3, d + 1)) / (d + 1);
        CHECK(p.error <= 1e-12 * std::max(1.0, exact));
    }
    auto g = [](double x) { return std::pow(x + 0.3, 24); };
    CHECK(detail::gk21(g, 0.0, 1.0).error > 1e-10);
}

TEST_CASE("adaptive integration")
{
    auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-13, 1e-12, 500);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-12);

    const std::vector<double> br{0.0, 1.0, 2.0, 10.0};
    auto e = integrate([](double x) { return std::exp(-x); }, std::span<const double>(br), 1e-14, 1e-13, 100);
    CHECK(std::abs(e.value - (1.0 - std::exp(-10.0))) < 1e-13);
    CHECK(std::abs(e.value - (1.0 - std::exp(-10.0))) <= e.abs_error + 1e-15);
}

TEST_CASE("budget exhaustion is flagged")
{
    auto r = integrate([](double x) { return std::cos(400.0 * x) / std::sqrt(x + 1e-9); }, 0.0, 10.0, 1e-14, 1e-14, 3);
    CHECK_FALSE(r.converged);
    CHECK(r.intervals <= 3);
}

TEST_CASE("degenerate break list")
{
    const std::vector<double> one{1.0};
    auto r = integrate([](double) { return 1.0; }, std::span<const double>(one), 1e-10, 1e-10, 10);
    CHECK(r.value == 0.0);
    CHECK_FALSE(r.converged);
}
