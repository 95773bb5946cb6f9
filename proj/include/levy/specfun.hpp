#pragma once

#include "levy/errors.hpp"
#include "levy/exponent.hpp"

#include <cmath>
#include <numbers>

namespace levy::specfun {

inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double pi = std::numbers::pi;
inline constexpr double pole_tolerance = 1e-14;

class RealArg {
public:
    RealArg(double v) : v_(v)  // NOLINT: implicit on purpose
    {
        if (!std::isfinite(v))
            throw DomainError("special function argument is not finite");
    }
    double value() const noexcept { return v_; }

private:
    double v_;
};

struct SpecFunResult {
    double value;
    double abs_error_estimate;
};

SpecFunResult gamma(RealArg z);
SpecFunResult digamma(RealArg x);
SpecFunResult zeta(RealArg z);
SpecFunResult zeta_prime(RealArg z);
SpecFunResult harmonic_z(RealArg x);
SpecFunResult h_of_s(FractionalExponent s);

// ln|Gamma(x)|; exact sign via gamma() when needed
double log_gamma(double x);

// sin(pi x), cos(pi x) with exact zeros at integers / half-integers
double sin_pi(double x);
double cos_pi(double x);

} // namespace levy::specfun
