#pragma once

#include "levy/exponent.hpp"
#include "levy/kernel.hpp"

#include <limits>
#include <string>
#include <string_view>

namespace levy {

struct ScenarioParams {
    double T = 1.0;
    double L = 1.0;  // unused by the E family
    KappaMode kappa_mode = KappaMode::Unit;

    void validate() const;
};

enum class Family { E, G, H, GConstrained };

struct FunctionalId {
    Family family = Family::E;
    int index = 1;

    FunctionalId() = default;
    FunctionalId(Family f, int i);

    // "E1".."E6", "G1".."G6", "H1".."H6", "g5c", "g6c"
    static FunctionalId parse(std::string_view name);
    std::string name() const;

    // open left end of the admissible s-range (0 or 1/2); right end is 1
    double domain_lo() const;
    // E1, E2 extend to (0,1/2] as +inf
    bool infinite_below_half() const;
    // the formula does not involve L
    bool uses_L() const;

    bool operator==(const FunctionalId&) const = default;
};

struct FunctionalValue {
    double value = 0.0;
    bool infinite = false;
    bool meaningful = true;

    static FunctionalValue positive_infinity()
    {
        return {std::numeric_limits<double>::infinity(), true, true};
    }
};

FunctionalValue phi0(FractionalExponent s, double kappa, double T);
double mean_displacement(FractionalExponent s, double kappa, double T);
double ell_bar(FractionalExponent s, double T);
// leading-order remote-prey success kappa^{2s} T^2 Gamma(1+2s) sin(pi s) / (2 pi L^{1+2s})
double remote_success_approx(FractionalExponent s, double kappa, double L, double T);

// The index fixes the diffusion coefficient (odd: unit, even: kappa_s);
// p.kappa_mode is not consulted here.
FunctionalValue eval_functional(FunctionalId id, FractionalExponent s, const ScenarioParams& p);
// ln of the value for s strictly inside the finite domain; -inf where it vanishes
double log_functional(FunctionalId id, double s, const ScenarioParams& p);

double constrained_g(int index, FractionalExponent s);

double dE1_ds(FractionalExponent s, double T);
double dE1_ds_z_form(FractionalExponent s, double T);
double dE4_at_half(double T);
double dG4_ds(FractionalExponent s, double L, double T);
double P_G3(FractionalExponent s, double L, double T);
double m_of_s(FractionalExponent s);

} // namespace levy
