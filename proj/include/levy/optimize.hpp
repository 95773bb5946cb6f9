#pragma once

#include "levy/functionals.hpp"
#include "levy/grid.hpp"

#include <string>
#include <vector>

namespace levy {

enum class ExtremumKind { Minimum, Maximum };

struct CriticalPoint {
    double s_star = 0.0;
    double value = 0.0;
    ExtremumKind kind = ExtremumKind::Maximum;
    double lo = 0.0, hi = 0.0;  // final bracket
    double residual = 0.0;      // bracket width, or |root residual| for solve_sL_G4
};

struct SolverSpec {
    double s_tol = 1e-8;
    int grid_points = 2001;
    double boundary_margin = 1e-6;
    grid::Exec exec = grid::Exec::Parallel;

    void validate() const;
};

enum class Side { Left, Interior, Right };

struct BoundaryRecord {
    double s = 0.0;         // scanned end point
    double value = 0.0;     // functional there
    bool diverges = false;  // +inf limit at that end
};

struct ExtremaScan {
    std::vector<CriticalPoint> points;
    BoundaryRecord left, right;
    Side sup_side = Side::Interior;
    double sup_s = 0.0;
    double sup_value = 0.0;
};

enum class BifurcationParameter { TStar, LStar };
enum class BifurcationMethod { ClosedForm, SignChange };

struct BifurcationResult {
    BifurcationParameter parameter = BifurcationParameter::TStar;
    double critical_value = 0.0;
    BifurcationMethod method = BifurcationMethod::ClosedForm;
};

struct BifurcationPair {
    BifurcationResult closed_form;
    BifurcationResult sign_change;
    double rel_gap() const;
};

// d/ds ln f; closed forms for E1, G3 (sign only), G4, otherwise centered differences
double log_derivative(FunctionalId id, double s, const ScenarioParams& p, const SolverSpec& spec = {});

std::vector<CriticalPoint> find_critical_points(FunctionalId id, const ScenarioParams& p, const SolverSpec& spec = {});
ExtremaScan scan_extrema(FunctionalId id, const ScenarioParams& p, const SolverSpec& spec = {});

BifurcationPair find_Tstar();
BifurcationPair find_Lstar();
CriticalPoint solve_sL_G4(double L, const SolverSpec& spec = {});

double sbar_T(double T);
std::pair<double, double> bracket_G1(double L);
std::pair<double, double> bracket_G3(double L);

enum class Claim { UNST, UNST2, SLL1, SLL1K, SLL, ASOG4, E3switch, E4switch };

struct Rung {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    Claim claim = Claim::UNST;
    std::vector<Rung> rungs;
    bool passed() const;
};

std::string claim_name(Claim c);
SuiteReport asymptotic_suite(Claim claim, const SolverSpec& spec = {});

} // namespace levy
