#pragma once

#include "levy/exponent.hpp"

namespace levy {

enum class KappaMode { Unit, LevyWalk };

struct FrequencyCutoff {
    enum class Kind { AutoFromDecay, Fixed };
    Kind kind = Kind::AutoFromDecay;
    double value = 0.0;  // in frequency units when Fixed

    static FrequencyCutoff fixed(double xi) { return {Kind::Fixed, xi}; }
};

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2048;
    FrequencyCutoff frequency_cutoff{};

    void validate() const;
};

struct KernelPoint {
    double x = 0.0;
    double t = 1.0;
    FractionalExponent s{0.5};
    double kappa = 1.0;

    void validate() const;
};

enum class KernelMode {
    Direct,   // cosine integral on the real frequency axis
    Contour,  // same integral on a rotated ray, for large |y| or s < 1/2
    TailLaw,  // leading power-law asymptotic
};

struct KernelValue {
    double value = 0.0;
    double error_estimate = 0.0;
    KernelMode mode = KernelMode::Direct;
};

// |x| / (kappa t^{1/(2s)}) above which u_eval answers with the tail law
inline constexpr double tail_law_threshold = 50.0;

double kappa_s(FractionalExponent s);
double kappa_s_gamma_form(FractionalExponent s);
double kappa_for(KappaMode mode, FractionalExponent s);

// u(x,t); large |x| goes to the tail law (flagged in the result)
KernelValue u_eval(const KernelPoint& p, const QuadratureSpec& q = {});
// quadrature only, never the tail law
KernelValue u_eval_quadrature(const KernelPoint& p, const QuadratureSpec& q = {});
// forced route, for cross-checks
KernelValue u_eval_route(const KernelPoint& p, KernelMode route, const QuadratureSpec& q = {});

double u_origin_closed(FractionalExponent s, double t, double kappa);
double tail_coefficient(FractionalExponent s, double t, double kappa);

} // namespace levy
