#pragma once

#include "levy/functionals.hpp"
#include "levy/kernel.hpp"

namespace levy {

struct OracleReport {
    double oracle_value = 0.0;
    double closed_value = 0.0;
    double rel_diff = 0.0;
    double quadrature_error_estimate = 0.0;
    double tail_correction = 0.0;  // analytic tail added to the oracle value, if any
};

// tighter than the kernel defaults; oracles are the reference side
QuadratureSpec oracle_quadrature();

// int_0^T u(0,t) dt from kernel quadrature
OracleReport oracle_phi0(FractionalExponent s, double kappa, double T, const QuadratureSpec& q = oracle_quadrature());

// M = int |y| u(y,1) dy over |y| <= Y plus the tail-law remainder, then
// ell = M T^{(1+2s)/(2s)} 2s/(1+2s). Y <= 0 picks the default max(400, 20 kappa).
OracleReport oracle_moment(FractionalExponent s, double kappa, double T, const QuadratureSpec& q = oracle_quadrature(),
                           double Y = 0.0);

// int_0^T u(L,t) dt against the leading-order remote-prey closed form
OracleReport oracle_remote(FractionalExponent s, double kappa, double L, double T,
                           const QuadratureSpec& q = oracle_quadrature());

struct LatticeReport {
    OracleReport poisson;    // physical sum vs frequency sum
    OracleReport reduction;  // frequency sum vs u(0,t)
    int physical_terms = 0;
    int frequency_terms = 0;
    double physical_tail = 0.0;
};

// sum_k u(lambda k, t) vs (1/lambda) sum_k exp(-|2 pi k|^{2s} t / lambda^{2s}), kappa = 1
LatticeReport oracle_lattice(FractionalExponent s, double lambda, double t, int n_terms);

} // namespace levy
