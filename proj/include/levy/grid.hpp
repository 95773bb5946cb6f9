#pragma once

#include "levy/functionals.hpp"
#include "levy/kernel.hpp"

#include <exception>
#include <span>
#include <vector>

#ifdef LEVY_HAVE_OPENMP
#include <omp.h>
#endif

namespace levy::grid {

// Parallel loops over independent grid points. Serial is the reference
// implementation; both produce identical vectors.
enum class Exec { Serial, Parallel };

std::vector<double> linspace(double a, double b, int n);
int max_threads();

template <class F>
std::vector<double> map(F&& f, std::span<const double> xs, Exec exec)
{
    const long n = static_cast<long>(xs.size());
    std::vector<double> out(xs.size());
    if (exec == Exec::Serial) {
        for (long i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
        return out;
    }
    std::exception_ptr failure;
#ifdef LEVY_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
        } catch (...) {
#ifdef LEVY_HAVE_OPENMP
#pragma omp critical(levy_grid_failure)
#endif
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

// functional values along an s-grid
std::vector<double> sweep_values(FunctionalId id, const ScenarioParams& p, std::span<const double> s,
                                 Exec exec = Exec::Parallel);

// u(x,t) at many points, quadrature only
std::vector<double> kernel_values(std::span<const KernelPoint> pts, const QuadratureSpec& q,
                                  Exec exec = Exec::Parallel);

// sum over k of u(lambda k, t), k in [-n, n], by quadrature
double lattice_physical_sum(FractionalExponent s, double lambda, double t, int n, const QuadratureSpec& q,
                            Exec exec = Exec::Parallel);

} // namespace levy::grid
