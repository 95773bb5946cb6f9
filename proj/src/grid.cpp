#include "levy/grid.hpp"

#include <cmath>

namespace levy::grid {

std::vector<double> linspace(double a, double b, int n)
{
    if (n < 2)
        throw DomainError("linspace: need at least two points");
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    v.back() = b;
    return v;
}

int max_threads()
{
#ifdef LEVY_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<double> sweep_values(FunctionalId id, const ScenarioParams& p, std::span<const double> s, Exec exec)
{
    p.validate();
    return map([&](double v) { return eval_functional(id, FractionalExponent(v), p).value; }, s, exec);
}

std::vector<double> kernel_values(std::span<const KernelPoint> pts, const QuadratureSpec& q, Exec exec)
{
    std::vector<double> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = static_cast<double>(i);
    return map([&](double i) { return u_eval_quadrature(pts[static_cast<std::size_t>(i)], q).value; }, idx, exec);
}

double lattice_physical_sum(FractionalExponent s, double lambda, double t, int n, const QuadratureSpec& q, Exec exec)
{
    std::vector<double> ks(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        ks[static_cast<std::size_t>(k)] = k;
    const auto terms = map(
        [&](double k) { return u_eval_quadrature(KernelPoint{lambda * k, t, s, 1.0}, q).value; }, ks, exec);
    // smallest terms first, fixed order
    double acc = 0.0;
    for (std::size_t k = terms.size(); k-- > 1;)
        acc += 2.0 * terms[k];
    return acc + terms[0];
}

} // namespace levy::grid
