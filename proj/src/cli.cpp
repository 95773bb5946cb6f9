#include "levy/cli.hpp"

#include "levy/csv.hpp"
#include "levy/functionals.hpp"
#include "levy/grid.hpp"
#include "levy/kernel.hpp"
#include "levy/optimize.hpp"
#include "levy/oracle.hpp"
#include "levy/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace levy::cli {

namespace {

std::string g17(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

KappaMode parse_kappa(const std::string& m)
{
    return m == "levy" ? KappaMode::LevyWalk : KappaMode::Unit;
}

// A functional id or one of the auxiliary closed forms phi0, ell, ellbar.
struct Quantity {
    std::optional<FunctionalId> id;
    std::string extra;

    static Quantity parse(const std::string& name)
    {
        if (name == "phi0" || name == "ell" || name == "ellbar")
            return {std::nullopt, name};
        return {FunctionalId::parse(name), {}};
    }
    std::string name() const { return id ? id->name() : extra; }
    double domain_lo() const { return id ? id->domain_lo() : 0.5; }
    bool infinite_below_half() const { return id ? id->infinite_below_half() : extra == "phi0"; }

    FunctionalValue eval(double s, const ScenarioParams& p) const
    {
        if (id)
            return eval_functional(*id, FractionalExponent(s), p);
        p.validate();
        const FractionalExponent fs(s);
        if (extra == "phi0")
            return phi0(fs, kappa_for(p.kappa_mode, fs), p.T);
        if (extra == "ell")
            return {mean_displacement(fs, kappa_for(p.kappa_mode, fs), p.T), false, true};
        return {ell_bar(fs, p.T), false, true};
    }
};

struct Common {
    std::string functional;
    double T = 1.0;
    double L = 1.0;
    std::string kappa_mode = "unit";

    void add(CLI::App* c, bool need_functional = true)
    {
        auto* f = c->add_option("--functional", functional, "E1..E6, G1..G6, H1..H6, g5c, g6c, phi0, ell, ellbar");
        if (need_functional)
            f->required();
        c->add_option("--T", T, "time horizon")->capture_default_str();
        c->add_option("--L", L, "target distance")->capture_default_str();
        c->add_option("--kappa-mode", kappa_mode, "unit | levy")
            ->check(CLI::IsMember({"unit", "levy"}))
            ->capture_default_str();
    }
    ScenarioParams params() const
    {
        ScenarioParams p{T, L, parse_kappa(kappa_mode)};
        p.validate();
        return p;
    }
};

const char* kind_name(ExtremumKind k) { return k == ExtremumKind::Minimum ? "min" : "max"; }

const char* side_name(Side s)
{
    switch (s) {
    case Side::Left: return "left";
    case Side::Interior: return "interior";
    case Side::Right: return "right";
    }
    return "?";
}

int do_eval(const Common& c, double s, std::ostream& out)
{
    const auto q = Quantity::parse(c.functional);
    const auto v = q.eval(s, c.params());
    out << (v.infinite ? std::string("inf") : g17(v.value)) << "\n";
    return 0;
}

int do_sweep(const Common& c, double s_min, double s_max, int steps, const std::string& path, std::ostream& out)
{
    const auto q = Quantity::parse(c.functional);
    const auto p = c.params();
    if (steps < 2)
        throw DomainError("sweep: --steps must be >= 2");
    if (!(s_min >= 0.0) || !(s_max <= 1.0) || !(s_min < s_max))
        throw DomainError("sweep: need 0 <= s-min < s-max <= 1");
    const double lo = q.domain_lo();
    if (s_min <= lo)
        s_min = lo + 1e-6;  // keep rows finite
    if (!(s_min < s_max))
        throw DomainError("sweep: empty s-range after clamping to the finite domain");
    SweepTable t;
    t.s = grid::linspace(s_min, s_max, steps);
    t.value = grid::map([&](double s) { return q.eval(s, p).value; }, t.s, grid::Exec::Parallel);
    t.metadata = {"functional=" + q.name(), "T=" + format_double(p.T), "L=" + format_double(p.L),
                  "kappa_mode=" + c.kappa_mode, "version=" + std::string(tool_version)};
    const auto text = t.to_csv();
    if (path.empty())
        out << text;
    else
        write_file_atomic(path, text);
    return 0;
}

int do_optimize(const Common& c, const SolverSpec& spec, std::ostream& out)
{
    const auto q = Quantity::parse(c.functional);
    if (!q.id)
        throw DomainError("optimize: needs one of the E/G/H/g functionals");
    const auto r = scan_extrema(*q.id, c.params(), spec);
    for (const auto& cp : r.points)
        out << "critical " << kind_name(cp.kind) << " s=" << g17(cp.s_star) << " value=" << g17(cp.value)
            << " bracket=[" << g17(cp.lo) << "," << g17(cp.hi) << "] residual=" << g17(cp.residual) << "\n";
    out << "left s=" << g17(r.left.s) << " value=" << g17(r.left.value) << (r.left.diverges ? " limit=inf" : "")
        << "\n";
    out << "right s=" << g17(r.right.s) << " value=" << g17(r.right.value) << "\n";
    out << "supremum side=" << side_name(r.sup_side) << " s=" << g17(r.sup_s) << " value=" << g17(r.sup_value)
        << "\n";
    return 0;
}

int do_bifurcation(const std::string& which, std::ostream& out)
{
    auto show = [&](const char* name, const BifurcationPair& b) {
        out << name << " closed_form=" << g17(b.closed_form.critical_value)
            << " sign_change=" << g17(b.sign_change.critical_value) << " rel_gap=" << g17(b.rel_gap()) << "\n";
    };
    if (which == "tstar" || which == "all")
        show("Tstar", find_Tstar());
    if (which == "lstar" || which == "all")
        show("Lstar", find_Lstar());
    return 0;
}

int do_kernel(double x, double t, double s, const std::string& mode, double kappa, std::ostream& out)
{
    const FractionalExponent fs(s);
    const double k = kappa > 0.0 ? kappa : kappa_for(parse_kappa(mode), fs);
    const auto v = u_eval(KernelPoint{x, t, fs, k});
    const char* m = v.mode == KernelMode::TailLaw ? "tail-law" : (v.mode == KernelMode::Contour ? "contour" : "direct");
    out << "u=" << g17(v.value) << " error=" << g17(v.error_estimate) << " mode=" << m << "\n";
    return 0;
}

struct OracleArgs {
    std::string which;
    double s = 0.75, T = 1.0, L = 100.0, lambda = 10.0, t = 1.0, tol = -1.0;
    int n_terms = 10000;
    std::string kappa_mode = "unit";
};

int do_oracle(const OracleArgs& a, std::ostream& out)
{
    const std::map<std::string, double> default_tol = {
        {"phi0", 1e-4}, {"moment", 1e-4}, {"remote", 0.02}, {"lattice", 1e-6}};
    const double tol = a.tol > 0.0 ? a.tol : default_tol.at(a.which);
    auto line = [&](const std::string& id, const OracleReport& r, double tl) {
        const bool ok = r.rel_diff < tl;
        out << id << " oracle=" << g17(r.oracle_value) << " closed=" << g17(r.closed_value)
            << " rel_diff=" << g17(r.rel_diff) << " quad_err=" << g17(r.quadrature_error_estimate) << " tol=" << tl
            << (ok ? " PASS" : " FAIL") << "\n";
        return ok;
    };
    if (a.which == "lattice") {
        const auto r = oracle_lattice(FractionalExponent(a.s), a.lambda, a.t, a.n_terms);
        const bool ok = line("poisson", r.poisson, tol);
        line("reduction", r.reduction, 1.0);  // informational
        return ok ? 0 : 1;
    }
    const FractionalExponent fs(a.s);
    const double k = kappa_for(parse_kappa(a.kappa_mode), fs);
    OracleReport r;
    if (a.which == "phi0")
        r = oracle_phi0(FractionalExponent::half1(a.s), k, a.T);
    else if (a.which == "moment")
        r = oracle_moment(FractionalExponent::half1(a.s), k, a.T);
    else
        r = oracle_remote(fs, k, a.L, a.T);
    return line(a.which, r, tol) ? 0 : 1;
}

int do_verify(const std::string& suite, std::ostream& out)
{
    const auto lines = run_suite(suite);
    bool ok = true;
    for (const auto& l : lines) {
        out << format_check(l) << "\n";
        ok = ok && l.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Levy foraging efficiency functionals"};
    app.require_subcommand(1);

    Common ec;
    double eval_s = 0.0;
    auto* ev = app.add_subcommand("eval", "evaluate one functional");
    ec.add(ev);
    ev->add_option("--s", eval_s, "fractional exponent")->required();

    Common sc;
    double s_min = 0.0, s_max = 1.0;
    int steps = 201;
    std::string out_path;
    auto* sw = app.add_subcommand("sweep", "tabulate a functional on an s-grid as CSV");
    sc.add(sw);
    sw->add_option("--s-min", s_min, "lower s (clamped to the finite domain)")->capture_default_str();
    sw->add_option("--s-max", s_max, "upper s")->capture_default_str();
    sw->add_option("--steps", steps, "rows")->capture_default_str();
    sw->add_option("--out", out_path, "CSV path (stdout if omitted)");

    Common oc;
    SolverSpec spec;
    auto* op = app.add_subcommand("optimize", "critical points and supremum of a functional");
    oc.add(op);
    op->add_option("--s-tol", spec.s_tol)->capture_default_str();
    op->add_option("--grid-points", spec.grid_points)->capture_default_str();
    op->add_option("--boundary-margin", spec.boundary_margin)->capture_default_str();

    std::string which = "all";
    auto* bf = app.add_subcommand("bifurcation", "T* and L*");
    bf->add_option("--which", which, "tstar | lstar | all")
        ->check(CLI::IsMember({"tstar", "lstar", "all"}))
        ->capture_default_str();

    double kx = 0.0, kt = 1.0, ks = 0.75, kk = 0.0;
    std::string kmode = "unit";
    auto* kn = app.add_subcommand("kernel", "fractional heat kernel u(x,t)");
    kn->add_option("--x", kx)->required();
    kn->add_option("--t", kt)->capture_default_str();
    kn->add_option("--s", ks)->required();
    kn->add_option("--kappa-mode", kmode)->check(CLI::IsMember({"unit", "levy"}))->capture_default_str();
    kn->add_option("--kappa", kk, "explicit diffusion coefficient (overrides --kappa-mode)");

    OracleArgs oa;
    auto* orc = app.add_subcommand("oracle-check", "quadrature oracle against the closed form");
    orc->add_option("--oracle", oa.which)->required()->check(CLI::IsMember({"phi0", "moment", "remote", "lattice"}));
    orc->add_option("--s", oa.s)->capture_default_str();
    orc->add_option("--T", oa.T)->capture_default_str();
    orc->add_option("--L", oa.L)->capture_default_str();
    orc->add_option("--lambda", oa.lambda)->capture_default_str();
    orc->add_option("--t", oa.t)->capture_default_str();
    orc->add_option("--n-terms", oa.n_terms)->capture_default_str();
    orc->add_option("--kappa-mode", oa.kappa_mode)->check(CLI::IsMember({"unit", "levy"}))->capture_default_str();
    orc->add_option("--tol", oa.tol, "pass threshold on rel_diff");

    std::string suite = "all";
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite, "all | specfun | kernel | appendixA1..appendixA5 | bifurcations")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*ev) return do_eval(ec, eval_s, out);
        if (*sw) return do_sweep(sc, s_min, s_max, steps, out_path, out);
        if (*op) {
            spec.validate();
            return do_optimize(oc, spec, out);
        }
        if (*bf) return do_bifurcation(which, out);
        if (*kn) return do_kernel(kx, kt, ks, kmode, kk, out);
        if (*orc) return do_oracle(oa, out);
        if (*vf) return do_verify(suite, out);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        err << "quadrature error: " << e.what() << " (value " << g17(e.value()) << ", estimate "
            << g17(e.error_estimate()) << ")\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace levy::cli
