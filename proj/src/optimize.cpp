#include "levy/optimize.hpp"

#include "levy/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

namespace levy {

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

bool diverges_left(FunctionalId id)
{
    return (id.family == Family::E || id.family == Family::H) && id.index <= 2;
}

double centered_log_derivative(FunctionalId id, double s, const ScenarioParams& p, double h)
{
    const double lo = id.domain_lo();
    const double hr = std::min(h, 1.0 - s);
    const double hl = std::min(h, s - lo);
    if (hr <= 0.0 && hl <= 0.0)
        throw DomainError("log_derivative: no room for a difference at s=" + num(s));
    const double fr = log_functional(id, s + hr, p);
    const double fl = log_functional(id, s - hl, p);
    return (fr - fl) / (hr + hl);
}

int sign_of(double d) { return (d > 0.0) - (d < 0.0); }

ExtremumKind classify(FunctionalId id, double s, const ScenarioParams& p, int left_sign)
{
    const double lo = id.domain_lo();
    double h = 1e-4;
    h = std::min({h, 0.5 * (1.0 - s), 0.5 * (s - lo)});
    if (h > 0.0) {
        const double d2 = log_functional(id, s + h, p) - 2.0 * log_functional(id, s, p) + log_functional(id, s - h, p);
        if (d2 < 0.0)
            return ExtremumKind::Maximum;
        if (d2 > 0.0)
            return ExtremumKind::Minimum;
    }
    return left_sign > 0 ? ExtremumKind::Maximum : ExtremumKind::Minimum;
}

struct Grid {
    std::vector<double> s;
    std::vector<double> d;
};

Grid derivative_grid(FunctionalId id, const ScenarioParams& p, const SolverSpec& spec)
{
    Grid g;
    const double a = id.domain_lo() + spec.boundary_margin;
    const double b = 1.0 - spec.boundary_margin;
    g.s = grid::linspace(a, b, spec.grid_points);
    g.d = grid::map([&](double s) { return log_derivative(id, s, p, spec); }, g.s, spec.exec);
    for (std::size_t i = 0; i < g.d.size(); ++i)
        if (!std::isfinite(g.d[i]))
            throw DomainError(id.name() + ": non-finite derivative at s=" + num(g.s[i]) + " (T=" + num(p.T) +
                              ", L=" + num(p.L) + ")");
    return g;
}

std::vector<CriticalPoint> refine(FunctionalId id, const ScenarioParams& p, const SolverSpec& spec, const Grid& g)
{
    std::vector<CriticalPoint> out;
    for (std::size_t i = 0; i + 1 < g.s.size(); ++i) {
        const int sl = sign_of(g.d[i]);
        const int sr = sign_of(g.d[i + 1]);
        if (sl == 0 || sr == 0 || sl == sr)
            continue;
        double lo = g.s[i], hi = g.s[i + 1];
        while (hi - lo > spec.s_tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (sign_of(log_derivative(id, mid, p, spec)) == sl)
                lo = mid;
            else
                hi = mid;
        }
        CriticalPoint c;
        c.s_star = 0.5 * (lo + hi);
        c.lo = lo;
        c.hi = hi;
        c.residual = hi - lo;
        c.value = eval_functional(id, FractionalExponent(c.s_star), p).value;
        c.kind = classify(id, c.s_star, p, sl);
        out.push_back(c);
    }
    return out;
}

template <class Pred>
double bisect_flag(double lo, double hi, double rel_width, Pred pred)
{
    const bool at_lo = pred(lo);
    while (hi - lo > rel_width * hi) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid) == at_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

void SolverSpec::validate() const
{
    if (!(s_tol > 0.0))
        throw DomainError("solver spec: s_tol must be > 0");
    if (grid_points < 101)
        throw DomainError("solver spec: grid_points must be >= 101");
    if (!(boundary_margin > 0.0 && boundary_margin < 0.1))
        throw DomainError("solver spec: boundary_margin must be in (0, 0.1)");
}

double BifurcationPair::rel_gap() const
{
    return std::abs(closed_form.critical_value - sign_change.critical_value) / std::abs(closed_form.critical_value);
}

double log_derivative(FunctionalId id, double s, const ScenarioParams& p, const SolverSpec& spec)
{
    if (id.family == Family::E && id.index == 1 && s > 0.5) {
        const double a = 2.0 * s;
        const double psi = specfun::digamma(1.0 / a).value;
        return ((a - 1.0) * (std::log(p.T) - psi) - 4.0 * s * s) / (2.0 * s * s * (a - 1.0));
    }
    if (id.family == Family::G && id.index == 4 && s > 0.5)
        return -2.0 * (std::log(p.L) + m_of_s(FractionalExponent(s)));
    if (id.family == Family::G && id.index == 3 && s > 0.5 && s < 1.0) {
        const double z1 = specfun::zeta(1.0 + 2.0 * s).value;
        return 2.0 * P_G3(FractionalExponent(s), p.L, p.T) / (z1 * specfun::sin_pi(s));
    }
    return centered_log_derivative(id, s, p, std::max(1e-7, spec.s_tol));
}

std::vector<CriticalPoint> find_critical_points(FunctionalId id, const ScenarioParams& p, const SolverSpec& spec)
{
    spec.validate();
    p.validate();
    return refine(id, p, spec, derivative_grid(id, p, spec));
}

ExtremaScan scan_extrema(FunctionalId id, const ScenarioParams& p, const SolverSpec& spec)
{
    spec.validate();
    p.validate();
    const Grid g = derivative_grid(id, p, spec);
    ExtremaScan out;
    out.points = refine(id, p, spec, g);
    const auto vals = grid::sweep_values(id, p, g.s, spec.exec);
    out.left = {g.s.front(), vals.front(), diverges_left(id)};
    out.right = {g.s.back(), vals.back(), false};

    if (out.left.diverges) {
        out.sup_side = Side::Left;
        out.sup_s = id.domain_lo();
        out.sup_value = std::numeric_limits<double>::infinity();
        return out;
    }
    const auto it = std::max_element(vals.begin(), vals.end());
    const auto k = static_cast<std::size_t>(it - vals.begin());
    out.sup_s = g.s[k];
    out.sup_value = *it;
    out.sup_side = k == 0 ? Side::Left : (k + 1 == vals.size() ? Side::Right : Side::Interior);
    for (const auto& c : out.points) {
        if (c.kind == ExtremumKind::Maximum && c.value >= out.sup_value) {
            out.sup_side = Side::Interior;
            out.sup_s = c.s_star;
            out.sup_value = c.value;
        }
    }
    return out;
}

BifurcationPair find_Tstar()
{
    BifurcationPair r;
    const double closed = std::exp(-std::log(6.0) - 12.0 * specfun::zeta_prime(-1.0).value -
                                   6.0 / (pi * pi) * specfun::zeta_prime(2.0).value);
    r.closed_form = {BifurcationParameter::TStar, closed, BifurcationMethod::ClosedForm};
    const double sc = bisect_flag(1.0, 10.0, 1e-14, [](double T) { return dE4_at_half(T) > 0.0; });
    r.sign_change = {BifurcationParameter::TStar, sc, BifurcationMethod::SignChange};
    return r;
}

BifurcationPair find_Lstar()
{
    BifurcationPair r;
    const double closed = std::exp(-specfun::zeta_prime(2.0).value / specfun::zeta(2.0).value);
    r.closed_form = {BifurcationParameter::LStar, closed, BifurcationMethod::ClosedForm};
    SolverSpec spec;
    spec.boundary_margin = 1e-9;
    spec.grid_points = 401;
    const FunctionalId g4(Family::G, 4);
    auto has_interior_max = [&](double L) {
        const auto pts = find_critical_points(g4, ScenarioParams{1.0, L, KappaMode::Unit}, spec);
        return std::any_of(pts.begin(), pts.end(), [](const auto& c) { return c.kind == ExtremumKind::Maximum; });
    };
    const double sc = bisect_flag(1.5, 2.1, 1e-11, has_interior_max);
    r.sign_change = {BifurcationParameter::LStar, sc, BifurcationMethod::SignChange};
    return r;
}

CriticalPoint solve_sL_G4(double L, const SolverSpec& spec)
{
    spec.validate();
    const double lstar = find_Lstar().closed_form.critical_value;
    if (!(L > lstar))
        throw DomainError("solve_sL_G4: requires L > L* = " + num(lstar));
    const double target = -std::log(L);
    auto g = [&](double s) { return m_of_s(FractionalExponent(s)) - target; };
    double lo = 0.5 + spec.boundary_margin, hi = 1.0;
    while (g(lo) > 0.0)
        lo = 0.5 + 0.5 * (lo - 0.5);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    CriticalPoint c;
    c.s_star = std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi;
    c.lo = lo;
    c.hi = hi;
    c.residual = std::abs(g(c.s_star));
    c.kind = ExtremumKind::Maximum;
    c.value = eval_functional(FunctionalId(Family::G, 4), FractionalExponent(c.s_star), ScenarioParams{1.0, L}).value;
    return c;
}

double sbar_T(double T)
{
    if (!(T > 0.0))
        throw DomainError("sbar_T: requires T > 0");
    const double a = std::log(T) + specfun::euler_gamma;
    if (!(a > 3.0))
        throw DomainError("sbar_T: requires ln T + gamma > 3");
    return 0.5 * (a - 2.0) / (a - 3.0);
}

std::pair<double, double> bracket_G1(double L)
{
    if (!(L > 1.0))
        throw DomainError("bracket_G1: requires L > 1");
    const double lnL = std::log(L);
    const double lo = 1.0 / (8.0 * lnL);
    const double hi = 2.0 / (3.0 * (lnL - specfun::digamma(3.0).value));
    if (!(lo > 0.0 && hi < 1.0 && hi > 0.0 && lo < hi))
        throw DomainError("bracket_G1: L=" + num(L) + " too small for a bracket inside (0,1)");
    return {lo, hi};
}

std::pair<double, double> bracket_G3(double L)
{
    if (!(L > 0.0) || !(std::log(L) > 1.0))
        throw DomainError("bracket_G3: requires ln L > 1");
    const double lnL = std::log(L);
    const double eps = 1.0 / std::sqrt(lnL);
    return {0.5 + (1.0 - eps) / (2.0 * lnL), 0.5 + (1.0 + eps) / (2.0 * lnL)};
}

bool SuiteReport::passed() const
{
    return !rungs.empty() && std::all_of(rungs.begin(), rungs.end(), [](const Rung& r) { return r.pass; });
}

std::string claim_name(Claim c)
{
    switch (c) {
    case Claim::UNST: return "UNST";
    case Claim::UNST2: return "UNST2";
    case Claim::SLL1: return "SLL1";
    case Claim::SLL1K: return "SLL1K";
    case Claim::SLL: return "SLL";
    case Claim::ASOG4: return "ASOG4";
    case Claim::E3switch: return "E3switch";
    case Claim::E4switch: return "E4switch";
    }
    return "?";
}

namespace {

const char* side_name(Side s)
{
    switch (s) {
    case Side::Left: return "left";
    case Side::Interior: return "interior";
    case Side::Right: return "right";
    }
    return "?";
}

std::vector<CriticalPoint> of_kind(const std::vector<CriticalPoint>& pts, ExtremumKind k)
{
    std::vector<CriticalPoint> out;
    for (const auto& c : pts)
        if (c.kind == k)
            out.push_back(c);
    return out;
}

// unique interior maximum along an L-ladder, strictly decreasing in L
void argmax_ladder(SuiteReport& rep, FunctionalId id, const SolverSpec& spec)
{
    std::vector<double> arg;
    bool ok = true;
    for (double L : {1e2, 1e4, 1e6}) {
        const auto mx = of_kind(find_critical_points(id, {1.0, L}, spec), ExtremumKind::Maximum);
        const bool one = mx.size() == 1;
        rep.rungs.push_back({id.name() + " L=" + num(L), one,
                             one ? "argmax=" + num(mx[0].s_star) : "maxima found: " + std::to_string(mx.size())});
        if (one)
            arg.push_back(mx[0].s_star);
        else
            ok = false;
    }
    std::string d;
    for (double a : arg)
        d += num(a) + " ";
    ok = ok && std::is_sorted(arg.rbegin(), arg.rend()) && std::adjacent_find(arg.begin(), arg.end()) == arg.end();
    rep.rungs.push_back({id.name() + " argmax decreasing", ok, d});
}

template <class Bracket>
void bracket_rungs(SuiteReport& rep, FunctionalId id, Bracket bracket, const SolverSpec& spec)
{
    for (double L : {1e3, 1e6}) {
        const auto [lo, hi] = bracket(L);
        const auto pts = find_critical_points(id, {1.0, L}, spec);
        bool inside = !pts.empty();
        std::string d = "bracket=(" + num(lo) + "," + num(hi) + ") points=";
        for (const auto& c : pts) {
            inside = inside && c.s_star > lo && c.s_star < hi;
            d += num(c.s_star) + " ";
        }
        rep.rungs.push_back({id.name() + " in bracket L=" + num(L), inside, d});
    }
}

} // namespace

SuiteReport asymptotic_suite(Claim claim, const SolverSpec& spec)
{
    SuiteReport rep;
    rep.claim = claim;
    switch (claim) {
    case Claim::UNST: {
        const FunctionalId e1(Family::E, 1);
        std::vector<double> ss, vs;
        for (double T : {1e3, 1e4, 1e5}) {
            const auto pts = find_critical_points(e1, {T, 1.0}, spec);
            const double sb = sbar_T(T);
            const bool ok = pts.size() == 1 && pts[0].kind == ExtremumKind::Minimum && pts[0].s_star > 0.5 &&
                            pts[0].s_star < sb;
            rep.rungs.push_back({"E1 T=" + num(T), ok,
                                 pts.empty() ? "no critical point"
                                             : "s_T=" + num(pts[0].s_star) + " sbar=" + num(sb) +
                                                   " count=" + std::to_string(pts.size())});
            if (ok) {
                ss.push_back(pts[0].s_star);
                vs.push_back(pts[0].value);
            }
        }
        const bool dec = ss.size() == 3 && ss[0] > ss[1] && ss[1] > ss[2] && vs[0] > vs[1] && vs[1] > vs[2];
        rep.rungs.push_back({"E1 s_T and E1(s_T) decreasing", dec,
                             ss.size() == 3 ? "E1(s_T)=" + num(vs[0]) + "," + num(vs[1]) + "," + num(vs[2]) : ""});
        break;
    }
    case Claim::UNST2: {
        const FunctionalId e2(Family::E, 2);
        std::vector<double> mins, maxs;
        for (double T : {1e4, 1e8, 1e16}) {
            const auto pts = find_critical_points(e2, {T, 1.0}, spec);
            const auto mn = of_kind(pts, ExtremumKind::Minimum);
            const auto mx = of_kind(pts, ExtremumKind::Maximum);
            const bool ok = mn.size() == 1 && mx.size() == 1 && mn[0].s_star < mx[0].s_star;
            rep.rungs.push_back({"E2 T=" + num(T), ok,
                                 ok ? "min=" + num(mn[0].s_star) + " max=" + num(mx[0].s_star)
                                    : "critical points: " + std::to_string(pts.size())});
            if (ok) {
                mins.push_back(mn[0].s_star);
                maxs.push_back(mx[0].s_star);
            }
        }
        const bool trend = mins.size() == 3 && mins[0] > mins[1] && mins[1] > mins[2] && maxs[0] < maxs[1] &&
                           maxs[1] < maxs[2];
        rep.rungs.push_back({"E2 min -> 1/2, max -> 1", trend, ""});
        break;
    }
    case Claim::SLL1:
        argmax_ladder(rep, FunctionalId(Family::G, 1), spec);
        bracket_rungs(rep, FunctionalId(Family::G, 1), bracket_G1, spec);
        break;
    case Claim::SLL1K:
        argmax_ladder(rep, FunctionalId(Family::G, 2), spec);
        break;
    case Claim::SLL:
        argmax_ladder(rep, FunctionalId(Family::G, 3), spec);
        bracket_rungs(rep, FunctionalId(Family::G, 3), bracket_G3, spec);
        break;
    case Claim::ASOG4: {
        const FunctionalId g4(Family::G, 4);
        for (double L : {1.5, 1.7}) {
            const auto sc = scan_extrema(g4, {1.0, L}, spec);
            const bool ok = sc.points.empty() && sc.sup_side == Side::Right;
            rep.rungs.push_back({"G4 L=" + num(L) + " increasing", ok, std::string("sup ") + side_name(sc.sup_side)});
        }
        argmax_ladder(rep, g4, spec);
        for (double L : {1e2, 1e4, 1e6}) {
            const auto mx = of_kind(find_critical_points(g4, {1.0, L}, spec), ExtremumKind::Maximum);
            const double res = mx.empty() ? 1.0 : std::abs(std::log(L) + m_of_s(FractionalExponent(mx[0].s_star)));
            rep.rungs.push_back({"G4 root condition L=" + num(L), res < 1e-6, "|lnL+m|=" + num(res)});
        }
        break;
    }
    case Claim::E3switch:
    case Claim::E4switch: {
        const bool e3 = claim == Claim::E3switch;
        const FunctionalId id(Family::E, e3 ? 3 : 4);
        const double t_lo = e3 ? 1.5 : 2.0;
        const double t_hi = e3 ? 1.7 : 3.0;
        const auto a = scan_extrema(id, {t_lo, 1.0}, spec);
        rep.rungs.push_back({id.name() + " T=" + num(t_lo) + " sup at 1/2+", a.sup_side == Side::Left,
                             std::string("sup ") + side_name(a.sup_side) + " s=" + num(a.sup_s)});
        const auto b = scan_extrema(id, {t_hi, 1.0}, spec);
        const bool ok = e3 ? b.sup_side == Side::Right : (b.sup_side != Side::Left && b.sup_value > b.left.value);
        rep.rungs.push_back({id.name() + " T=" + num(t_hi) + (e3 ? " sup at 1-" : " sup moves off 1/2+"), ok,
                             std::string("sup ") + side_name(b.sup_side) + " s=" + num(b.sup_s) + " value=" +
                                 num(b.sup_value) + " left=" + num(b.left.value)});
        break;
    }
    }
    return rep;
}

} // namespace levy
