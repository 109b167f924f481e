// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Each check evaluates the criterion as stated; supplementary lines marked
// "info" carry diagnostics and never change the verdict.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/value.hpp"
#include "pursuit/verify.hpp"

using namespace pursuit;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
    std::vector<std::string> info;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string num(double x) { return fmt("%.9g", x); }

GameConfig game(double nu, double r_cap, double rho0, double t_f, int n) {
    GameConfig c;
    c.nu = nu;
    c.r_cap = r_cap;
    c.phi = PayoffSpec{PayoffKind::hinge, r_cap};
    c.x_e0 = Vec2(rho0, 0.0);
    c.t_f = t_f;
    c.n = n;
    return c;
}

// 1. Sensing-count comparison ----------------------------------------------------

// Counting oracles, long double, no logarithms.
int aleem_count(long double rho0, long double r, long double nu) {
    const long double s = std::sqrt(1.0L - nu * nu);
    const long double h = 1.0L - (1.0L - nu) * s / (nu + s);
    int n = 0;
    for (long double x = rho0; x > r; x *= h) {
        ++n;
    }
    return n;
}

int prop1_count(long double rho0, long double r, long double nu) {
    int n = 0;
    for (long double x = rho0 * nu; x >= r; x *= nu) {
        ++n;
    }
    return n;
}

Verdict criterion1() {
    Verdict v;
    const double rho0 = 5.0;
    const double r = 0.1;
    bool ordered = true;
    bool ratio_ok = true;
    bool gap_monotone = true;
    bool oracle_ok = true;
    bool real_gap_monotone = true;
    int prev_gap = -1;
    double prev_real_gap = -1.0;
    std::string first_drop;
    for (int i = 1; i <= 19; ++i) {
        const double nu = i / 20.0;
        const int a = aleem_n_max(rho0, r, nu);
        const int p = prop1_n_max(rho0, r, nu);
        oracle_ok = oracle_ok && a == aleem_count(rho0, r, nu) && p == prop1_count(rho0, r, nu);
        ordered = ordered && p <= a;
        if (nu >= 0.7 - 1e-12) {
            ratio_ok = ratio_ok && static_cast<double>(a) > 2.0 * p;
        }
        const int gap = a - p;
        if (prev_gap >= 0 && gap < prev_gap && first_drop.empty()) {
            first_drop = "gap " + std::to_string(prev_gap) + " -> " + std::to_string(gap) + " at nu " +
                         num((i - 1) / 20.0) + " -> " + num(nu);
        }
        gap_monotone = gap_monotone && (prev_gap < 0 || gap >= prev_gap);
        prev_gap = gap;
        const double real_gap = std::log(r / rho0) * (1.0 / std::log(h_of_nu(nu)) - 1.0 / std::log(nu));
        real_gap_monotone = real_gap_monotone && real_gap > prev_real_gap;
        prev_real_gap = real_gap;
    }
    v.pass = ordered && ratio_ok && gap_monotone && oracle_ok;
    v.detail = std::string("prop1<=aleem ") + (ordered ? "ok" : "FAIL") + ", ratio>2 for nu>=0.7 " +
               (ratio_ok ? "ok" : "FAIL") + ", integer gap monotone " + (gap_monotone ? "ok" : "FAIL") +
               ", counting oracle " + (oracle_ok ? "ok" : "FAIL") + "; nu=0.7 -> (24, 10), nu=0.9 -> (118, 37)";
    if (!first_drop.empty()) {
        v.info.push_back("integer " + first_drop + " (ceil/floor rounding)");
    }
    v.info.push_back(std::string("unrounded gap log(r/rho0)(1/log h - 1/log nu) strictly increasing: ") +
                     (real_gap_monotone ? "yes" : "no"));
    return v;
}

// 2. Value surfaces -------------------------------------------------------------

Verdict criterion2() {
    Verdict v;
    const double nu = 0.7;
    const double r = 0.1;
    const PayoffSpec phi{PayoffKind::hinge, r};
    const int N = 300;
    const double rho_max = 2.0;
    const double tau_max = 10.0;
    const auto rho_at = [&](int i) { return rho_max * i / (N - 1); };
    const auto tau_at = [&](int j) { return tau_max * j / (N - 1); };

    // (a) boundary condition: V(rho, 0, ell) = phi(rho), exactly.
    bool a_ok = true;
    for (int ell = 0; ell <= 5; ++ell) {
        for (int i = 0; i < N; ++i) {
            a_ok = a_ok && v_bound({rho_at(i), 0.0, ell}, phi, nu, r).value == phi_eval(phi, rho_at(i));
        }
    }

    // (c) non-increasing in ell; (d) Omega_0 flags.
    bool c_ok = true;
    bool d_ok = true;
    double band_lo = 1e300;
    double band_hi = -1e300;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const double rho = rho_at(i);
            const double tau = tau_at(j);
            double prev = v_bound({rho, tau, 0}, phi, nu, r).value;
            for (int ell = 1; ell <= 5; ++ell) {
                const double cur = v_bound({rho, tau, ell}, phi, nu, r).value;
                c_ok = c_ok && cur <= prev;
                prev = cur;
            }
            const ValueBound b0 = v_bound({rho, tau, 0}, phi, nu, r);
            const bool in_band = tau >= rho && r < nu * rho && nu * rho <= std::sqrt(1.0 + nu * nu) * r;
            d_ok = d_ok && (b0.is_tight == !in_band) && ((b0.case_tag == CaseTag::stage0_case2b) == in_band);
            if (in_band) {
                band_lo = std::min(band_lo, rho);
                band_hi = std::max(band_hi, rho);
            }
        }
    }
    d_ok = d_ok && band_lo > r / nu && band_hi <= std::sqrt(1.0 + nu * nu) * r / nu;

    // (b) continuity: one-sided limits across every case boundary.
    struct Boundary {
        std::string name;
        int ell;
        std::function<ValueQuery(double, double)> at;  // (s, side) -> query, side = -1 / +1
    };
    const double eps = 1e-12;
    std::vector<Boundary> boundaries;
    boundaries.push_back({"l=0 rho=r_cap", 0, [&](double s, double side) {
                              return ValueQuery{r * (1 + side * eps), tau_max * s, 0};
                          }});
    boundaries.push_back({"l=0 tau=rho", 0, [&](double s, double side) {
                              const double rho = r + (rho_max - r) * s;
                              return ValueQuery{rho, rho * (1 + side * eps), 0};
                          }});
    boundaries.push_back({"l=0 nu*rho=r_cap (case1|case2)", 0, [&](double s, double side) {
                              const double rho = r / nu;
                              return ValueQuery{rho * (1 + side * eps), rho + (tau_max - rho) * s + 1e-9, 0};
                          }});
    boundaries.push_back({"l=0 Omega_0 edge (case2a|case2b)", 0, [&](double s, double side) {
                              const double rho = std::sqrt(1 + nu * nu) * r / nu;
                              return ValueQuery{rho * (1 + side * eps), rho + (tau_max - rho) * s + 1e-9, 0};
                          }});
    for (int ell = 1; ell <= 5; ++ell) {
        boundaries.push_back({"l=" + std::to_string(ell) + " rho=r_cap", ell, [&, ell](double s, double side) {
                                  return ValueQuery{r * (1 + side * eps), tau_max * s, ell};
                              }});
        boundaries.push_back({"l=" + std::to_string(ell) + " tau=S", ell, [&, ell](double s, double side) {
                                  const double rho = r + (rho_max - r) * s;
                                  return ValueQuery{rho, time_limited_threshold(rho, ell, nu) * (1 + side * 1e-11),
                                                    ell};
                              }});
        boundaries.push_back({"l=" + std::to_string(ell) + " nu^(l+1) rho=r_cap", ell, [&, ell](double s, double side) {
                                  const double rho = r / std::pow(nu, ell + 1);
                                  const double S = time_limited_threshold(rho, ell, nu);
                                  return ValueQuery{rho * (1 + side * eps), S + (tau_max - S) * s + 1e-9, ell};
                              }});
    }
    bool b_ok = true;
    std::vector<std::string> jumps;
    for (const Boundary& bd : boundaries) {
        double worst = 0.0;
        for (int k = 0; k < N; ++k) {
            const double s = static_cast<double>(k) / (N - 1);
            const ValueQuery lo = bd.at(s, -1.0);
            const ValueQuery hi = bd.at(s, 1.0);
            if (lo.rho > rho_max || lo.tau > tau_max + 1e-6) {
                continue;
            }
            worst = std::max(worst, std::abs(v_bound(hi, phi, nu, r).value - v_bound(lo, phi, nu, r).value));
        }
        if (worst > 1e-9) {
            b_ok = false;
            jumps.push_back(bd.name + ": jump up to " + num(worst));
        }
    }

    v.pass = a_ok && b_ok && c_ok && d_ok;
    v.detail = std::string("(a) boundary ") + (a_ok ? "ok" : "FAIL") + ", (b) continuity " + (b_ok ? "ok" : "FAIL") +
               ", (c) ell-monotone " + (c_ok ? "ok" : "FAIL") + ", (d) Omega_0 flags " + (d_ok ? "ok" : "FAIL") +
               " (band rho in [" + num(band_lo) + ", " + num(band_hi) + "])";
    for (const std::string& j : jumps) {
        v.info.push_back("discontinuity " + j);
    }
    v.info.push_back("checked " + std::to_string(boundaries.size()) + " boundary curves, 300 points each");
    return v;
}

// 3. Capture-time and budget bounds ---------------------------------------------------

Verdict criterion3() {
    Verdict v;
    const VerificationReport r = capture_time_bound_check(0.7, 5.0, 0.1, 10000, 2024);
    double worst_time = 0;
    double radial = 0;
    double sensings = 0;
    double path = 0;
    for (const auto& [k, x] : r.stats) {
        if (k == "worst_capture_time") worst_time = x;
        if (k == "radial_capture_time") radial = x;
        if (k == "max_sensings") sensings = x;
        if (k == "max_path_length") path = x;
    }
    const double stated = 16.3334;
    const bool time_ok = worst_time <= stated + 1e-9;
    const bool count_ok = sensings <= 10;
    const bool path_ok = path <= stated * (1 + 1e-9);
    const bool radial_ok = std::abs(radial - 4.9 / 0.3) <= 1e-9;
    v.pass = r.passed() && time_ok && count_ok && path_ok && radial_ok;
    v.detail = "10^4 trials: worst capture " + num(worst_time) + " <= 16.3334, max sensings " + num(sensings) +
               " <= 10, max path " + num(path) + ", radial capture " + num(radial) + " (bound " +
               num(4.9 / 0.3) + "), suite violations " + std::to_string(r.violation_count);
    v.info.push_back("distance bound from the sensing-count corollary is " + num(corollary1(5, 0.1, 0.7).max_distance) +
                     ", not 16.3334; the path check uses the stated 16.3334");
    return v;
}

// 4. Short-range capture exactness ----------------------------------------------------------

Verdict criterion4() {
    Verdict v;
    Rng rng(404);
    double worst_exact = 0.0;
    double min_advance = 1e300;
    int not_earlier = 0;
    for (int c = 0; c < 100; ++c) {
        const double nu = rng.uniform(0.1, 0.95);
        const double r = rng.uniform(0.05, 0.5);
        const double rho0 = rng.uniform(r * 1.001, r / nu);
        const double T = (rho0 - r) / (1 - nu);
        GameConfig cfg = game(nu, r, rho0, 2 * T + 1, rng.uniform_int(0, 3));
        const double angle = rng.uniform(-3.14159, 3.14159);
        cfg.x_p0 = Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2));
        cfg.x_e0 = cfg.x_p0 + rho0 * Vec2(std::cos(angle), std::sin(angle));
        const PursuerPolicy p = make_pursuer(PursuerKind::thm1);
        const Outcome eq = simulate(cfg, p, make_evader(EvaderKind::radial), ThetaStream::constant(1)).outcome;
        worst_exact = std::max(worst_exact, eq.captured ? std::abs(*eq.capture_time - T) : 1e300);
        for (int d = 0; d < 100; ++d) {
            const EvaderPolicy dev = make_evader(EvaderKind::scripted, random_evader_script(rng, nu, T));
            const Outcome o = simulate(cfg, p, dev, ThetaStream::constant(1)).outcome;
            if (!o.captured || !(*o.capture_time < T)) {
                ++not_earlier;
                continue;
            }
            min_advance = std::min(min_advance, T - *o.capture_time);
        }
    }
    v.pass = worst_exact <= 1e-9 && not_earlier == 0;
    v.detail = "100 configs: max |t_capture - (rho0-r)/(1-nu)| = " + num(worst_exact) +
               "; 10^4 deviations, not strictly earlier: " + std::to_string(not_earlier) +
               ", smallest advance " + num(min_advance);
    return v;
}

// 5. Equilibrium verification ----------------------------------------------------

Verdict criterion5() {
    Verdict v;
    struct Cfg {
        double nu, r, rho, tau;
        int n;
    };
    const std::vector<Cfg> configs = {
        {0.7, 0.1, 0.08, 5, 0},  {0.7, 0.1, 0.25, 5, 2}, {0.5, 0.1, 0.35, 3, 1},   // capture_region
        {0.7, 0.1, 1, 2, 2},     {0.6, 0.1, 2, 2.5, 1},  {0.8, 0.15, 1.5, 1, 3},   // time_limited
        {0.7, 0.1, 1, 5, 2},     {0.5, 0.1, 1.5, 6, 1},  {0.8, 0.1, 1, 9, 3},      // wait_region
        {0.7, 0.1, 0.14, 5, 0},  {0.5, 0.1, 0.18, 1, 0}, {0.3, 0.2, 0.5, 2, 0},    // stage0_case1
        {0.7, 0.1, 1, 2, 0},     {0.5, 0.1, 2, 4, 0},    {0.9, 0.05, 0.5, 3, 0},   // stage0_case2a
        {0.7, 0.1, 0.15, 1, 0},  {0.5, 0.1, 0.22, 0.5, 0}, {0.7, 0.1, 0.16, 3, 0}, // stage0_case2b
        {0.7, 0.1, 5, 2, 0},     {0.5, 0.1, 1, 0.6, 0},  {0.8, 0.1, 3, 1.5, 0},    // stage0_case3
    };
    std::set<std::string> tags;
    bool a_ok = true;
    double a_worst = 0.0;
    std::size_t a_runs = 0;
    std::string a_fail;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const Cfg& c = configs[i];
        const GameConfig g = game(c.nu, c.r, c.rho, c.tau, c.n);
        tags.insert(std::string(to_string(v_bound({c.rho, c.tau, c.n}, g.phi, c.nu, c.r).case_tag)));
        const VerificationReport rep = pursuer_guarantee_check(g, 10000, 500 + i);
        a_runs += rep.trials;
        a_worst = std::max(a_worst, rep.worst_violation);
        if (!rep.passed()) {
            a_ok = false;
            a_fail += " cfg#" + std::to_string(i) + "(" + rep.note + ")";
        }
    }
    const bool tags_ok = tags.size() == 7;

    // (b) alpha grid on single-stage tight configs.
    bool b_ok = true;
    double b_worst = 0.0;
    std::vector<std::string> b_info;
    for (const Cfg& c : std::vector<Cfg>{{0.7, 0.1, 1, 2, 0}, {0.5, 0.1, 2, 4, 0}, {0.9, 0.05, 0.5, 3, 0}}) {
        const GameConfig g = game(c.nu, c.r, c.rho, c.tau, c.n);
        DeviationGrid grid = DeviationGrid::standard(g);
        grid.heading_angles.clear();
        grid.speed_fractions.clear();
        const VerificationReport rep = evader_guarantee_check(g, grid);
        b_ok = b_ok && rep.passed();
        b_worst = std::max(b_worst, rep.worst_violation);
        double min_e = 0;
        for (const auto& [k, x] : rep.stats) {
            if (k == "min_expected_payoff") min_e = x;
        }
        b_info.push_back("alpha grid nu=" + num(c.nu) + " rho=" + num(c.rho) + " tau=" + num(c.tau) + ": bound " +
                         num(phi_eval(g.phi, c.nu * c.tau)) + ", min E[J] " + num(min_e) + ", " +
                         std::to_string(rep.violation_count) + " grid points below; " + rep.note);
    }
    // Supplementary: first-stage deviations (heading, speed, sensing instant) for ell >= 1.
    for (const Cfg& c : std::vector<Cfg>{{0.7, 0.1, 1, 5, 1}, {0.7, 0.1, 1, 5, 2}, {0.5, 0.1, 1.5, 6, 1}}) {
        const GameConfig g = game(c.nu, c.r, c.rho, c.tau, c.n);
        const VerificationReport rep = evader_guarantee_check(g, DeviationGrid::standard(g));
        b_info.push_back("first-stage deviations ell=" + std::to_string(c.n) + " nu=" + num(c.nu) + " rho=" +
                         num(c.rho) + " tau=" + num(c.tau) + ": " + (rep.passed() ? "no violation" : "violations " +
                         std::to_string(rep.violation_count) + ", worst " + num(rep.worst_violation)) +
                         "; " + rep.note);
    }

    v.pass = a_ok && tags_ok && b_ok;
    v.detail = std::string("(a) ") + (a_ok ? "ok" : "FAIL") + " over " + std::to_string(configs.size()) +
               " configs / " + std::to_string(tags.size()) + " case tags / " + std::to_string(a_runs) +
               " runs, worst excess " + num(a_worst) + a_fail + "; (b) " + (b_ok ? "ok" : "FAIL") +
               ", worst shortfall " + num(b_worst);
    v.info = b_info;
    return v;
}

// 6. Jensen ---------------------------------------------------------------------

Verdict criterion6() {
    Verdict v;
    const auto points = random_jensen_points(1000, 606);
    const VerificationReport original = jensen_bound_check(points);
    const VerificationReport corrected = jensen_bound_check(points, JensenForm::corrected);
    int below = 0;
    for (const JensenPoint& p : points) {
        below += jensen_expectation(p) < jensen_lower_bound(p) ? 1 : 0;
    }
    v.pass = original.passed();
    v.detail = "bound sqrt((rho-a1)^2+nu^2 tau^2+a2^2): " + std::to_string(below) +
               " of 1000 points fall below it (" + std::to_string(original.violation_count) +
               " failed checks), worst shortfall " + num(original.worst_violation);
    const JensenPoint ex{1, 2, 0.7, 0.5, 0.3};
    v.info.push_back("example rho=1 tau=2 nu=0.7 alpha=(0.5,0.3): E[g] = " + num(jensen_expectation(ex)) +
                     " < bound " + num(jensen_lower_bound(ex)));
    v.info.push_back(std::string("corrected bound sqrt((rho-a1)^2+nu^2 tau^2): ") +
                     (corrected.passed() ? "0 violations, equality iff alpha2=0" :
                                           std::to_string(corrected.violation_count) + " violations"));
    return v;
}

// 7. Degradation ----------------------------------------------------------------

// Direct evaluation of the multi-stage bound at (rho0, t_f, n), hinge phi.
double direct_value(double rho0, double t_f, int n, double nu, double r) {
    const auto hinge = [r](double x) { return x > r ? x - r : 0.0; };
    if (rho0 <= r) return 0.0;
    if (n == 0) {
        if (t_f < rho0) return hinge(nu * t_f + rho0 - t_f);
        if (nu * rho0 <= r) return 0.0;
        return hinge(nu * t_f);
    }
    const double q = std::pow(nu, n + 1);
    const double S = (1 - q) / (1 - nu) * rho0;
    if (t_f <= S * (1 + 1e-12)) return hinge(std::max(nu * t_f + rho0 - t_f, 0.0));
    if (q * rho0 <= r) return 0.0;
    return hinge((1 - nu) * q * t_f / (1 - q));
}

Verdict criterion7() {
    Verdict v;
    const double rho0 = 5.0;
    const double r = 0.1;
    const PayoffSpec phi{PayoffKind::hinge, r};
    bool beta_dec = true;
    bool bound_ok = true;
    bool nstar_zero = true;
    bool match = true;
    double worst_mismatch = 0.0;
    std::string rows;
    const auto close = [&](double a, double b) {
        const double d = std::abs(a - b) / std::max(1.0, std::abs(b));
        worst_mismatch = std::max(worst_mismatch, d);
        return d <= 1e-12;
    };
    for (double frac : {0.9, 1.0, 1.2}) {
        for (double nu : {0.5, 0.6, 0.7, 0.8}) {
            const double t_f = frac * (rho0 - r) / (1 - nu);
            const DegradationReport rep = degradation(rho0, t_f, nu, r, phi);
            // Independent path: n* by iteration, beta and delta by direct formulas.
            const double remaining = rho0 - (1 - nu) * t_f;
            int ns = 0;
            if (t_f < (rho0 - r) / (1 - nu)) {
                for (double x = rho0 * nu; x >= remaining; x *= nu) ++ns;
            } else {
                for (double x = rho0 * nu; x >= r; x *= nu) ++ns;
            }
            match = match && ns == rep.n_star;
            const double cp = remaining > r ? remaining - r : 0.0;
            match = match && close(rep.continuous_payoff, cp);
            for (int n = 0; n < rep.n_star; ++n) {
                const double delta = direct_value(rho0, t_f, n, nu, r) - cp;
                match = match && close(rep.delta[n], delta);
                if (remaining > 0) {
                    const double q = std::pow(nu, n + 1);
                    const double beta = q / (1 - q) * (1 - nu) * t_f / remaining - 1;
                    match = match && close(rep.beta[n], beta);
                    if (n > 0) beta_dec = beta_dec && rep.beta[n] < rep.beta[n - 1];
                    bound_ok = bound_ok && delta >= beta * cp - 1e-12;
                }
            }
            match = match && close(rep.delta_at_n_star, direct_value(rho0, t_f, rep.n_star, nu, r) - cp);
            if (t_f >= (rho0 - r) / (1 - nu)) {
                // exact zero up to round-off at t_f = (rho0-r)/(1-nu)
                nstar_zero = nstar_zero && std::abs(rep.delta_at_n_star) <= 1e-12;
            }
            if (frac == 0.9) {
                rows += " nu=" + num(nu) + ":n*=" + std::to_string(rep.n_star);
            }
        }
    }
    const double t_f = 0.9 * 4.9 / 0.3;
    const DegradationReport fig = degradation(5, t_f, 0.7, 0.1, phi);
    v.pass = beta_dec && bound_ok && nstar_zero && match;
    v.detail = std::string("beta decreasing ") + (beta_dec ? "ok" : "FAIL") + ", delta >= beta*phi " +
               (bound_ok ? "ok" : "FAIL") + ", delta(n*)=0 on full horizon " + (nstar_zero ? "ok" : "FAIL") +
               ", independent recomputation " + (match ? "ok" : "FAIL") + " (worst " + num(worst_mismatch) + ");" +
               rows;
    v.info.push_back("nu=0.7, n=3: beta " + num(fig.beta[3]) + ", delta " + num(fig.delta[3]) + " >= " +
                     num(fig.beta[3] * fig.continuous_payoff));
    return v;
}

// 8. Engine validation ---------------------------------------------------------------

Verdict criterion8() {
    Verdict v;
    const VerificationReport oracle = oracle_agreement_check(100, 808, 1e-5);
    bool h_ok = true;
    double h_worst = 0.0;
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 1; i < 100000; ++i) {
        const double nu = i / 100000.0;
        if (std::abs(nu - s) <= 1e-3) {
            continue;
        }
        const double d = std::abs(h_of_nu(nu) - h_of_nu_raw(nu));
        h_worst = std::max(h_worst, d);
        h_ok = h_ok && d <= 1e-10;
    }
    const double hs = h_of_nu(s);
    const bool singular_ok = std::isfinite(hs) && h_of_nu(s - 1e-3) < hs && hs < h_of_nu(s + 1e-3);
    v.pass = oracle.passed() && h_ok && singular_ok;
    v.detail = "oracle: " + std::to_string(oracle.trials) + " scenarios, worst |diff|/(dt(1+nu)) " +
               num(oracle.worst_violation) + (oracle.passed() ? " ok" : " FAIL") + "; h simplified vs raw max " +
               num(h_worst) + (h_ok ? " ok" : " FAIL") + "; h(1/sqrt2) = " + num(hs) +
               (singular_ok ? " finite, monotone ok" : " FAIL");
    return v;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        Verdict (*run)();
    };
    const Entry entries[] = {
        {1, "sensing-count comparison", criterion1}, {2, "value surfaces", criterion2},
        {3, "capture-time and budget bounds", criterion3}, {4, "short-range capture exactness", criterion4},
        {5, "equilibrium verification", criterion5}, {6, "Jensen inequality", criterion6},
        {7, "degradation", criterion7}, {8, "engine validation", criterion8},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = e.run();
        } catch (const std::exception& ex) {
            v.pass = false;
            v.detail = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %d %s (%.2fs): %s\n", v.pass ? "PASS" : "FAIL", e.id, e.title, secs, v.detail.c_str());
        for (const std::string& line : v.info) {
            std::printf("       info: %s\n", line.c_str());
        }
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
