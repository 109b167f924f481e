#include "pursuit/value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pursuit {
namespace {

void require_nu(double nu) {
    if (!(nu > 0.0 && nu < 1.0)) {
        throw DomainError("nu must lie in (0, 1)");
    }
}

void require_counts_domain(double rho0, double r_cap, double nu) {
    require_nu(nu);
    if (!(r_cap > 0.0)) {
        throw DomainError("r_cap must be positive");
    }
    if (!(rho0 >= r_cap) || !std::isfinite(rho0)) {
        throw DomainError("rho0 must be at least r_cap");
    }
}

double nudge(double x) { return 1e-12 * std::max(1.0, std::abs(x)); }

// True when a <= b up to the relative boundary tolerance.
bool leq_tol(double a, double b) { return a <= b + kBoundaryRelTol * std::max(std::abs(a), std::abs(b)); }

}  // namespace

double h_of_nu(double nu) {
    require_nu(nu);
    const double s = std::sqrt(1.0 - nu * nu);
    return 1.0 - (1.0 - nu) * s / (nu + s);
}

double h_of_nu_raw(double nu) {
    require_nu(nu);
    const double s = std::sqrt(1.0 - nu * nu);
    const double numerator = nu * (1.0 - nu) * s - (1.0 - nu) * (1.0 - nu * nu);
    return 1.0 - numerator / (2.0 * nu * nu - 1.0);
}

double f_of_nu(double nu) {
    require_nu(nu);
    const double s = std::sqrt(1.0 - nu * nu);
    return s / (nu + s);
}

int floor_nudged(double x) { return static_cast<int>(std::floor(x + nudge(x))); }
int ceil_nudged(double x) { return static_cast<int>(std::ceil(x - nudge(x))); }

int aleem_n_max(double rho0, double r_cap, double nu) {
    require_counts_domain(rho0, r_cap, nu);
    const double ratio = (std::log(r_cap) - std::log(rho0)) / std::log(h_of_nu(nu));
    return std::max(0, ceil_nudged(ratio));
}

int prop1_n_max(double rho0, double r_cap, double nu) {
    require_counts_domain(rho0, r_cap, nu);
    const double ratio = (std::log(r_cap) - std::log(rho0)) / std::log(nu);
    return std::max(0, floor_nudged(ratio));
}

Corollary1 corollary1(double rho0, double r_cap, double nu) {
    require_nu(nu);
    if (!(r_cap > 0.0) || !(rho0 >= 0.0)) {
        throw DomainError("corollary1: need r_cap > 0 and rho0 >= 0");
    }
    // Smallest n with r_cap > nu^n rho0. The log estimate is refined by
    // direct comparison so the result is exact in floating point.
    int n = 0;
    if (!(r_cap > rho0)) {
        n = std::max(0, static_cast<int>(std::floor((std::log(r_cap) - std::log(rho0)) / std::log(nu))));
        while (n > 0 && r_cap > std::pow(nu, n - 1) * rho0) {
            --n;
        }
        while (!(r_cap > std::pow(nu, n) * rho0)) {
            ++n;
        }
    }
    return Corollary1{std::max(n - 1, 0), (1.0 - std::pow(nu, n + 1)) / (1.0 - nu) * rho0};
}

double time_limited_threshold(double rho, int ell, double nu) {
    return (1.0 - std::pow(nu, ell + 1)) / (1.0 - nu) * rho;
}

std::string_view to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::capture_region: return "capture_region";
    case CaseTag::time_limited: return "time_limited";
    case CaseTag::wait_region: return "wait_region";
    case CaseTag::stage0_case1: return "stage0_case1";
    case CaseTag::stage0_case2a: return "stage0_case2a";
    case CaseTag::stage0_case2b: return "stage0_case2b";
    case CaseTag::stage0_case3: return "stage0_case3";
    }
    return "capture_region";
}

bool in_omega0(double rho, double tau, double nu, double r_cap) {
    const double reach = nu * rho;
    return tau >= rho && r_cap < reach && reach <= std::sqrt(1.0 + nu * nu) * r_cap;
}

bool in_untight_region_unscaled(const ValueQuery& q, double nu, double r_cap) {
    return q.tau >= time_limited_threshold(q.rho, q.ell, nu) && r_cap <= q.rho &&
           q.rho <= std::sqrt(1.0 + nu * nu) * r_cap;
}

bool in_untight_region_scaled(const ValueQuery& q, double nu, double r_cap) {
    const double reach = nu * q.rho;
    return q.tau >= time_limited_threshold(q.rho, q.ell, nu) && r_cap < reach &&
           reach <= std::sqrt(1.0 + nu * nu) * r_cap;
}

ValueBound v_stage0(double rho, double tau, const PayoffSpec& phi, double nu, double r_cap) {
    if (!(rho >= 0.0) || !(tau >= 0.0)) {
        throw InvalidArgument("v_stage0: rho and tau must be non-negative");
    }
    if (rho <= r_cap) {
        return ValueBound{0.0, CaseTag::capture_region, true};
    }
    if (tau < rho) {
        return ValueBound{phi_eval(phi, nu * tau + (rho - tau)), CaseTag::stage0_case3, true};
    }
    if (nu * rho <= r_cap) {
        return ValueBound{0.0, CaseTag::stage0_case1, true};
    }
    const double value = phi_eval(phi, nu * tau);
    if (in_omega0(rho, tau, nu, r_cap)) {
        return ValueBound{value, CaseTag::stage0_case2b, false};
    }
    return ValueBound{value, CaseTag::stage0_case2a, true};
}

ValueBound v_bound(const ValueQuery& q, const PayoffSpec& phi, double nu, double r_cap) {
    if (q.ell < 0 || !(q.rho >= 0.0) || !(q.tau >= 0.0) || !std::isfinite(q.rho) ||
        !std::isfinite(q.tau)) {
        throw InvalidArgument("v_bound: query must be finite and non-negative");
    }
    if (q.ell == 0) {
        return v_stage0(q.rho, q.tau, phi, nu, r_cap);
    }
    const bool tight = !in_untight_region_unscaled(q, nu, r_cap);
    if (q.rho <= r_cap) {
        return ValueBound{0.0, CaseTag::capture_region, tight};
    }
    const double threshold = time_limited_threshold(q.rho, q.ell, nu);
    if (leq_tol(q.tau, threshold)) {
        return ValueBound{phi_eval(phi, std::max(nu * q.tau + (q.rho - q.tau), 0.0)),
                          CaseTag::time_limited, tight};
    }
    const double nu_l1 = std::pow(nu, q.ell + 1);
    if (nu_l1 * q.rho <= r_cap) {
        return ValueBound{0.0, CaseTag::capture_region, tight};
    }
    const double arg = (1.0 - nu) / (1.0 - nu_l1) * nu_l1 * q.tau;
    return ValueBound{phi_eval(phi, arg), CaseTag::wait_region, tight};
}

int n_star(double rho0, double t_f, double nu, double r_cap) {
    require_nu(nu);
    if (!(r_cap > 0.0) || !(t_f >= 0.0)) {
        throw DomainError("n_star: need r_cap > 0 and t_f >= 0");
    }
    if (!(nu * rho0 > std::sqrt(1.0 + nu * nu) * r_cap)) {
        throw RegionNotCovered("n_star requires nu*rho0 > sqrt(1+nu^2)*r_cap");
    }
    const double capture_horizon = (rho0 - r_cap) / (1.0 - nu);
    const double numerator = t_f < capture_horizon
                                 ? std::log(rho0 - (1.0 - nu) * t_f) - std::log(rho0)
                                 : std::log(r_cap) - std::log(rho0);
    return std::max(0, floor_nudged(numerator / std::log(nu)));
}

double continuous_payoff(double rho0, double t_f, double nu, const PayoffSpec& phi) {
    return phi_eval(phi, std::max(rho0 - (1.0 - nu) * t_f, 0.0));
}

std::optional<double> beta_coefficient(int n, double rho0, double t_f, double nu) {
    const double remaining = rho0 - (1.0 - nu) * t_f;
    if (!(remaining > 0.0)) {
        return std::nullopt;
    }
    const double nu_n1 = std::pow(nu, n + 1);
    return nu_n1 / (1.0 - nu_n1) * ((1.0 - nu) * t_f / remaining) - 1.0;
}

DegradationReport degradation(double rho0, double t_f, double nu, double r_cap,
                              const PayoffSpec& phi) {
    DegradationReport report;
    report.n_star = n_star(rho0, t_f, nu, r_cap);
    report.continuous_payoff = continuous_payoff(rho0, t_f, nu, phi);
    const double remaining = std::max(rho0 - (1.0 - nu) * t_f, 0.0);
    const double baseline = phi_eval(phi, remaining);
    const bool beta_defined = beta_coefficient(0, rho0, t_f, nu).has_value();
    for (int n = 0; n < report.n_star; ++n) {
        const ValueBound vb = v_bound(ValueQuery{rho0, t_f, n}, phi, nu, r_cap);
        const double delta = vb.value - report.continuous_payoff;
        report.delta.push_back(delta);
        report.delta_tight.push_back(vb.is_tight);
        if (beta_defined) {
            const double beta = *beta_coefficient(n, rho0, t_f, nu);
            report.beta.push_back(beta);
            // Relative slack for the rounding in two independently evaluated sides.
            const double slack = 1e-12 * std::max(1.0, std::abs(delta));
            if (delta < beta * baseline - slack) {
                report.jensen_bound_holds = false;
            }
        }
    }
    report.delta_at_n_star =
        v_bound(ValueQuery{rho0, t_f, report.n_star}, phi, nu, r_cap).value - report.continuous_payoff;
    return report;
}

}  // namespace pursuit
