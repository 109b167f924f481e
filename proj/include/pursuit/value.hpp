#pragma once

// Closed-form evaluators: sensing counts, value-function upper bounds, the
// non-tight region, and the degradation metrics for a finite sensing budget.

#include <optional>
#include <string_view>
#include <vector>

#include "pursuit/core.hpp"

namespace pursuit {

/// Relative tolerance used when a query sits on a case boundary.
inline constexpr double kBoundaryRelTol = 1e-12;

/// Threshold factor of the prior self-triggered scheme, via the factored form
/// 1 - (1-nu)sqrt(1-nu^2)/(nu+sqrt(1-nu^2)) which has no pole at nu = 1/sqrt(2).
double h_of_nu(double nu);

/// The unfactored rational expression. Undefined (0/0) at nu = 1/sqrt(2);
/// kept for cross-checking h_of_nu.
double h_of_nu_raw(double nu);

/// Inter-sensing factor of the self-triggered scheme: t_{k+1} - t_k = f(nu) rho_k.
double f_of_nu(double nu);

/// floor/ceil with a 1e-12 relative nudge toward the "exact" integer, so that
/// log-ratios landing a few ulps off an integer do not lose a unit.
int floor_nudged(double x);
int ceil_nudged(double x);

/// Sensing count of the self-triggered scheme, clamped at 0.
int aleem_n_max(double rho0, double r_cap, double nu);

/// floor((log r_cap - log rho0) / log nu), clamped at 0.
int prop1_n_max(double rho0, double r_cap, double nu);

struct Corollary1 {
    int sensings = 0;
    double max_distance = 0.0;
};

/// With n the smallest integer such that r_cap > nu^n rho0: max(n-1, 0)
/// sensings and a path length of at most (1-nu^(n+1))/(1-nu) rho0.
Corollary1 corollary1(double rho0, double r_cap, double nu);

/// S(rho, ell) = (1 - nu^(ell+1)) / (1 - nu) * rho: the remaining time at
/// which the move-to-last-sensed chain exactly exhausts the clock.
double time_limited_threshold(double rho, int ell, double nu);

enum class CaseTag {
    capture_region,
    time_limited,
    wait_region,
    stage0_case1,
    stage0_case2a,
    stage0_case2b,
    stage0_case3,
};

std::string_view to_string(CaseTag tag);

struct ValueQuery {
    double rho = 0.0;
    double tau = 0.0;
    int ell = 0;
};

struct ValueBound {
    double value = 0.0;
    CaseTag case_tag = CaseTag::capture_region;
    bool is_tight = true;
};

/// {tau >= rho, r_cap < nu rho <= sqrt(1+nu^2) r_cap}.
bool in_omega0(double rho, double tau, double nu, double r_cap);

/// Non-tight region for ell >= 1, without the nu scaling of Omega_0:
/// {tau >= S(rho, ell), r_cap <= rho <= sqrt(1+nu^2) r_cap}.
bool in_untight_region_unscaled(const ValueQuery& q, double nu, double r_cap);

/// Same region with the nu scaling of Omega_0 restored:
/// {tau >= S(rho, ell), r_cap < nu rho <= sqrt(1+nu^2) r_cap}.
bool in_untight_region_scaled(const ValueQuery& q, double nu, double r_cap);

/// Upper bound on V(rho, tau, 0) (no sensing left).
ValueBound v_stage0(double rho, double tau, const PayoffSpec& phi, double nu, double r_cap);

/// Upper bound on V(rho, tau, ell). Reduces to v_stage0 for ell = 0.
ValueBound v_bound(const ValueQuery& q, const PayoffSpec& phi, double nu, double r_cap);

/// Number of sensings after which the finite-budget pursuer matches the
/// continuous-sensing payoff. Requires nu rho0 > sqrt(1+nu^2) r_cap, else
/// throws RegionNotCovered.
int n_star(double rho0, double t_f, double nu, double r_cap);

/// phi(max(rho0 - (1-nu) t_f, 0)).
double continuous_payoff(double rho0, double t_f, double nu, const PayoffSpec& phi);

/// nu^(n+1)/(1-nu^(n+1)) * (1-nu) t_f / (rho0 - (1-nu) t_f) - 1.
/// nullopt when rho0 - (1-nu) t_f <= 0.
std::optional<double> beta_coefficient(int n, double rho0, double t_f, double nu);

struct DegradationReport {
    int n_star = 0;
    /// delta(n) for n = 0 .. n_star - 1.
    std::vector<double> delta;
    /// beta(n) for n = 0 .. n_star - 1; empty when beta is undefined.
    std::vector<double> beta;
    /// is_tight of the bound used for each delta entry.
    std::vector<bool> delta_tight;
    double delta_at_n_star = 0.0;
    double continuous_payoff = 0.0;
    /// True when every delta(n) >= beta(n) * continuous_payoff (vacuous if beta empty).
    bool jensen_bound_holds = true;
};

/// delta(n) = V(rho0, t_f, n) - continuous_payoff, evaluated with v_bound.
DegradationReport degradation(double rho0, double t_f, double nu, double r_cap,
                              const PayoffSpec& phi);

}  // namespace pursuit
