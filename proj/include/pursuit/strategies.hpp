#pragma once

// Pursuer sensing/motion policies and evader motion policies. Every policy is
// a pure function of the acting player's information set (plus an explicit
// theta stream for randomized evaders). The engine re-queries a policy at every
// event; `hold_until` tells it the latest time the returned action stays valid.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/core.hpp"

namespace pursuit {

inline constexpr double kForever = std::numeric_limits<double>::infinity();
/// "As soon as it gets there": arrival means within this distance.
inline constexpr double kArrivalTol = 1e-9;

/// Sensing history T(t) = {t_0 = 0, t_1, ..., t_m}. Entry 0 is the free initial
/// observation; every later entry consumed one unit of budget.
class SensingLog {
public:
    SensingLog(Vec2 x_p0, Vec2 x_e0, int budget);

    /// Appends a sensing at time t. Throws BudgetViolation when the budget is
    /// exhausted and std::logic_error when t does not strictly increase.
    void record(double t, Vec2 x_p, Vec2 x_e);

    std::size_t size() const { return times_.size(); }
    /// Number of sensing requests made so far (excludes t_0).
    int requests() const { return static_cast<int>(times_.size()) - 1; }
    int budget_remaining() const { return budget_remaining_; }

    double time(std::size_t k) const { return times_.at(k); }
    Vec2 evader_at(std::size_t k) const { return evader_.at(k); }
    Vec2 pursuer_at(std::size_t k) const { return pursuer_.at(k); }

    std::size_t last_index() const { return times_.size() - 1; }
    double last_time() const { return times_.back(); }
    Vec2 last_evader() const { return evader_.back(); }
    Vec2 last_pursuer() const { return pursuer_.back(); }
    /// rho_k = |x_e(t_k) - x_p(t_k)|.
    double last_rho() const { return distance(pursuer_.back(), evader_.back()); }
    /// r(t_k). Throws DegenerateDirection when rho_k = 0.
    Vec2 last_line_of_sight() const { return line_of_sight(pursuer_.back(), evader_.back()); }

    const std::vector<double>& times() const { return times_; }

private:
    std::vector<double> times_;
    std::vector<Vec2> evader_;
    std::vector<Vec2> pursuer_;
    int budget_remaining_;
};

/// Game constants every policy may read.
struct GameView {
    double nu = 0.7;
    double r_cap = 0.1;
    double t_f = 0.0;
    int n = 0;

    static GameView of(const GameConfig& cfg) { return GameView{cfg.nu, cfg.r_cap, cfg.t_f, cfg.n}; }
};

/// I_p(t): own trajectory and the evader only at sensing instants.
/// `observed_evader` is filled only for full-observation (baseline) policies.
struct PursuerInfo {
    double time = 0.0;
    Vec2 own_position;
    const SensingLog& log;
    GameView game;
    std::optional<Vec2> observed_evader;
};

/// I_e(t): continuous observation of both players plus the sensing instants.
struct EvaderInfo {
    double time = 0.0;
    Vec2 own_position;
    Vec2 pursuer_position;
    const SensingLog& log;
    GameView game;
};

/// v_p = speed_fraction * heading. When sense_now is set the engine performs
/// the sensing at the current instant and queries the policy again.
struct PursuerAction {
    Vec2 heading{1.0, 0.0};
    double speed_fraction = 0.0;
    bool sense_now = false;
    double hold_until = kForever;

    static PursuerAction sense() { return PursuerAction{Vec2(1.0, 0.0), 0.0, true, kForever}; }
    static PursuerAction move(Vec2 heading, double gamma, double until) {
        return PursuerAction{heading, gamma, false, until};
    }
};

struct EvaderAction {
    Vec2 velocity;
    double hold_until = kForever;
};

/// Per-interval evader coin flips theta_i in {-1, +1}. Interval i is the span
/// after the i-th sensing (i = 0 is the span after t_0).
class ThetaStream {
public:
    /// Explicit sequence; reading past its end throws InvalidArgument.
    static ThetaStream fixed(std::vector<int> thetas);
    /// Bit i of `bits` set means theta_i = +1; `length` intervals.
    static ThetaStream from_bits(std::uint64_t bits, std::size_t length);
    /// Counter-based stream: theta_i depends only on (seed, i).
    static ThetaStream seeded(std::uint64_t seed);
    static ThetaStream constant(int theta);

    int at(std::size_t interval) const;

private:
    enum class Mode { fixed, seeded, constant };
    Mode mode_ = Mode::constant;
    std::vector<int> values_;
    std::uint64_t seed_ = 0;
    int constant_ = 1;
};

/// Evader velocity script for deviation testing: velocity on [t_start, t_end),
/// zero outside every leg. Legs must not overlap.
struct ScriptLeg {
    double t_start = 0.0;
    double t_end = 0.0;
    Vec2 velocity;
};
using EvaderScript = std::vector<ScriptLeg>;

// Pursuer policies ---------------------------------------------------------

/// Baseline with free continuous information: heading r(t), full speed.
PursuerAction pursuer_continuous(const PursuerInfo& info);

/// Move to the last sensed evader position and sense on arrival. Once
/// nu * rho_k <= r_cap (or the budget is gone) keep running along r(t_k).
PursuerAction pursuer_prop1(const PursuerInfo& info);

/// Equilibrium sensing policy. Outside the wait region it is pursuer_prop1;
/// inside it the pursuer reaches the last sensed point, waits
/// w = (1-nu)/(1-nu^(ell+1)) tau - rho, then senses (or waits out the clock
/// when ell = 0).
PursuerAction pursuer_thm1(const PursuerInfo& info);

/// Self-triggered prior scheme: heading r(t_k), next sensing after f(nu) rho_k.
PursuerAction pursuer_aleem(const PursuerInfo& info);

/// Waiting time of pursuer_thm1 for a state (rho, tau, ell); may be negative
/// outside the wait region.
double thm1_wait_time(double rho, double tau, int ell, double nu);

/// True when pursuer_thm1 waits in state (rho, tau, ell).
bool thm1_waits(double rho, double tau, int ell, double nu, double r_cap);

// Evader policies ----------------------------------------------------------

/// Flee along the current line of sight at full speed.
EvaderAction evader_radial(const EvaderInfo& info);

/// Randomized perpendicular flight theta_i nu r(t_i)^perp on every interval.
/// In the last interval (no budget left) it flees along r(t_l) when
/// tau <= rho and uses evader_safe_heuristic inside Omega_0.
EvaderAction evader_equilibrium(const EvaderInfo& info, const ThetaStream& theta);

/// Capture-avoiding flight for states in Omega_0: the heading closest to
/// theta * r(t_k)^perp whose predicted closest approach to the pursuer's
/// straight leg stays above r_cap plus half the available clearance.
/// Throws PreconditionError outside Omega_0.
EvaderAction evader_safe_heuristic(const EvaderInfo& info, const ThetaStream& theta);

/// Heading angle (radians from r(t_k), toward theta * perp) used by
/// evader_safe_heuristic for sensing distance rho.
double safe_heading_angle(double rho, double nu, double r_cap);

/// Whether perpendicular flight over a full approach leg avoids capture:
/// nu * rho > sqrt(1+nu^2) * r_cap (minimum separation nu rho / sqrt(1+nu^2)).
bool perpendicular_is_safe(double rho, double nu, double r_cap);

/// Variant without the nu scaling, r_cap < sqrt(1+nu^2) rho.
/// Exposed for inspection only.
bool perpendicular_is_safe_unscaled(double rho, double nu, double r_cap);

EvaderAction evader_scripted(const EvaderInfo& info, const EvaderScript& script);

// Named selection ------------------------------------------------------------

enum class PursuerKind { continuous, prop1, thm1, aleem };
enum class EvaderKind { radial, equilibrium, safe_heuristic, scripted };

std::string_view to_string(PursuerKind kind);
std::string_view to_string(EvaderKind kind);
PursuerKind pursuer_kind_from_string(std::string_view name);
EvaderKind evader_kind_from_string(std::string_view name);

struct PursuerPolicy {
    std::string name;
    /// When set, the engine exposes the true evader position every query.
    bool full_observation = false;
    std::function<PursuerAction(const PursuerInfo&)> decide;
};

struct EvaderPolicy {
    std::string name;
    std::function<EvaderAction(const EvaderInfo&, const ThetaStream&)> decide;
};

PursuerPolicy make_pursuer(PursuerKind kind);
EvaderPolicy make_evader(EvaderKind kind, EvaderScript script = {});

}  // namespace pursuit
