#pragma once

// Event-exact simulation. Controls are piecewise constant, so the separation
// is piecewise quadratic in time and capture is a closed-form root.

#include <optional>
#include <vector>

#include "pursuit/core.hpp"
#include "pursuit/strategies.hpp"

namespace pursuit {

struct Segment {
    double t_start = 0.0;
    double t_end = 0.0;
    Vec2 start;
    Vec2 velocity;

    Vec2 position_at(double t) const { return start + (t - t_start) * velocity; }
    Vec2 end_position() const { return position_at(t_end); }
    double duration() const { return t_end - t_start; }
};

/// Contiguous segments tiling [0, end_time()].
struct Trajectory {
    std::vector<Segment> segments;

    double end_time() const { return segments.empty() ? 0.0 : segments.back().t_end; }
    /// Position at t in [0, end_time()]; requires at least one segment.
    Vec2 position_at(double t) const;
    double path_length() const;
};

struct Outcome {
    bool captured = false;
    std::optional<double> capture_time;
    /// Separation at capture time, or at t_f when not captured.
    double final_distance = 0.0;
    double payoff = 0.0;
    /// Requested sensing instants t_1..t_m (t_0 = 0 is not a request).
    std::vector<double> sensing_times;
};

struct SimulationResult {
    Outcome outcome;
    Trajectory pursuer;
    Trajectory evader;
    SensingLog log;
};

/// Earliest time in the overlap of the two segments at which the separation
/// is <= r_cap, or nullopt.
std::optional<double> detect_capture(const Segment& pursuer, const Segment& evader, double r_cap);

/// Minimum separation over the overlap of the two segments.
double min_separation(const Segment& pursuer, const Segment& evader);

/// 0 when captured, else phi(final_distance).
double payoff_of(bool captured, double final_distance, const PayoffSpec& phi);

struct EngineLimits {
    std::size_t max_events = 1'000'000;
};

/// Runs the game to min(capture, t_f). Throws BudgetViolation when a policy
/// senses with no budget, NumericalError on non-finite state or runaway event
/// counts, and std::logic_error when a policy stalls (hold_until <= now).
SimulationResult simulate(const GameConfig& config, const PursuerPolicy& pursuer,
                          const EvaderPolicy& evader, const ThetaStream& theta,
                          EngineLimits limits = {});

/// Largest budget for which exact theta enumeration is attempted (2^(n+1) runs).
inline constexpr int kMaxEnumeratedIntervals = 20;

/// Exact E[J] over all 2^(n+1) theta sequences, uniformly weighted.
/// Throws EnumerationCap when n + 1 > kMaxEnumeratedIntervals.
double exact_expected_payoff(const GameConfig& config, const PursuerPolicy& pursuer,
                             const EvaderPolicy& evader);

}  // namespace pursuit
