#pragma once

// JSON and CSV plumbing for configs, scenarios, outcomes and reports. Every
// number is written with nine significant digits so outputs compare cleanly
// across platforms.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pursuit/engine.hpp"
#include "pursuit/verify.hpp"

namespace pursuit {

using Json = nlohmann::ordered_json;

/// printf("%.9g"); "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double x);
/// x rounded to nine significant digits (non-finite values unchanged).
double round9(double x);

Json to_json(const GameConfig& config);
/// Reads {nu, r_cap, x_p0, x_e0, t_f, n, phi: {kind}, seed}. Missing keys keep
/// their defaults; phi.r_cap always follows r_cap. Throws ConfigError.
GameConfig config_from_json(const Json& j);

/// A runnable game: configuration plus named strategies.
struct Scenario {
    GameConfig config;
    PursuerKind pursuer = PursuerKind::thm1;
    EvaderKind evader = EvaderKind::equilibrium;
    /// Legs {t_start, t_end, velocity: [vx, vy]}; t_end null or absent means forever.
    EvaderScript script;
};

Json to_json(const Scenario& scenario);
Scenario scenario_from_json(const Json& j);

/// Parses JSON text. Syntax errors become ConfigError("<origin>:<line>:<col>: ...").
Json parse_json_text(std::string_view text, std::string_view origin);
/// Reads and parses a file; a missing or unreadable file throws ConfigError.
Json read_json_file(const std::filesystem::path& path);
/// Scenario from a config file; semantic errors carry the file name.
Scenario load_scenario(const std::filesystem::path& path);

Json to_json(const Outcome& outcome);
Json to_json(const VerificationReport& report);

/// Header "player,t_start,t_end,x0,y0,vx,vy", pursuer rows then evader rows.
std::string trajectory_csv(const SimulationResult& result);

/// dump(2) plus a trailing newline.
std::string dump(const Json& j);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace pursuit
