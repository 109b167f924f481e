#include "pursuit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pursuit/errors.hpp"

namespace pursuit {

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

double round9(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    return std::strtod(format_number(x).c_str(), nullptr);
}

namespace {

Json number(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    return round9(x);
}

Json point(Vec2 v) { return Json::array({number(v.x()), number(v.y())}); }

Vec2 point_from(const Json& j, const char* key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError(std::string(key) + " must be an array [x, y] of two numbers");
    }
    const double x = j[0].get<double>();
    const double y = j[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw ConfigError(std::string(key) + " must be finite");
    }
    return Vec2(x, y);
}

double number_from(const Json& j, const char* key) {
    if (!j.is_number()) {
        throw ConfigError(std::string(key) + " must be a number");
    }
    return j.get<double>();
}

}  // namespace

Json to_json(const GameConfig& c) {
    return Json{{"nu", number(c.nu)},
                {"r_cap", number(c.r_cap)},
                {"x_p0", point(c.x_p0)},
                {"x_e0", point(c.x_e0)},
                {"t_f", number(c.t_f)},
                {"n", c.n},
                {"phi", Json{{"kind", std::string(to_string(c.phi.kind))}}},
                {"seed", c.seed}};
}

namespace {

GameConfig parse_config(const Json& j, bool scenario_keys) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    GameConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "nu") {
            c.nu = number_from(value, "nu");
        } else if (key == "r_cap") {
            c.r_cap = number_from(value, "r_cap");
        } else if (key == "x_p0") {
            c.x_p0 = point_from(value, "x_p0");
        } else if (key == "x_e0") {
            c.x_e0 = point_from(value, "x_e0");
        } else if (key == "t_f") {
            c.t_f = number_from(value, "t_f");
        } else if (key == "n") {
            if (!value.is_number_integer()) {
                throw ConfigError("n must be an integer");
            }
            c.n = value.get<int>();
        } else if (key == "phi") {
            if (!value.is_object() || !value.contains("kind") || !value["kind"].is_string()) {
                throw ConfigError("phi must be an object {\"kind\": \"hinge\" | \"quadratic\"}");
            }
            try {
                c.phi.kind = payoff_kind_from_string(value["kind"].get<std::string>());
            } catch (const InvalidArgument& e) {
                throw ConfigError(e.what());
            }
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) {
                throw ConfigError("seed must be a non-negative integer");
            }
            c.seed = value.get<std::uint64_t>();
        } else if (!(scenario_keys && (key == "pursuer" || key == "evader" || key == "script"))) {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    c.phi.r_cap = c.r_cap;
    c.validate();
    return c;
}

}  // namespace

GameConfig config_from_json(const Json& j) { return parse_config(j, false); }

Json to_json(const Scenario& s) {
    Json j = to_json(s.config);
    j["pursuer"] = std::string(to_string(s.pursuer));
    j["evader"] = std::string(to_string(s.evader));
    if (!s.script.empty()) {
        Json legs = Json::array();
        for (const ScriptLeg& leg : s.script) {
            legs.push_back(Json{{"t_start", number(leg.t_start)},
                                {"t_end", number(leg.t_end)},
                                {"velocity", point(leg.velocity)}});
        }
        j["script"] = legs;
    }
    return j;
}

Scenario scenario_from_json(const Json& j) {
    Scenario s;
    s.config = parse_config(j, true);
    try {
        if (j.contains("pursuer")) {
            if (!j["pursuer"].is_string()) {
                throw ConfigError("pursuer must be a string");
            }
            s.pursuer = pursuer_kind_from_string(j["pursuer"].get<std::string>());
        }
        if (j.contains("evader")) {
            if (!j["evader"].is_string()) {
                throw ConfigError("evader must be a string");
            }
            s.evader = evader_kind_from_string(j["evader"].get<std::string>());
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (j.contains("script")) {
        const Json& legs = j["script"];
        if (!legs.is_array()) {
            throw ConfigError("script must be an array of legs");
        }
        double previous_end = 0.0;
        for (const Json& leg : legs) {
            if (!leg.is_object()) {
                throw ConfigError("script legs must be objects");
            }
            ScriptLeg l;
            l.t_start = number_from(leg.value("t_start", Json(0.0)), "t_start");
            l.t_end = (!leg.contains("t_end") || leg["t_end"].is_null()) ? kForever
                                                                          : number_from(leg["t_end"], "t_end");
            if (!leg.contains("velocity")) {
                throw ConfigError("script leg without velocity");
            }
            l.velocity = point_from(leg["velocity"], "velocity");
            if (!(l.t_end > l.t_start) || l.t_start < previous_end) {
                throw ConfigError("script legs must have t_start < t_end and must not overlap");
            }
            if (norm(l.velocity) > s.config.nu * (1.0 + 1e-12)) {
                throw ConfigError("script velocity exceeds nu");
            }
            previous_end = l.t_end;
            s.script.push_back(l);
        }
    }
    return s;
}

Json parse_json_text(std::string_view text, std::string_view origin) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based and points one past the offending character.
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        const auto cut = what.find("error: ");
        if (cut != std::string::npos) {
            what = what.substr(cut + 7);
        }
        std::ostringstream msg;
        msg << origin << ":" << line << ":" << column << ": " << what;
        throw ConfigError(msg.str());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path.string());
}

Scenario load_scenario(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    try {
        return scenario_from_json(j);
    } catch (const Error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

Json to_json(const Outcome& o) {
    Json times = Json::array();
    for (double t : o.sensing_times) {
        times.push_back(number(t));
    }
    return Json{{"captured", o.captured},
                {"capture_time", o.capture_time ? number(*o.capture_time) : Json(nullptr)},
                {"final_distance", number(o.final_distance)},
                {"payoff", number(o.payoff)},
                {"sensing_times", times}};
}

Json to_json(const VerificationReport& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) {
        violations.push_back(
            Json{{"description", v.description}, {"magnitude", number(v.magnitude)}, {"config", to_json(v.config)}});
    }
    Json stats = Json::object();
    for (const auto& [key, value] : r.stats) {
        stats[key] = number(value);
    }
    return Json{{"suite", r.suite},
                {"passed", r.passed()},
                {"skipped", r.skipped},
                {"trials", r.trials},
                {"worst_violation", number(r.worst_violation)},
                {"tolerance", number(r.tolerance)},
                {"violation_count", r.violation_count},
                {"note", r.note},
                {"stats", stats},
                {"violations", violations}};
}

std::string trajectory_csv(const SimulationResult& result) {
    std::ostringstream out;
    out << "player,t_start,t_end,x0,y0,vx,vy\n";
    const auto emit = [&out](const char* player, const Trajectory& traj) {
        for (const Segment& s : traj.segments) {
            out << player << ',' << format_number(s.t_start) << ',' << format_number(s.t_end) << ','
                << format_number(s.start.x()) << ',' << format_number(s.start.y()) << ','
                << format_number(s.velocity.x()) << ',' << format_number(s.velocity.y()) << '\n';
        }
    };
    emit("pursuer", result.pursuer);
    emit("evader", result.evader);
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw ConfigError("write failed: " + path.string());
    }
}

}  // namespace pursuit
