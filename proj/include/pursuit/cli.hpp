#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pursuit/io.hpp"

namespace pursuit {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Provenance record written next to every output. Replaying `argv` with the
/// same tool version reproduces the outputs byte for byte.
struct RunManifest {
    std::string command;
    std::vector<std::string> argv;
    Json config;
    std::uint64_t seed = 0;
    std::string version = kToolVersion;
    std::vector<std::string> outputs;
    double duration_seconds = 0.0;
};

Json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const Json& j);

/// Entry point behind the `pursuit` executable. `args` excludes the program
/// name. Returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pursuit
