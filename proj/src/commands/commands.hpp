#pragma once

#include "cuspidal/hrep.hpp"
#include "session/config.hpp"

namespace wnlie {

/// Executes one named subcommand against the session; returns the Report
/// JSON ({command, inputs, results, checks}). Unknown names and bad
/// arguments throw wnlie::error. Reports are deterministic for a fixed
/// config and seed.
Json run_command(Session& session, const std::string& name, const Json& args);

const std::vector<std::string>& command_names();

/// True when every check in the report passed (reports without checks count
/// as successful).
bool report_ok(const Json& report);

// Serialization (sparse triplets for matrices; scalars as strings).
Json glrep_to_json(const GlRep& v, const std::vector<std::string>& params);
GlRep glrep_from_json(const Json& j, const std::vector<std::string>& params);
Json hrep_to_json(const HRep& h, const std::vector<std::string>& params);
std::shared_ptr<HRep> hrep_from_json(const Json& j, const std::vector<std::string>& params);

}  // namespace wnlie
