#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace planex {

/// Runs one request of the form {"command": "...", ...} and returns the
/// response document. Every response carries a boolean "pass" that is true
/// iff all assertions made by the command hold.
///
/// Commands: count, optimize, certify, verify, table, oracle.
nlohmann::json run_request(const nlohmann::json& request);

/// Parses, runs and serializes with sorted keys and two-space indentation.
std::string run_request_string(std::string_view request);

/// Human-readable rendering of a response: the aligned table for `table`,
/// one "key: value" line per leaf otherwise.
std::string render_response_text(const nlohmann::json& response);

}  // namespace planex
