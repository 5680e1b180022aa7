#pragma once

// Text formats and report documents.
//
// Strategy file: one row per coin, each a string over {L,R,O}; lines whose
// first character is '#' are comments; blank lines are ignored. All rows must
// have the same length. Writing emits the rows only, each followed by '\n'.
//
// Reports are JSON objects with a fixed key order, tagged "schema": "1".

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "balance/analysis.hpp"
#include "balance/montecarlo.hpp"
#include "balance/verifier.hpp"

namespace balance::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "1";

/// Throws ParseError carrying the 1-based line and column of the problem.
StrategyMatrix parse_strategy(std::string_view text);

std::string format_strategy(const StrategyMatrix& strategy);

StrategyMatrix read_strategy_file(const std::filesystem::path& path);

/// Locale-independent shortest form with 9 significant digits.
std::string format_number(double value);

/// CSV document: header line then one line per row, fields joined by ','.
std::string format_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

Json to_json(const GameSpec& spec);
Json to_json(const Hypothesis& h);
Json to_json(const std::vector<Hypothesis>& hs);
Json to_json(const Verdict& v);
Json to_json(const AttackResult& a);
Json to_json(const Certificate& c);
Json to_json(const GameValue& v);
Json to_json(const TrialReport& r);
Json to_json(const ConcentrationReport& r);

/// Envelope shared by every report: {"schema", "command", ...}.
Json report(std::string_view command);

}  // namespace balance::io
