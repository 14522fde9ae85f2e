#pragma once

// The analyses behind each CLI subcommand. Every command builds a JSON
// document first and renders its text report from that document, so the
// two outputs always carry the same fields.

#include "tworay/scenario.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace tworay::cli {

using Json = nlohmann::ordered_json;

struct CommandOptions {
    bool full_trace = false;
    bool strict = false;
    std::optional<int> bound;
    std::uint64_t seed = 1;
    std::optional<Vec2> degree;
    std::optional<Vec2> ray;
    std::optional<std::pair<std::string, std::string>> chart;
};

struct CommandResult {
    std::string text;
    Json json;
    int exit_code = 0;
};

CommandResult cmd_describe(const ScenarioFile& s, const CommandOptions& o = {});
CommandResult cmd_monomials(const ScenarioFile& s, const CommandOptions& o = {});
CommandResult cmd_baselocus(const ScenarioFile& s, const CommandOptions& o = {});
CommandResult cmd_localchart(const ScenarioFile& s, const CommandOptions& o = {});
CommandResult cmd_game(const ScenarioFile& s, const CommandOptions& o = {});
CommandResult cmd_sections(const ScenarioFile& s, const CommandOptions& o = {});
// text is the new scenario file; json also carries it under "scenario_text".
CommandResult cmd_transform(const ScenarioFile& s, const CommandOptions& o = {});

CommandResult run_command(const std::string& name, const ScenarioFile& s, const CommandOptions& o = {});
std::vector<std::string> command_names();

} // namespace tworay::cli
