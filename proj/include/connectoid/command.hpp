#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "connectoid/io.hpp"

namespace connectoid {

enum ExitCode { kExitOk = 0, kExitNegative = 1, kExitInconclusive = 2, kExitMalformed = 3 };

/// One invocation of a verb. The instance is a fixture name or a JSON file;
/// `instance_doc` and `artifact_doc`, when set, replace reading files.
struct Command {
  std::string verb;
  std::string instance;
  std::optional<Json> instance_doc;
  std::string artifact;
  std::optional<Json> artifact_doc;
  std::string root;
  std::string target = "all";
  std::vector<std::string> sep;  // entries may hold ';'-separated lists
  std::vector<std::string> sub;
  std::size_t depth = 10;
  std::size_t budget = kDefaultBudget;
  std::size_t rounds = 5;
  std::size_t hits = 10;
  std::size_t lambda = 1;
};

struct CommandResult {
  int exit = kExitOk;
  Json report = Json::object();
  std::string dot;  // empty when the verb has no tree to draw
};

/// Verb names with one-line descriptions.
const std::vector<std::pair<std::string, std::string>>& command_verbs();

/// Exit 0 verified/constructed, 1 definitive negative (witness in the
/// report), 2 inconclusive, 3 malformed input. Library errors are caught
/// and reported under "error".
CommandResult run_command(const Command& cmd);

}  // namespace connectoid
