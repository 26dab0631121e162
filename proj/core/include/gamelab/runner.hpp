#ifndef GAMELAB_RUNNER_HPP
#define GAMELAB_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gamelab/builtin.hpp"
#include "gamelab/dynamics.hpp"
#include "gamelab/supermodular.hpp"

namespace gamelab {

enum class Command { Dynamics, NashCheck, EnumerateNash, Supermodular, Spne };

std::string to_string(Command command);
Command command_from_string(const std::string& name);

/// One run of the CLI: a game, a command, and the command's knobs.
struct RunConfig {
  Command command = Command::Dynamics;
  GameSpec game;
  std::optional<std::uint64_t> seed;

  DecisionRule rule;
  Schedule schedule;
  BrSolverConfig solver;
  StopRule stop;

  /// Initial profile for Dynamics / profile under test for NashCheck.
  /// Entries are reals for interval spaces or "#<index>" for finite spaces.
  std::optional<nlohmann::json> init;
  std::optional<nlohmann::json> profile;

  double eps = 1e-6;

  // Supermodular diagnostic knobs.
  int pairs = 200;
  int cross_points = 50;
  double h_rel = 1e-4;
  int br_profiles = 100;

  std::string trace_path;
  std::string report_path;

  bool operator==(const RunConfig&) const = default;
};

/// True when executing the config draws from the random stream (seed
/// mandatory in that case).
bool consumes_randomness(const RunConfig& config);

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);
nlohmann::json serialize_config(const RunConfig& config);

/// Parses a profile literal against a game's spaces.
StrategyProfile parse_profile(const Game& game, const nlohmann::json& literal);

struct RunResult {
  int exit_code = 0;  // 0 success, 2 valid-but-negative outcome
  nlohmann::json report;
  std::optional<std::string> trace;
  std::string summary;
};

/// Executes the command in memory; throws on errors (exit code 1 at the CLI).
RunResult execute(const RunConfig& config);

/// Executes and writes the configured trace/report files, printing a one-line
/// summary to stdout. Returns the process exit code.
int run(const RunConfig& config);

}  // namespace gamelab

#endif  // GAMELAB_RUNNER_HPP
