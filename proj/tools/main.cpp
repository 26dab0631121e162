#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gamelab/builtin.hpp"
#include "gamelab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gamelab: strategic-game dynamics, equilibrium checks, "
               "supermodularity diagnostics, and Stackelberg solvers"};
  app.require_subcommand(1);

  std::string config_path;
  std::string trace_path;
  std::string report_path;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto* run_cmd = app.add_subcommand("run", "Execute a run config");
  run_cmd->add_option("--config", config_path, "JSON run config")->required();
  run_cmd->add_option("--trace", trace_path, "Override trace output path");
  run_cmd->add_option("--report", report_path, "Override report output path");
  run_cmd->add_option("--seed", seed, "Override the config seed")
      ->each([&](const std::string&) { seed_given = true; });

  std::string validate_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "Parse and validate a run config");
  validate_cmd->add_option("--config", validate_path, "JSON run config")
      ->required();

  auto* list_cmd = app.add_subcommand("list-games", "List built-in games");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) {
      for (gamelab::GameKind kind : gamelab::all_game_kinds()) {
        std::cout << gamelab::to_string(kind) << "\n    "
                  << gamelab::describe_game_kind(kind) << "\n";
      }
      return 0;
    }
    if (validate_cmd->parsed()) {
      gamelab::RunConfig config = gamelab::load_config(validate_path);
      gamelab::validate_game(gamelab::build_game(config.game).game);
      std::cout << "config ok: " << gamelab::to_string(config.command)
                << " on " << gamelab::to_string(config.game.kind) << "\n";
      return 0;
    }
    gamelab::RunConfig config = gamelab::load_config(config_path);
    if (!trace_path.empty()) config.trace_path = trace_path;
    if (!report_path.empty()) config.report_path = report_path;
    if (seed_given) config.seed = seed;
    return gamelab::run(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
