#include "gamelab/runner.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gamelab/equilibrium.hpp"
#include "gamelab/serialize.hpp"

namespace gamelab {

using nlohmann::json;

std::string to_string(Command command) {
  switch (command) {
    case Command::Dynamics: return "dynamics";
    case Command::NashCheck: return "nash_check";
    case Command::EnumerateNash: return "enumerate_nash";
    case Command::Supermodular: return "supermodular";
    case Command::Spne: return "spne";
  }
  return "unknown";
}

Command command_from_string(const std::string& name) {
  for (Command c : {Command::Dynamics, Command::NashCheck,
                    Command::EnumerateNash, Command::Supermodular,
                    Command::Spne}) {
    if (to_string(c) == name) return c;
  }
  throw ConfigError("unknown command '" + name + "'");
}

bool consumes_randomness(const RunConfig& config) {
  switch (config.command) {
    case Command::Dynamics:
      return config.rule.kind == RuleKind::BetterResponse ||
             config.schedule.kind == ScheduleKind::Random ||
             config.schedule.kind == ScheduleKind::Asynchronous;
    case Command::Supermodular:
      return true;
    default:
      return false;
  }
}

namespace {

ScheduleKind schedule_kind_from_string(const std::string& name) {
  if (name == "synchronous") return ScheduleKind::Synchronous;
  if (name == "round_robin") return ScheduleKind::RoundRobin;
  if (name == "random") return ScheduleKind::Random;
  if (name == "asynchronous") return ScheduleKind::Asynchronous;
  throw ConfigError("unknown schedule '" + name + "'");
}

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Synchronous: return "synchronous";
    case ScheduleKind::RoundRobin: return "round_robin";
    case ScheduleKind::Random: return "random";
    case ScheduleKind::Asynchronous: return "asynchronous";
  }
  return "unknown";
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig config;
  if (!doc.contains("command") || !doc["command"].is_string()) {
    throw ConfigError("missing 'command'");
  }
  config.command = command_from_string(doc["command"].get<std::string>());

  if (!doc.contains("game") || !doc["game"].is_object() ||
      !doc["game"].contains("kind")) {
    throw ConfigError("missing 'game.kind'");
  }
  config.game.kind =
      game_kind_from_string(doc["game"]["kind"].get<std::string>());
  config.game.params = doc["game"].value("params", json::object());

  if (doc.contains("seed")) {
    config.seed = doc["seed"].get<std::uint64_t>();
  }

  if (doc.contains("rule")) {
    const auto& rule = doc["rule"];
    const std::string kind = rule.value("kind", "best_response");
    if (kind == "best_response") {
      config.rule.kind = RuleKind::BestResponse;
    } else if (kind == "better_response") {
      config.rule.kind = RuleKind::BetterResponse;
    } else {
      throw ConfigError("unknown decision rule '" + kind + "'");
    }
    config.rule.improvement_eps =
        rule.value("improvement_eps", config.rule.improvement_eps);
    config.rule.max_draws = rule.value("max_draws", config.rule.max_draws);
    if (config.rule.kind == RuleKind::BetterResponse &&
        !(config.rule.improvement_eps > 0.0)) {
      throw ConfigError("better_response requires improvement_eps > 0");
    }
  }
  if (doc.contains("schedule")) {
    const auto& schedule = doc["schedule"];
    config.schedule.kind =
        schedule_kind_from_string(schedule.value("kind", "synchronous"));
    config.schedule.inclusion_prob =
        schedule.value("inclusion_prob", config.schedule.inclusion_prob);
    if (config.schedule.kind == ScheduleKind::Asynchronous &&
        (config.schedule.inclusion_prob <= 0.0 ||
         config.schedule.inclusion_prob > 1.0)) {
      throw ConfigError("asynchronous inclusion_prob must be in (0, 1]");
    }
  }
  if (doc.contains("solver")) {
    const auto& solver = doc["solver"];
    config.solver.grid_points =
        solver.value("grid_points", config.solver.grid_points);
    config.solver.refine_rounds =
        solver.value("refine_rounds", config.solver.refine_rounds);
    config.solver.refine_shrink =
        solver.value("refine_shrink", config.solver.refine_shrink);
    if (config.solver.grid_points < 3) {
      throw ConfigError("solver.grid_points must be >= 3");
    }
    if (config.solver.refine_shrink <= 0.0 ||
        config.solver.refine_shrink >= 1.0) {
      throw ConfigError("solver.refine_shrink must be in (0, 1)");
    }
  }
  if (doc.contains("stop")) {
    const auto& stop = doc["stop"];
    config.stop.max_iters = stop.value("max_iters", config.stop.max_iters);
    config.stop.fix_tol = stop.value("fix_tol", config.stop.fix_tol);
  }
  if (doc.contains("init")) config.init = doc["init"];
  if (doc.contains("profile")) config.profile = doc["profile"];
  config.eps = doc.value("eps", config.eps);
  if (doc.contains("diagnose")) {
    const auto& d = doc["diagnose"];
    config.pairs = d.value("pairs", config.pairs);
    config.cross_points = d.value("cross_points", config.cross_points);
    config.h_rel = d.value("h_rel", config.h_rel);
    config.br_profiles = d.value("br_profiles", config.br_profiles);
  }
  config.trace_path = doc.value("trace", "");
  config.report_path = doc.value("report", "");

  if (consumes_randomness(config) && !config.seed) {
    throw ConfigError("'seed' is mandatory when the run consumes randomness");
  }
  if (config.command == Command::NashCheck && !config.profile) {
    throw ConfigError("nash_check requires 'profile'");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(doc);
}

json serialize_config(const RunConfig& config) {
  json doc;
  doc["command"] = to_string(config.command);
  doc["game"] = {{"kind", to_string(config.game.kind)},
                 {"params", config.game.params}};
  if (config.seed) doc["seed"] = *config.seed;
  doc["rule"] = {{"kind", config.rule.kind == RuleKind::BestResponse
                              ? "best_response"
                              : "better_response"},
                 {"improvement_eps", config.rule.improvement_eps},
                 {"max_draws", config.rule.max_draws}};
  doc["schedule"] = {{"kind", to_string(config.schedule.kind)},
                     {"inclusion_prob", config.schedule.inclusion_prob}};
  doc["solver"] = {{"grid_points", config.solver.grid_points},
                   {"refine_rounds", config.solver.refine_rounds},
                   {"refine_shrink", config.solver.refine_shrink}};
  doc["stop"] = {{"max_iters", config.stop.max_iters},
                 {"fix_tol", config.stop.fix_tol}};
  if (config.init) doc["init"] = *config.init;
  if (config.profile) doc["profile"] = *config.profile;
  doc["eps"] = config.eps;
  doc["diagnose"] = {{"pairs", config.pairs},
                     {"cross_points", config.cross_points},
                     {"h_rel", config.h_rel},
                     {"br_profiles", config.br_profiles}};
  doc["trace"] = config.trace_path;
  doc["report"] = config.report_path;
  return doc;
}

StrategyProfile parse_profile(const Game& game, const json& literal) {
  if (!literal.is_array() ||
      static_cast<int>(literal.size()) != game.n_players) {
    throw ConfigError("profile literal must list one action per player");
  }
  std::vector<ActionValue> actions(game.n_players);
  for (int i = 0; i < game.n_players; ++i) {
    const auto& entry = literal[i];
    const auto& space = game.spaces[i];
    if (entry.is_string()) {
      const std::string s = entry.get<std::string>();
      if (s.empty() || s[0] != '#' || !space.is_finite()) {
        throw ConfigError("'#<index>' entries apply to finite spaces only");
      }
      const std::size_t idx = std::stoul(s.substr(1));
      const auto& list = space.finite_set().actions;
      if (idx >= list.size()) {
        throw ConfigError("finite action index out of range for player " +
                          std::to_string(i));
      }
      actions[i] = list[idx];
    } else if (entry.is_number()) {
      actions[i] = scalar_action(entry.get<double>());
    } else if (entry.is_array()) {
      actions[i] = entry.get<std::vector<double>>();
    } else {
      throw ConfigError("unsupported profile entry for player " +
                        std::to_string(i));
    }
    if (!space.contains(actions[i])) {
      throw ConfigError("profile action for player " + std::to_string(i) +
                        " lies outside its space");
    }
  }
  return StrategyProfile(std::move(actions));
}

namespace {

StrategyProfile default_init(const Game& game) {
  std::vector<ActionValue> actions(game.n_players);
  for (int i = 0; i < game.n_players; ++i) {
    const auto& space = game.spaces[i];
    actions[i] = space.is_finite() ? space.finite_set().actions.front()
                                   : scalar_action(space.bounds().lo);
  }
  return StrategyProfile(std::move(actions));
}

}  // namespace

RunResult execute(const RunConfig& config) {
  BuiltGame built = build_game(config.game);
  const Game& game = built.game;
  Rng rng(config.seed.value_or(0));

  RunResult result;
  json report;
  report["command"] = to_string(config.command);
  report["game"] = {{"kind", to_string(config.game.kind)},
                    {"params", config.game.params}};
  if (built.illustrative) report["game"]["model"] = "illustrative";
  report["seed"] = config.seed ? json(*config.seed) : json(nullptr);
  report["spec_version"] = "1";
  json diagnostics = json::object();

  switch (config.command) {
    case Command::Dynamics: {
      const StrategyProfile init = config.init
                                       ? parse_profile(game, *config.init)
                                       : default_init(game);
      Trajectory traj = run_dynamics(game, init, config.rule, config.schedule,
                                     config.solver, config.stop, rng);
      result.trace = trace_to_csv(traj, game);
      json res;
      res["converged"] = traj.converged;
      res["stop_reason"] = to_string(traj.stop_reason);
      res["iterations"] = traj.steps.back().iteration;
      res["final_profile"] = profile_to_json(traj.final_profile(), game);
      res["final_utilities"] = traj.steps.back().utilities;
      report["result"] = std::move(res);
      result.exit_code = traj.converged ? 0 : 2;
      std::ostringstream os;
      os << "dynamics: " << to_string(traj.stop_reason) << " after "
         << traj.steps.back().iteration << " iterations";
      result.summary = os.str();
      break;
    }
    case Command::NashCheck: {
      const StrategyProfile profile = parse_profile(game, *config.profile);
      NashVerdict verdict =
          is_epsilon_nash(game, profile, config.eps, config.solver);
      report["result"] = verdict_to_json(verdict);
      result.exit_code = verdict.is_nash ? 0 : 2;
      result.summary = verdict.is_nash
                           ? "nash_check: profile is an eps-Nash equilibrium"
                           : "nash_check: profile admits a profitable deviation";
      break;
    }
    case Command::EnumerateNash: {
      const auto equilibria = enumerate_pure_nash_finite(game, config.eps);
      json list = json::array();
      for (const auto& eq : equilibria) {
        list.push_back(profile_to_json(eq, game));
      }
      report["result"] = {{"equilibria", std::move(list)},
                          {"count", equilibria.size()}};
      result.exit_code = equilibria.empty() ? 2 : 0;
      std::ostringstream os;
      os << "enumerate_nash: " << equilibria.size()
         << " pure equilibria found";
      result.summary = os.str();
      break;
    }
    case Command::Supermodular: {
      DiagnoseConfig dcfg;
      dcfg.pairs = config.pairs;
      dcfg.cross_points = config.cross_points;
      dcfg.h_rel = config.h_rel;
      dcfg.br.profiles = config.br_profiles;
      SupermodularReport sm = diagnose_supermodular(game, dcfg, rng,
                                                    config.solver);
      report["result"] = supermodular_report_to_json(sm);
      result.exit_code =
          sm.verdict == SupermodularVerdict::Supermodular ? 0 : 2;
      result.summary = "supermodular: verdict " + to_string(sm.verdict);
      break;
    }
    case Command::Spne: {
      if (game.n_players != 2) {
        throw ConfigError("spne requires a two-player game");
      }
      TwoPlayerGame two(game);
      json res;
      SpneSolution numeric = solve_spne_numeric(two, config.solver);
      res["numeric"] = spne_to_json(numeric);
      if (built.duopoly) {
        SpneSolution analytic = solve_spne_analytic(*built.duopoly);
        res["analytic"] = spne_to_json(analytic);
        diagnostics["analytic_numeric_gap"] =
            std::max(std::abs(analytic.q1_star - numeric.q1_star),
                     std::abs(analytic.q2_star - numeric.q2_star));
      }
      report["result"] = std::move(res);
      result.exit_code = 0;
      std::ostringstream os;
      os << "spne: q1*=" << format_real(numeric.q1_star)
         << " q2*=" << format_real(numeric.q2_star);
      result.summary = os.str();
      break;
    }
  }

  report["diagnostics"] = std::move(diagnostics);
  result.report = std::move(report);
  return result;
}

int run(const RunConfig& config) {
  RunResult result = execute(config);
  if (!config.trace_path.empty() && result.trace) {
    std::ofstream out(config.trace_path, std::ios::binary);
    if (!out) {
      throw GameError("cannot open trace file '" + config.trace_path + "'");
    }
    out << *result.trace;
    if (!out) {
      throw GameError("failed writing trace file '" + config.trace_path + "'");
    }
  }
  if (!config.report_path.empty()) {
    write_report(result.report, config.report_path);
  }
  std::cout << result.summary << "\n";
  return result.exit_code;
}

}  // namespace gamelab
