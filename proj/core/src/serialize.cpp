#include "gamelab/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gamelab {

using nlohmann::json;

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

std::string action_cell(const ActionValue& action, const ActionSpace& space) {
  if (space.is_finite()) {
    const auto idx = space.index_of(action);
    if (!idx) throw InvalidProfile("finite action not found in its space");
    return "#" + std::to_string(*idx);
  }
  return format_real(action.at(0));
}

}  // namespace

std::string trace_to_csv(const Trajectory& trajectory, const Game& game) {
  std::ostringstream os;
  os << "step,movers";
  for (int i = 0; i < game.n_players; ++i) os << ",action_" << i;
  for (int i = 0; i < game.n_players; ++i) os << ",utility_" << i;
  os << "\n";
  for (const auto& step : trajectory.steps) {
    os << step.iteration << ",";
    for (std::size_t m = 0; m < step.movers.size(); ++m) {
      if (m > 0) os << ";";
      os << step.movers[m];
    }
    for (int i = 0; i < game.n_players; ++i) {
      os << "," << action_cell(step.profile.at(i), game.spaces[i]);
    }
    for (double u : step.utilities) os << "," << format_real(u);
    os << "\n";
  }
  return os.str();
}

void write_trace(const Trajectory& trajectory, const Game& game,
                 const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GameError("cannot open trace file '" + path + "'");
  out << trace_to_csv(trajectory, game);
  if (!out) throw GameError("failed writing trace file '" + path + "'");
}

void write_report(const json& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GameError("cannot open report file '" + path + "'");
  out << report.dump(2) << "\n";
  if (!out) throw GameError("failed writing report file '" + path + "'");
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::FixedPoint: return "fixed_point";
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::Cycle: return "cycle";
  }
  return "unknown";
}

std::string to_string(SupermodularVerdict verdict) {
  switch (verdict) {
    case SupermodularVerdict::Supermodular: return "supermodular";
    case SupermodularVerdict::NotSupermodular: return "not_supermodular";
    case SupermodularVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(SpneMethod method) {
  return method == SpneMethod::Analytic ? "analytic" : "numeric_bilevel";
}

json profile_to_json(const StrategyProfile& profile, const Game& game) {
  json out = json::array();
  for (int i = 0; i < profile.size(); ++i) {
    const auto& space = game.spaces[i];
    if (space.is_finite()) {
      const auto idx = space.index_of(profile.at(i));
      if (!idx) throw InvalidProfile("finite action not found in its space");
      out.push_back("#" + std::to_string(*idx));
    } else {
      out.push_back(profile.at(i).at(0));
    }
  }
  return out;
}

json verdict_to_json(const NashVerdict& verdict) {
  json out;
  out["is_nash"] = verdict.is_nash;
  out["eps"] = verdict.eps;
  if (verdict.worst_player) out["worst_player"] = *verdict.worst_player;
  if (verdict.worst_deviation) {
    out["worst_deviation"] = {{"action", verdict.worst_deviation->action},
                              {"gain", verdict.worst_deviation->gain}};
  }
  return out;
}

json spne_to_json(const SpneSolution& solution) {
  json out;
  out["method"] = to_string(solution.method);
  out["q1_star"] = solution.q1_star;
  out["q2_star"] = solution.q2_star;
  out["leader_utility"] = solution.leader_utility;
  out["follower_utility"] = solution.follower_utility;
  out["interior"] = solution.interior;
  if (solution.foc_residual) out["foc_residual"] = *solution.foc_residual;
  return out;
}

json supermodular_report_to_json(const SupermodularReport& report) {
  json out;
  out["verdict"] = to_string(report.verdict);
  out["lattice"] = {{"ok", report.lattice.ok},
                    {"witness", report.lattice.witness}};
  if (report.lattice.counterexample) {
    out["lattice"]["counterexample"] = {report.lattice.counterexample->first,
                                        report.lattice.counterexample->second};
  }
  json players = json::array();
  for (std::size_t i = 0; i < report.per_player.size(); ++i) {
    const auto& r = report.per_player[i];
    json entry = {{"player", i},
                  {"violation_found", r.violation_found},
                  {"exhaustive", r.exhaustive}};
    if (r.counterexample) {
      json a = json::array();
      json b = json::array();
      for (int k = 0; k < r.counterexample->a.size(); ++k) {
        a.push_back(r.counterexample->a.at(k));
        b.push_back(r.counterexample->b.at(k));
      }
      entry["counterexample"] = {{"a", a},
                                 {"b", b},
                                 {"lhs", r.counterexample->lhs},
                                 {"rhs", r.counterexample->rhs}};
    }
    players.push_back(std::move(entry));
  }
  out["per_player"] = std::move(players);
  json cross = json::array();
  for (const auto& entry : report.cross_partials) {
    cross.push_back({{"i", entry.i},
                     {"j", entry.j},
                     {"min_cross_partial", entry.result.min_value},
                     {"nonnegative", entry.result.nonnegative},
                     {"resampled", entry.result.resampled}});
  }
  out["cross_partials"] = std::move(cross);
  if (report.br_properties) {
    const auto& br = *report.br_properties;
    json violations = json::array();
    for (const auto& v : br.violations) {
      json witness = json::array();
      for (int k = 0; k < v.profile.size(); ++k) {
        witness.push_back(v.profile.at(k));
      }
      violations.push_back({{"player", v.player},
                            {"property", v.property},
                            {"profile", witness},
                            {"detail", v.detail}});
    }
    out["br_properties"] = {
        {"uniqueness_ok", br.uniqueness_ok},
        {"positivity_ok", br.positivity_ok},
        {"positivity_applicable", br.positivity_applicable},
        {"scalability_ok", br.scalability_ok},
        {"grid_resolution", br.grid_resolution},
        {"violations", std::move(violations)}};
  }
  return out;
}

}  // namespace gamelab
