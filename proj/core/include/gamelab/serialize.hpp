#ifndef GAMELAB_SERIALIZE_HPP
#define GAMELAB_SERIALIZE_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gamelab/dynamics.hpp"
#include "gamelab/equilibrium.hpp"
#include "gamelab/game.hpp"
#include "gamelab/stackelberg.hpp"
#include "gamelab/supermodular.hpp"

namespace gamelab {

/// Decimal, 12 significant digits, '.' separator, no locale.
std::string format_real(double x);

/// Trace CSV: `step,movers,action_0,...,action_{N-1},utility_0,...`.
/// Movers are ';'-joined player indices (empty for step 0); finite actions
/// are emitted as `#<list index>`, continuous actions as formatted reals.
std::string trace_to_csv(const Trajectory& trajectory, const Game& game);
void write_trace(const Trajectory& trajectory, const Game& game,
                 const std::string& path);

void write_report(const nlohmann::json& report, const std::string& path);

std::string to_string(StopReason reason);
std::string to_string(SupermodularVerdict verdict);
std::string to_string(SpneMethod method);

nlohmann::json profile_to_json(const StrategyProfile& profile,
                               const Game& game);
nlohmann::json verdict_to_json(const NashVerdict& verdict);
nlohmann::json spne_to_json(const SpneSolution& solution);
nlohmann::json supermodular_report_to_json(const SupermodularReport& report);

}  // namespace gamelab

#endif  // GAMELAB_SERIALIZE_HPP
