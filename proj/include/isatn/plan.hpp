#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace isatn {

enum class ActionKind {
    no_op = 0,
    reroute_zone_to_gateway = 1,
    activate_uav = 2,
    deactivate_uav = 3,
    wake_small_cells = 4,
    sleep_small_cells = 5,
    shift_edge_service = 6,
    steer_beam_to_satellite = 7,
};
constexpr int kActionKindCount = 8;
const char* to_string(ActionKind k);

/// One real-time corrective action; parameters are resolved deterministically
/// by the executor for the chosen kind.
struct Action {
    ActionKind kind = ActionKind::no_op;
    int zone = -1;
    int gateway = -1;
    int uav = -1;
    int satellite = -1;
    int cell_count = 0;

    bool operator==(const Action&) const = default;
};

/// Hourly baseline configuration: the full actuator setting for one hour.
/// Sites within a zone are homogeneous, so sleep settings are per-zone counts
/// (the k lowest-index sites of the zone sleep first).
struct HourConfig {
    std::vector<int> serving_gw;   // [zone] -> gateway index
    std::vector<int> edge_gw;      // [zone] -> gateway hosting the zone's edge service
    std::vector<int> small_sleep;  // [zone] -> small cells in deep sleep
    std::vector<int> macro_micro;  // [zone] -> macros in micro-sleep
    std::vector<int> uav_zone;     // [uav] -> assigned zone, or -1 grounded
    std::vector<int> sat_pref;     // [zone] -> pinned satellite id, or -1 auto

    bool operator==(const HourConfig&) const = default;
};

/// Twin prediction for a candidate plan (or a realized-window evaluation).
struct ScenarioResult {
    double emissions_g = 0.0;
    std::array<double, 4> energy_kwh{};  // by layer: ran, satellite, uav, edge
    double total_kwh = 0.0;
    double bits_offered = 0.0;
    double bits_served = 0.0;
    std::array<double, 3> served_fraction{};  // per class
    std::array<double, 3> p95_latency_ms{};   // per class
    int sla_violations = 0;
    std::vector<int> risk_hours;  // hours (within plan) with capacity shortfall
};

/// Day-ahead baseline schedule plus its twin prediction.
struct DayPlan {
    int start_hour = 0;  // hour-of-run of configs[0]
    std::vector<HourConfig> configs;
    ScenarioResult predicted;
};

}  // namespace isatn
