#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isatn/energy.hpp"
#include "isatn/environment.hpp"
#include "isatn/linkmodel.hpp"
#include "isatn/plan.hpp"
#include "isatn/scenario.hpp"
#include "isatn/topology.hpp"

namespace isatn {

/// Immutable geometry, link budgets, and trace for one scenario. Built once;
/// shared by the engine, the twin, and every planner.
struct World {
    ScenarioSpec spec;
    std::vector<Zone> zones;
    std::vector<GatewayNode> gateways;
    std::vector<SatelliteNode> sats;
    std::vector<std::string> regions;  // sorted, aligned with the trace
    CarbonTrace trace;

    std::vector<int> zone_region;  // [zone]
    std::vector<int> gw_region;    // [gateway]
    std::vector<int> pad_region;   // [pad]
    std::vector<PlanarKm> pad_pos;
    std::vector<int> nearest_gw;   // [zone]
    std::vector<int> nearest_pad;  // [zone]
    std::vector<std::vector<double>> zone_gw_km;  // [zone][gateway]

    // Clear-sky per-site effective capacities (bit/s), by zone.
    std::vector<double> macro_site_bps;
    std::vector<double> small_site_bps;
    std::vector<double> uav_site_bps;
    std::vector<double> backhaul_gain_snr_db;  // clear-sky backhaul SNR, rural zones
    std::vector<bool> microwave_backhaul;      // true for rural zones
    std::vector<double> edge_service_units;    // [zone] compute units of its edge service

    // Best visible satellite per (zone, minute): id (-1 if none), elevation
    // (deg), slant (km). Precomputed for the full horizon.
    int sat_table_minutes = 0;
    std::vector<std::int16_t> best_sat_id;     // [minute * zones + zone]
    std::vector<float> best_sat_el_deg;
    std::vector<float> best_sat_slant_km;

    PowerProfile macro_prof, small_prof, edge_prof, gw_prof, sat_prof, uav_prof;
    double uav_battery_capacity_wh = 0.0;
    double uav_reserve_wh = 0.0;
    double uav_charge_efficiency = 0.9;

    explicit World(const ScenarioSpec& spec);

    int zone_count() const { return static_cast<int>(zones.size()); }
    int gateway_count() const { return static_cast<int>(gateways.size()); }
    int region_count() const { return static_cast<int>(regions.size()); }
};

/// Exogenous inputs for one tick; the step function consumes these and never
/// draws randomness itself.
struct ExoTick {
    std::vector<double> offered_bits;  // [zone * 3 + class]
    std::vector<double> intensity;     // [region], gCO2/kWh
    std::vector<double> renewable;     // [region], fraction
    double ka_atten_db = 0.0;
    double micro_atten_db = 0.0;
};

struct UavState {
    UavMode mode = UavMode::grounded;
    double battery_wh = 0.0;
    int zone = -1;  // assigned zone when airborne
    int pad = 0;    // pad when grounded

    bool operator==(const UavState&) const = default;
};

/// Complete mutable simulation state at one tick boundary.
struct EpochState {
    std::int64_t t_min = 0;
    HourConfig config;
    std::vector<UavState> uavs;
    EnergyLedger cumulative;
    std::int64_t swaps = 0;

    explicit EpochState(std::size_t regions = 0) : cumulative(regions) {}
};

/// Per-tick KPI record (per-class latency is the nearest-rank p95 across
/// zones with demand in that class).
struct KpiTick {
    std::int64_t t_min = 0;
    std::array<double, 3> offered_bits{};
    std::array<double, 3> served_bits{};
    std::array<double, 3> latency_p95_ms{};
    std::array<double, 4> layer_kwh{};
    double emissions_g = 0.0;
    double renewable_kwh = 0.0;
    int sla_violations = 0;
    int action_kind = -1;  // ActionKind of an applied action, -1 = none

    bool operator==(const KpiTick&) const = default;
};

/// Optional per-zone detail a caller may request from step().
struct TickDetail {
    std::vector<double> zone_offered;       // [zone] total bits
    std::vector<double> zone_served;
    std::vector<double> zone_latency_ms;    // worst class latency per zone
    std::vector<double> zone_terr_util;     // terrestrial load / capacity
    std::vector<double> zone_sat_cap_bps;
    std::vector<double> class_latency_ms;   // [zone * 3 + class]
};

/// Initial state: everything active, UAVs grounded at pads round-robin,
/// nearest-gateway static configuration.
EpochState initial_state(const World& world);

/// Reconcile element modes to an hourly configuration (keeps UAV physics).
void apply_hour_config(const World& world, EpochState& state, const HourConfig& config);

/// Advance one tick of dt_min minutes: apply an optional action, serve
/// demand, account energy and emissions, update UAV batteries and swaps.
KpiTick step(const World& world, EpochState& state, const ExoTick& exo, int dt_min,
             const Action* action = nullptr, TickDetail* detail = nullptr);

/// Build the realized exogenous inputs for a tick (traffic RNG, trace hold,
/// scheduled rain) from the episode spec.
void realized_exo_tick(const World& world, const ScenarioSpec& episode_spec, std::int64_t t_min,
                       ExoTick& out);

/// Run summary; every field is recomputable from the KpiTick series.
struct RunSummary {
    double total_kwh = 0.0;
    std::array<double, 4> layer_kwh{};
    double emissions_g = 0.0;
    double renewable_kwh = 0.0;
    double bits_offered = 0.0;
    double bits_served = 0.0;
    double gco2_per_gb = 0.0;  // 0 with zero_traffic flag when undefined
    double renewable_utilization = 0.0;
    std::array<double, 3> p95_latency_ms{};
    std::int64_t sla_violations = 0;
    std::vector<double> recovery_s;  // per rain event; -1 = never recovered
    bool zero_traffic = false;
};

RunSummary summarize(const std::vector<KpiTick>& kpis, const ScenarioSpec& spec);

struct RunResult {
    std::vector<KpiTick> kpis;
    RunSummary summary;
};

/// First time (seconds) after event onset at which the rolling 5-minute p95
/// latency returns below threshold x pre-event baseline and stays there for
/// 5 minutes; nullopt if it never does.
std::optional<double> recovery_time_s(const std::vector<KpiTick>& kpis, const ScenarioSpec& spec,
                                      const RainEventSpec& event, double threshold = 1.5);

}  // namespace isatn
