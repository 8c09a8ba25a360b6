#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace isatn {

enum class ZoneClass { urban, suburban, rural };
enum class TrafficClass { embb = 0, urllc = 1, miot = 2 };
enum class Band { sub6, mmwave, ka, microwave_backhaul, isl };
enum class ElementKind { macro_cell, small_cell, edge_server, uav, satellite_share, gateway };

constexpr int kTrafficClassCount = 3;

const char* to_string(ZoneClass c);
const char* to_string(TrafficClass c);
const char* to_string(Band b);
const char* to_string(ElementKind k);

struct ConstellationSpec {
    int planes = 6;
    int sats_per_plane = 12;
    int total = 0;  // 0 = derive as planes * sats_per_plane
    double altitude_km = 600.0;
    double inclination_deg = 53.0;
};

struct RanSpec {
    int macro_count = 60;
    int small_count = 120;
};

struct UavSpec {
    int count = 24;
    double endurance_h = 4.0;
    double coverage_km = 15.0;
    int swap_pads = 6;
};

struct ZoneSpec {
    std::string id;
    ZoneClass cls = ZoneClass::urban;
    std::string region;
    double x_km = 0.0;
    double y_km = 0.0;
    int macro_sites = 0;
    int small_sites = 0;
};

struct GatewaySiteSpec {
    std::string id;
    std::string region;
    double x_km = 0.0;
    double y_km = 0.0;
    double compute_capacity = 1.0;  // normalized service units
    bool hosts_edge = true;
};

struct SwapPadSpec {
    std::string id;
    std::string region;
    double x_km = 0.0;
    double y_km = 0.0;
};

struct SlaSpec {
    double urllc_latency_ms = 5.0;
    double embb_served_fraction = 0.95;
    double miot_served_fraction = 0.90;
};

struct TrafficProfileSpec {
    double embb_weekly_gb = 234000.0;
    double urllc_weekly_gb = 16000.0;
    double miot_weekly_gb = 60000.0;
    double embb_peak_hour = 20.0;   // local hour of the diurnal maximum
    double embb_trough_hour = 4.0;  // documented; peak + 12 by construction
    double embb_diurnal_amplitude = 0.45;
    double urban_embb_weight = 3.0;
    double suburban_embb_weight = 1.2;
    double rural_embb_weight = 0.4;
    double commuter_swing = 0.25;   // daytime urban share gain (mobility aggregate)
    double miot_burst_rate_rural_per_h = 0.5;
    double miot_burst_rate_other_per_h = 0.10;
    double day_noise_sigma = 0.05;  // day-to-day multiplicative jitter
    double tick_noise_amp = 0.20;   // within-hour fluctuation amplitude
    double surge_multiplier = 2.0;  // urban eMBB multiplier during the surge window
    bool surge_with_second_event = true;
};

struct RainEventSpec {
    double start_hour = 0.0;  // hours since trace start
    double end_hour = 0.0;
    std::vector<Band> affected_bands;
    double attenuation_db = 15.0;
};

struct PowerProfile {
    ElementKind kind = ElementKind::macro_cell;
    double active_w = 0.0;
    double micro_sleep_w = 0.0;
    double deep_sleep_w = 0.0;
    double off_w = 0.0;
    double load_slope_w_per_bps = 0.0;
    double uav_cruise_w = 0.0;
    double uav_hover_w = 0.0;
    double uav_standby_w = 0.0;
};

struct SynthRegionProfile {
    std::string name;
    std::string profile;  // "coastal" | "inland"
};

struct CarbonSourceSpec {
    std::string kind = "synth";  // "synth" | "file"
    std::string path;            // when kind == "file"
    std::vector<SynthRegionProfile> regions;
    double base_intensity = 450.0;  // gCO2/kWh at zero renewables
    double floor_intensity = 50.0;  // gCO2/kWh floor
};

struct LinkParamsSpec {
    double macro_bw_hz = 20e6;
    double macro_tx_dbm = 43.0;
    double macro_carrier_ghz = 2.0;
    double small_bw_hz = 100e6;
    double small_tx_dbm = 30.0;
    double small_carrier_ghz = 28.0;
    double uav_bw_hz = 40e6;
    double uav_tx_dbm = 33.0;
    double uav_carrier_ghz = 2.4;
    double sat_bw_hz = 250e6;
    double sat_tx_dbm = 50.0;  // EIRP-equivalent
    double sat_carrier_ghz = 20.0;
    double sat_link_gain_db = 62.0;  // combined beam + terminal gains
    double backhaul_bw_hz = 80e6;
    double backhaul_tx_dbm = 35.0;
    double backhaul_carrier_ghz = 11.0;
    double backhaul_link_gain_db = 38.0;
    double noise_figure_db = 7.0;
    double sched_efficiency = 0.25;    // multi-user MAC efficiency
    double max_spectral_eff = 7.8;     // bit/s/Hz clamp
    double queueing_kbits = 1000.0;    // M/M/1 constant K (1 Mb default)
    double saturation_ms = 250.0;      // latency sentinel at/over capacity
    double isl_hop_ms = 4.0;
    double isl_capacity_gbps = 10.0;
    double fiber_km_per_ms = 200.0;
    double min_elevation_deg = 10.0;
    // mean serving distances (km) used in the per-site budget, by zone class
    double macro_dist_km[3] = {1.2, 1.6, 2.6};
    double small_dist_km[3] = {0.18, 0.22, 0.30};
    double uav_dist_km = 3.0;
};

struct RlParamsSpec {
    double discount = 0.99;
    double actor_step = 0.01;
    double critic_step = 0.05;
    double sla_penalty = 10.0;        // lambda
    double reward_scale = 100.0;      // divides g/GB before the penalty term
    double explore_start = 0.2;
    double explore_end = 0.01;
    int train_episodes = 200;
};

struct OrchestrationSpec {
    int beam_width = 8;
    int plan_horizon_hours = 24;
    int twin_plan_tick_minutes = 10;  // coarse tick used while scoring candidates
    RlParamsSpec rl;
};

/// Full experiment description; immutable after construction.
struct ScenarioSpec {
    int days = 7;
    int epoch_minutes = 1;
    int decision_interval_hours = 1;
    std::uint64_t seed = 1;
    ConstellationSpec constellation;
    RanSpec ran;
    UavSpec uavs;
    std::vector<ZoneSpec> zones;
    std::vector<GatewaySiteSpec> gateways;
    std::vector<SwapPadSpec> swap_pads;
    TrafficProfileSpec traffic;
    std::vector<RainEventSpec> rain_events;
    CarbonSourceSpec carbon_source;
    std::map<std::string, PowerProfile> power_catalog;
    SlaSpec sla;
    LinkParamsSpec link;
    OrchestrationSpec orchestration;

    int ticks_per_hour() const { return 60 / epoch_minutes; }
    int horizon_hours() const { return days * 24; }
    int horizon_ticks() const { return horizon_hours() * ticks_per_hour(); }
    std::vector<std::string> region_names() const;

    bool operator==(const ScenarioSpec&) const = default;
};

/// The evaluation scenario: 72-sat constellation, 180 RAN sites, 24 UAVs,
/// 8 gateways, 7 days, hourly decisions, two rain events, power catalog at
/// the midpoints of the published ranges.
ScenarioSpec default_paper_scenario();

/// Load and validate a scenario JSON file. Unknown keys are rejected.
ScenarioSpec load_scenario(const std::string& path);

/// Parse from a JSON string (same schema as load_scenario).
ScenarioSpec parse_scenario(const std::string& json_text);

/// Serialize to the documented JSON schema (round-trips through load).
std::string serialize_scenario(const ScenarioSpec& spec);

/// All invariant violations, each naming the offending field; empty = valid.
std::vector<std::string> validate(const ScenarioSpec& spec);

}  // namespace isatn
