#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "isatn/engine.hpp"
#include "isatn/plan.hpp"
#include "isatn/rng.hpp"
#include "isatn/twin.hpp"

namespace isatn {

enum class PolicyKind { static_cfg, qos_only, energy_only, mpc_rl, mpc_only };
const char* to_string(PolicyKind p);
PolicyKind policy_from_string(const std::string& name);  // throws ConfigError

// ---------------------------------------------------------------------------
// Discrete knob lattice

inline constexpr std::array<int, 4> kUavLevels{0, 25, 50, 100};
inline constexpr std::array<int, 3> kSleepLevels{0, 30, 60};

enum class GatewayMode { nearest, cleanest, balanced, capacity };
enum class EdgeMode { nearest, cleanest, spread };

struct KnobSetting {
    GatewayMode gw_mode = GatewayMode::nearest;
    int uav_level = 0;    // percent of fleet airborne
    int sleep_level = 0;  // percent of small cells in deep sleep
    EdgeMode edge_mode = EdgeMode::nearest;
};

/// Context a candidate builder sees for one hour. `intensity` is null for
/// carbon-blind policies, which structurally cannot read the grid signal.
struct CandidateContext {
    std::vector<double> zone_load_bps;      // forecast total load per zone
    const std::vector<double>* intensity;   // per region, or nullptr (blind)
    std::vector<UavMode> uav_modes;         // current fleet modes (continuity)
};

CandidateContext make_candidate_context(const World& world, const EpochState& state,
                                        const std::vector<double>& hour_traffic_bits,
                                        const std::vector<double>* intensity);

/// Deterministic HourConfig from one lattice point.
HourConfig build_candidate(const World& world, const CandidateContext& ctx, KnobSetting knobs);

/// The lattice a policy is allowed to search.
std::vector<KnobSetting> candidate_lattice(bool carbon_aware);

// ---------------------------------------------------------------------------
// Day-ahead MPC

struct MpcOptions {
    int beam_width = 8;
    int tick_minutes = 10;  // twin resolution while scoring
    int horizon_hours = 24;
};

/// Hour-by-hour beam search over the knob lattice, scored by the twin's
/// predicted emissions under hard QoS feasibility. Deterministic.
DayPlan plan_day_ahead_mpc(const World& world, const EpochState& start, const Forecast& forecast,
                           int beam_width, const MpcOptions& options);

// ---------------------------------------------------------------------------
// Baselines

struct BaselineWeather {
    double ka_atten_db = 0.0;     // attenuation measured at decision time
    double micro_atten_db = 0.0;
};

/// Fixed configuration: nearest gateways, everything awake, half the UAV
/// fleet on a rotating schedule, pinned satellite beams for rural zones.
HourConfig static_config(const World& world, int hour_of_run);

/// Hourly greedy baselines over the carbon-blind lattice. qos_only maximizes
/// predicted served fraction then minimizes p95; energy_only minimizes
/// predicted kWh subject to QoS feasibility.
HourConfig baseline_decide(PolicyKind kind, const World& world, const EpochState& state,
                           const std::vector<double>& hour_traffic_bits, int hour_of_run,
                           const BaselineWeather& weather, int tick_minutes);

// ---------------------------------------------------------------------------
// Actor-critic RL (linear function class over a fixed feature vector)

struct RlObservation {
    int minute_of_day = 0;
    std::vector<double> zone_load_dev;      // per zone, clamped to [-1, 1]
    std::vector<double> region_intensity;   // current gCO2/kWh per region
    bool rain_active = false;
    double uav_ready_fraction = 0.0;
    double worst_p95_ms = 0.0;
};

struct RlAgent {
    int feature_dim = 0;
    std::vector<std::string> feature_names;
    std::array<std::vector<double>, kActionKindCount> actor;  // [action][feature]
    std::vector<double> critic;
    RlParamsSpec params;
    RngStream rng{0, "rl"};

    double value(const std::vector<double>& features) const;
    std::array<double, kActionKindCount> policy(const std::vector<double>& features) const;
};

RlAgent make_rl_agent(const World& world, const RlParamsSpec& params, std::uint64_t seed);
RlAgent make_random_rl_agent(const World& world, const RlParamsSpec& params, std::uint64_t seed,
                             double weight_scale = 0.5);

/// Fixed-order feature vector; every entry in [-1, 1].
std::vector<double> rl_features(const World& world, const RlObservation& obs);
std::vector<std::string> rl_feature_names(const World& world);

/// Valid action kinds in the current state.
std::array<bool, kActionKindCount> action_mask(const World& world, const EpochState& state);

/// Deterministic parameter resolution for a chosen kind ("most useful
/// target" heuristics over the last tick's detail).
Action resolve_action(const World& world, const EpochState& state, const TickDetail& detail,
                      const ExoTick& exo, ActionKind kind);

/// Masked-softmax action selection; with probability explore_rate a uniform
/// valid action. Deterministic given weights, features, and stream position.
ActionKind rl_select(RlAgent& agent, const std::vector<double>& features,
                     const std::array<bool, kActionKindCount>& mask, double explore_rate);

Action rl_act(RlAgent& agent, const World& world, const EpochState& state,
              const TickDetail& detail, const ExoTick& exo, const std::vector<double>& features,
              double explore_rate);

/// One-step actor-critic update (TD(0) critic, softmax policy gradient).
void rl_update(RlAgent& agent, const std::vector<double>& features, ActionKind action,
               double reward, const std::vector<double>& next_features);

/// Reward for one tick: -(g/GB) - lambda * violations, rescaled by
/// reward_scale to keep the linear learner in a stable range.
double tick_reward(const KpiTick& kpi, const RlParamsSpec& params);

/// Policy file I/O (bit-exact round trip).
void save_policy_file(const RlAgent& agent, const std::string& path);
RlAgent load_policy_file(const std::string& path);

}  // namespace isatn
