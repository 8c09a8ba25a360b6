#pragma once

#include <cstdint>
#include <vector>

#include "isatn/engine.hpp"
#include "isatn/plan.hpp"

namespace isatn {

/// Hourly day-ahead inputs: traffic per (zone, class) and grid signals per
/// region, aligned so entry h covers run hour start_hour + h.
struct Forecast {
    int start_hour = 0;
    int horizon_hours = 0;
    std::vector<std::vector<double>> traffic_bits;  // [h][zone * 3 + class]
    std::vector<std::vector<double>> intensity;     // [h][region]
    std::vector<std::vector<double>> renewable;     // [h][region]
};

/// Realized hourly history rows appended by the runner as hours complete.
struct HourlyHistory {
    std::vector<std::vector<double>> traffic_bits;  // [hour][zone * 3 + class]
};

/// Seasonal-naive forecast of the next horizon_hours, blended with an EWMA
/// of day-over-day residuals (blend weight 0.3). Needs >= 24 h of history.
std::vector<std::vector<double>> forecast_traffic(const HourlyHistory& history,
                                                  int horizon_hours);

/// Day-ahead persistence of the grid signals: hour h of tomorrow = hour h of
/// the most recent day. Needs >= 24 h of trace history.
struct CarbonForecast {
    std::vector<std::vector<double>> intensity;
    std::vector<std::vector<double>> renewable;
};
CarbonForecast forecast_carbon(const CarbonTrace& trace, int history_hours, int horizon_hours);

enum class TwinRainMode {
    scheduled,  // the DT weather service knows the event schedule
    persist,    // hold current measured attenuation (reactive baselines)
    clear,
};

struct TwinOptions {
    int tick_minutes = 1;
    TwinRainMode rain = TwinRainMode::scheduled;
    double persist_ka_db = 0.0;
    double persist_micro_db = 0.0;
    bool use_carbon = true;  // false: carbon-blind evaluation (emissions = 0)
};

/// Evaluate a candidate plan on the twin: same step function as the engine,
/// forecast inputs instead of realized ones. Pure (start state copied).
ScenarioResult evaluate_plan(const World& world, const EpochState& start, const DayPlan& plan,
                             const Forecast& forecast, const TwinOptions& options = {},
                             std::vector<KpiTick>* kpis_out = nullptr);

/// Same evaluation against recorded exogenous ticks (fidelity path).
ScenarioResult evaluate_plan_recorded(const World& world, const EpochState& start,
                                      const DayPlan& plan, const std::vector<ExoTick>& ticks,
                                      int tick_minutes, std::vector<KpiTick>* kpis_out = nullptr);

/// One-hour twin evaluation used incrementally by the planners; advances
/// the state in place and reports the hour's aggregates.
struct HourEval {
    double emissions_g = 0.0;
    double kwh = 0.0;
    std::array<double, 4> layer_kwh{};
    double bits_offered = 0.0;
    double bits_served = 0.0;
    std::array<double, 3> served_fraction{};
    std::array<double, 3> p95_ms{};
    int sla_violations = 0;
    bool feasible = false;
    double served_total_fraction = 0.0;
};

HourEval twin_eval_hour(const World& world, EpochState& state, const HourConfig& config,
                        int hour_of_run, const Forecast& forecast, const TwinOptions& options);

/// Fill one twin tick from forecast inputs (flat within the hour).
void twin_exo_tick(const World& world, const Forecast& forecast, const TwinOptions& options,
                   std::int64_t t_min, int dt_min, ExoTick& out);

}  // namespace isatn
