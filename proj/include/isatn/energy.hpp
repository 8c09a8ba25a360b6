#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "isatn/environment.hpp"
#include "isatn/scenario.hpp"
#include "isatn/topology.hpp"

namespace isatn {

enum class EnergyLayer { ran = 0, satellite = 1, uav = 2, edge = 3 };
constexpr int kEnergyLayerCount = 4;
const char* to_string(EnergyLayer l);

/// Kahan-compensated accumulator; keeps long emission sums exact enough for
/// the strict scale-invariance checks.
struct KahanSum {
    double value = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double y = x - comp;
        const double t = value + y;
        comp = (t - value) - y;
        value = t;
    }
};

/// Per-epoch (and cumulative) energy/emissions bookkeeping.
struct EnergyLedger {
    std::int64_t epoch = 0;
    std::array<double, kEnergyLayerCount> layer_kwh{};
    std::vector<double> region_kwh;  // indexed by region
    double total_kwh = 0.0;          // accumulated independently of the splits
    KahanSum renewable_kwh;
    KahanSum emissions_g;
    double bits_delivered = 0.0;

    explicit EnergyLedger(std::size_t regions = 0) : region_kwh(regions, 0.0) {}

    /// Record one element's energy in both the layer and region splits.
    void add(EnergyLayer layer, int region, double kwh) {
        layer_kwh[static_cast<std::size_t>(layer)] += kwh;
        region_kwh[static_cast<std::size_t>(region)] += kwh;
        total_kwh += kwh;
    }

    double layer_sum() const;
    double region_sum() const;

    /// Merge another ledger (same region arity) into this one.
    void merge(const EnergyLedger& other);
};

/// Power draw for a RAN/edge/gateway/satellite-share element in a sleep mode.
/// Load contributes only in the active mode. UAV profiles reject sleep modes.
double element_power_w(const PowerProfile& profile, SleepMode mode, double load_bps = 0.0);

/// Power draw for a UAV in a flight mode; non-UAV profiles reject UAV modes.
double element_power_w(const PowerProfile& profile, UavMode mode);

/// Emissions and renewable energy for one tick's regional energy use:
/// emissions = sum_r kwh[r] * intensity(r, t),
/// renewable = sum_r kwh[r] * share(r, t).
struct EmissionsResult {
    double emissions_g = 0.0;
    double renewable_kwh = 0.0;
};
EmissionsResult step_emissions(const std::vector<double>& region_kwh, const CarbonTrace& trace,
                               double t_hours);

/// Sustainability metric; emissions per delivered gigabyte.
double gco2_per_gb(double emissions_g, double bits_delivered);

/// Energy-weighted renewable share over a run.
double renewable_utilization(const std::vector<EnergyLedger>& ledgers);
double renewable_utilization(double renewable_kwh, double total_kwh);

}  // namespace isatn
