#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isatn/scenario.hpp"
#include "isatn/topology.hpp"

namespace isatn {

struct TrafficDemand {
    std::int64_t epoch = 0;  // tick index
    int zone = 0;
    TrafficClass cls = TrafficClass::embb;
    double offered_bits = 0.0;
    std::optional<double> latency_target_ms;  // set for URLLC
};

struct CarbonTracePoint {
    int hour = 0;  // hours since trace start
    std::string region;
    double intensity_gco2_per_kwh = 0.0;
    double renewable_fraction = 0.0;
};

/// Indexed trace: one point per (hour, region), hours contiguous from 0.
struct CarbonTrace {
    std::vector<std::string> regions;
    std::vector<CarbonTracePoint> points;  // row-major: hour * regions + region
    int hours = 0;

    int region_index(const std::string& name) const;
    const CarbonTracePoint& at(int hour, int region) const;
};

/// Expected (noise-free) hourly offered bits for one (zone, class, hour).
/// This is the generator's mean and doubles as the day-0 forecast warm start.
double expected_hourly_bits(const ScenarioSpec& spec, const std::vector<Zone>& zones, int zone,
                            TrafficClass cls, int hour_of_run);

/// Realized per-tick demand for every (zone, class); deterministic in
/// (spec, epoch, spec.seed).
std::vector<TrafficDemand> generate_traffic(const ScenarioSpec& spec,
                                            const std::vector<Zone>& zones, std::int64_t epoch);

/// Load a carbon trace CSV: header `hour,region,intensity_gco2_per_kwh,
/// renewable_fraction`, hours contiguous from 0 for every region.
CarbonTrace load_carbon_trace(const std::string& path);
CarbonTrace parse_carbon_trace(const std::string& csv_text);
std::string serialize_carbon_trace(const CarbonTrace& trace);

/// Synthesize a trace from the scenario's region profiles.
/// Coastal: midday solar peak in [0.45, 0.65]; inland: evening peak in
/// [0.20, 0.35]; intensity = base * (1 - renewable) + floor.
CarbonTrace synth_carbon_trace(const CarbonSourceSpec& source, int days, std::uint64_t seed);

/// Resolve the scenario's carbon source (load or synthesize).
CarbonTrace resolve_carbon_trace(const ScenarioSpec& spec);

/// Piecewise-constant hold over each hour; OutOfRange beyond the horizon.
double carbon_intensity_at(const CarbonTrace& trace, int region, double t_hours);
double renewable_share_at(const CarbonTrace& trace, int region, double t_hours);

/// Sum of active events' attenuation affecting the band at time t (hours).
double rain_attenuation_db(const std::vector<RainEventSpec>& events, Band band, double t_hours);

}  // namespace isatn
