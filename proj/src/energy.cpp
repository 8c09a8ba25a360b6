#include "isatn/energy.hpp"

#include <cmath>

#include "isatn/errors.hpp"

namespace isatn {

const char* to_string(EnergyLayer l) {
    switch (l) {
        case EnergyLayer::ran: return "ran";
        case EnergyLayer::satellite: return "satellite";
        case EnergyLayer::uav: return "uav";
        case EnergyLayer::edge: return "edge";
    }
    return "?";
}

double EnergyLedger::layer_sum() const {
    double s = 0.0;
    for (double v : layer_kwh) s += v;
    return s;
}

double EnergyLedger::region_sum() const {
    double s = 0.0;
    for (double v : region_kwh) s += v;
    return s;
}

void EnergyLedger::merge(const EnergyLedger& other) {
    for (int i = 0; i < kEnergyLayerCount; ++i) layer_kwh[i] += other.layer_kwh[i];
    if (region_kwh.size() < other.region_kwh.size()) {
        region_kwh.resize(other.region_kwh.size(), 0.0);
    }
    for (std::size_t i = 0; i < other.region_kwh.size(); ++i) {
        region_kwh[i] += other.region_kwh[i];
    }
    total_kwh += other.total_kwh;
    renewable_kwh.add(other.renewable_kwh.value);
    emissions_g.add(other.emissions_g.value);
    bits_delivered += other.bits_delivered;
}

double element_power_w(const PowerProfile& profile, SleepMode mode, double load_bps) {
    if (profile.kind == ElementKind::uav) {
        throw InvalidMode("sleep modes do not apply to UAV profiles");
    }
    switch (mode) {
        case SleepMode::active:
            return profile.active_w + profile.load_slope_w_per_bps * std::max(0.0, load_bps);
        case SleepMode::micro_sleep: return profile.micro_sleep_w;
        case SleepMode::deep_sleep: return profile.deep_sleep_w;
        case SleepMode::off: return profile.off_w;
    }
    throw InvalidMode("unknown sleep mode");
}

double element_power_w(const PowerProfile& profile, UavMode mode) {
    if (profile.kind != ElementKind::uav) {
        throw InvalidMode(std::string("UAV modes do not apply to ") + to_string(profile.kind));
    }
    switch (mode) {
        case UavMode::grounded: return 0.0;
        case UavMode::standby: return profile.uav_standby_w;
        case UavMode::cruise: return profile.uav_cruise_w;
        case UavMode::hover: return profile.uav_hover_w;
    }
    throw InvalidMode("unknown UAV mode");
}

EmissionsResult step_emissions(const std::vector<double>& region_kwh, const CarbonTrace& trace,
                               double t_hours) {
    EmissionsResult r;
    for (std::size_t i = 0; i < region_kwh.size(); ++i) {
        if (region_kwh[i] == 0.0) continue;
        const int region = static_cast<int>(i);
        r.emissions_g += region_kwh[i] * carbon_intensity_at(trace, region, t_hours);
        r.renewable_kwh += region_kwh[i] * renewable_share_at(trace, region, t_hours);
    }
    return r;
}

double gco2_per_gb(double emissions_g, double bits_delivered) {
    if (bits_delivered <= 0.0) {
        throw ZeroTraffic("gco2_per_gb undefined for zero delivered bits");
    }
    return emissions_g / (bits_delivered / 8e9);
}

double renewable_utilization(double renewable_kwh, double total_kwh) {
    if (total_kwh <= 0.0) throw EmptyRun("renewable_utilization over zero energy");
    return renewable_kwh / total_kwh;
}

double renewable_utilization(const std::vector<EnergyLedger>& ledgers) {
    if (ledgers.empty()) throw EmptyRun("renewable_utilization over empty run");
    double renew = 0.0;
    double total = 0.0;
    for (const auto& l : ledgers) {
        renew += l.renewable_kwh.value;
        total += l.total_kwh;
    }
    return renewable_utilization(renew, total);
}

}  // namespace isatn
