#include "isatn/environment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "isatn/errors.hpp"
#include "isatn/rng.hpp"

namespace isatn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBitsPerGb = 8e9;

bool is_work_hour(int hour_of_day) { return hour_of_day >= 8 && hour_of_day < 18; }

double class_zone_weight(const TrafficProfileSpec& t, ZoneClass zc, TrafficClass cls,
                         int hour_of_day) {
    switch (cls) {
        case TrafficClass::embb: {
            // Commuter flows shift eMBB mass into urban zones in work hours.
            const double swing = is_work_hour(hour_of_day) ? t.commuter_swing : 0.0;
            if (zc == ZoneClass::urban) return t.urban_embb_weight * (1.0 + swing);
            if (zc == ZoneClass::suburban) {
                return std::max(0.05, t.suburban_embb_weight * (1.0 - swing));
            }
            return t.rural_embb_weight;
        }
        case TrafficClass::urllc:
            // Industrial and emergency services: suburban-industrial weighted.
            if (zc == ZoneClass::urban) return 1.0;
            if (zc == ZoneClass::suburban) return 2.0;
            return 0.3;
        case TrafficClass::miot:
            // Rural sensing dominates.
            if (zc == ZoneClass::urban) return 0.5;
            if (zc == ZoneClass::suburban) return 0.8;
            return 3.0;
    }
    return 0.0;
}

double diurnal_factor(const TrafficProfileSpec& t, TrafficClass cls, int hour_of_day) {
    if (cls == TrafficClass::embb) {
        return 1.0 + t.embb_diurnal_amplitude *
                         std::cos(2.0 * kPi * (hour_of_day - t.embb_peak_hour) / 24.0);
    }
    if (cls == TrafficClass::miot) {
        // Mild daytime tilt for the non-burst floor.
        return 1.0 + 0.10 * std::cos(2.0 * kPi * (hour_of_day - 14.0) / 24.0);
    }
    return 1.0;  // URLLC is near-constant
}

double weekly_gb(const TrafficProfileSpec& t, TrafficClass cls) {
    switch (cls) {
        case TrafficClass::embb: return t.embb_weekly_gb;
        case TrafficClass::urllc: return t.urllc_weekly_gb;
        case TrafficClass::miot: return t.miot_weekly_gb;
    }
    return 0.0;
}

// Share of mIoT volume delivered as bursts rather than floor load.
constexpr double kMiotBurstShare = 0.6;

struct Burst {
    int start_min;  // minute within the hour
    int dur_min;
    double bits;
};

double miot_burst_rate(const TrafficProfileSpec& t, ZoneClass zc) {
    return zc == ZoneClass::rural ? t.miot_burst_rate_rural_per_h : t.miot_burst_rate_other_per_h;
}

std::vector<Burst> miot_bursts(const ScenarioSpec& spec, const Zone& zone, int hour_of_run,
                               double zone_hourly_bits) {
    const double rate = miot_burst_rate(spec.traffic, zone.cls);
    if (rate <= 0.0 || zone_hourly_bits <= 0.0) return {};
    RngStream rng(spec.seed, "miot_bursts", static_cast<std::uint64_t>(hour_of_run),
                  static_cast<std::uint64_t>(zone.id));
    const int n = rng.poisson(rate);
    std::vector<Burst> out;
    const double per_burst = kMiotBurstShare * zone_hourly_bits / rate;
    for (int i = 0; i < n; ++i) {
        Burst b;
        b.dur_min = 10 + static_cast<int>(rng.next_below(11));  // 10-20 min
        b.start_min = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(
            std::max(1, 60 - b.dur_min))));
        b.bits = per_burst * rng.uniform(0.6, 1.4);
        out.push_back(b);
    }
    return out;
}

double day_noise(const ScenarioSpec& spec, const Zone& zone, TrafficClass cls, int day) {
    const double u =
        hash_unit(spec.seed, "day_noise", static_cast<std::uint64_t>(day),
                  static_cast<std::uint64_t>(zone.id), static_cast<std::uint64_t>(cls));
    // Uniform with mean 1 and standard deviation day_noise_sigma.
    return 1.0 + spec.traffic.day_noise_sigma * (2.0 * u - 1.0) * std::sqrt(3.0);
}

double tick_noise(const ScenarioSpec& spec, const Zone& zone, TrafficClass cls,
                  std::int64_t epoch) {
    const double u = hash_unit(spec.seed, "tick_noise", static_cast<std::uint64_t>(epoch),
                               static_cast<std::uint64_t>(zone.id),
                               static_cast<std::uint64_t>(cls));
    return 1.0 + spec.traffic.tick_noise_amp * (2.0 * u - 1.0);
}

bool surge_active(const ScenarioSpec& spec, double t_hours) {
    if (!spec.traffic.surge_with_second_event || spec.rain_events.size() < 2) return false;
    const auto& e = spec.rain_events[1];
    return t_hours >= e.start_hour && t_hours < e.end_hour;
}

void append_double(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

}  // namespace

double expected_hourly_bits(const ScenarioSpec& spec, const std::vector<Zone>& zones, int zone,
                            TrafficClass cls, int hour_of_run) {
    const int hod = hour_of_run % 24;
    const auto& t = spec.traffic;
    double wsum = 0.0;
    for (const auto& z : zones) wsum += class_zone_weight(t, z.cls, cls, hod);
    if (wsum <= 0.0) return 0.0;
    const double w = class_zone_weight(t, zones[static_cast<std::size_t>(zone)].cls, cls, hod);
    const double network_hourly =
        weekly_gb(t, cls) * kBitsPerGb / 168.0 * diurnal_factor(t, cls, hod);
    return network_hourly * (w / wsum);
}

std::vector<TrafficDemand> generate_traffic(const ScenarioSpec& spec,
                                            const std::vector<Zone>& zones, std::int64_t epoch) {
    const int ticks_per_hour = spec.ticks_per_hour();
    const int hour_of_run = static_cast<int>(epoch / ticks_per_hour);
    const int day = hour_of_run / 24;
    const int min_in_hour = static_cast<int>(epoch % ticks_per_hour) * spec.epoch_minutes;
    const double t_hours = static_cast<double>(epoch) * spec.epoch_minutes / 60.0;
    const bool surge = surge_active(spec, t_hours);

    std::vector<TrafficDemand> out;
    out.reserve(zones.size() * kTrafficClassCount);
    for (const auto& z : zones) {
        for (int ci = 0; ci < kTrafficClassCount; ++ci) {
            const auto cls = static_cast<TrafficClass>(ci);
            double hourly = expected_hourly_bits(spec, zones, z.id, cls, hour_of_run) *
                            day_noise(spec, z, cls, day);
            if (surge && cls == TrafficClass::embb && z.cls == ZoneClass::urban) {
                hourly *= spec.traffic.surge_multiplier;
            }

            TrafficDemand d;
            d.epoch = epoch;
            d.zone = z.id;
            d.cls = cls;
            if (cls == TrafficClass::urllc) {
                d.latency_target_ms = spec.sla.urllc_latency_ms;
                d.offered_bits = hourly / ticks_per_hour;
            } else if (cls == TrafficClass::embb) {
                d.offered_bits = hourly / ticks_per_hour * tick_noise(spec, z, cls, epoch);
            } else {
                double bits = (1.0 - kMiotBurstShare) * hourly / ticks_per_hour;
                for (const Burst& b : miot_bursts(spec, z, hour_of_run, hourly)) {
                    const int tick_start = min_in_hour;
                    const int tick_end = min_in_hour + spec.epoch_minutes;
                    const int overlap = std::max(
                        0, std::min(tick_end, b.start_min + b.dur_min) - std::max(tick_start,
                                                                                  b.start_min));
                    if (overlap > 0) bits += b.bits * overlap / b.dur_min;
                }
                d.offered_bits = bits;
            }
            d.offered_bits = std::max(0.0, d.offered_bits);
            out.push_back(d);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Carbon traces

int CarbonTrace::region_index(const std::string& name) const {
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (regions[i] == name) return static_cast<int>(i);
    }
    return -1;
}

const CarbonTracePoint& CarbonTrace::at(int hour, int region) const {
    return points[static_cast<std::size_t>(hour) * regions.size() +
                  static_cast<std::size_t>(region)];
}

CarbonTrace parse_carbon_trace(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("carbon trace: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "hour,region,intensity_gco2_per_kwh,renewable_fraction") {
        throw ParseError("carbon trace: unexpected header '" + line + "'");
    }

    struct Row {
        int hour;
        std::string region;
        double intensity;
        double renewable;
    };
    std::vector<Row> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string f0, f1, f2, f3;
        if (!std::getline(ls, f0, ',') || !std::getline(ls, f1, ',') ||
            !std::getline(ls, f2, ',') || !std::getline(ls, f3, ',')) {
            throw ParseError("carbon trace line " + std::to_string(lineno) + ": expected 4 fields");
        }
        Row r;
        try {
            r.hour = std::stoi(f0);
            r.region = f1;
            r.intensity = std::stod(f2);
            r.renewable = std::stod(f3);
        } catch (const std::exception&) {
            throw ParseError("carbon trace line " + std::to_string(lineno) + ": bad number");
        }
        if (r.renewable < 0.0 || r.renewable > 1.0) {
            throw RangeError("carbon trace line " + std::to_string(lineno) +
                             ": renewable_fraction " + f3 + " outside [0,1]");
        }
        if (r.intensity < 0.0) {
            throw RangeError("carbon trace line " + std::to_string(lineno) +
                             ": intensity must be >= 0");
        }
        if (r.hour < 0) {
            throw ParseError("carbon trace line " + std::to_string(lineno) + ": negative hour");
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ParseError("carbon trace: no data rows");

    CarbonTrace trace;
    int max_hour = 0;
    for (const auto& r : rows) {
        if (trace.region_index(r.region) < 0) trace.regions.push_back(r.region);
        max_hour = std::max(max_hour, r.hour);
    }
    std::sort(trace.regions.begin(), trace.regions.end());
    trace.hours = max_hour + 1;
    const std::size_t nreg = trace.regions.size();
    trace.points.assign(static_cast<std::size_t>(trace.hours) * nreg, CarbonTracePoint{-1, "", 0, 0});
    for (const auto& r : rows) {
        const int ri = trace.region_index(r.region);
        auto& p = trace.points[static_cast<std::size_t>(r.hour) * nreg +
                               static_cast<std::size_t>(ri)];
        if (p.hour >= 0) {
            throw ParseError("carbon trace: duplicate point hour " + std::to_string(r.hour) +
                             " region " + r.region);
        }
        p = {r.hour, r.region, r.intensity, r.renewable};
    }
    for (int h = 0; h < trace.hours; ++h) {
        for (std::size_t ri = 0; ri < nreg; ++ri) {
            if (trace.points[static_cast<std::size_t>(h) * nreg + ri].hour < 0) {
                throw GapError("missing hour " + std::to_string(h) + " for region " +
                               trace.regions[ri]);
            }
        }
    }
    return trace;
}

CarbonTrace load_carbon_trace(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open carbon trace '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_carbon_trace(buf.str());
}

std::string serialize_carbon_trace(const CarbonTrace& trace) {
    std::string out = "hour,region,intensity_gco2_per_kwh,renewable_fraction\n";
    for (int h = 0; h < trace.hours; ++h) {
        for (std::size_t ri = 0; ri < trace.regions.size(); ++ri) {
            const auto& p = trace.at(h, static_cast<int>(ri));
            out += std::to_string(p.hour);
            out += ',';
            out += p.region;
            out += ',';
            append_double(out, p.intensity_gco2_per_kwh);
            out += ',';
            append_double(out, p.renewable_fraction);
            out += '\n';
        }
    }
    return out;
}

namespace {

double synth_renewable(const std::string& profile, int hour_of_day, double noise) {
    if (profile == "coastal") {
        // Solar-driven midday peak ~0.63, hydro/wind floor overnight.
        const double x = (hour_of_day - 12.5) / 6.5;
        const double solar = std::abs(x) < 1.0 ? std::pow(std::cos(x * kPi / 2.0), 1.5) : 0.0;
        return std::clamp(0.30 + 0.33 * solar + noise, 0.0, 1.0);
    }
    // inland: modest evening wind peak ~0.28 over a low thermal floor.
    const double e = std::exp(-std::pow((hour_of_day - 19.5) / 2.2, 2.0));
    return std::clamp(0.07 + 0.21 * e + noise, 0.0, 1.0);
}

}  // namespace

CarbonTrace synth_carbon_trace(const CarbonSourceSpec& source, int days, std::uint64_t seed) {
    if (days < 1) throw InvalidParameter("synth_carbon_trace: days must be >= 1");
    CarbonTrace trace;
    for (const auto& r : source.regions) trace.regions.push_back(r.name);
    std::sort(trace.regions.begin(), trace.regions.end());
    trace.hours = days * 24;
    trace.points.reserve(static_cast<std::size_t>(trace.hours) * trace.regions.size());
    for (int h = 0; h < trace.hours; ++h) {
        for (const auto& name : trace.regions) {
            std::string profile;
            for (const auto& r : source.regions) {
                if (r.name == name) profile = r.profile;
            }
            const double u = hash_unit(seed, "carbon_noise", static_cast<std::uint64_t>(h),
                                       detail::fnv1a(name));
            const double noise = 0.015 * (2.0 * u - 1.0);
            CarbonTracePoint p;
            p.hour = h;
            p.region = name;
            p.renewable_fraction = synth_renewable(profile, h % 24, noise);
            p.intensity_gco2_per_kwh =
                source.base_intensity * (1.0 - p.renewable_fraction) + source.floor_intensity;
            trace.points.push_back(p);
        }
    }
    return trace;
}

CarbonTrace resolve_carbon_trace(const ScenarioSpec& spec) {
    if (spec.carbon_source.kind == "file") return load_carbon_trace(spec.carbon_source.path);
    return synth_carbon_trace(spec.carbon_source, spec.days, spec.seed);
}

namespace {

int trace_hour_or_throw(const CarbonTrace& trace, int region, double t_hours) {
    if (region < 0 || region >= static_cast<int>(trace.regions.size())) {
        throw OutOfRange("carbon trace: unknown region index " + std::to_string(region));
    }
    if (t_hours < 0.0 || t_hours >= static_cast<double>(trace.hours)) {
        throw OutOfRange("carbon trace: t=" + std::to_string(t_hours) + "h beyond horizon " +
                         std::to_string(trace.hours) + "h");
    }
    return static_cast<int>(t_hours);
}

}  // namespace

double carbon_intensity_at(const CarbonTrace& trace, int region, double t_hours) {
    return trace.at(trace_hour_or_throw(trace, region, t_hours), region).intensity_gco2_per_kwh;
}

double renewable_share_at(const CarbonTrace& trace, int region, double t_hours) {
    return trace.at(trace_hour_or_throw(trace, region, t_hours), region).renewable_fraction;
}

double rain_attenuation_db(const std::vector<RainEventSpec>& events, Band band, double t_hours) {
    double total = 0.0;
    for (const auto& e : events) {
        if (t_hours < e.start_hour || t_hours >= e.end_hour) continue;
        for (Band b : e.affected_bands) {
            if (b == band) {
                total += e.attenuation_db;
                break;
            }
        }
    }
    return total;
}

}  // namespace isatn
