#include "isatn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isatn/errors.hpp"

namespace isatn {

using nlohmann::json;

const char* to_string(ZoneClass c) {
    switch (c) {
        case ZoneClass::urban: return "urban";
        case ZoneClass::suburban: return "suburban";
        case ZoneClass::rural: return "rural";
    }
    return "?";
}

const char* to_string(TrafficClass c) {
    switch (c) {
        case TrafficClass::embb: return "eMBB";
        case TrafficClass::urllc: return "URLLC";
        case TrafficClass::miot: return "mIoT";
    }
    return "?";
}

const char* to_string(Band b) {
    switch (b) {
        case Band::sub6: return "sub6";
        case Band::mmwave: return "mmWave";
        case Band::ka: return "ka";
        case Band::microwave_backhaul: return "microwave_backhaul";
        case Band::isl: return "isl";
    }
    return "?";
}

const char* to_string(ElementKind k) {
    switch (k) {
        case ElementKind::macro_cell: return "macro";
        case ElementKind::small_cell: return "small";
        case ElementKind::edge_server: return "edge_server";
        case ElementKind::uav: return "uav";
        case ElementKind::satellite_share: return "satellite_share";
        case ElementKind::gateway: return "gateway";
    }
    return "?";
}

namespace {

ZoneClass zone_class_from(const std::string& s) {
    if (s == "urban") return ZoneClass::urban;
    if (s == "suburban") return ZoneClass::suburban;
    if (s == "rural") return ZoneClass::rural;
    throw ParseError("unknown zone class '" + s + "'");
}

Band band_from(const std::string& s) {
    if (s == "sub6") return Band::sub6;
    if (s == "mmWave") return Band::mmwave;
    if (s == "ka") return Band::ka;
    if (s == "microwave_backhaul") return Band::microwave_backhaul;
    if (s == "isl") return Band::isl;
    throw ParseError("unknown band '" + s + "'");
}

ElementKind element_kind_from(const std::string& s) {
    if (s == "macro") return ElementKind::macro_cell;
    if (s == "small") return ElementKind::small_cell;
    if (s == "edge_server") return ElementKind::edge_server;
    if (s == "uav") return ElementKind::uav;
    if (s == "satellite_share") return ElementKind::satellite_share;
    if (s == "gateway") return ElementKind::gateway;
    throw ParseError("unknown element kind '" + s + "'");
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& ctx) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ParseError("unknown key '" + it.key() + "' in " + ctx);
        }
    }
}

PowerProfile make_profile(ElementKind kind, double active, double slope = 0.0) {
    PowerProfile p;
    p.kind = kind;
    p.active_w = active;
    p.micro_sleep_w = 0.30 * active;
    p.deep_sleep_w = 0.05 * active;
    p.off_w = 0.0;
    p.load_slope_w_per_bps = slope;
    return p;
}

}  // namespace

std::vector<std::string> ScenarioSpec::region_names() const {
    std::vector<std::string> out;
    for (const auto& r : carbon_source.regions) out.push_back(r.name);
    return out;
}

ScenarioSpec default_paper_scenario() {
    ScenarioSpec s;
    s.days = 7;
    s.epoch_minutes = 1;
    s.decision_interval_hours = 1;
    s.seed = 1;

    s.constellation = {6, 12, 0, 600.0, 53.0};
    s.ran = {60, 120};
    s.uavs = {24, 4.0, 15.0, 6};

    // Metropolitan plane ~200x200 km spanning a coastal and an inland grid
    // region. Urban mass sits inland; rural sensing zones sit coastal.
    auto zone = [](const char* id, ZoneClass c, const char* region, double x, double y,
                   int macros, int smalls) {
        return ZoneSpec{id, c, region, x, y, macros, smalls};
    };
    s.zones = {
        zone("u1", ZoneClass::urban, "inland", 150, 100, 8, 24),
        zone("u2", ZoneClass::urban, "inland", 160, 70, 8, 24),
        zone("u3", ZoneClass::urban, "inland", 155, 130, 8, 24),
        zone("u4", ZoneClass::urban, "coastal", 60, 100, 8, 24),
        zone("s1", ZoneClass::suburban, "inland", 120, 60, 5, 5),
        zone("s2", ZoneClass::suburban, "inland", 125, 140, 5, 5),
        zone("s3", ZoneClass::suburban, "coastal", 40, 70, 5, 5),
        zone("s4", ZoneClass::suburban, "coastal", 45, 130, 5, 5),
        zone("r1", ZoneClass::rural, "inland", 185, 100, 2, 1),
        zone("r2", ZoneClass::rural, "coastal", 20, 40, 2, 1),
        zone("r3", ZoneClass::rural, "coastal", 15, 100, 2, 1),
        zone("r4", ZoneClass::rural, "coastal", 25, 160, 2, 1),
    };

    s.gateways = {
        {"gw-c1", "coastal", 30, 60, 1.0, true},  {"gw-c2", "coastal", 35, 110, 1.0, true},
        {"gw-c3", "coastal", 50, 150, 1.0, true}, {"gw-c4", "coastal", 55, 40, 1.0, true},
        {"gw-i1", "inland", 140, 90, 2.0, true},  {"gw-i2", "inland", 150, 120, 2.0, true},
        {"gw-i3", "inland", 165, 60, 1.5, true},  {"gw-i4", "inland", 170, 140, 1.5, true},
    };

    s.swap_pads = {
        {"pad-c1", "coastal", 30, 80},  {"pad-c2", "coastal", 40, 140},
        {"pad-c3", "coastal", 25, 50},  {"pad-i1", "inland", 145, 95},
        {"pad-i2", "inland", 150, 130}, {"pad-i3", "inland", 130, 70},
    };

    // Rain: Day 3 evening (hours 66-70) and Day 6 afternoon (hours 132-136).
    s.rain_events = {
        {66.0, 70.0, {Band::ka, Band::microwave_backhaul}, 15.0},
        {132.0, 136.0, {Band::ka, Band::microwave_backhaul}, 15.0},
    };

    s.carbon_source.kind = "synth";
    s.carbon_source.regions = {{"coastal", "coastal"}, {"inland", "inland"}};

    // Midpoints of the published per-element ranges; sleep tiers at 30%/5%.
    PowerProfile macro = make_profile(ElementKind::macro_cell, 2200.0, 1.0e-5);
    PowerProfile small = make_profile(ElementKind::small_cell, 90.0, 2.0e-7);
    PowerProfile edge = make_profile(ElementKind::edge_server, 800.0, 8.0e-6);
    PowerProfile gateway = make_profile(ElementKind::gateway, 500.0);
    PowerProfile sat = make_profile(ElementKind::satellite_share, 3200.0);
    PowerProfile uav = make_profile(ElementKind::uav, 800.0);
    uav.uav_cruise_w = 400.0;
    uav.uav_hover_w = 800.0;
    uav.uav_standby_w = 15.0;
    s.power_catalog = {
        {"macro", macro}, {"small", small},          {"edge_server", edge},
        {"gateway", gateway}, {"satellite_share", sat}, {"uav", uav},
    };

    return s;
}

// ---------------------------------------------------------------------------
// JSON schema (see README): every struct maps to an object, unknown keys are
// rejected, enums serialize as strings.

namespace {

json to_json(const PowerProfile& p) {
    return json{{"kind", to_string(p.kind)},
                {"active_w", p.active_w},
                {"micro_sleep_w", p.micro_sleep_w},
                {"deep_sleep_w", p.deep_sleep_w},
                {"off_w", p.off_w},
                {"load_slope_w_per_bps", p.load_slope_w_per_bps},
                {"uav_cruise_w", p.uav_cruise_w},
                {"uav_hover_w", p.uav_hover_w},
                {"uav_standby_w", p.uav_standby_w}};
}

PowerProfile profile_from_json(const json& j, const std::string& ctx) {
    check_keys(j,
               {"kind", "active_w", "micro_sleep_w", "deep_sleep_w", "off_w",
                "load_slope_w_per_bps", "uav_cruise_w", "uav_hover_w", "uav_standby_w"},
               ctx);
    PowerProfile p;
    p.kind = element_kind_from(j.at("kind").get<std::string>());
    p.active_w = j.at("active_w").get<double>();
    p.micro_sleep_w = j.at("micro_sleep_w").get<double>();
    p.deep_sleep_w = j.at("deep_sleep_w").get<double>();
    p.off_w = j.value("off_w", 0.0);
    p.load_slope_w_per_bps = j.value("load_slope_w_per_bps", 0.0);
    p.uav_cruise_w = j.value("uav_cruise_w", 0.0);
    p.uav_hover_w = j.value("uav_hover_w", 0.0);
    p.uav_standby_w = j.value("uav_standby_w", 0.0);
    return p;
}

}  // namespace

std::string serialize_scenario(const ScenarioSpec& s) {
    json j;
    j["days"] = s.days;
    j["epoch_minutes"] = s.epoch_minutes;
    j["decision_interval_hours"] = s.decision_interval_hours;
    j["seed"] = s.seed;
    j["constellation"] = {{"planes", s.constellation.planes},
                          {"sats_per_plane", s.constellation.sats_per_plane},
                          {"total", s.constellation.total},
                          {"altitude_km", s.constellation.altitude_km},
                          {"inclination_deg", s.constellation.inclination_deg}};
    j["ran"] = {{"macro_count", s.ran.macro_count}, {"small_count", s.ran.small_count}};
    j["uavs"] = {{"count", s.uavs.count},
                 {"endurance_h", s.uavs.endurance_h},
                 {"coverage_km", s.uavs.coverage_km},
                 {"swap_pads", s.uavs.swap_pads}};
    j["zones"] = json::array();
    for (const auto& z : s.zones) {
        j["zones"].push_back({{"id", z.id},
                              {"class", to_string(z.cls)},
                              {"region", z.region},
                              {"x_km", z.x_km},
                              {"y_km", z.y_km},
                              {"macro_sites", z.macro_sites},
                              {"small_sites", z.small_sites}});
    }
    j["gateways"] = json::array();
    for (const auto& g : s.gateways) {
        j["gateways"].push_back({{"id", g.id},
                                 {"region", g.region},
                                 {"x_km", g.x_km},
                                 {"y_km", g.y_km},
                                 {"compute_capacity", g.compute_capacity},
                                 {"hosts_edge", g.hosts_edge}});
    }
    j["swap_pads"] = json::array();
    for (const auto& p : s.swap_pads) {
        j["swap_pads"].push_back(
            {{"id", p.id}, {"region", p.region}, {"x_km", p.x_km}, {"y_km", p.y_km}});
    }
    const auto& t = s.traffic;
    j["traffic"] = {{"embb_weekly_gb", t.embb_weekly_gb},
                    {"urllc_weekly_gb", t.urllc_weekly_gb},
                    {"miot_weekly_gb", t.miot_weekly_gb},
                    {"embb_peak_hour", t.embb_peak_hour},
                    {"embb_trough_hour", t.embb_trough_hour},
                    {"embb_diurnal_amplitude", t.embb_diurnal_amplitude},
                    {"urban_embb_weight", t.urban_embb_weight},
                    {"suburban_embb_weight", t.suburban_embb_weight},
                    {"rural_embb_weight", t.rural_embb_weight},
                    {"commuter_swing", t.commuter_swing},
                    {"miot_burst_rate_rural_per_h", t.miot_burst_rate_rural_per_h},
                    {"miot_burst_rate_other_per_h", t.miot_burst_rate_other_per_h},
                    {"day_noise_sigma", t.day_noise_sigma},
                    {"tick_noise_amp", t.tick_noise_amp},
                    {"surge_multiplier", t.surge_multiplier},
                    {"surge_with_second_event", t.surge_with_second_event}};
    j["rain_events"] = json::array();
    for (const auto& e : s.rain_events) {
        json bands = json::array();
        for (Band b : e.affected_bands) bands.push_back(to_string(b));
        j["rain_events"].push_back({{"start_hour", e.start_hour},
                                    {"end_hour", e.end_hour},
                                    {"affected_bands", bands},
                                    {"attenuation_db", e.attenuation_db}});
    }
    json regions = json::array();
    for (const auto& r : s.carbon_source.regions) {
        regions.push_back({{"name", r.name}, {"profile", r.profile}});
    }
    j["carbon_source"] = {{"kind", s.carbon_source.kind},
                          {"path", s.carbon_source.path},
                          {"regions", regions},
                          {"base_intensity", s.carbon_source.base_intensity},
                          {"floor_intensity", s.carbon_source.floor_intensity}};
    j["power_catalog"] = json::object();
    for (const auto& [name, prof] : s.power_catalog) j["power_catalog"][name] = to_json(prof);
    j["sla"] = {{"urllc_latency_ms", s.sla.urllc_latency_ms},
                {"embb_served_fraction", s.sla.embb_served_fraction},
                {"miot_served_fraction", s.sla.miot_served_fraction}};
    const auto& l = s.link;
    j["link"] = {{"macro_bw_hz", l.macro_bw_hz},
                 {"macro_tx_dbm", l.macro_tx_dbm},
                 {"macro_carrier_ghz", l.macro_carrier_ghz},
                 {"small_bw_hz", l.small_bw_hz},
                 {"small_tx_dbm", l.small_tx_dbm},
                 {"small_carrier_ghz", l.small_carrier_ghz},
                 {"uav_bw_hz", l.uav_bw_hz},
                 {"uav_tx_dbm", l.uav_tx_dbm},
                 {"uav_carrier_ghz", l.uav_carrier_ghz},
                 {"sat_bw_hz", l.sat_bw_hz},
                 {"sat_tx_dbm", l.sat_tx_dbm},
                 {"sat_carrier_ghz", l.sat_carrier_ghz},
                 {"sat_link_gain_db", l.sat_link_gain_db},
                 {"backhaul_bw_hz", l.backhaul_bw_hz},
                 {"backhaul_tx_dbm", l.backhaul_tx_dbm},
                 {"backhaul_carrier_ghz", l.backhaul_carrier_ghz},
                 {"backhaul_link_gain_db", l.backhaul_link_gain_db},
                 {"noise_figure_db", l.noise_figure_db},
                 {"sched_efficiency", l.sched_efficiency},
                 {"max_spectral_eff", l.max_spectral_eff},
                 {"queueing_kbits", l.queueing_kbits},
                 {"saturation_ms", l.saturation_ms},
                 {"isl_hop_ms", l.isl_hop_ms},
                 {"isl_capacity_gbps", l.isl_capacity_gbps},
                 {"fiber_km_per_ms", l.fiber_km_per_ms},
                 {"min_elevation_deg", l.min_elevation_deg},
                 {"macro_dist_km", {l.macro_dist_km[0], l.macro_dist_km[1], l.macro_dist_km[2]}},
                 {"small_dist_km", {l.small_dist_km[0], l.small_dist_km[1], l.small_dist_km[2]}},
                 {"uav_dist_km", l.uav_dist_km}};
    const auto& o = s.orchestration;
    j["orchestration"] = {{"beam_width", o.beam_width},
                          {"plan_horizon_hours", o.plan_horizon_hours},
                          {"twin_plan_tick_minutes", o.twin_plan_tick_minutes},
                          {"rl",
                           {{"discount", o.rl.discount},
                            {"actor_step", o.rl.actor_step},
                            {"critic_step", o.rl.critic_step},
                            {"sla_penalty", o.rl.sla_penalty},
                            {"reward_scale", o.rl.reward_scale},
                            {"explore_start", o.rl.explore_start},
                            {"explore_end", o.rl.explore_end},
                            {"train_episodes", o.rl.train_episodes}}}};
    return j.dump(2);
}

ScenarioSpec parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    try {
        check_keys(j,
                   {"days", "epoch_minutes", "decision_interval_hours", "seed", "constellation",
                    "ran", "uavs", "zones", "gateways", "swap_pads", "traffic", "rain_events",
                    "carbon_source", "power_catalog", "sla", "link", "orchestration"},
                   "scenario");
        ScenarioSpec s = default_paper_scenario();
        s.days = j.at("days").get<int>();
        s.epoch_minutes = j.at("epoch_minutes").get<int>();
        s.decision_interval_hours = j.at("decision_interval_hours").get<int>();
        s.seed = j.at("seed").get<std::uint64_t>();

        const json& c = j.at("constellation");
        check_keys(c, {"planes", "sats_per_plane", "total", "altitude_km", "inclination_deg"},
                   "constellation");
        s.constellation.planes = c.at("planes").get<int>();
        s.constellation.sats_per_plane = c.at("sats_per_plane").get<int>();
        s.constellation.total = c.value("total", 0);
        s.constellation.altitude_km = c.at("altitude_km").get<double>();
        s.constellation.inclination_deg = c.at("inclination_deg").get<double>();

        const json& r = j.at("ran");
        check_keys(r, {"macro_count", "small_count"}, "ran");
        s.ran.macro_count = r.at("macro_count").get<int>();
        s.ran.small_count = r.at("small_count").get<int>();

        const json& u = j.at("uavs");
        check_keys(u, {"count", "endurance_h", "coverage_km", "swap_pads"}, "uavs");
        s.uavs.count = u.at("count").get<int>();
        s.uavs.endurance_h = u.at("endurance_h").get<double>();
        s.uavs.coverage_km = u.at("coverage_km").get<double>();
        s.uavs.swap_pads = u.at("swap_pads").get<int>();

        s.zones.clear();
        for (const json& zj : j.at("zones")) {
            check_keys(zj, {"id", "class", "region", "x_km", "y_km", "macro_sites", "small_sites"},
                       "zone");
            ZoneSpec z;
            z.id = zj.at("id").get<std::string>();
            z.cls = zone_class_from(zj.at("class").get<std::string>());
            z.region = zj.at("region").get<std::string>();
            z.x_km = zj.at("x_km").get<double>();
            z.y_km = zj.at("y_km").get<double>();
            z.macro_sites = zj.at("macro_sites").get<int>();
            z.small_sites = zj.at("small_sites").get<int>();
            s.zones.push_back(z);
        }
        s.gateways.clear();
        for (const json& gj : j.at("gateways")) {
            check_keys(gj, {"id", "region", "x_km", "y_km", "compute_capacity", "hosts_edge"},
                       "gateway");
            GatewaySiteSpec g;
            g.id = gj.at("id").get<std::string>();
            g.region = gj.at("region").get<std::string>();
            g.x_km = gj.at("x_km").get<double>();
            g.y_km = gj.at("y_km").get<double>();
            g.compute_capacity = gj.at("compute_capacity").get<double>();
            g.hosts_edge = gj.value("hosts_edge", true);
            s.gateways.push_back(g);
        }
        s.swap_pads.clear();
        for (const json& pj : j.at("swap_pads")) {
            check_keys(pj, {"id", "region", "x_km", "y_km"}, "swap_pad");
            s.swap_pads.push_back({pj.at("id").get<std::string>(),
                                   pj.at("region").get<std::string>(),
                                   pj.at("x_km").get<double>(), pj.at("y_km").get<double>()});
        }

        const json& t = j.at("traffic");
        check_keys(t,
                   {"embb_weekly_gb", "urllc_weekly_gb", "miot_weekly_gb", "embb_peak_hour",
                    "embb_trough_hour", "embb_diurnal_amplitude", "urban_embb_weight",
                    "suburban_embb_weight", "rural_embb_weight", "commuter_swing",
                    "miot_burst_rate_rural_per_h", "miot_burst_rate_other_per_h",
                    "day_noise_sigma", "tick_noise_amp", "surge_multiplier",
                    "surge_with_second_event"},
                   "traffic");
        TrafficProfileSpec& tp = s.traffic;
        tp.embb_weekly_gb = t.at("embb_weekly_gb").get<double>();
        tp.urllc_weekly_gb = t.at("urllc_weekly_gb").get<double>();
        tp.miot_weekly_gb = t.at("miot_weekly_gb").get<double>();
        tp.embb_peak_hour = t.value("embb_peak_hour", 20.0);
        tp.embb_trough_hour = t.value("embb_trough_hour", 4.0);
        tp.embb_diurnal_amplitude = t.value("embb_diurnal_amplitude", 0.45);
        tp.urban_embb_weight = t.value("urban_embb_weight", 3.0);
        tp.suburban_embb_weight = t.value("suburban_embb_weight", 1.2);
        tp.rural_embb_weight = t.value("rural_embb_weight", 0.4);
        tp.commuter_swing = t.value("commuter_swing", 0.25);
        tp.miot_burst_rate_rural_per_h = t.value("miot_burst_rate_rural_per_h", 0.5);
        tp.miot_burst_rate_other_per_h = t.value("miot_burst_rate_other_per_h", 0.10);
        tp.day_noise_sigma = t.value("day_noise_sigma", 0.05);
        tp.tick_noise_amp = t.value("tick_noise_amp", 0.20);
        tp.surge_multiplier = t.value("surge_multiplier", 2.0);
        tp.surge_with_second_event = t.value("surge_with_second_event", true);

        s.rain_events.clear();
        for (const json& ej : j.at("rain_events")) {
            check_keys(ej, {"start_hour", "end_hour", "affected_bands", "attenuation_db"},
                       "rain_event");
            RainEventSpec e;
            e.start_hour = ej.at("start_hour").get<double>();
            e.end_hour = ej.at("end_hour").get<double>();
            for (const json& bj : ej.at("affected_bands")) {
                e.affected_bands.push_back(band_from(bj.get<std::string>()));
            }
            e.attenuation_db = ej.at("attenuation_db").get<double>();
            s.rain_events.push_back(e);
        }

        const json& cs = j.at("carbon_source");
        check_keys(cs, {"kind", "path", "regions", "base_intensity", "floor_intensity"},
                   "carbon_source");
        s.carbon_source.kind = cs.at("kind").get<std::string>();
        s.carbon_source.path = cs.value("path", std::string{});
        s.carbon_source.regions.clear();
        for (const json& rj : cs.at("regions")) {
            check_keys(rj, {"name", "profile"}, "carbon region");
            s.carbon_source.regions.push_back(
                {rj.at("name").get<std::string>(), rj.at("profile").get<std::string>()});
        }
        s.carbon_source.base_intensity = cs.value("base_intensity", 450.0);
        s.carbon_source.floor_intensity = cs.value("floor_intensity", 50.0);

        s.power_catalog.clear();
        for (auto it = j.at("power_catalog").begin(); it != j.at("power_catalog").end(); ++it) {
            s.power_catalog[it.key()] = profile_from_json(it.value(), "power profile " + it.key());
        }

        const json& sl = j.at("sla");
        check_keys(sl, {"urllc_latency_ms", "embb_served_fraction", "miot_served_fraction"},
                   "sla");
        s.sla.urllc_latency_ms = sl.at("urllc_latency_ms").get<double>();
        s.sla.embb_served_fraction = sl.at("embb_served_fraction").get<double>();
        s.sla.miot_served_fraction = sl.at("miot_served_fraction").get<double>();

        const json& l = j.at("link");
        check_keys(l,
                   {"macro_bw_hz", "macro_tx_dbm", "macro_carrier_ghz", "small_bw_hz",
                    "small_tx_dbm", "small_carrier_ghz", "uav_bw_hz", "uav_tx_dbm",
                    "uav_carrier_ghz", "sat_bw_hz", "sat_tx_dbm", "sat_carrier_ghz",
                    "sat_link_gain_db", "backhaul_bw_hz", "backhaul_tx_dbm",
                    "backhaul_carrier_ghz", "backhaul_link_gain_db", "noise_figure_db",
                    "sched_efficiency", "max_spectral_eff", "queueing_kbits", "saturation_ms",
                    "isl_hop_ms", "isl_capacity_gbps", "fiber_km_per_ms", "min_elevation_deg",
                    "macro_dist_km", "small_dist_km", "uav_dist_km"},
                   "link");
        LinkParamsSpec& lp = s.link;
        lp.macro_bw_hz = l.value("macro_bw_hz", lp.macro_bw_hz);
        lp.macro_tx_dbm = l.value("macro_tx_dbm", lp.macro_tx_dbm);
        lp.macro_carrier_ghz = l.value("macro_carrier_ghz", lp.macro_carrier_ghz);
        lp.small_bw_hz = l.value("small_bw_hz", lp.small_bw_hz);
        lp.small_tx_dbm = l.value("small_tx_dbm", lp.small_tx_dbm);
        lp.small_carrier_ghz = l.value("small_carrier_ghz", lp.small_carrier_ghz);
        lp.uav_bw_hz = l.value("uav_bw_hz", lp.uav_bw_hz);
        lp.uav_tx_dbm = l.value("uav_tx_dbm", lp.uav_tx_dbm);
        lp.uav_carrier_ghz = l.value("uav_carrier_ghz", lp.uav_carrier_ghz);
        lp.sat_bw_hz = l.value("sat_bw_hz", lp.sat_bw_hz);
        lp.sat_tx_dbm = l.value("sat_tx_dbm", lp.sat_tx_dbm);
        lp.sat_carrier_ghz = l.value("sat_carrier_ghz", lp.sat_carrier_ghz);
        lp.sat_link_gain_db = l.value("sat_link_gain_db", lp.sat_link_gain_db);
        lp.backhaul_bw_hz = l.value("backhaul_bw_hz", lp.backhaul_bw_hz);
        lp.backhaul_tx_dbm = l.value("backhaul_tx_dbm", lp.backhaul_tx_dbm);
        lp.backhaul_carrier_ghz = l.value("backhaul_carrier_ghz", lp.backhaul_carrier_ghz);
        lp.backhaul_link_gain_db = l.value("backhaul_link_gain_db", lp.backhaul_link_gain_db);
        lp.noise_figure_db = l.value("noise_figure_db", lp.noise_figure_db);
        lp.sched_efficiency = l.value("sched_efficiency", lp.sched_efficiency);
        lp.max_spectral_eff = l.value("max_spectral_eff", lp.max_spectral_eff);
        lp.queueing_kbits = l.value("queueing_kbits", lp.queueing_kbits);
        lp.saturation_ms = l.value("saturation_ms", lp.saturation_ms);
        lp.isl_hop_ms = l.value("isl_hop_ms", lp.isl_hop_ms);
        lp.isl_capacity_gbps = l.value("isl_capacity_gbps", lp.isl_capacity_gbps);
        lp.fiber_km_per_ms = l.value("fiber_km_per_ms", lp.fiber_km_per_ms);
        lp.min_elevation_deg = l.value("min_elevation_deg", lp.min_elevation_deg);
        if (l.count("macro_dist_km")) {
            for (int i = 0; i < 3; ++i) lp.macro_dist_km[i] = l.at("macro_dist_km").at(i);
        }
        if (l.count("small_dist_km")) {
            for (int i = 0; i < 3; ++i) lp.small_dist_km[i] = l.at("small_dist_km").at(i);
        }
        lp.uav_dist_km = l.value("uav_dist_km", lp.uav_dist_km);

        const json& o = j.at("orchestration");
        check_keys(o, {"beam_width", "plan_horizon_hours", "twin_plan_tick_minutes", "rl"},
                   "orchestration");
        s.orchestration.beam_width = o.value("beam_width", 8);
        s.orchestration.plan_horizon_hours = o.value("plan_horizon_hours", 24);
        s.orchestration.twin_plan_tick_minutes = o.value("twin_plan_tick_minutes", 10);
        if (o.count("rl")) {
            const json& rl = o.at("rl");
            check_keys(rl,
                       {"discount", "actor_step", "critic_step", "sla_penalty", "reward_scale",
                        "explore_start", "explore_end", "train_episodes"},
                       "rl");
            RlParamsSpec& rp = s.orchestration.rl;
            rp.discount = rl.value("discount", rp.discount);
            rp.actor_step = rl.value("actor_step", rp.actor_step);
            rp.critic_step = rl.value("critic_step", rp.critic_step);
            rp.sla_penalty = rl.value("sla_penalty", rp.sla_penalty);
            rp.reward_scale = rl.value("reward_scale", rp.reward_scale);
            rp.explore_start = rl.value("explore_start", rp.explore_start);
            rp.explore_end = rl.value("explore_end", rp.explore_end);
            rp.train_episodes = rl.value("train_episodes", rp.train_episodes);
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

ScenarioSpec load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ScenarioSpec s = parse_scenario(buf.str());
    auto violations = validate(s);
    if (!violations.empty()) {
        std::string msg = violations.front();
        if (violations.size() > 1) {
            msg += " (+" + std::to_string(violations.size() - 1) + " more)";
        }
        throw ValidationError(msg);
    }
    return s;
}

std::vector<std::string> validate(const ScenarioSpec& s) {
    std::vector<std::string> v;
    auto bad = [&v](const std::string& field, const std::string& why) {
        v.push_back(field + ": " + why);
    };

    if (s.days < 1) bad("days", "must be >= 1");
    if (s.epoch_minutes < 1 || 60 % std::max(1, s.epoch_minutes) != 0) {
        bad("epoch_minutes", "must divide 60");
    }
    if (s.decision_interval_hours < 1) bad("decision_interval_hours", "must be >= 1");

    if (s.constellation.planes < 1) bad("constellation.planes", "must be >= 1");
    if (s.constellation.sats_per_plane < 1) bad("constellation.sats_per_plane", "must be >= 1");
    if (s.constellation.altitude_km <= 0) bad("constellation.altitude_km", "must be > 0");
    if (s.constellation.total != 0 &&
        s.constellation.total != s.constellation.planes * s.constellation.sats_per_plane) {
        bad("constellation.total",
            "planes x sats_per_plane = " +
                std::to_string(s.constellation.planes * s.constellation.sats_per_plane) +
                " but total = " + std::to_string(s.constellation.total));
    }

    int macro_sum = 0;
    int small_sum = 0;
    std::set<std::string> zone_ids;
    std::set<std::string> regions;
    if (s.carbon_source.kind == "synth") {
        for (const auto& r : s.carbon_source.regions) regions.insert(r.name);
        if (s.carbon_source.regions.empty()) bad("carbon_source.regions", "must be nonempty");
    } else if (s.carbon_source.kind == "file") {
        if (s.carbon_source.path.empty()) bad("carbon_source.path", "required for kind=file");
        for (const auto& g : s.gateways) regions.insert(g.region);
        for (const auto& z : s.zones) regions.insert(z.region);
    } else {
        bad("carbon_source.kind", "must be 'synth' or 'file'");
    }
    for (const auto& z : s.zones) {
        if (!zone_ids.insert(z.id).second) bad("zones." + z.id, "duplicate zone id");
        if (z.macro_sites < 0 || z.small_sites < 0) bad("zones." + z.id, "negative site count");
        if (!regions.empty() && !regions.count(z.region)) {
            bad("zones." + z.id, "region '" + z.region + "' not in carbon source");
        }
        macro_sum += z.macro_sites;
        small_sum += z.small_sites;
    }
    if (s.zones.empty()) bad("zones", "must be nonempty");
    if (macro_sum != s.ran.macro_count) {
        bad("ran.macro_count", "zone macro sites sum to " + std::to_string(macro_sum));
    }
    if (small_sum != s.ran.small_count) {
        bad("ran.small_count", "zone small sites sum to " + std::to_string(small_sum));
    }

    if (s.gateways.empty()) bad("gateways", "must be nonempty");
    for (const auto& g : s.gateways) {
        if (g.compute_capacity <= 0) bad("gateways." + g.id, "compute_capacity must be > 0");
        if (!regions.empty() && !regions.count(g.region)) {
            bad("gateways." + g.id, "region '" + g.region + "' not in carbon source");
        }
    }
    if (s.uavs.count < 0) bad("uavs.count", "must be >= 0");
    if (s.uavs.endurance_h <= 0) bad("uavs.endurance_h", "must be > 0");
    if (static_cast<int>(s.swap_pads.size()) != s.uavs.swap_pads) {
        bad("uavs.swap_pads", "pad list has " + std::to_string(s.swap_pads.size()) + " entries");
    }
    for (const auto& p : s.swap_pads) {
        if (!regions.empty() && !regions.count(p.region)) {
            bad("swap_pads." + p.id, "region '" + p.region + "' not in carbon source");
        }
    }

    if (s.sla.urllc_latency_ms <= 0) bad("sla.urllc_latency_ms", "must be > 0");
    if (s.sla.embb_served_fraction <= 0 || s.sla.embb_served_fraction > 1) {
        bad("sla.embb_served_fraction", "must be in (0,1]");
    }
    if (s.sla.miot_served_fraction <= 0 || s.sla.miot_served_fraction > 1) {
        bad("sla.miot_served_fraction", "must be in (0,1]");
    }

    if (s.traffic.embb_weekly_gb < 0 || s.traffic.urllc_weekly_gb < 0 ||
        s.traffic.miot_weekly_gb < 0) {
        bad("traffic", "weekly volumes must be >= 0");
    }
    for (std::size_t i = 0; i < s.rain_events.size(); ++i) {
        const auto& e = s.rain_events[i];
        const std::string f = "rain_events[" + std::to_string(i) + "]";
        if (e.end_hour <= e.start_hour) bad(f, "end_hour must exceed start_hour");
        if (e.attenuation_db < 0) bad(f, "attenuation_db must be >= 0");
    }

    for (const char* key : {"macro", "small", "edge_server", "uav", "satellite_share", "gateway"}) {
        auto it = s.power_catalog.find(key);
        if (it == s.power_catalog.end()) {
            bad(std::string("power_catalog.") + key, "profile missing");
            continue;
        }
        const PowerProfile& p = it->second;
        const std::string f = std::string("power_catalog.") + key;
        if (!(p.off_w == 0.0)) bad(f, "off_w must be 0");
        if (!(p.off_w <= p.deep_sleep_w && p.deep_sleep_w < p.micro_sleep_w &&
              p.micro_sleep_w < p.active_w)) {
            bad(f, "requires off <= deep_sleep < micro_sleep < active");
        }
        if (std::string(key) == "uav" && !(p.uav_hover_w > p.uav_cruise_w)) {
            bad(f, "uav_hover_w must exceed uav_cruise_w");
        }
    }

    if (s.orchestration.beam_width < 1) bad("orchestration.beam_width", "must be >= 1");
    if (s.orchestration.plan_horizon_hours < 12 || s.orchestration.plan_horizon_hours > 24) {
        bad("orchestration.plan_horizon_hours", "must be in [12, 24]");
    }
    if (s.orchestration.twin_plan_tick_minutes < 1 ||
        60 % std::max(1, s.orchestration.twin_plan_tick_minutes) != 0) {
        bad("orchestration.twin_plan_tick_minutes", "must divide 60");
    }
    return v;
}

}  // namespace isatn
