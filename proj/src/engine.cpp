#include "isatn/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isatn/errors.hpp"
#include "isatn/rng.hpp"

namespace isatn {

namespace {

constexpr double kAccessPropMs = 0.1;
constexpr double kUavPropMs = 0.15;
constexpr double kLightKmPerMs = 300.0;
constexpr double kLaunchChargeFraction = 0.95;

int zone_class_index(ZoneClass c) { return static_cast<int>(c); }

double site_capacity(const LinkParamsSpec& l, double bw_hz, double tx_dbm, double carrier_ghz,
                     double dist_km, PathEnv env, double extra_gain_db = 0.0) {
    const double pl = path_loss_db(dist_km, carrier_ghz, env);
    const double noise = noise_floor_dbm(bw_hz, l.noise_figure_db);
    const double snr = tx_dbm + extra_gain_db - pl - noise;
    return capacity_from_snr_db(snr, bw_hz, l.max_spectral_eff) * l.sched_efficiency;
}

struct Scratch {
    std::vector<int> uav_count;
    std::vector<double> zone_edge_load_bps;
    std::vector<double> region_kwh;
    std::vector<int> pad_swaps;
    std::array<std::vector<double>, 3> lat_samples;
};

Scratch& scratch_for(const World& w) {
    thread_local Scratch s;
    s.uav_count.assign(w.zones.size(), 0);
    s.zone_edge_load_bps.assign(w.gateways.size(), 0.0);
    s.region_kwh.assign(w.regions.size(), 0.0);
    s.pad_swaps.assign(w.pad_pos.size(), 0);
    for (auto& v : s.lat_samples) v.clear();
    return s;
}

double nearest_rank_p95(std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const std::size_t rank =
        static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(v.size())));
    const std::size_t idx = std::min(v.size() - 1, rank == 0 ? 0 : rank - 1);
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx), v.end());
    return v[idx];
}

}  // namespace

World::World(const ScenarioSpec& s) : spec(s) {
    trace = resolve_carbon_trace(s);
    regions = trace.regions;

    zones.reserve(s.zones.size());
    for (std::size_t i = 0; i < s.zones.size(); ++i) {
        const auto& zs = s.zones[i];
        Zone z;
        z.id = static_cast<int>(i);
        z.name = zs.id;
        z.cls = zs.cls;
        const int ri = trace.region_index(zs.region);
        if (ri < 0) throw ConfigError("zone " + zs.id + ": region not in carbon trace");
        z.region = ri;
        z.centroid = {zs.x_km, zs.y_km};
        z.macro_sites = zs.macro_sites;
        z.small_sites = zs.small_sites;
        zones.push_back(z);
        zone_region.push_back(ri);
    }
    gateways.reserve(s.gateways.size());
    for (std::size_t i = 0; i < s.gateways.size(); ++i) {
        const auto& gs = s.gateways[i];
        GatewayNode g;
        g.id = static_cast<int>(i);
        g.name = gs.id;
        const int ri = trace.region_index(gs.region);
        if (ri < 0) throw ConfigError("gateway " + gs.id + ": region not in carbon trace");
        g.region = ri;
        g.position = {gs.x_km, gs.y_km};
        g.compute_capacity = gs.compute_capacity;
        g.hosts_edge = gs.hosts_edge;
        gateways.push_back(g);
        gw_region.push_back(ri);
    }
    for (const auto& ps : s.swap_pads) {
        const int ri = trace.region_index(ps.region);
        if (ri < 0) throw ConfigError("pad " + ps.id + ": region not in carbon trace");
        pad_region.push_back(ri);
        pad_pos.push_back({ps.x_km, ps.y_km});
    }
    if (pad_pos.empty()) throw ConfigError("scenario requires at least one swap pad");

    zone_gw_km.resize(zones.size());
    for (const auto& z : zones) {
        auto& row = zone_gw_km[static_cast<std::size_t>(z.id)];
        row.resize(gateways.size());
        int best_gw = 0;
        double best = std::numeric_limits<double>::max();
        for (const auto& g : gateways) {
            const double d = distance_km(z.centroid, g.position);
            row[static_cast<std::size_t>(g.id)] = d;
            if (d < best) {
                best = d;
                best_gw = g.id;
            }
        }
        nearest_gw.push_back(best_gw);
        int best_pad = 0;
        double bestp = std::numeric_limits<double>::max();
        for (std::size_t p = 0; p < pad_pos.size(); ++p) {
            const double d = distance_km(z.centroid, pad_pos[p]);
            if (d < bestp) {
                bestp = d;
                best_pad = static_cast<int>(p);
            }
        }
        nearest_pad.push_back(best_pad);
    }

    const auto& l = s.link;
    for (const auto& z : zones) {
        const int ci = zone_class_index(z.cls);
        const PathEnv env = zone_path_env(z.cls);
        macro_site_bps.push_back(
            site_capacity(l, l.macro_bw_hz, l.macro_tx_dbm, l.macro_carrier_ghz,
                          l.macro_dist_km[ci], env));
        small_site_bps.push_back(
            site_capacity(l, l.small_bw_hz, l.small_tx_dbm, l.small_carrier_ghz,
                          l.small_dist_km[ci], env));
        uav_site_bps.push_back(site_capacity(l, l.uav_bw_hz, l.uav_tx_dbm, l.uav_carrier_ghz,
                                             l.uav_dist_km, PathEnv::air_ground));
        const bool microwave = z.cls == ZoneClass::rural;
        microwave_backhaul.push_back(microwave);
        if (microwave) {
            const double d = zone_gw_km[static_cast<std::size_t>(z.id)]
                                       [static_cast<std::size_t>(nearest_gw[z.id])];
            const double pl = path_loss_db(std::max(1.0, d), l.backhaul_carrier_ghz,
                                           PathEnv::rural);
            const double noise = noise_floor_dbm(l.backhaul_bw_hz, l.noise_figure_db);
            backhaul_gain_snr_db.push_back(l.backhaul_tx_dbm + l.backhaul_link_gain_db - pl -
                                           noise);
        } else {
            backhaul_gain_snr_db.push_back(0.0);
        }
        switch (z.cls) {
            case ZoneClass::urban: edge_service_units.push_back(1.0); break;
            case ZoneClass::suburban: edge_service_units.push_back(0.75); break;
            case ZoneClass::rural: edge_service_units.push_back(0.5); break;
        }
    }

    sats = build_constellation(s.constellation.planes, s.constellation.sats_per_plane,
                               s.constellation.altitude_km, s.constellation.inclination_deg);

    // Best-satellite lookup per (minute, zone) over the whole horizon.
    sat_table_minutes = s.days * 24 * 60;
    const std::size_t n = static_cast<std::size_t>(sat_table_minutes) * zones.size();
    best_sat_id.assign(n, -1);
    best_sat_el_deg.assign(n, -90.0f);
    best_sat_slant_km.assign(n, 0.0f);
    for (int m = 0; m < sat_table_minutes; ++m) {
        const double t_s = m * 60.0;
        for (const auto& z : zones) {
            double best_el = -90.0;
            int best_id = -1;
            double best_slant = 0.0;
            for (const auto& sat : sats) {
                const double el = satellite_elevation_deg(sat, t_s, z.centroid);
                if (el > best_el) {
                    best_el = el;
                    best_id = sat.id;
                    best_slant = satellite_slant_km(sat, t_s, z.centroid);
                }
            }
            const std::size_t idx = static_cast<std::size_t>(m) * zones.size() +
                                    static_cast<std::size_t>(z.id);
            if (best_el >= s.link.min_elevation_deg) {
                best_sat_id[idx] = static_cast<std::int16_t>(best_id);
                best_sat_el_deg[idx] = static_cast<float>(best_el);
                best_sat_slant_km[idx] = static_cast<float>(best_slant);
            }
        }
    }

    auto prof = [&s](const char* key) {
        auto it = s.power_catalog.find(key);
        if (it == s.power_catalog.end()) {
            throw ConfigError(std::string("power catalog missing '") + key + "'");
        }
        return it->second;
    };
    macro_prof = prof("macro");
    small_prof = prof("small");
    edge_prof = prof("edge_server");
    gw_prof = prof("gateway");
    sat_prof = prof("satellite_share");
    uav_prof = prof("uav");
    uav_battery_capacity_wh = s.uavs.endurance_h * uav_prof.uav_hover_w;
    uav_reserve_wh = 0.10 * uav_battery_capacity_wh;
}

EpochState initial_state(const World& w) {
    EpochState st(static_cast<std::size_t>(w.region_count()));
    const int nz = w.zone_count();
    st.config.serving_gw = w.nearest_gw;
    st.config.edge_gw = w.nearest_gw;
    st.config.small_sleep.assign(static_cast<std::size_t>(nz), 0);
    st.config.macro_micro.assign(static_cast<std::size_t>(nz), 0);
    st.config.uav_zone.assign(static_cast<std::size_t>(w.spec.uavs.count), -1);
    st.config.sat_pref.assign(static_cast<std::size_t>(nz), -1);
    st.uavs.resize(static_cast<std::size_t>(w.spec.uavs.count));
    for (std::size_t u = 0; u < st.uavs.size(); ++u) {
        st.uavs[u].mode = UavMode::grounded;
        st.uavs[u].battery_wh = w.uav_battery_capacity_wh;
        st.uavs[u].zone = -1;
        st.uavs[u].pad = static_cast<int>(u % w.pad_pos.size());
    }
    return st;
}

void apply_hour_config(const World& w, EpochState& st, const HourConfig& cfg) {
    (void)w;
    st.config = cfg;
}

namespace {

struct SatView {
    int id = -1;
    double elevation_deg = -90.0;
    double slant_km = 0.0;
};

SatView zone_satellite(const World& w, const EpochState& st, int zone, std::int64_t t_min) {
    const int pref = st.config.sat_pref[static_cast<std::size_t>(zone)];
    if (pref >= 0 && pref < static_cast<int>(w.sats.size())) {
        const double t_s = static_cast<double>(t_min) * 60.0;
        const auto& sat = w.sats[static_cast<std::size_t>(pref)];
        const double el = satellite_elevation_deg(sat, t_s, w.zones[static_cast<std::size_t>(
                                                                 zone)].centroid);
        if (el >= w.spec.link.min_elevation_deg) {
            return {pref, el,
                    satellite_slant_km(sat, t_s, w.zones[static_cast<std::size_t>(zone)].centroid)};
        }
    }
    const std::int64_t m = std::min<std::int64_t>(t_min, w.sat_table_minutes - 1);
    const std::size_t idx = static_cast<std::size_t>(m) * w.zones.size() +
                            static_cast<std::size_t>(zone);
    if (w.best_sat_id[idx] < 0) return {};
    return {w.best_sat_id[idx], static_cast<double>(w.best_sat_el_deg[idx]),
            static_cast<double>(w.best_sat_slant_km[idx])};
}

double satellite_capacity_bps(const World& w, double slant_km, double ka_atten_db) {
    const auto& l = w.spec.link;
    const double pl = path_loss_db(std::max(1.0, slant_km), l.sat_carrier_ghz,
                                   PathEnv::space_ground);
    const double noise = noise_floor_dbm(l.sat_bw_hz, l.noise_figure_db);
    const double snr = l.sat_tx_dbm + l.sat_link_gain_db - pl - ka_atten_db - noise;
    return capacity_from_snr_db(snr, l.sat_bw_hz, l.max_spectral_eff) * l.sched_efficiency;
}

void apply_action(const World& w, EpochState& st, const Action& a) {
    auto& cfg = st.config;
    switch (a.kind) {
        case ActionKind::no_op: break;
        case ActionKind::reroute_zone_to_gateway:
            if (a.zone >= 0 && a.zone < w.zone_count() && a.gateway >= 0 &&
                a.gateway < w.gateway_count()) {
                cfg.serving_gw[static_cast<std::size_t>(a.zone)] = a.gateway;
            }
            break;
        case ActionKind::activate_uav:
            if (a.uav >= 0 && a.uav < static_cast<int>(cfg.uav_zone.size()) && a.zone >= 0) {
                cfg.uav_zone[static_cast<std::size_t>(a.uav)] = a.zone;
            }
            break;
        case ActionKind::deactivate_uav:
            if (a.uav >= 0 && a.uav < static_cast<int>(cfg.uav_zone.size())) {
                cfg.uav_zone[static_cast<std::size_t>(a.uav)] = -1;
            }
            break;
        case ActionKind::wake_small_cells:
            if (a.zone >= 0 && a.zone < w.zone_count()) {
                auto& n = cfg.small_sleep[static_cast<std::size_t>(a.zone)];
                n = std::max(0, n - std::max(1, a.cell_count));
            }
            break;
        case ActionKind::sleep_small_cells:
            if (a.zone >= 0 && a.zone < w.zone_count()) {
                auto& n = cfg.small_sleep[static_cast<std::size_t>(a.zone)];
                const int total = w.zones[static_cast<std::size_t>(a.zone)].small_sites;
                n = std::min(total, n + std::max(1, a.cell_count));
            }
            break;
        case ActionKind::shift_edge_service:
            if (a.zone >= 0 && a.zone < w.zone_count() && a.gateway >= 0 &&
                a.gateway < w.gateway_count()) {
                cfg.edge_gw[static_cast<std::size_t>(a.zone)] = a.gateway;
            }
            break;
        case ActionKind::steer_beam_to_satellite:
            if (a.zone >= 0 && a.zone < w.zone_count()) {
                cfg.sat_pref[static_cast<std::size_t>(a.zone)] = a.satellite;
            }
            break;
    }
}

void reconcile_uavs(const World& w, EpochState& st) {
    for (std::size_t u = 0; u < st.uavs.size(); ++u) {
        UavState& uav = st.uavs[u];
        const int target = st.config.uav_zone[u];
        if (target >= 0 && target < w.zone_count()) {
            if (uav.mode == UavMode::grounded &&
                uav.battery_wh >= kLaunchChargeFraction * w.uav_battery_capacity_wh) {
                uav.mode = UavMode::hover;
                uav.zone = target;
            } else if (uav.mode != UavMode::grounded) {
                uav.zone = target;
            }
        } else if (uav.mode != UavMode::grounded) {
            uav.mode = UavMode::grounded;
            uav.pad = w.nearest_pad[static_cast<std::size_t>(std::max(0, uav.zone))];
            uav.zone = -1;
        }
    }
}

}  // namespace

void realized_exo_tick(const World& w, const ScenarioSpec& spec, std::int64_t t_min,
                       ExoTick& out) {
    const int nz = w.zone_count();
    out.offered_bits.assign(static_cast<std::size_t>(nz) * 3, 0.0);
    const std::int64_t epoch = t_min / spec.epoch_minutes;
    const auto demands = generate_traffic(spec, w.zones, epoch);
    for (const auto& d : demands) {
        out.offered_bits[static_cast<std::size_t>(d.zone) * 3 +
                         static_cast<std::size_t>(d.cls)] = d.offered_bits;
    }
    const double t_hours = static_cast<double>(t_min) / 60.0;
    out.intensity.resize(w.regions.size());
    out.renewable.resize(w.regions.size());
    for (int r = 0; r < w.region_count(); ++r) {
        out.intensity[static_cast<std::size_t>(r)] = carbon_intensity_at(w.trace, r, t_hours);
        out.renewable[static_cast<std::size_t>(r)] = renewable_share_at(w.trace, r, t_hours);
    }
    out.ka_atten_db = rain_attenuation_db(spec.rain_events, Band::ka, t_hours);
    out.micro_atten_db =
        rain_attenuation_db(spec.rain_events, Band::microwave_backhaul, t_hours);
}

KpiTick step(const World& w, EpochState& st, const ExoTick& exo, int dt_min, const Action* action,
             TickDetail* detail) {
    Scratch& sc = scratch_for(w);
    KpiTick kpi;
    kpi.t_min = st.t_min;

    if (action != nullptr) {
        apply_action(w, st, *action);
        kpi.action_kind = static_cast<int>(action->kind);
    }
    reconcile_uavs(w, st);
    for (const auto& uav : st.uavs) {
        if (uav.mode != UavMode::grounded && uav.zone >= 0) {
            ++sc.uav_count[static_cast<std::size_t>(uav.zone)];
        }
    }

    const auto& l = w.spec.link;
    const double dt_s = dt_min * 60.0;
    const double dt_h = dt_min / 60.0;
    const double inf = std::numeric_limits<double>::infinity();

    if (detail != nullptr) {
        const std::size_t nz = w.zones.size();
        detail->zone_offered.assign(nz, 0.0);
        detail->zone_served.assign(nz, 0.0);
        detail->zone_latency_ms.assign(nz, 0.0);
        detail->zone_terr_util.assign(nz, 0.0);
        detail->zone_sat_cap_bps.assign(nz, 0.0);
        detail->class_latency_ms.assign(nz * 3, 0.0);
    }

    for (const auto& z : w.zones) {
        const std::size_t zi = static_cast<std::size_t>(z.id);
        const int macros_active = z.macro_sites - st.config.macro_micro[zi];
        const int smalls_awake = z.small_sites - st.config.small_sleep[zi];
        const double access = macros_active * w.macro_site_bps[zi] +
                              smalls_awake * w.small_site_bps[zi];
        double backhaul = inf;
        if (w.microwave_backhaul[zi]) {
            backhaul = capacity_from_snr_db(w.backhaul_gain_snr_db[zi] - exo.micro_atten_db,
                                            l.backhaul_bw_hz, l.max_spectral_eff) *
                       l.sched_efficiency;
        }
        const double terr = std::min(access, backhaul);
        const double uav_cap = sc.uav_count[zi] * w.uav_site_bps[zi];
        const SatView sat = zone_satellite(w, st, z.id, st.t_min);
        const double sat_cap =
            sat.id >= 0 ? satellite_capacity_bps(w, sat.slant_km, exo.ka_atten_db) : 0.0;
        const double cap_total = terr + uav_cap + sat_cap;

        const double off_u_bps = exo.offered_bits[zi * 3 + 1] / dt_s;
        const double off_e_bps = exo.offered_bits[zi * 3 + 0] / dt_s;
        const double off_m_bps = exo.offered_bits[zi * 3 + 2] / dt_s;

        // URLLC rides the terrestrial layer only; then eMBB and mIoT fill
        // terrestrial, UAV, satellite in that order.
        const double srv_u = std::min(off_u_bps, terr);
        double terr_rem = terr - srv_u;
        const double e_t = std::min(off_e_bps, terr_rem);
        terr_rem -= e_t;
        double uav_rem = uav_cap;
        const double e_uav = std::min(off_e_bps - e_t, uav_rem);
        uav_rem -= e_uav;
        double sat_rem = sat_cap;
        const double e_sat = std::min(off_e_bps - e_t - e_uav, sat_rem);
        sat_rem -= e_sat;
        const double srv_e = e_t + e_uav + e_sat;
        const double m_t = std::min(off_m_bps, terr_rem);
        const double m_uav = std::min(off_m_bps - m_t, uav_rem);
        const double m_sat = std::min(off_m_bps - m_t - m_uav, sat_rem);
        const double srv_m = m_t + m_uav + m_sat;

        const int gw = st.config.serving_gw[zi];
        const double gw_km = w.zone_gw_km[zi][static_cast<std::size_t>(gw)];
        const double prop_t = kAccessPropMs + gw_km / l.fiber_km_per_ms;
        const double prop_uav = kUavPropMs + gw_km / l.fiber_km_per_ms;
        const double prop_sat = sat.id >= 0
                                    ? 2.0 * sat.slant_km / kLightKmPerMs + l.isl_hop_ms
                                    : 0.0;

        auto mix_prop = [&](double t_share, double u_share, double s_share) {
            const double tot = t_share + u_share + s_share;
            if (tot <= 0.0) return prop_t;
            return (t_share * prop_t + u_share * prop_uav + s_share * prop_sat) / tot;
        };

        const double lat_u =
            off_u_bps > 0.0
                ? prop_t + queueing_latency_ms(off_u_bps, terr, l.queueing_kbits, l.saturation_ms)
                : 0.0;
        const double lat_e =
            off_e_bps > 0.0 ? mix_prop(e_t, e_uav, e_sat) +
                                  queueing_latency_ms(off_u_bps + off_e_bps, cap_total,
                                                      l.queueing_kbits, l.saturation_ms)
                            : 0.0;
        const double lat_m =
            off_m_bps > 0.0 ? mix_prop(m_t, m_uav, m_sat) +
                                  queueing_latency_ms(off_u_bps + off_e_bps + off_m_bps, cap_total,
                                                      l.queueing_kbits, l.saturation_ms)
                            : 0.0;

        kpi.offered_bits[0] += off_e_bps * dt_s;
        kpi.offered_bits[1] += off_u_bps * dt_s;
        kpi.offered_bits[2] += off_m_bps * dt_s;
        kpi.served_bits[0] += srv_e * dt_s;
        kpi.served_bits[1] += srv_u * dt_s;
        kpi.served_bits[2] += srv_m * dt_s;
        if (off_e_bps > 0.0) sc.lat_samples[0].push_back(lat_e);
        if (off_u_bps > 0.0) sc.lat_samples[1].push_back(lat_u);
        if (off_m_bps > 0.0) sc.lat_samples[2].push_back(lat_m);

        if (off_u_bps > 0.0 && lat_u > w.spec.sla.urllc_latency_ms) ++kpi.sla_violations;
        if (off_e_bps > 0.0 && srv_e < w.spec.sla.embb_served_fraction * off_e_bps) {
            ++kpi.sla_violations;
        }
        if (off_m_bps > 0.0 && srv_m < w.spec.sla.miot_served_fraction * off_m_bps) {
            ++kpi.sla_violations;
        }

        // Energy: RAN split by capacity contribution, beams and edge follow
        // the serving/edge gateway, propulsion and cells land on the zone grid.
        const double terr_load = srv_u + e_t + m_t;
        const double macro_frac =
            access > 0.0 ? macros_active * w.macro_site_bps[zi] / access : 0.0;
        const double macro_load_site =
            macros_active > 0 ? terr_load * macro_frac / macros_active : 0.0;
        const double small_load_site =
            smalls_awake > 0 ? terr_load * (1.0 - macro_frac) / smalls_awake : 0.0;
        double ran_w = macros_active * element_power_w(w.macro_prof, SleepMode::active,
                                                       macro_load_site) +
                       st.config.macro_micro[zi] * w.macro_prof.micro_sleep_w +
                       smalls_awake * element_power_w(w.small_prof, SleepMode::active,
                                                      small_load_site) +
                       st.config.small_sleep[zi] * w.small_prof.deep_sleep_w;
        const double ran_kwh = ran_w * dt_h / 1000.0;
        st.cumulative.add(EnergyLayer::ran, w.zone_region[zi], ran_kwh);
        kpi.layer_kwh[0] += ran_kwh;
        sc.region_kwh[static_cast<std::size_t>(w.zone_region[zi])] += ran_kwh;

        const bool beam_active = (e_sat + m_sat) > 0.0 || st.config.sat_pref[zi] >= 0;
        if (beam_active && sat.id >= 0) {
            const double sat_kwh = w.sat_prof.active_w * dt_h / 1000.0;
            const int reg = w.gw_region[static_cast<std::size_t>(gw)];
            st.cumulative.add(EnergyLayer::satellite, reg, sat_kwh);
            kpi.layer_kwh[1] += sat_kwh;
            sc.region_kwh[static_cast<std::size_t>(reg)] += sat_kwh;
        }

        const int egw = st.config.edge_gw[zi];
        sc.zone_edge_load_bps[static_cast<std::size_t>(egw)] += srv_u + srv_e + srv_m;

        if (detail != nullptr) {
            const double zone_off = (off_e_bps + off_u_bps + off_m_bps) * dt_s;
            detail->zone_offered[zi] = zone_off;
            detail->zone_served[zi] = (srv_e + srv_u + srv_m) * dt_s;
            detail->zone_latency_ms[zi] = std::max(lat_u, std::max(lat_e, lat_m));
            detail->zone_terr_util[zi] =
                terr > 0.0 ? std::min(1.0, (off_u_bps + off_e_bps + off_m_bps) / terr) : 1.0;
            detail->zone_sat_cap_bps[zi] = sat_cap;
            detail->class_latency_ms[zi * 3 + 0] = lat_e;
            detail->class_latency_ms[zi * 3 + 1] = lat_u;
            detail->class_latency_ms[zi * 3 + 2] = lat_m;
        }
    }

    // UAV propulsion, battery, and swap-charging.
    for (auto& uav : st.uavs) {
        if (uav.mode == UavMode::grounded) {
            if (uav.battery_wh < kLaunchChargeFraction * w.uav_battery_capacity_wh) {
                const std::size_t pad = static_cast<std::size_t>(uav.pad);
                if (sc.pad_swaps[pad] == 0) {
                    ++sc.pad_swaps[pad];
                    const double charge_kwh = (w.uav_battery_capacity_wh - uav.battery_wh) /
                                              w.uav_charge_efficiency / 1000.0;
                    uav.battery_wh = w.uav_battery_capacity_wh;
                    ++st.swaps;
                    st.cumulative.add(EnergyLayer::uav, w.pad_region[pad], charge_kwh);
                    kpi.layer_kwh[2] += charge_kwh;
                    sc.region_kwh[static_cast<std::size_t>(w.pad_region[pad])] += charge_kwh;
                }
            }
            continue;
        }
        const double draw_w = element_power_w(w.uav_prof, uav.mode);
        const double kwh = draw_w * dt_h / 1000.0;
        const int reg = uav.zone >= 0 ? w.zone_region[static_cast<std::size_t>(uav.zone)]
                                      : w.pad_region[static_cast<std::size_t>(uav.pad)];
        st.cumulative.add(EnergyLayer::uav, reg, kwh);
        kpi.layer_kwh[2] += kwh;
        sc.region_kwh[static_cast<std::size_t>(reg)] += kwh;
        uav.battery_wh -= draw_w * dt_h;
        if (uav.battery_wh <= w.uav_reserve_wh) {
            uav.mode = UavMode::grounded;
            uav.pad = w.nearest_pad[static_cast<std::size_t>(std::max(0, uav.zone))];
            uav.zone = -1;
        }
    }

    // Gateways and edge compute.
    for (const auto& g : w.gateways) {
        const std::size_t gi = static_cast<std::size_t>(g.id);
        double edge_w = w.gw_prof.active_w;
        double units = 0.0;
        for (const auto& z : w.zones) {
            if (st.config.edge_gw[static_cast<std::size_t>(z.id)] == g.id) {
                units += w.edge_service_units[static_cast<std::size_t>(z.id)];
            }
        }
        if (units > 0.0) {
            edge_w += units * w.edge_prof.active_w +
                      w.edge_prof.load_slope_w_per_bps * sc.zone_edge_load_bps[gi];
        }
        const double kwh = edge_w * dt_h / 1000.0;
        st.cumulative.add(EnergyLayer::edge, g.region, kwh);
        kpi.layer_kwh[3] += kwh;
        sc.region_kwh[static_cast<std::size_t>(g.region)] += kwh;
    }

    // Emissions from the tick's regional energy at the current grid signals.
    double emissions = 0.0;
    double renewable = 0.0;
    for (std::size_t r = 0; r < sc.region_kwh.size(); ++r) {
        emissions += sc.region_kwh[r] * exo.intensity[r];
        renewable += sc.region_kwh[r] * exo.renewable[r];
    }
    kpi.emissions_g = emissions;
    kpi.renewable_kwh = renewable;
    st.cumulative.emissions_g.add(emissions);
    st.cumulative.renewable_kwh.add(renewable);
    st.cumulative.bits_delivered += kpi.served_bits[0] + kpi.served_bits[1] + kpi.served_bits[2];

    for (int c = 0; c < 3; ++c) {
        kpi.latency_p95_ms[static_cast<std::size_t>(c)] =
            nearest_rank_p95(sc.lat_samples[static_cast<std::size_t>(c)]);
    }

    st.t_min += dt_min;
    st.cumulative.epoch = st.t_min;
    return kpi;
}

RunSummary summarize(const std::vector<KpiTick>& kpis, const ScenarioSpec& spec) {
    RunSummary s;
    for (const auto& k : kpis) {
        for (int i = 0; i < 4; ++i) {
            s.layer_kwh[static_cast<std::size_t>(i)] += k.layer_kwh[static_cast<std::size_t>(i)];
        }
        s.emissions_g += k.emissions_g;
        s.renewable_kwh += k.renewable_kwh;
        for (int c = 0; c < 3; ++c) {
            s.bits_offered += k.offered_bits[static_cast<std::size_t>(c)];
            s.bits_served += k.served_bits[static_cast<std::size_t>(c)];
        }
        s.sla_violations += k.sla_violations;
    }
    for (double v : s.layer_kwh) s.total_kwh += v;
    s.zero_traffic = s.bits_served <= 0.0;
    s.gco2_per_gb = s.zero_traffic ? 0.0 : gco2_per_gb(s.emissions_g, s.bits_served);
    s.renewable_utilization =
        s.total_kwh > 0.0 ? renewable_utilization(s.renewable_kwh, s.total_kwh) : 0.0;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> v;
        v.reserve(kpis.size());
        for (const auto& k : kpis) {
            if (k.offered_bits[static_cast<std::size_t>(c)] > 0.0) {
                v.push_back(k.latency_p95_ms[static_cast<std::size_t>(c)]);
            }
        }
        s.p95_latency_ms[static_cast<std::size_t>(c)] = nearest_rank_p95(v);
    }
    for (const auto& ev : spec.rain_events) {
        const auto r = recovery_time_s(kpis, spec, ev);
        s.recovery_s.push_back(r.has_value() ? *r : -1.0);
    }
    return s;
}

std::optional<double> recovery_time_s(const std::vector<KpiTick>& kpis, const ScenarioSpec& spec,
                                      const RainEventSpec& event, double threshold) {
    const int tph = spec.ticks_per_hour();
    const std::int64_t onset =
        static_cast<std::int64_t>(std::llround(event.start_hour * tph));
    if (onset < 0 || onset >= static_cast<std::int64_t>(kpis.size())) {
        throw EventNotFound("event onset at hour " + std::to_string(event.start_hour) +
                            " outside the run");
    }
    auto tick_latency = [&kpis](std::int64_t t) {
        const auto& k = kpis[static_cast<std::size_t>(t)];
        return std::max(k.latency_p95_ms[0], std::max(k.latency_p95_ms[1], k.latency_p95_ms[2]));
    };

    const std::int64_t base_lo = std::max<std::int64_t>(0, onset - 30 / spec.epoch_minutes);
    double baseline = 0.0;
    int n = 0;
    for (std::int64_t t = base_lo; t < onset; ++t) {
        baseline += tick_latency(t);
        ++n;
    }
    baseline = n > 0 ? baseline / n : tick_latency(onset);
    const double limit = threshold * std::max(baseline, 1e-9);

    const int window = std::max(1, 5 / spec.epoch_minutes);
    auto rolling_ok = [&](std::int64_t t) {
        // nearest-rank p95 of a 5-minute window is its max
        double worst = 0.0;
        for (std::int64_t i = std::max<std::int64_t>(0, t - window + 1); i <= t; ++i) {
            worst = std::max(worst, tick_latency(i));
        }
        return worst <= limit;
    };

    const std::int64_t end = static_cast<std::int64_t>(kpis.size());
    for (std::int64_t t = onset; t < end; ++t) {
        bool sustained = true;
        for (std::int64_t t2 = t; t2 < std::min(end, t + window); ++t2) {
            if (!rolling_ok(t2)) {
                sustained = false;
                break;
            }
        }
        if (sustained) {
            return (t - onset) * spec.epoch_minutes * 60.0;
        }
    }
    return std::nullopt;
}

}  // namespace isatn
