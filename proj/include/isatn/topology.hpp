#pragma once

#include <string>
#include <vector>

#include "isatn/scenario.hpp"

namespace isatn {

struct PlanarKm {
    double x = 0.0;
    double y = 0.0;
};

struct SatelliteNode {
    int id = 0;
    int plane_index = 0;
    int slot_index = 0;
    double altitude_km = 0.0;
    double inclination_deg = 0.0;
    double raan_deg = 0.0;   // normalized to [0, 360)
    double phase_deg = 0.0;  // normalized to [0, 360)
};

enum class SleepMode { active, micro_sleep, deep_sleep, off };
enum class UavMode { grounded, cruise, hover, standby };

struct TerrestrialSite {
    std::string id;
    ElementKind kind = ElementKind::macro_cell;  // macro_cell or small_cell
    int zone = 0;
    PlanarKm position;
    bool sleep_capable = false;
};

struct UavNode {
    int id = 0;
    PlanarKm position;
    double battery_wh = 0.0;
    double endurance_h = 0.0;
    double coverage_km = 0.0;
    UavMode mode = UavMode::grounded;
};

struct GatewayNode {
    int id = 0;
    std::string name;
    int region = 0;
    PlanarKm position;
    double compute_capacity = 0.0;
    bool hosts_edge = true;
};

struct Zone {
    int id = 0;
    std::string name;
    ZoneClass cls = ZoneClass::urban;
    int region = 0;
    PlanarKm centroid;
    int macro_sites = 0;
    int small_sites = 0;
};

/// Circular-orbit Kepler period, a = 6371 km + altitude, mu = 398600.4418.
double orbital_period_s(double altitude_km);

/// Walker constellation: RAAN spread over 180°/planes, in-plane phase spread
/// over 360°/sats_per_plane.
std::vector<SatelliteNode> build_constellation(int planes, int sats_per_plane, double altitude_km,
                                               double inclination_deg);

/// Sub-satellite point at time t, projected onto the scenario plane.
/// Periodic with orbital_period_s; no Earth rotation in-model.
PlanarKm satellite_ground_track(const SatelliteNode& sat, double t_seconds);

/// Elevation (degrees) of a satellite as seen from a planar ground point.
double satellite_elevation_deg(const SatelliteNode& sat, double t_seconds, PlanarKm ground);

/// Slant range (km) from a planar ground point to the satellite.
double satellite_slant_km(const SatelliteNode& sat, double t_seconds, PlanarKm ground);

/// Satellites above the elevation mask from the zone centroid at time t.
std::vector<int> visible_satellites(const Zone& zone, const std::vector<SatelliteNode>& sats,
                                    double t_seconds, double min_elevation_deg);

/// Expanded per-site view of a zone's RAN (deterministic ids/positions).
std::vector<TerrestrialSite> expand_sites(const Zone& zone);

double distance_km(PlanarKm a, PlanarKm b);

}  // namespace isatn
