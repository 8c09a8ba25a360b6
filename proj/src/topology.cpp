#include "isatn/topology.hpp"

#include <cmath>

#include "isatn/errors.hpp"

namespace isatn {

namespace {

constexpr double kEarthRadiusKm = 6371.0;
constexpr double kMuKm3S2 = 398600.4418;
constexpr double kPi = 3.14159265358979323846;

// Scenario plane anchor; a CAISO-like mid-latitude metropolitan region.
constexpr double kAnchorLatDeg = 36.0;
constexpr double kAnchorLonDeg = -119.0;
constexpr double kKmPerDegLat = 110.574;
constexpr double kKmPerDegLon = 111.320;  // scaled by cos(lat) below

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

double norm360(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d < 0) d += 360.0;
    return d;
}

struct LatLon {
    double lat_deg;
    double lon_deg;
};

// Sub-satellite latitude/longitude from circular-orbit propagation in an
// Earth-fixed frame (no Earth rotation; the planar projection absorbs it).
LatLon subpoint(const SatelliteNode& sat, double t_seconds) {
    const double period = orbital_period_s(sat.altitude_km);
    const double u = deg2rad(sat.phase_deg) + 2.0 * kPi * (t_seconds / period);
    const double inc = deg2rad(sat.inclination_deg);
    const double raan = deg2rad(sat.raan_deg);

    const double x0 = std::cos(u);
    const double y0 = std::sin(u) * std::cos(inc);
    const double z0 = std::sin(u) * std::sin(inc);
    const double x = x0 * std::cos(raan) - y0 * std::sin(raan);
    const double y = x0 * std::sin(raan) + y0 * std::cos(raan);
    return {rad2deg(std::asin(z0)), rad2deg(std::atan2(y, x))};
}

LatLon plane_to_latlon(PlanarKm p) {
    const double lat = kAnchorLatDeg + p.y / kKmPerDegLat;
    const double lon = kAnchorLonDeg + p.x / (kKmPerDegLon * std::cos(deg2rad(kAnchorLatDeg)));
    return {lat, lon};
}

double wrap_lon_deg(double lon) {
    double l = std::fmod(lon + 180.0, 360.0);
    if (l < 0) l += 360.0;
    return l - 180.0;
}

// Great-circle central angle between two lat/lon points (radians).
double central_angle(LatLon a, LatLon b) {
    const double p1 = deg2rad(a.lat_deg);
    const double p2 = deg2rad(b.lat_deg);
    const double dl = deg2rad(wrap_lon_deg(b.lon_deg - a.lon_deg));
    double c = std::sin(p1) * std::sin(p2) + std::cos(p1) * std::cos(p2) * std::cos(dl);
    c = std::min(1.0, std::max(-1.0, c));
    return std::acos(c);
}

}  // namespace

double distance_km(PlanarKm a, PlanarKm b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double orbital_period_s(double altitude_km) {
    if (altitude_km <= 0) throw InvalidParameter("orbital_period_s: altitude_km must be > 0");
    const double a = kEarthRadiusKm + altitude_km;
    return 2.0 * kPi * std::sqrt(a * a * a / kMuKm3S2);
}

std::vector<SatelliteNode> build_constellation(int planes, int sats_per_plane, double altitude_km,
                                               double inclination_deg) {
    if (planes < 1) throw InvalidParameter("build_constellation: planes must be >= 1");
    if (sats_per_plane < 1) {
        throw InvalidParameter("build_constellation: sats_per_plane must be >= 1");
    }
    if (altitude_km <= 0) throw InvalidParameter("build_constellation: altitude_km must be > 0");

    std::vector<SatelliteNode> sats;
    sats.reserve(static_cast<std::size_t>(planes) * sats_per_plane);
    const double raan_step = 180.0 / planes;
    const double phase_step = 360.0 / sats_per_plane;
    for (int p = 0; p < planes; ++p) {
        for (int k = 0; k < sats_per_plane; ++k) {
            SatelliteNode s;
            s.id = p * sats_per_plane + k;
            s.plane_index = p;
            s.slot_index = k;
            s.altitude_km = altitude_km;
            s.inclination_deg = norm360(inclination_deg);
            s.raan_deg = norm360(p * raan_step);
            s.phase_deg = norm360(k * phase_step);
            sats.push_back(s);
        }
    }
    return sats;
}

PlanarKm satellite_ground_track(const SatelliteNode& sat, double t_seconds) {
    const LatLon ll = subpoint(sat, t_seconds);
    const double y = (ll.lat_deg - kAnchorLatDeg) * kKmPerDegLat;
    const double x = wrap_lon_deg(ll.lon_deg - kAnchorLonDeg) * kKmPerDegLon *
                     std::cos(deg2rad(kAnchorLatDeg));
    return {x, y};
}

double satellite_elevation_deg(const SatelliteNode& sat, double t_seconds, PlanarKm ground) {
    const LatLon sp = subpoint(sat, t_seconds);
    const LatLon gp = plane_to_latlon(ground);
    const double psi = central_angle(sp, gp);
    const double ratio = kEarthRadiusKm / (kEarthRadiusKm + sat.altitude_km);
    if (psi < 1e-12) return 90.0;
    return rad2deg(std::atan2(std::cos(psi) - ratio, std::sin(psi)));
}

double satellite_slant_km(const SatelliteNode& sat, double t_seconds, PlanarKm ground) {
    const LatLon sp = subpoint(sat, t_seconds);
    const LatLon gp = plane_to_latlon(ground);
    const double psi = central_angle(sp, gp);
    const double r = kEarthRadiusKm + sat.altitude_km;
    // law of cosines between the ground point and the satellite position
    const double d2 = kEarthRadiusKm * kEarthRadiusKm + r * r -
                      2.0 * kEarthRadiusKm * r * std::cos(psi);
    return std::sqrt(std::max(0.0, d2));
}

std::vector<int> visible_satellites(const Zone& zone, const std::vector<SatelliteNode>& sats,
                                    double t_seconds, double min_elevation_deg) {
    if (min_elevation_deg < 0.0 || min_elevation_deg > 90.0) {
        throw InvalidParameter("visible_satellites: mask must be in [0, 90]");
    }
    std::vector<int> out;
    for (const auto& s : sats) {
        if (satellite_elevation_deg(s, t_seconds, zone.centroid) >= min_elevation_deg) {
            out.push_back(s.id);
        }
    }
    return out;
}

std::vector<TerrestrialSite> expand_sites(const Zone& zone) {
    std::vector<TerrestrialSite> sites;
    sites.reserve(static_cast<std::size_t>(zone.macro_sites + zone.small_sites));
    // Deterministic ring layout around the centroid; ids index within the zone.
    for (int i = 0; i < zone.macro_sites; ++i) {
        TerrestrialSite s;
        s.id = zone.name + "-m" + std::to_string(i);
        s.kind = ElementKind::macro_cell;
        s.zone = zone.id;
        const double ang = 2.0 * kPi * i / std::max(1, zone.macro_sites);
        s.position = {zone.centroid.x + 2.0 * std::cos(ang), zone.centroid.y + 2.0 * std::sin(ang)};
        s.sleep_capable = false;
        sites.push_back(s);
    }
    for (int i = 0; i < zone.small_sites; ++i) {
        TerrestrialSite s;
        s.id = zone.name + "-s" + std::to_string(i);
        s.kind = ElementKind::small_cell;
        s.zone = zone.id;
        const double ang = 2.0 * kPi * i / std::max(1, zone.small_sites);
        s.position = {zone.centroid.x + 0.8 * std::cos(ang), zone.centroid.y + 0.8 * std::sin(ang)};
        s.sleep_capable = true;
        sites.push_back(s);
    }
    return sites;
}

}  // namespace isatn
