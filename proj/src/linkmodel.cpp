#include "isatn/linkmodel.hpp"

#include <cmath>

#include "isatn/errors.hpp"

namespace isatn {

double path_env_exponent(PathEnv env) {
    switch (env) {
        case PathEnv::urban: return 3.5;
        case PathEnv::suburban: return 3.0;
        case PathEnv::rural: return 2.7;
        case PathEnv::air_ground: return 2.2;
        case PathEnv::space_ground: return 2.0;
    }
    return 2.0;
}

PathEnv zone_path_env(ZoneClass zc) {
    switch (zc) {
        case ZoneClass::urban: return PathEnv::urban;
        case ZoneClass::suburban: return PathEnv::suburban;
        case ZoneClass::rural: return PathEnv::rural;
    }
    return PathEnv::rural;
}

double path_loss_db(double distance_km, double carrier_ghz, PathEnv env) {
    if (distance_km <= 0.0) throw InvalidParameter("path_loss_db: distance_km must be > 0");
    if (carrier_ghz <= 0.0) throw InvalidParameter("path_loss_db: carrier_ghz must be > 0");
    const double f_mhz = carrier_ghz * 1000.0;
    return 32.44 + 20.0 * std::log10(f_mhz) + 10.0 * path_env_exponent(env) *
                                                  std::log10(distance_km);
}

double capacity_from_snr_db(double snr_db, double bandwidth_hz, double max_spectral_eff) {
    if (bandwidth_hz <= 0.0) throw InvalidParameter("capacity: bandwidth_hz must be > 0");
    const double snr = std::pow(10.0, snr_db / 10.0);
    const double se = std::min(std::log2(1.0 + snr), max_spectral_eff);
    return bandwidth_hz * se;
}

double link_capacity_bps(const LinkState& link, double tx_power_dbm, double noise_dbm,
                         double bandwidth_hz, double max_spectral_eff) {
    const double snr_db = tx_power_dbm - link.path_loss_db - link.attenuation_db - noise_dbm;
    return capacity_from_snr_db(snr_db, bandwidth_hz, max_spectral_eff);
}

double noise_floor_dbm(double bandwidth_hz, double noise_figure_db) {
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double queueing_latency_ms(double offered_load_bps, double capacity_bps, double queueing_kbits,
                           double saturation_ms) {
    if (capacity_bps <= 0.0) return saturation_ms;
    if (offered_load_bps >= capacity_bps) return saturation_ms;
    const double k_bits = queueing_kbits * 1000.0;
    const double q_ms = k_bits / (capacity_bps - offered_load_bps) * 1000.0;
    return std::min(q_ms, saturation_ms);
}

double flow_latency_ms(const std::vector<LinkState>& serving_path, double offered_load_bps,
                       double capacity_bps, double queueing_kbits, double saturation_ms) {
    if (capacity_bps <= 0.0) throw InvalidParameter("flow_latency_ms: capacity_bps must be > 0");
    double prop = 0.0;
    for (const auto& l : serving_path) prop += l.prop_latency_ms;
    return prop + queueing_latency_ms(offered_load_bps, capacity_bps, queueing_kbits,
                                      saturation_ms);
}

}  // namespace isatn
