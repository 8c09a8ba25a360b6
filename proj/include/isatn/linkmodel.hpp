#pragma once

#include <string>
#include <vector>

#include "isatn/scenario.hpp"

namespace isatn {

enum class PathEnv { urban, suburban, rural, air_ground, space_ground };

/// Log-distance path-loss exponent for the environment.
double path_env_exponent(PathEnv env);
PathEnv zone_path_env(ZoneClass zc);

struct LinkState {
    std::string endpoint_a;
    std::string endpoint_b;
    Band band = Band::sub6;
    double distance_km = 0.0;
    double attenuation_db = 0.0;   // weather and other excess losses
    double path_loss_db = 0.0;
    double capacity_bps = 0.0;
    double prop_latency_ms = 0.0;  // >= distance_km / 300
};

/// PL = 32.44 + 20 log10(f_MHz) + 10 n(env) log10(d_km).
double path_loss_db(double distance_km, double carrier_ghz, PathEnv env);

/// Shannon capacity from an SNR budget, clamped to the max spectral
/// efficiency. Deep fades roll off smoothly to zero.
double capacity_from_snr_db(double snr_db, double bandwidth_hz, double max_spectral_eff);

/// Budget form used by the engine: SNR = tx - PL - attenuation - noise.
double link_capacity_bps(const LinkState& link, double tx_power_dbm, double noise_dbm,
                         double bandwidth_hz, double max_spectral_eff = 7.8);

/// Thermal noise floor over the bandwidth plus a noise figure.
double noise_floor_dbm(double bandwidth_hz, double noise_figure_db);

/// Propagation latency plus an M/M/1-style queueing term
/// K / (capacity - load); at or above capacity the latency saturates at the
/// SLA sentinel.
double flow_latency_ms(const std::vector<LinkState>& serving_path, double offered_load_bps,
                       double capacity_bps, double queueing_kbits = 1000.0,
                       double saturation_ms = 250.0);

/// Queueing-only part of the latency model (ms).
double queueing_latency_ms(double offered_load_bps, double capacity_bps, double queueing_kbits,
                           double saturation_ms);

}  // namespace isatn
