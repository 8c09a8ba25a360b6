#include "isatn/twin.hpp"

#include <algorithm>
#include <cmath>

#include "isatn/errors.hpp"

namespace isatn {

namespace {

constexpr double kSeasonalBlend = 0.3;   // weight on the EWMA residual
constexpr double kResidualEwmaAlpha = 0.3;

double nearest_rank_p95(std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const std::size_t rank =
        static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(v.size())));
    const std::size_t idx = std::min(v.size() - 1, rank == 0 ? 0 : rank - 1);
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx), v.end());
    return v[idx];
}

}  // namespace

std::vector<std::vector<double>> forecast_traffic(const HourlyHistory& history,
                                                  int horizon_hours) {
    const int n = static_cast<int>(history.traffic_bits.size());
    if (n < 24) {
        throw InsufficientHistory("forecast_traffic needs >= 24 h, got " + std::to_string(n));
    }
    const std::size_t width = history.traffic_bits.front().size();

    // EWMA of day-over-day residuals per series.
    std::vector<double> ewma(width, 0.0);
    for (int h = 24; h < n; ++h) {
        for (std::size_t k = 0; k < width; ++k) {
            const double resid = history.traffic_bits[static_cast<std::size_t>(h)][k] -
                                 history.traffic_bits[static_cast<std::size_t>(h - 24)][k];
            ewma[k] = kResidualEwmaAlpha * resid + (1.0 - kResidualEwmaAlpha) * ewma[k];
        }
    }

    std::vector<std::vector<double>> out(static_cast<std::size_t>(horizon_hours));
    for (int h = 0; h < horizon_hours; ++h) {
        auto& row = out[static_cast<std::size_t>(h)];
        row.resize(width);
        // same-hour value from the most recent complete day
        const int src = n - 24 + (h % 24);
        for (std::size_t k = 0; k < width; ++k) {
            row[k] = std::max(0.0, history.traffic_bits[static_cast<std::size_t>(src)][k] +
                                       kSeasonalBlend * ewma[k]);
        }
    }
    return out;
}

CarbonForecast forecast_carbon(const CarbonTrace& trace, int history_hours, int horizon_hours) {
    if (history_hours < 24) {
        throw InsufficientHistory("forecast_carbon needs >= 24 h of trace history");
    }
    if (history_hours > trace.hours) {
        throw OutOfRange("forecast_carbon: history beyond trace");
    }
    CarbonForecast out;
    const std::size_t nreg = trace.regions.size();
    out.intensity.resize(static_cast<std::size_t>(horizon_hours));
    out.renewable.resize(static_cast<std::size_t>(horizon_hours));
    for (int h = 0; h < horizon_hours; ++h) {
        auto& irow = out.intensity[static_cast<std::size_t>(h)];
        auto& rrow = out.renewable[static_cast<std::size_t>(h)];
        irow.resize(nreg);
        rrow.resize(nreg);
        const int src = history_hours - 24 + (h % 24);
        for (std::size_t r = 0; r < nreg; ++r) {
            const auto& p = trace.at(src, static_cast<int>(r));
            irow[r] = p.intensity_gco2_per_kwh;
            rrow[r] = std::clamp(p.renewable_fraction, 0.0, 1.0);
        }
    }
    return out;
}

void twin_exo_tick(const World& w, const Forecast& fc, const TwinOptions& opt, std::int64_t t_min,
                   int dt_min, ExoTick& out) {
    const int hour_of_run = static_cast<int>(t_min / 60);
    const int h = hour_of_run - fc.start_hour;
    if (h < 0 || h >= fc.horizon_hours) {
        throw HorizonMismatch("twin tick at hour " + std::to_string(hour_of_run) +
                              " outside forecast [" + std::to_string(fc.start_hour) + ", " +
                              std::to_string(fc.start_hour + fc.horizon_hours) + ")");
    }
    const std::size_t nz = w.zones.size();
    out.offered_bits.resize(nz * 3);
    const double frac = dt_min / 60.0;
    const auto& traffic = fc.traffic_bits[static_cast<std::size_t>(h)];
    for (std::size_t k = 0; k < nz * 3; ++k) out.offered_bits[k] = traffic[k] * frac;

    out.intensity.assign(w.regions.size(), 0.0);
    out.renewable.assign(w.regions.size(), 0.0);
    if (opt.use_carbon && !fc.intensity.empty()) {
        const auto& irow = fc.intensity[static_cast<std::size_t>(h)];
        const auto& rrow = fc.renewable[static_cast<std::size_t>(h)];
        for (std::size_t r = 0; r < w.regions.size(); ++r) {
            out.intensity[r] = irow[r];
            out.renewable[r] = rrow[r];
        }
    }
    switch (opt.rain) {
        case TwinRainMode::scheduled: {
            const double t_hours = static_cast<double>(t_min) / 60.0;
            out.ka_atten_db = rain_attenuation_db(w.spec.rain_events, Band::ka, t_hours);
            out.micro_atten_db =
                rain_attenuation_db(w.spec.rain_events, Band::microwave_backhaul, t_hours);
            break;
        }
        case TwinRainMode::persist:
            out.ka_atten_db = opt.persist_ka_db;
            out.micro_atten_db = opt.persist_micro_db;
            break;
        case TwinRainMode::clear:
            out.ka_atten_db = 0.0;
            out.micro_atten_db = 0.0;
            break;
    }
}

namespace {

struct HourAccum {
    std::array<double, 3> offered{};
    std::array<double, 3> served{};
    std::array<std::vector<double>, 3> lat;
    double emissions = 0.0;
    double kwh = 0.0;
    std::array<double, 4> layer{};
    int violations = 0;

    void add(const KpiTick& k) {
        for (int c = 0; c < 3; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            offered[ci] += k.offered_bits[ci];
            served[ci] += k.served_bits[ci];
            if (k.offered_bits[ci] > 0.0) lat[ci].push_back(k.latency_p95_ms[ci]);
        }
        emissions += k.emissions_g;
        for (int i = 0; i < 4; ++i) {
            layer[static_cast<std::size_t>(i)] += k.layer_kwh[static_cast<std::size_t>(i)];
            kwh += k.layer_kwh[static_cast<std::size_t>(i)];
        }
        violations += k.sla_violations;
    }

    HourEval finish(const SlaSpec& sla) {
        HourEval e;
        e.emissions_g = emissions;
        e.kwh = kwh;
        e.layer_kwh = layer;
        e.sla_violations = violations;
        double off_tot = 0.0;
        double srv_tot = 0.0;
        for (int c = 0; c < 3; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            e.bits_offered += offered[ci];
            e.bits_served += served[ci];
            e.served_fraction[ci] = offered[ci] > 0.0 ? served[ci] / offered[ci] : 1.0;
            e.p95_ms[ci] = nearest_rank_p95(lat[ci]);
            off_tot += offered[ci];
            srv_tot += served[ci];
        }
        e.served_total_fraction = off_tot > 0.0 ? srv_tot / off_tot : 1.0;
        e.feasible = e.served_fraction[0] >= sla.embb_served_fraction &&
                     e.served_fraction[2] >= sla.miot_served_fraction &&
                     e.served_fraction[1] >= 0.999 &&
                     e.p95_ms[1] <= sla.urllc_latency_ms;
        return e;
    }
};

}  // namespace

HourEval twin_eval_hour(const World& w, EpochState& st, const HourConfig& cfg, int hour_of_run,
                        const Forecast& fc, const TwinOptions& opt) {
    apply_hour_config(w, st, cfg);
    const int dt = opt.tick_minutes;
    HourAccum acc;
    ExoTick exo;
    std::int64_t t = static_cast<std::int64_t>(hour_of_run) * 60;
    st.t_min = t;
    for (int m = 0; m < 60; m += dt) {
        twin_exo_tick(w, fc, opt, t + m, dt, exo);
        acc.add(step(w, st, exo, dt));
    }
    return acc.finish(w.spec.sla);
}

namespace {

ScenarioResult finish_result(const std::vector<KpiTick>& kpis, const SlaSpec& sla,
                             const std::vector<int>& risk_hours) {
    ScenarioResult r;
    std::array<double, 3> offered{};
    std::array<double, 3> served{};
    std::array<std::vector<double>, 3> lat;
    for (const auto& k : kpis) {
        r.emissions_g += k.emissions_g;
        for (int i = 0; i < 4; ++i) {
            const auto li = static_cast<std::size_t>(i);
            r.energy_kwh[li] += k.layer_kwh[li];
            r.total_kwh += k.layer_kwh[li];
        }
        for (int c = 0; c < 3; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            offered[ci] += k.offered_bits[ci];
            served[ci] += k.served_bits[ci];
            if (k.offered_bits[ci] > 0.0) lat[ci].push_back(k.latency_p95_ms[ci]);
            r.bits_offered += k.offered_bits[ci];
            r.bits_served += k.served_bits[ci];
        }
        r.sla_violations += k.sla_violations;
    }
    for (int c = 0; c < 3; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        r.served_fraction[ci] = offered[ci] > 0.0 ? served[ci] / offered[ci] : 1.0;
        r.p95_latency_ms[ci] = nearest_rank_p95(lat[ci]);
    }
    (void)sla;
    r.risk_hours = risk_hours;
    return r;
}

}  // namespace

ScenarioResult evaluate_plan(const World& w, const EpochState& start, const DayPlan& plan,
                             const Forecast& fc, const TwinOptions& opt,
                             std::vector<KpiTick>* kpis_out) {
    if (static_cast<int>(plan.configs.size()) > fc.horizon_hours ||
        plan.start_hour < fc.start_hour) {
        throw HorizonMismatch("plan does not fit the forecast horizon");
    }
    EpochState st = start;
    st.t_min = static_cast<std::int64_t>(plan.start_hour) * 60;
    std::vector<KpiTick> kpis;
    ExoTick exo;
    for (std::size_t h = 0; h < plan.configs.size(); ++h) {
        apply_hour_config(w, st, plan.configs[h]);
        const std::int64_t t0 = (static_cast<std::int64_t>(plan.start_hour) + h) * 60;
        for (int m = 0; m < 60; m += opt.tick_minutes) {
            twin_exo_tick(w, fc, opt, t0 + m, opt.tick_minutes, exo);
            kpis.push_back(step(w, st, exo, opt.tick_minutes));
        }
    }
    ScenarioResult r = finish_result(kpis, w.spec.sla, {});
    if (kpis_out != nullptr) *kpis_out = std::move(kpis);
    return r;
}

ScenarioResult evaluate_plan_recorded(const World& w, const EpochState& start, const DayPlan& plan,
                                      const std::vector<ExoTick>& ticks, int tick_minutes,
                                      std::vector<KpiTick>* kpis_out) {
    const int ticks_per_hour = 60 / tick_minutes;
    if (ticks.size() < plan.configs.size() * static_cast<std::size_t>(ticks_per_hour)) {
        throw HorizonMismatch("recorded series shorter than the plan");
    }
    EpochState st = start;
    st.t_min = static_cast<std::int64_t>(plan.start_hour) * 60;
    std::vector<KpiTick> kpis;
    std::size_t cursor = 0;
    for (std::size_t h = 0; h < plan.configs.size(); ++h) {
        apply_hour_config(w, st, plan.configs[h]);
        for (int m = 0; m < ticks_per_hour; ++m) {
            kpis.push_back(step(w, st, ticks[cursor++], tick_minutes));
        }
    }
    ScenarioResult r = finish_result(kpis, w.spec.sla, {});
    if (kpis_out != nullptr) *kpis_out = std::move(kpis);
    return r;
}

}  // namespace isatn
