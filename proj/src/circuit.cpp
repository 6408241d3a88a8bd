#include "aeh/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace aeh {
namespace {

constexpr double pi = std::numbers::pi;

// One conductance term; infinite resistance legitimately contributes zero.
double conductance(double resistance) {
    return std::isinf(resistance) ? 0.0 : 1.0 / resistance;
}

struct NetworkState {
    double v_store = 0.0;  // storage capacitor voltage
    double v_cp = 0.0;     // voltage across the series source capacitance
    BridgeState regime = BridgeState::blocking;
};

// The piecewise-linear network:
//   v_in = v_oc(t) - v_cp is the bridge input node,
//   blocking:   C_p dv_cp/dt = (v_oc - v_cp)/R_p,   C_s dv_s/dt = -v_s/R_L
//   conducting: v_in clamped to s*(v_s + 2V_d), s = +-1, giving
//     (C_s + C_p) dv_s/dt = s*C_p*dv_oc/dt - (v_s + 2V_d)/R_p - v_s/R_L
// Both regimes are linear, so a trapezoidal step has a closed form.
class RectifierNetwork {
public:
    RectifierNetwork(const PiezoEquivalent& piezo, const RectifierStorage& rs)
        : amplitude_(piezo.open_circuit_amplitude),
          omega_(2.0 * pi * piezo.frequency),
          cp_(piezo.capacitance),
          gp_(conductance(piezo.leakage_resistance)),
          vd_(rs.diode_drop),
          cs_(rs.storage_capacitance),
          gl_(conductance(rs.load_resistance)) {}

    double source(double t) const { return amplitude_ * std::sin(omega_ * t); }
    double source_rate(double t) const { return amplitude_ * omega_ * std::cos(omega_ * t); }
    double load_power(double v_store) const { return v_store * v_store * gl_; }

    NetworkState step_blocking(const NetworkState& s, double t, double h) const {
        NetworkState next = s;
        // Trapezoidal update of C_p dv/dt = g_p*(v_oc - v).
        const double a = 0.5 * h * gp_ / cp_;
        next.v_cp = (s.v_cp * (1.0 - a) + a * (source(t) + source(t + h))) / (1.0 + a);
        // Storage sees only the load: plain RC decay.
        const double b = 0.5 * h * gl_ / cs_;
        next.v_store = std::max(s.v_store * (1.0 - b) / (1.0 + b), 0.0);
        next.regime = BridgeState::blocking;
        return next;
    }

    NetworkState step_conducting(const NetworkState& s, double t, double h, double sign) const {
        const double ct = cs_ + cp_;
        const double rate = (gp_ + gl_) / ct;
        const auto forcing = [&](double at) {
            return sign * cp_ * source_rate(at) - 2.0 * vd_ * gp_;
        };
        const double a = 0.5 * h * rate;
        NetworkState next = s;
        next.v_store =
            (s.v_store * (1.0 - a) + 0.5 * h / ct * (forcing(t) + forcing(t + h))) / (1.0 + a);
        next.v_store = std::max(next.v_store, 0.0);
        // The clamp fixes the input node while the bridge conducts.
        next.v_cp = source(t + h) - sign * (next.v_store + 2.0 * vd_);
        next.regime = sign > 0.0 ? BridgeState::conducting_positive
                                 : BridgeState::conducting_negative;
        return next;
    }

    // Positive when the bridge would start (or keep) conducting: how far the
    // free input node sits beyond the diode threshold.
    double conduction_excess(const NetworkState& s, double t, double* sign_out) const {
        const double v_in = source(t) - s.v_cp;
        const double sign = v_in >= 0.0 ? 1.0 : -1.0;
        if (sign_out) *sign_out = sign;
        return sign * v_in - (s.v_store + 2.0 * vd_);
    }

    // Bridge current while conducting; conduction is only valid while it is
    // non-negative (diodes cannot pass reverse current).
    double bridge_current(const NetworkState& s, double t, double sign) const {
        const double ct = cs_ + cp_;
        const double dv_store =
            (sign * cp_ * source_rate(t) - (s.v_store + 2.0 * vd_) * gp_ - s.v_store * gl_) / ct;
        return cs_ * dv_store + s.v_store * gl_;
    }

    // Entering conduction: move the overshoot charge through the bridge so
    // the input node lands exactly on the clamp, conserving charge between
    // the series and storage capacitors.
    NetworkState snap_to_clamp(const NetworkState& s, double t, double sign) const {
        NetworkState next = s;
        const double v_in = source(t) - s.v_cp;
        const double excess = sign * v_in - (s.v_store + 2.0 * vd_);
        if (excess > 0.0) {
            const double charge = excess / (1.0 / cp_ + 1.0 / cs_);
            next.v_cp += sign * charge / cp_;
            next.v_store += charge / cs_;
        }
        next.regime = sign > 0.0 ? BridgeState::conducting_positive
                                 : BridgeState::conducting_negative;
        return next;
    }

private:
    double amplitude_;
    double omega_;
    double cp_;
    double gp_;
    double vd_;
    double cs_;
    double gl_;
};

double regime_sign(BridgeState regime) {
    return regime == BridgeState::conducting_negative ? -1.0 : 1.0;
}

// Advance one full step, refining any regime crossing to half-step
// resolution (one bisection of the crossing time).
NetworkState advance(const RectifierNetwork& net, const NetworkState& state, double t,
                     double h) {
    if (state.regime == BridgeState::blocking) {
        NetworkState full = net.step_blocking(state, t, h);
        double sign = 1.0;
        if (net.conduction_excess(full, t + h, &sign) < 0.0) return full;

        NetworkState mid = net.step_blocking(state, t, 0.5 * h);
        if (net.conduction_excess(mid, t + 0.5 * h, &sign) >= 0.0) {
            mid = net.snap_to_clamp(mid, t + 0.5 * h, sign);
            return net.step_conducting(mid, t + 0.5 * h, 0.5 * h, sign);
        }
        NetworkState end = net.step_blocking(mid, t + 0.5 * h, 0.5 * h);
        if (net.conduction_excess(end, t + h, &sign) >= 0.0)
            end = net.snap_to_clamp(end, t + h, sign);
        return end;
    }

    const double sign = regime_sign(state.regime);
    NetworkState full = net.step_conducting(state, t, h, sign);
    if (net.bridge_current(full, t + h, sign) >= 0.0) return full;

    NetworkState mid = net.step_conducting(state, t, 0.5 * h, sign);
    if (net.bridge_current(mid, t + 0.5 * h, sign) < 0.0) {
        mid.regime = BridgeState::blocking;
        return net.step_blocking(mid, t + 0.5 * h, 0.5 * h);
    }
    NetworkState end = net.step_conducting(mid, t + 0.5 * h, 0.5 * h, sign);
    end.regime = BridgeState::blocking;
    return end;
}

}  // namespace

const char* to_string(BridgeState state) {
    switch (state) {
        case BridgeState::conducting_positive: return "conducting-positive";
        case BridgeState::conducting_negative: return "conducting-negative";
        default: return "blocking";
    }
}

TransientTrace simulate_rectifier(const PiezoEquivalent& piezo, const RectifierStorage& rs,
                                  double timestep, double duration,
                                  double initial_storage_voltage) {
    if (!(std::isfinite(piezo.open_circuit_amplitude) && piezo.open_circuit_amplitude >= 0.0))
        throw std::domain_error("source amplitude must be non-negative");
    if (!(std::isfinite(piezo.frequency) && piezo.frequency > 0.0))
        throw std::domain_error("source frequency must be positive");
    if (!(std::isfinite(piezo.capacitance) && piezo.capacitance > 0.0))
        throw std::domain_error("source capacitance must be positive");
    if (!(piezo.leakage_resistance > 0.0))
        throw std::domain_error("leakage resistance must be positive");
    if (!(std::isfinite(rs.diode_drop) && rs.diode_drop >= 0.0))
        throw std::domain_error("diode drop must be non-negative");
    if (!(std::isfinite(rs.storage_capacitance) && rs.storage_capacitance > 0.0))
        throw std::domain_error("storage capacitance must be positive");
    if (!(rs.load_resistance > 0.0))
        throw std::domain_error("load resistance must be positive");
    if (!(std::isfinite(timestep) && timestep > 0.0))
        throw std::domain_error("timestep must be positive");
    if (!(std::isfinite(duration) && duration >= timestep))
        throw std::domain_error("duration must cover at least one timestep");
    if (timestep * 200.0 * piezo.frequency > 1.0 * (1.0 + 1e-12))
        throw std::domain_error("timestep must be at most 1/(200*frequency)");
    if (!(std::isfinite(initial_storage_voltage) && initial_storage_voltage >= 0.0))
        throw std::domain_error("initial storage voltage must be non-negative");

    const RectifierNetwork net(piezo, rs);
    const std::size_t steps = static_cast<std::size_t>(std::llround(duration / timestep));

    NetworkState state;
    state.v_store = initial_storage_voltage;

    TransientTrace trace;
    trace.timestep = timestep;
    trace.time.reserve(steps + 1);
    trace.source_voltage.reserve(steps + 1);
    trace.storage_voltage.reserve(steps + 1);
    trace.load_power.reserve(steps + 1);
    trace.bridge_state.reserve(steps + 1);

    const auto record = [&](double t) {
        trace.time.push_back(t);
        trace.source_voltage.push_back(net.source(t));
        trace.storage_voltage.push_back(state.v_store);
        trace.load_power.push_back(net.load_power(state.v_store));
        trace.bridge_state.push_back(state.regime);
    };

    record(0.0);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * timestep;
        state = advance(net, state, t, timestep);
        record(static_cast<double>(i + 1) * timestep);
    }
    return trace;
}

SteadyStateMetrics steady_state_metrics(const TransientTrace& trace, double tail_fraction) {
    if (trace.storage_voltage.empty()) throw std::domain_error("trace is empty");
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw std::domain_error("tail_fraction must lie in (0, 1]");

    const std::size_t n = trace.storage_voltage.size();
    std::size_t count = static_cast<std::size_t>(
        std::ceil(tail_fraction * static_cast<double>(n)));
    count = std::clamp<std::size_t>(count, 1, n);
    const std::size_t begin = n - count;

    SteadyStateMetrics metrics;
    double lo = trace.storage_voltage[begin], hi = lo;
    for (std::size_t i = begin; i < n; ++i) {
        const double v = trace.storage_voltage[i];
        metrics.dc_voltage += v;
        metrics.average_power += trace.load_power[i];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    metrics.dc_voltage /= static_cast<double>(count);
    metrics.average_power /= static_cast<double>(count);
    metrics.ripple_pp = hi - lo;
    return metrics;
}

void write_csv(const TransientTrace& trace, std::ostream& out, std::size_t decimate) {
    if (decimate == 0) throw std::domain_error("decimate must be at least 1");
    out << "time_s,v_source,v_store,p_load_w,bridge_state\n";
    char line[160];
    for (std::size_t i = 0; i < trace.time.size(); i += decimate) {
        std::snprintf(line, sizeof line, "%.9f,%.9f,%.9f,%.15f,%s\n", trace.time[i],
                      trace.source_voltage[i], trace.storage_voltage[i], trace.load_power[i],
                      to_string(trace.bridge_state[i]));
        out << line;
    }
}

void write_csv_file(const TransientTrace& trace, const std::string& path,
                    std::size_t decimate) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(trace, out, decimate);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace aeh
