#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace aeh {

// Sinusoidal open-circuit source behind its own capacitance, with a leakage
// resistance shunting the bridge input. leakage_resistance may be infinity.
struct PiezoEquivalent {
    double open_circuit_amplitude = 0.0;                                  // V peak
    double frequency = 0.0;                                               // Hz
    double capacitance = 0.0;                                             // F
    double leakage_resistance = std::numeric_limits<double>::infinity();  // ohm
};

// Full-wave diode bridge (ideal-threshold diodes, diode_drop each) feeding a
// storage capacitor and load resistor. load_resistance may be infinity.
struct RectifierStorage {
    double diode_drop = 0.0;                                           // V
    double storage_capacitance = 0.0;                                  // F
    double load_resistance = std::numeric_limits<double>::infinity();  // ohm
};

enum class BridgeState : std::uint8_t { blocking, conducting_positive, conducting_negative };

const char* to_string(BridgeState state);

struct TransientTrace {
    double timestep = 0.0;  // s
    std::vector<double> time;
    std::vector<double> source_voltage;   // open-circuit source v_oc(t)
    std::vector<double> storage_voltage;
    std::vector<double> load_power;       // v_store^2/R_load (0 for infinite load)
    std::vector<BridgeState> bridge_state;
};

struct SteadyStateMetrics {
    double dc_voltage = 0.0;     // mean storage voltage over the tail
    double ripple_pp = 0.0;      // max - min over the tail
    double average_power = 0.0;  // mean load power over the tail
};

// Fixed-step trapezoidal integration of the piecewise-linear network. The
// bridge conducts with polarity sign(v_in) once |v_in| reaches
// v_store + 2*diode_drop and blocks again when its current falls to zero;
// regime crossings are refined to half-step resolution. Requires
// timestep <= 1/(200*frequency) (at least 200 steps per cycle); violations
// and non-positive durations are std::domain_error.
TransientTrace simulate_rectifier(const PiezoEquivalent& piezo, const RectifierStorage& rs,
                                  double timestep, double duration,
                                  double initial_storage_voltage = 0.0);

// Metrics over the trailing `tail_fraction` of the trace (rounded up to at
// least one sample). tail_fraction must lie in (0, 1]; an empty trace is a
// std::domain_error.
SteadyStateMetrics steady_state_metrics(const TransientTrace& trace, double tail_fraction);

// CSV with header "time_s,v_source,v_store,p_load_w,bridge_state", keeping
// every `decimate`-th sample (the first sample always included).
void write_csv(const TransientTrace& trace, std::ostream& out, std::size_t decimate = 1);
void write_csv_file(const TransientTrace& trace, const std::string& path,
                    std::size_t decimate = 1);

}  // namespace aeh
