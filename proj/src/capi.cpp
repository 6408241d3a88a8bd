#include "aeh.h"

#include <cmath>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "aeh/acoustics.hpp"
#include "aeh/beam.hpp"
#include "aeh/circuit.hpp"
#include "aeh/config.hpp"
#include "aeh/design.hpp"
#include "aeh/errors.hpp"
#include "aeh/spectrum.hpp"
#include "aeh/wav.hpp"

struct aeh_config {
    aeh::ProjectConfig cfg;
};

struct aeh_spectrum {
    aeh::Spectrum spectrum;
};

struct aeh_trace {
    aeh::TransientTrace trace;
};

namespace {

thread_local std::string t_last_error;

// Translate C++ failures onto the C status codes (which double as the CLI
// exit codes).
aeh_status capture(std::exception_ptr error) {
    try {
        std::rethrow_exception(error);
    } catch (const aeh::ConfigError& e) {
        t_last_error = e.what();
        return AEH_CONFIG_ERROR;
    } catch (const aeh::ParseError& e) {
        t_last_error = e.what();
        return AEH_INPUT_ERROR;
    } catch (const std::domain_error& e) {
        t_last_error = e.what();
        return AEH_DOMAIN_ERROR;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return AEH_DOMAIN_ERROR;
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return AEH_ERROR;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return AEH_ERROR;
    } catch (...) {
        t_last_error = "unknown failure";
        return AEH_ERROR;
    }
}

template <typename Fn>
aeh_status guarded(Fn&& fn) {
    try {
        fn();
    } catch (...) {
        return capture(std::current_exception());
    }
    t_last_error.clear();
    return AEH_OK;
}

aeh_status fail_domain(const char* message) {
    t_last_error = message;
    return AEH_DOMAIN_ERROR;
}

// Modes 1..count for the configured beam.
std::vector<aeh::ModeSolution> compute_modes(const aeh::ProjectConfig& cfg, std::size_t count) {
    const aeh::CompositeSection section =
        aeh::section_properties(cfg.beam, cfg.section_model);
    return aeh::natural_frequencies(section, cfg.beam.length, count, cfg.root_tolerance);
}

aeh::ModeSolution from_c_mode(const aeh_mode& mode) {
    aeh::ModeSolution m;
    m.index = mode.index;
    m.lambda = mode.lambda;
    m.beta = mode.beta;
    m.omega = mode.omega_rad_s;
    m.frequency = mode.frequency_hz;
    m.length = mode.length_m;
    return m;
}

}  // namespace

extern "C" {

const char* aeh_version(void) { return "0.1.0"; }

const char* aeh_last_error(void) { return t_last_error.c_str(); }

aeh_config* aeh_config_create(void) {
    try {
        t_last_error.clear();
        return new aeh_config{aeh::ProjectConfig::defaults()};
    } catch (...) {
        capture(std::current_exception());
        return nullptr;
    }
}

aeh_status aeh_config_load(const char* path, aeh_config** out) {
    if (!path || !out) return fail_domain("null argument");
    return guarded([&] { *out = new aeh_config{aeh::ProjectConfig::load(path)}; });
}

aeh_config* aeh_config_clone(const aeh_config* cfg) {
    if (!cfg) {
        fail_domain("config is null");
        return nullptr;
    }
    try {
        t_last_error.clear();
        return new aeh_config{cfg->cfg};
    } catch (...) {
        capture(std::current_exception());
        return nullptr;
    }
}

void aeh_config_free(aeh_config* cfg) { delete cfg; }

aeh_status aeh_config_get(const aeh_config* cfg, const char* key, double* value) {
    if (!cfg || !key || !value) return fail_domain("null argument");
    return guarded([&] { *value = cfg->cfg.get(key); });
}

aeh_status aeh_config_set(aeh_config* cfg, const char* key, double value) {
    if (!cfg || !key) return fail_domain("null argument");
    return guarded([&] { cfg->cfg.set(key, value); });
}

aeh_status aeh_modes(const aeh_config* cfg, size_t count, aeh_mode* modes) {
    if (!cfg || !modes) return fail_domain("null argument");
    if (count == 0) return fail_domain("count must be at least 1");
    return guarded([&] {
        const auto solutions = compute_modes(cfg->cfg, count);
        for (size_t k = 0; k < count; ++k) {
            modes[k].index = solutions[k].index;
            modes[k].lambda = solutions[k].lambda;
            modes[k].beta = solutions[k].beta;
            modes[k].omega_rad_s = solutions[k].omega;
            modes[k].frequency_hz = solutions[k].frequency;
            modes[k].length_m = solutions[k].length;
        }
    });
}

aeh_status aeh_mode_shape(const aeh_mode* mode, double x, double* value) {
    if (!mode || !value) return fail_domain("null argument");
    return guarded([&] { *value = aeh::mode_shape(from_c_mode(*mode), x); });
}

aeh_status aeh_mode_curvature(const aeh_mode* mode, double x, double* value) {
    if (!mode || !value) return fail_domain("null argument");
    return guarded([&] { *value = aeh::mode_curvature(from_c_mode(*mode), x); });
}

aeh_status aeh_length_for_frequency(const aeh_config* cfg, double target_hz, int mode_index,
                                    double* length_m) {
    if (!cfg || !length_m) return fail_domain("null argument");
    return guarded([&] {
        const aeh::CompositeSection section =
            aeh::section_properties(cfg->cfg.beam, cfg->cfg.section_model);
        *length_m = aeh::length_for_frequency(section, {target_hz, mode_index});
    });
}

aeh_status aeh_optimal_patch_start(const aeh_config* cfg, int mode_index, size_t grid_points,
                                   double* patch_start_m, double* objective,
                                   double* profile_starts, double* profile_values) {
    if (!cfg || !patch_start_m || !objective) return fail_domain("null argument");
    if (mode_index < 1) return fail_domain("mode index must be at least 1");
    return guarded([&] {
        const auto modes = compute_modes(cfg->cfg, static_cast<std::size_t>(mode_index));
        const aeh::PlacementResult result =
            aeh::optimal_patch_start(cfg->cfg.beam, modes.back(), grid_points);
        *patch_start_m = result.patch_start;
        *objective = result.objective;
        if (profile_starts || profile_values) {
            for (size_t i = 0; i < result.profile.size(); ++i) {
                if (profile_starts) profile_starts[i] = result.profile[i].patch_start;
                if (profile_values) profile_values[i] = result.profile[i].objective;
            }
        }
    });
}

aeh_status aeh_spl_to_pressure(double spl_db, double* pressure_pa) {
    if (!pressure_pa) return fail_domain("null argument");
    return guarded([&] { *pressure_pa = aeh::spl_to_pressure(spl_db); });
}

aeh_status aeh_combine_incoherent(const double* levels_db, size_t count, double* total_db) {
    if (!levels_db || !total_db) return fail_domain("null argument");
    return guarded([&] {
        *total_db = aeh::combine_incoherent(std::vector<double>(levels_db, levels_db + count));
    });
}

aeh_status aeh_forced_response(const aeh_config* cfg, int mode_index, double drive_hz,
                               double spl_db, aeh_response* out) {
    if (!cfg || !out) return fail_domain("null argument");
    if (mode_index < 1) return fail_domain("mode index must be at least 1");
    return guarded([&] {
        const aeh::ProjectConfig& c = cfg->cfg;
        const aeh::CompositeSection section = aeh::section_properties(c.beam, c.section_model);
        const auto modes = compute_modes(c, static_cast<std::size_t>(mode_index));
        // SPL is an RMS level; the sinusoid's peak pressure is sqrt(2) RMS.
        const double amplitude = std::sqrt(2.0) * aeh::spl_to_pressure(spl_db);
        const aeh::ForcedResponse r = aeh::modal_forced_response(
            c.beam, section, modes.back(), amplitude, drive_hz, c.damping_ratio, c.coupling);
        out->modal_amplitude_m = r.modal_amplitude;
        out->tip_displacement_m = r.tip_displacement;
        out->max_surface_strain = r.max_surface_strain;
        out->open_circuit_voltage_v = r.open_circuit_voltage;
    });
}

aeh_status aeh_spectrum_from_wav(const aeh_config* cfg, const char* path,
                                 aeh_spectrum** out) {
    if (!cfg || !path || !out) return fail_domain("null argument");
    return guarded([&] {
        const aeh::AudioClip clip = aeh::load_wav_file(path);
        *out = new aeh_spectrum{
            aeh::power_spectrum(clip, cfg->cfg.segment_length, cfg->cfg.window)};
    });
}

void aeh_spectrum_free(aeh_spectrum* spectrum) { delete spectrum; }

aeh_status aeh_spectrum_bins(const aeh_spectrum* spectrum, size_t* count) {
    if (!spectrum || !count) return fail_domain("null argument");
    *count = spectrum->spectrum.power.size();
    t_last_error.clear();
    return AEH_OK;
}

aeh_status aeh_spectrum_bin(const aeh_spectrum* spectrum, size_t index, double* frequency_hz,
                            double* power) {
    if (!spectrum) return fail_domain("null argument");
    if (index >= spectrum->spectrum.power.size()) return fail_domain("bin index out of range");
    if (frequency_hz) *frequency_hz = spectrum->spectrum.frequencies[index];
    if (power) *power = spectrum->spectrum.power[index];
    t_last_error.clear();
    return AEH_OK;
}

aeh_status aeh_dominant_harmonic(const aeh_spectrum* spectrum, double band_low_hz,
                                 double band_high_hz, double* frequency_hz, double* power) {
    if (!spectrum || !frequency_hz) return fail_domain("null argument");
    return guarded([&] {
        const aeh::DominantTone tone =
            aeh::dominant_harmonic(spectrum->spectrum, band_low_hz, band_high_hz);
        *frequency_hz = tone.frequency;
        if (power) *power = tone.power;
    });
}

aeh_status aeh_spectrum_write_csv(const aeh_spectrum* spectrum, const char* path) {
    if (!spectrum || !path) return fail_domain("null argument");
    return guarded([&] { aeh::write_csv_file(spectrum->spectrum, path); });
}

aeh_status aeh_simulate_rectifier(const aeh_config* cfg, double amplitude_v,
                                  double frequency_hz, double timestep_s, double duration_s,
                                  double initial_storage_v, aeh_trace** out) {
    if (!cfg || !out) return fail_domain("null argument");
    return guarded([&] {
        aeh::PiezoEquivalent piezo;
        piezo.open_circuit_amplitude = amplitude_v;
        piezo.frequency = frequency_hz;
        piezo.capacitance = cfg->cfg.coupling.capacitance;
        piezo.leakage_resistance = cfg->cfg.coupling.leakage_resistance;
        *out = new aeh_trace{aeh::simulate_rectifier(piezo, cfg->cfg.rectifier, timestep_s,
                                                     duration_s, initial_storage_v)};
    });
}

void aeh_trace_free(aeh_trace* trace) { delete trace; }

aeh_status aeh_trace_samples(const aeh_trace* trace, size_t* count) {
    if (!trace || !count) return fail_domain("null argument");
    *count = trace->trace.time.size();
    t_last_error.clear();
    return AEH_OK;
}

aeh_status aeh_trace_metrics(const aeh_trace* trace, double tail_fraction, double* dc_v,
                             double* ripple_pp_v, double* average_power_w) {
    if (!trace) return fail_domain("null argument");
    return guarded([&] {
        const aeh::SteadyStateMetrics metrics =
            aeh::steady_state_metrics(trace->trace, tail_fraction);
        if (dc_v) *dc_v = metrics.dc_voltage;
        if (ripple_pp_v) *ripple_pp_v = metrics.ripple_pp;
        if (average_power_w) *average_power_w = metrics.average_power;
    });
}

aeh_status aeh_trace_write_csv(const aeh_trace* trace, const char* path, size_t decimate) {
    if (!trace || !path) return fail_domain("null argument");
    return guarded([&] { aeh::write_csv_file(trace->trace, path, decimate); });
}

} /* extern "C" */
