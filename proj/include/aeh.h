/* aeh.h — C interface to the acoustic energy harvester design toolkit.
 *
 * The library computes bending modes of a layered cantilever, tunes its
 * length to a target frequency, places the piezo patch, extracts dominant
 * tones from WAV recordings, evaluates the acoustically forced response and
 * simulates the rectifier/storage circuit.
 *
 * Conventions:
 *   - Every fallible function returns aeh_status; outputs are written through
 *     pointers only on AEH_OK.
 *   - aeh_last_error() returns a thread-local message for the most recent
 *     failure on the calling thread.
 *   - Objects created by aeh_*_create/load functions must be released with
 *     the matching aeh_*_free; freeing NULL is a no-op.
 */
#ifndef AEH_H
#define AEH_H

#include <stddef.h>

#if defined(_WIN32)
#  define AEH_API __declspec(dllexport)
#else
#  define AEH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aeh_status {
    AEH_OK = 0,
    AEH_ERROR = 1,         /* unexpected internal failure */
    AEH_CONFIG_ERROR = 2,  /* bad configuration file or value */
    AEH_INPUT_ERROR = 3,   /* unreadable or malformed input data */
    AEH_DOMAIN_ERROR = 4   /* arguments outside the model's domain */
} aeh_status;

/* Opaque handles. */
typedef struct aeh_config aeh_config;     /* full toolkit configuration */
typedef struct aeh_spectrum aeh_spectrum; /* one-sided averaged power spectrum */
typedef struct aeh_trace aeh_trace;       /* rectifier transient trace */

AEH_API const char* aeh_version(void);

/* Message for the most recent failure on this thread ("" after success). */
AEH_API const char* aeh_last_error(void);

/* ---- configuration ----------------------------------------------------- */

/* Built-in defaults: copper substrate + PVDF patch, uniform-bilayer section.
 * The piezo strain constant d31 is unset by default; voltage computations
 * fail until it is provided (config file or aeh_config_set). */
AEH_API aeh_config* aeh_config_create(void);

/* Defaults overlaid with a JSON file (comments allowed). */
AEH_API aeh_status aeh_config_load(const char* path, aeh_config** out);

AEH_API aeh_config* aeh_config_clone(const aeh_config* cfg);
AEH_API void aeh_config_free(aeh_config* cfg);

/* Numeric fields addressed by dotted keys matching the JSON layout, e.g.
 * "beam.length", "beam.piezo_start", "coupling.d31",
 * "rectifier.storage_capacitance", "spectrum.band_low". */
AEH_API aeh_status aeh_config_get(const aeh_config* cfg, const char* key, double* value);
AEH_API aeh_status aeh_config_set(aeh_config* cfg, const char* key, double value);

/* ---- beam modes --------------------------------------------------------- */

typedef struct aeh_mode {
    int index;           /* 1-based mode number */
    double lambda;       /* root of the clamped-free frequency equation */
    double beta;         /* mode-shape coefficient */
    double omega_rad_s;  /* angular natural frequency */
    double frequency_hz;
    double length_m;     /* beam length the mode was computed for */
} aeh_mode;

/* First `count` modes of the configured beam into modes[0..count-1]. */
AEH_API aeh_status aeh_modes(const aeh_config* cfg, size_t count, aeh_mode* modes);

/* Mode shape W(x) and curvature W''(x); x in [0, mode->length_m]. */
AEH_API aeh_status aeh_mode_shape(const aeh_mode* mode, double x, double* value);
AEH_API aeh_status aeh_mode_curvature(const aeh_mode* mode, double x, double* value);

/* ---- design ------------------------------------------------------------- */

/* Beam length placing the configured section's mode `mode_index` at
 * target_hz. */
AEH_API aeh_status aeh_length_for_frequency(const aeh_config* cfg, double target_hz,
                                            int mode_index, double* length_m);

/* Patch start maximizing the integral of |W''| over the patch for mode
 * `mode_index`, searched on a uniform grid of `grid_points` starts. The
 * objective profile is optionally written to profile_starts/profile_values
 * (each of size grid_points) when non-NULL. */
AEH_API aeh_status aeh_optimal_patch_start(const aeh_config* cfg, int mode_index,
                                           size_t grid_points, double* patch_start_m,
                                           double* objective, double* profile_starts,
                                           double* profile_values);

/* ---- acoustics ---------------------------------------------------------- */

AEH_API aeh_status aeh_spl_to_pressure(double spl_db, double* pressure_pa);

/* Incoherent (power) combination of `count` levels in dB. */
AEH_API aeh_status aeh_combine_incoherent(const double* levels_db, size_t count,
                                          double* total_db);

typedef struct aeh_response {
    double modal_amplitude_m;
    double tip_displacement_m;
    double max_surface_strain;
    double open_circuit_voltage_v;  /* peak */
} aeh_response;

/* Steady response of mode `mode_index` to a pure tone at drive_hz whose RMS
 * sound pressure level is spl_db (the sinusoid's peak pressure is sqrt(2)
 * times the RMS value). */
AEH_API aeh_status aeh_forced_response(const aeh_config* cfg, int mode_index,
                                       double drive_hz, double spl_db,
                                       aeh_response* out);

/* ---- spectrum ----------------------------------------------------------- */

/* Welch power spectrum of a PCM WAV file using the configured segment length
 * and window. */
AEH_API aeh_status aeh_spectrum_from_wav(const aeh_config* cfg, const char* path,
                                         aeh_spectrum** out);
AEH_API void aeh_spectrum_free(aeh_spectrum* spectrum);

AEH_API aeh_status aeh_spectrum_bins(const aeh_spectrum* spectrum, size_t* count);
AEH_API aeh_status aeh_spectrum_bin(const aeh_spectrum* spectrum, size_t index,
                                    double* frequency_hz, double* power);

/* Strongest bin inside [band_low_hz, band_high_hz]; interior peaks are
 * parabolically refined. */
AEH_API aeh_status aeh_dominant_harmonic(const aeh_spectrum* spectrum, double band_low_hz,
                                         double band_high_hz, double* frequency_hz,
                                         double* power);

/* CSV "frequency_hz,power". */
AEH_API aeh_status aeh_spectrum_write_csv(const aeh_spectrum* spectrum, const char* path);

/* ---- rectifier ---------------------------------------------------------- */

/* Transient of the configured rectifier driven by a sinusoidal open-circuit
 * source of `amplitude_v` (peak) at `frequency_hz` behind the configured
 * piezo capacitance. Requires timestep <= 1/(200*frequency). */
AEH_API aeh_status aeh_simulate_rectifier(const aeh_config* cfg, double amplitude_v,
                                          double frequency_hz, double timestep_s,
                                          double duration_s, double initial_storage_v,
                                          aeh_trace** out);
AEH_API void aeh_trace_free(aeh_trace* trace);

AEH_API aeh_status aeh_trace_samples(const aeh_trace* trace, size_t* count);

/* Mean storage voltage, peak-to-peak ripple and mean load power over the
 * trailing tail_fraction (in (0,1]) of the trace. Any output pointer may be
 * NULL. */
AEH_API aeh_status aeh_trace_metrics(const aeh_trace* trace, double tail_fraction,
                                     double* dc_v, double* ripple_pp_v,
                                     double* average_power_w);

/* CSV "time_s,v_source,v_store,p_load_w,bridge_state", keeping every
 * `decimate`-th sample (decimate >= 1). */
AEH_API aeh_status aeh_trace_write_csv(const aeh_trace* trace, const char* path,
                                       size_t decimate);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AEH_H */
