// aeh — design and simulation tool for cantilever acoustic energy harvesters.
//
// Chains the library stages (spectrum -> tune -> place -> respond -> rectify)
// and emits CSV artifacts plus a plain-text design report. Talks to the core
// exclusively through the C API in aeh.h.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <aeh.h>

namespace {

struct ConfigDeleter {
    void operator()(aeh_config* cfg) const { aeh_config_free(cfg); }
};
struct SpectrumDeleter {
    void operator()(aeh_spectrum* s) const { aeh_spectrum_free(s); }
};
struct TraceDeleter {
    void operator()(aeh_trace* t) const { aeh_trace_free(t); }
};

using ConfigPtr = std::unique_ptr<aeh_config, ConfigDeleter>;
using SpectrumPtr = std::unique_ptr<aeh_spectrum, SpectrumDeleter>;
using TracePtr = std::unique_ptr<aeh_trace, TraceDeleter>;

// Options shared by every command.
struct CommonOptions {
    std::string config_path;
    std::string out_dir;
};

int fail(aeh_status status, const std::string& stage) {
    std::fprintf(stderr, "error: %s: %s\n", stage.c_str(), aeh_last_error());
    return static_cast<int>(status);
}

int fail_io(const std::string& what) {
    std::fprintf(stderr, "error: %s\n", what.c_str());
    return static_cast<int>(AEH_ERROR);
}

// Loads the config file when given, otherwise the built-in defaults.
ConfigPtr open_config(const CommonOptions& common, int& error_code) {
    error_code = 0;
    if (common.config_path.empty()) {
        ConfigPtr cfg(aeh_config_create());
        if (!cfg) error_code = fail(AEH_ERROR, "creating configuration");
        return cfg;
    }
    aeh_config* raw = nullptr;
    if (aeh_status st = aeh_config_load(common.config_path.c_str(), &raw); st != AEH_OK) {
        error_code = fail(st, "loading configuration");
        return nullptr;
    }
    return ConfigPtr(raw);
}

std::filesystem::path resolve_out_dir(const CommonOptions& common, int& error_code) {
    std::filesystem::path dir = common.out_dir.empty() ? "." : common.out_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        error_code = fail_io("cannot create output directory '" + dir.string() +
                             "': " + ec.message());
        return {};
    }
    error_code = 0;
    return dir;
}

bool write_text_file(const std::filesystem::path& path, const std::string& body,
                     int& error_code) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    out.flush();
    if (!out) {
        error_code = fail_io("cannot write '" + path.string() + "'");
        return false;
    }
    return true;
}

std::string format(const char* fmt, ...) {
    char buffer[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buffer, sizeof buffer, fmt, args);
    va_end(args);
    return buffer;
}

double config_value(const aeh_config* cfg, const char* key) {
    double value = 0.0;
    aeh_config_get(cfg, key, &value);
    return value;
}

// ---- modes ---------------------------------------------------------------

int cmd_modes(const CommonOptions& common, std::size_t count) {
    int code = 0;
    ConfigPtr cfg = open_config(common, code);
    if (!cfg) return code;
    const std::filesystem::path out_dir = resolve_out_dir(common, code);
    if (code) return code;

    std::vector<aeh_mode> modes(count);
    if (aeh_status st = aeh_modes(cfg.get(), count, modes.data()); st != AEH_OK)
        return fail(st, "computing modes");

    std::printf(" mode        lambda          beta        f_hz\n");
    std::string csv = "mode,lambda,beta,omega_rad_s,frequency_hz\n";
    for (const aeh_mode& m : modes) {
        std::printf("%5d  %12.9f  %12.9f  %10.4f\n", m.index, m.lambda, m.beta,
                    m.frequency_hz);
        csv += format("%d,%.12f,%.12f,%.9f,%.9f\n", m.index, m.lambda, m.beta, m.omega_rad_s,
                      m.frequency_hz);
    }
    const auto csv_path = out_dir / "modes.csv";
    if (!write_text_file(csv_path, csv, code)) return code;
    std::printf("wrote %s\n", csv_path.string().c_str());
    return 0;
}

// ---- tune ------------------------------------------------------------------

int cmd_tune(const CommonOptions& common, const std::vector<double>& targets, int mode_index) {
    int code = 0;
    ConfigPtr cfg = open_config(common, code);
    if (!cfg) return code;
    const std::filesystem::path out_dir = resolve_out_dir(common, code);
    if (code) return code;

    std::string csv = "target_hz,length_m\n";
    for (double target : targets) {
        double length = 0.0;
        if (aeh_status st = aeh_length_for_frequency(cfg.get(), target, mode_index, &length);
            st != AEH_OK)
            return fail(st, format("tuning to %g Hz", target));
        std::printf("target %10.4f Hz -> length %9.4f mm (mode %d)\n", target, length * 1e3,
                    mode_index);
        csv += format("%.6f,%.9f\n", target, length);
    }
    const auto csv_path = out_dir / "tune.csv";
    if (!write_text_file(csv_path, csv, code)) return code;
    std::printf("wrote %s\n", csv_path.string().c_str());
    return 0;
}

// ---- place -----------------------------------------------------------------

int cmd_place(const CommonOptions& common, int mode_index, std::size_t grid_points) {
    int code = 0;
    ConfigPtr cfg = open_config(common, code);
    if (!cfg) return code;
    const std::filesystem::path out_dir = resolve_out_dir(common, code);
    if (code) return code;

    if (grid_points == 0)
        grid_points = static_cast<std::size_t>(
            config_value(cfg.get(), "solver.placement_grid_points"));

    std::vector<double> starts(grid_points), values(grid_points);
    double best_start = 0.0, best_value = 0.0;
    if (aeh_status st = aeh_optimal_patch_start(cfg.get(), mode_index, grid_points, &best_start,
                                                &best_value, starts.data(), values.data());
        st != AEH_OK)
        return fail(st, "optimizing patch placement");

    std::printf("optimal patch start: %9.6f m  (|curvature| integral %.6f /m, grid %zu)\n",
                best_start, best_value, grid_points);
    std::string csv = "patch_start_m,objective\n";
    for (std::size_t i = 0; i < grid_points; ++i)
        csv += format("%.9f,%.9f\n", starts[i], values[i]);
    const auto csv_path = out_dir / "placement.csv";
    if (!write_text_file(csv_path, csv, code)) return code;
    std::printf("wrote %s\n", csv_path.string().c_str());
    return 0;
}

// ---- spectrum ----------------------------------------------------------------

int cmd_spectrum(const CommonOptions& common, const std::string& wav_path, double band_low,
                 double band_high) {
    int code = 0;
    ConfigPtr cfg = open_config(common, code);
    if (!cfg) return code;
    const std::filesystem::path out_dir = resolve_out_dir(common, code);
    if (code) return code;

    if (band_low >= 0.0) {
        if (aeh_status st = aeh_config_set(cfg.get(), "spectrum.band_low", band_low);
            st != AEH_OK)
            return fail(st, "setting band");
    }
    if (band_high >= 0.0) {
        if (aeh_status st = aeh_config_set(cfg.get(), "spectrum.band_high", band_high);
            st != AEH_OK)
            return fail(st, "setting band");
    }

    aeh_spectrum* raw_spectrum = nullptr;
    if (aeh_status st = aeh_spectrum_from_wav(cfg.get(), wav_path.c_str(), &raw_spectrum);
        st != AEH_OK)
        return fail(st, "reading '" + wav_path + "'");
    SpectrumPtr spectrum(raw_spectrum);

    const double low = config_value(cfg.get(), "spectrum.band_low");
    const double high = config_value(cfg.get(), "spectrum.band_high");
    double tone_hz = 0.0, tone_power = 0.0;
    if (aeh_status st =
            aeh_dominant_harmonic(spectrum.get(), low, high, &tone_hz, &tone_power);
        st != AEH_OK)
        return fail(st, "locating dominant tone");

    std::printf("dominant tone: %10.4f Hz  (power %.6e, band %.1f-%.1f Hz)\n", tone_hz,
                tone_power, low, high);
    const auto csv_path = out_dir / "spectrum.csv";
    if (aeh_status st = aeh_spectrum_write_csv(spectrum.get(), csv_path.string().c_str());
        st != AEH_OK)
        return fail(st, "writing spectrum CSV");
    std::printf("wrote %s\n", csv_path.string().c_str());
    return 0;
}

// ---- respond -----------------------------------------------------------------

int cmd_respond(const CommonOptions& common, int mode_index, double drive_hz, double spl_db) {
    int code = 0;
    ConfigPtr cfg = open_config(common, code);
    if (!cfg) return code;
    const std::filesystem::path out_dir = resolve_out_dir(common, code);
    if (code) return code;

    if (drive_hz <= 0.0) {  // default: drive the chosen mode at resonance
        std::vector<aeh_mode> modes(static_cast<std::size_t>(mode_index));
        if (aeh_status st =
                aeh_modes(cfg.get(), static_cast<std::size_t>(mode_index), modes.data());
            st != AEH_OK)
            return fail(st, "computing modes");
        drive_hz = modes.back().frequency_hz;
    }

    aeh_response response{};
    if (aeh_status st =
            aeh_forced_response(cfg.get(), mode_index, drive_hz, spl_db, &response);
        st != AEH_OK)
        return fail(st, "evaluating forced response");

    double pressure_rms = 0.0;
    aeh_spl_to_pressure(spl_db, &pressure_rms);

    std::printf("drive %.4f Hz at %.4f dB SPL (%.6f Pa RMS), mode %d\n", drive_hz, spl_db,
                pressure_rms, mode_index);
    std::printf("modal amplitude     : %.6e m\n", response.modal_amplitude_m);
    std::printf("tip displacement    : %.6e m\n", response.tip_displacement_m);
    std::printf("max surface strain  : %.6e\n", response.max_surface_strain);
    std::printf("open-circuit voltage: %.6e V peak\n", response.open_circuit_voltage_v);

    std::string csv =
        "drive_hz,spl_db,modal_amplitude_m,tip_displacement_m,max_surface_strain,"
        "open_circuit_voltage_v\n";
    csv += format("%.6f,%.6f,%.12e,%.12e,%.12e,%.12e\n", drive_hz, spl_db,
                  response.modal_amplitude_m, response.tip_displacement_m,
                  response.max_surface_strain, response.open_circuit_voltage_v);
    const auto csv_path = out_dir / "respond.csv";
    if (!write_text_file(csv_path, csv, code)) return code;
    std::printf("wrote %s\n", csv_path.string().c_str());
    return 0;
}

// ---- rectify -----------------------------------------------------------------

struct RectifyOptions {
    double amplitude = 0.0;
    double frequency = 0.0;
    double duration = 0.0;        // 0 -> cycles/frequency
    std::size_t cycles = 200;
    std::size_t steps_per_cycle = 500;
    double initial_voltage = 0.0;
    double tail_fraction = 0.25;
    std::size_t decimate = 1;
};

int run_rectifier(const aeh_config* cfg, const std::filesystem::path& out_dir,
                  const RectifyOptions& opt, double* dc_out, double* ripple_out,
                  double* power_out) {
    const double timestep = 1.0 / (static_cast<double>(opt.steps_per_cycle) * opt.frequency);
    const double duration =
        opt.duration > 0.0 ? opt.duration
                           : static_cast<double>(opt.cycles) / opt.frequency;

    aeh_trace* raw_trace = nullptr;
    if (aeh_status st = aeh_simulate_rectifier(cfg, opt.amplitude, opt.frequency, timestep,
                                               duration, opt.initial_voltage, &raw_trace);
        st != AEH_OK)
        return fail(st, "simulating rectifier");
    TracePtr trace(raw_trace);

    double dc = 0.0, ripple = 0.0, power = 0.0;
    if (aeh_status st = aeh_trace_metrics(trace.get(), opt.tail_fraction, &dc, &ripple, &power);
        st != AEH_OK)
        return fail(st, "computing steady-state metrics");

    const auto csv_path = out_dir / "trace.csv";
    if (aeh_status st =
            aeh_trace_write_csv(trace.get(), csv_path.string().c_str(), opt.decimate);
        st != AEH_OK)
        return fail(st, "writing trace CSV");

    if (dc_out) *dc_out = dc;
    if (ripple_out) *ripple_out = ripple;
    if (power_out) *power_out = power;
    return 0;
}

int cmd_rectify(const CommonOptions& common, const RectifyOptions& opt) {
    int code = 0;
    ConfigPtr cfg = open_config(common, code);
    if (!cfg) return code;
    const std::filesystem::path out_dir = resolve_out_dir(common, code);
    if (code) return code;

    double dc = 0.0, ripple = 0.0, power = 0.0;
    if (int rc = run_rectifier(cfg.get(), out_dir, opt, &dc, &ripple, &power); rc != 0)
        return rc;

    const double duration = opt.duration > 0.0
                                ? opt.duration
                                : static_cast<double>(opt.cycles) / opt.frequency;
    std::printf("simulated %.6f s at %.2f Hz (%zu steps/cycle, tail %.2f)\n", duration,
                opt.frequency, opt.steps_per_cycle, opt.tail_fraction);
    std::printf("dc voltage        : %.6f V\n", dc);
    std::printf("ripple (pk-pk)    : %.6f V\n", ripple);
    std::printf("average load power: %.6e W\n", power);
    std::printf("wrote %s\n", (out_dir / "trace.csv").string().c_str());
    return 0;
}

// ---- pipeline ---------------------------------------------------------------

struct PipelineOptions {
    std::string wav_path;
    double spl_db = 103.0102999566398;  // two incoherent 100 dB sources, free field
    int mode_index = 1;
    std::size_t cycles = 400;
    std::size_t steps_per_cycle = 500;
    double tail_fraction = 0.25;
    std::size_t decimate = 10;
};

int cmd_pipeline(const CommonOptions& common, const PipelineOptions& opt) {
    int code = 0;
    ConfigPtr cfg = open_config(common, code);
    if (!cfg) return code;
    const std::filesystem::path out_dir = resolve_out_dir(common, code);
    if (code) return code;

    // Stage 1: dominant tone of the recording.
    aeh_spectrum* raw_spectrum = nullptr;
    if (aeh_status st =
            aeh_spectrum_from_wav(cfg.get(), opt.wav_path.c_str(), &raw_spectrum);
        st != AEH_OK)
        return fail(st, "stage spectrum");
    SpectrumPtr spectrum(raw_spectrum);
    const double band_low = config_value(cfg.get(), "spectrum.band_low");
    const double band_high = config_value(cfg.get(), "spectrum.band_high");
    double tone_hz = 0.0, tone_power = 0.0;
    if (aeh_status st = aeh_dominant_harmonic(spectrum.get(), band_low, band_high, &tone_hz,
                                              &tone_power);
        st != AEH_OK)
        return fail(st, "stage spectrum");
    const auto spectrum_csv = out_dir / "spectrum.csv";
    if (aeh_status st = aeh_spectrum_write_csv(spectrum.get(), spectrum_csv.string().c_str());
        st != AEH_OK)
        return fail(st, "stage spectrum");

    // Stage 2: tune the beam length onto the tone.
    double length = 0.0;
    if (aeh_status st =
            aeh_length_for_frequency(cfg.get(), tone_hz, opt.mode_index, &length);
        st != AEH_OK)
        return fail(st, "stage tune");
    if (aeh_status st = aeh_config_set(cfg.get(), "beam.length", length); st != AEH_OK)
        return fail(st, "stage tune");

    // Stage 3: place the patch where |curvature| integrates largest.
    const auto grid_points =
        static_cast<std::size_t>(config_value(cfg.get(), "solver.placement_grid_points"));
    double patch_start = 0.0, objective = 0.0;
    if (aeh_status st = aeh_optimal_patch_start(cfg.get(), opt.mode_index, grid_points,
                                                &patch_start, &objective, nullptr, nullptr);
        st != AEH_OK)
        return fail(st, "stage place");
    if (aeh_status st = aeh_config_set(cfg.get(), "beam.piezo_start", patch_start);
        st != AEH_OK)
        return fail(st, "stage place");

    // Stage 4: forced response at the tone (which the tuning just made the
    // resonance of the chosen mode).
    aeh_response response{};
    if (aeh_status st = aeh_forced_response(cfg.get(), opt.mode_index, tone_hz, opt.spl_db,
                                            &response);
        st != AEH_OK)
        return fail(st, "stage respond");

    // Stage 5: rectifier transient driven by the open-circuit voltage.
    RectifyOptions rectify;
    rectify.amplitude = response.open_circuit_voltage_v;
    rectify.frequency = tone_hz;
    rectify.cycles = opt.cycles;
    rectify.steps_per_cycle = opt.steps_per_cycle;
    rectify.tail_fraction = opt.tail_fraction;
    rectify.decimate = opt.decimate;
    double dc = 0.0, ripple = 0.0, power = 0.0;
    if (int rc = run_rectifier(cfg.get(), out_dir, rectify, &dc, &ripple, &power); rc != 0)
        return rc;

    double pressure_rms = 0.0;
    aeh_spl_to_pressure(opt.spl_db, &pressure_rms);

    std::string report;
    report += "=== acoustic energy harvester design report ===\n";
    report += format("input                : %s\n", opt.wav_path.c_str());
    report += format("dominant tone        : %.4f Hz (search band %.1f-%.1f Hz)\n", tone_hz,
                     band_low, band_high);
    report += format("tuned beam length    : %.4f mm (mode %d)\n", length * 1e3,
                     opt.mode_index);
    report += format("piezo patch start    : %.4f mm (|curvature| integral %.4f /m)\n",
                     patch_start * 1e3, objective);
    report += format("drive level          : %.4f dB SPL free-field (%.6f Pa RMS)\n",
                     opt.spl_db, pressure_rms);
    report += format("tip displacement     : %.4f um\n", response.tip_displacement_m * 1e6);
    report += format("open-circuit voltage : %.6f V peak\n", response.open_circuit_voltage_v);
    report += format("storage dc voltage   : %.6f V\n", dc);
    report += format("ripple (pk-pk)       : %.6f V\n", ripple);
    report += format("average load power   : %.6e W\n", power);
    report +=
        "\nnote: sound levels combine as free-field incoherent sources (two\n"
        "100 dB fans give 103.01 dB). Enclosed chambers resonate: a reported\n"
        "chamber maximum of 140 dB is NOT reproducible with this free-field\n"
        "model, and harvested power at free-field levels is correspondingly\n"
        "small.\n";

    std::fputs(report.c_str(), stdout);

    if (!write_text_file(out_dir / "report.txt", report, code)) return code;
    std::string report_csv =
        "dominant_hz,tuned_length_m,patch_start_m,objective,modal_amplitude_m,"
        "tip_displacement_m,max_surface_strain,open_circuit_voltage_v,dc_voltage_v,"
        "ripple_pp_v,average_power_w\n";
    report_csv += format("%.6f,%.9f,%.9f,%.9f,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n",
                         tone_hz, length, patch_start, objective, response.modal_amplitude_m,
                         response.tip_displacement_m, response.max_surface_strain,
                         response.open_circuit_voltage_v, dc, ripple, power);
    if (!write_text_file(out_dir / "report.csv", report_csv, code)) return code;
    std::printf("wrote %s, %s, %s, %s\n", spectrum_csv.string().c_str(),
                (out_dir / "trace.csv").string().c_str(),
                (out_dir / "report.txt").string().c_str(),
                (out_dir / "report.csv").string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acoustic energy harvester design toolkit"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--config", common.config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);
    app.add_option("--out", common.out_dir, "output directory for CSV artifacts");

    // modes
    std::size_t mode_count = 3;
    CLI::App* modes = app.add_subcommand("modes", "list bending modes of the configured beam");
    modes->fallthrough();
    modes->add_option("--count", mode_count, "number of modes")->check(CLI::PositiveNumber);

    // tune
    std::vector<double> targets;
    int tune_mode = 1;
    CLI::App* tune = app.add_subcommand("tune", "beam length for target frequencies");
    tune->fallthrough();
    tune->add_option("--target", targets, "target frequency in Hz (repeatable)")
        ->required()
        ->check(CLI::PositiveNumber);
    tune->add_option("--mode", tune_mode, "mode index to tune")->check(CLI::PositiveNumber);

    // place
    int place_mode = 1;
    std::size_t place_grid = 0;  // 0 -> use config
    CLI::App* place = app.add_subcommand("place", "optimal piezo patch start");
    place->fallthrough();
    place->add_option("--mode", place_mode, "mode index")->check(CLI::PositiveNumber);
    place->add_option("--grid", place_grid, "number of grid starts")
        ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));

    // spectrum
    std::string spectrum_wav;
    double band_low = -1.0, band_high = -1.0;
    CLI::App* spectrum = app.add_subcommand("spectrum", "dominant tone of a WAV recording");
    spectrum->fallthrough();
    spectrum->add_option("wav,--wav", spectrum_wav, "input WAV file")->required();
    spectrum->add_option("--band-low", band_low, "search band lower edge in Hz");
    spectrum->add_option("--band-high", band_high, "search band upper edge in Hz");

    // respond
    int respond_mode = 1;
    double respond_drive = 0.0;  // 0 -> resonance of the chosen mode
    double respond_spl = 94.0;
    CLI::App* respond = app.add_subcommand("respond", "forced response to a pressure tone");
    respond->fallthrough();
    respond->add_option("--mode", respond_mode, "mode index")->check(CLI::PositiveNumber);
    respond->add_option("--drive", respond_drive,
                        "drive frequency in Hz (default: modal resonance)");
    respond->add_option("--spl", respond_spl, "sound pressure level in dB (RMS)");

    // rectify
    RectifyOptions rectify;
    CLI::App* rect = app.add_subcommand("rectify", "rectifier/storage transient simulation");
    rect->fallthrough();
    rect->add_option("--amplitude", rectify.amplitude, "open-circuit amplitude in V (peak)")
        ->required();
    rect->add_option("--frequency", rectify.frequency, "source frequency in Hz")
        ->required()
        ->check(CLI::PositiveNumber);
    rect->add_option("--duration", rectify.duration, "simulated time in s (default: cycles)");
    rect->add_option("--cycles", rectify.cycles, "simulated cycles when no duration given");
    rect->add_option("--steps-per-cycle", rectify.steps_per_cycle,
                     "integration steps per cycle (>= 200)")
        ->check(CLI::Range(static_cast<std::size_t>(200), static_cast<std::size_t>(1000000)));
    rect->add_option("--initial", rectify.initial_voltage, "initial storage voltage in V");
    rect->add_option("--tail", rectify.tail_fraction, "tail fraction for metrics")
        ->check(CLI::Range(1e-9, 1.0));
    rect->add_option("--decimate", rectify.decimate, "keep every n-th trace sample")
        ->check(CLI::PositiveNumber);

    // pipeline
    PipelineOptions pipeline;
    CLI::App* pipe = app.add_subcommand("pipeline", "full design chain from a WAV recording");
    pipe->fallthrough();
    pipe->add_option("wav,--wav", pipeline.wav_path, "ambient noise WAV file")->required();
    pipe->add_option("--spl", pipeline.spl_db, "drive sound pressure level in dB (RMS)");
    pipe->add_option("--mode", pipeline.mode_index, "mode index to tune")
        ->check(CLI::PositiveNumber);
    pipe->add_option("--cycles", pipeline.cycles, "rectifier cycles to simulate");
    pipe->add_option("--steps-per-cycle", pipeline.steps_per_cycle,
                     "integration steps per cycle (>= 200)")
        ->check(CLI::Range(static_cast<std::size_t>(200), static_cast<std::size_t>(1000000)));
    pipe->add_option("--tail", pipeline.tail_fraction, "tail fraction for metrics")
        ->check(CLI::Range(1e-9, 1.0));
    pipe->add_option("--decimate", pipeline.decimate, "keep every n-th trace sample")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(AEH_CONFIG_ERROR);
    }

    if (modes->parsed()) return cmd_modes(common, mode_count);
    if (tune->parsed()) return cmd_tune(common, targets, tune_mode);
    if (place->parsed()) return cmd_place(common, place_mode, place_grid);
    if (spectrum->parsed()) return cmd_spectrum(common, spectrum_wav, band_low, band_high);
    if (respond->parsed()) return cmd_respond(common, respond_mode, respond_drive, respond_spl);
    if (rect->parsed()) return cmd_rectify(common, rectify);
    if (pipe->parsed()) return cmd_pipeline(common, pipeline);
    return static_cast<int>(AEH_CONFIG_ERROR);
}
