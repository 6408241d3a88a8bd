// Acceptance gate for the harvester toolkit: one pass/fail line per shipping
// criterion, exit status 0 only if every criterion holds.
//
// Numeric criteria run against the C++ core; the report and determinism
// criteria drive the installed CLI binary (AEH_CLI_PATH) with the shipped
// default configuration (AEH_CONFIG_PATH).

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aeh/acoustics.hpp"
#include "aeh/beam.hpp"
#include "aeh/circuit.hpp"
#include "aeh/config.hpp"
#include "aeh/design.hpp"
#include "aeh/spectrum.hpp"
#include "aeh/wav.hpp"
#include "wav_synth.hpp"

using namespace aeh;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d: %-34s %s  (%s)\n", index, name.c_str(),
                pass ? "pass" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string format(const char* fmt, ...) {
    char buffer[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buffer, sizeof buffer, fmt, args);
    va_end(args);
    return buffer;
}

BeamGeometry default_geometry() { return ProjectConfig::defaults().beam; }

CompositeSection default_section() {
    return section_properties(default_geometry(), SectionModel::uniform_bilayer);
}

// ---- criterion 1: frequency-equation roots ------------------------------

void criterion_roots() {
    using clock = std::chrono::steady_clock;
    (void)cantilever_lambdas(3);  // warm up code and caches before timing

    const auto t0 = clock::now();
    const std::vector<double> lambdas = cantilever_lambdas(3);
    const double millis =
        std::chrono::duration<double, std::milli>(clock::now() - t0).count();

    const double expected[3] = {1.875104, 4.694091, 7.854757};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(lambdas[i] - expected[i]));

    const bool pass = worst < 1e-6 && millis < 1.0;
    report(1, "frequency-equation roots", pass,
           format("max |err| %.2e, solved in %.3f ms", worst, millis));
}

// ---- criterion 2: first natural frequency --------------------------------

void criterion_first_mode() {
    const auto modes = natural_frequencies(default_section(), default_geometry().length, 1);
    const double f1 = modes[0].frequency;

    // Two yardsticks: the independent 1-D closed-form oracle (tight), and a
    // 3-D finite-element model of the same harvester that reports 121.91 Hz
    // (loose; the 1-D Euler-Bernoulli idealization sits ~8% below it, a gap
    // that is documented rather than tuned away).
    const double oracle_err = rel_err(f1, 112.25330013);
    const double fem_err = rel_err(f1, 121.91);

    const bool pass = oracle_err < 0.005 && fem_err < 0.10;
    report(2, "first natural frequency", pass,
           format("f1 = %.4f Hz; oracle err %.2e, FEM gap %.1f%%", f1, oracle_err,
                  100.0 * fem_err));
}

// ---- criterion 3: length tuning -------------------------------------------

void criterion_length_tuning() {
    const CompositeSection section = default_section();
    const double targets[4] = {105.0, 108.0, 114.0, 120.0};
    const double oracle[4] = {0.0723773952, 0.0713650741, 0.0694616624, 0.0677028539};

    bool decreasing = true, round_trip = true, matches = true;
    double worst_rt = 0.0, worst_len = 0.0;
    double previous = 1e300;
    for (int i = 0; i < 4; ++i) {
        const double length = length_for_frequency(section, {targets[i], 1});
        if (length >= previous) decreasing = false;
        previous = length;

        const double back = natural_frequencies(section, length, 1)[0].frequency;
        const double rt = rel_err(back, targets[i]);
        worst_rt = std::max(worst_rt, rt);
        if (rt >= 1e-9) round_trip = false;

        const double len_err = rel_err(length, oracle[i]);
        worst_len = std::max(worst_len, len_err);
        if (len_err >= 1e-3) matches = false;
    }

    const bool pass = decreasing && round_trip && matches;
    report(3, "length tuning 105-120 Hz", pass,
           format("%s, round-trip %.1e, oracle err %.1e",
                  decreasing ? "strictly decreasing" : "NOT decreasing", worst_rt, worst_len));
}

// ---- criterion 4: patch placement -----------------------------------------

void criterion_placement() {
    const BeamGeometry geometry = default_geometry();
    const ModeSolution mode = natural_frequencies(default_section(), geometry.length, 1)[0];

    bool always_root = true, monotone = true;
    for (std::size_t grid : {std::size_t{11}, std::size_t{25}, std::size_t{51},
                             std::size_t{101}, std::size_t{257}}) {
        const PlacementResult result = optimal_patch_start(geometry, mode, grid);
        if (result.patch_start != 0.0) always_root = false;
        for (std::size_t i = 1; i < result.profile.size(); ++i)
            if (result.profile[i].objective > result.profile[i - 1].objective) monotone = false;
    }

    const bool pass = always_root && monotone;
    report(4, "patch placement at the clamp", pass,
           format("start = 0 on all grids: %s; profile non-increasing: %s",
                  always_root ? "yes" : "no", monotone ? "yes" : "no"));
}

// ---- criterion 5: dominant-tone extraction --------------------------------

void criterion_spectrum_trials() {
    using clock = std::chrono::steady_clock;
    const int trials = 100;
    const double tone = 120.0;
    const std::uint32_t rate = 44100;
    const double bin = static_cast<double>(rate) / 8192.0;  // 5.383 Hz

    int hits = 0;
    const auto t0 = clock::now();
    for (int seed = 0; seed < trials; ++seed) {
        const auto samples = wavsynth::noisy_tone(tone, 0.35, 10.0, rate, rate,
                                                  static_cast<std::uint32_t>(seed));
        std::istringstream wav(wavsynth::make_wav_mono(samples, rate, 16));
        const AudioClip clip = load_wav(wav);
        const Spectrum spectrum = power_spectrum(clip, 8192, Window::hann);
        const DominantTone found = dominant_harmonic(spectrum, 20.0, 500.0);
        if (std::abs(found.frequency - tone) <= 5.4) ++hits;
    }
    const double seconds = std::chrono::duration<double>(clock::now() - t0).count();

    const bool pass = hits >= 95 && seconds < 2.0;
    report(5, "dominant tone in noisy WAVs", pass,
           format("%d/%d within +-5.4 Hz (one %.2f Hz bin), %.2f s total", hits, trials, bin,
                  seconds));
}

// ---- criterion 6: rectifier steady state ----------------------------------

void criterion_rectifier() {
    // 5 V peak, 0.7 V diodes, light 1 Mohm load on 10 uF: the peak-detector
    // limit A - 2*Vd = 3.6 V.
    const PiezoEquivalent piezo{5.0, 120.0, 1e-6};
    const RectifierStorage storage{0.7, 1e-5, 1e6};
    const double dt = 1.0 / (400.0 * 120.0);

    const TransientTrace coarse = simulate_rectifier(piezo, storage, dt, 1.0);
    const SteadyStateMetrics metrics = steady_state_metrics(coarse, 0.25);
    const double dc_err = rel_err(metrics.dc_voltage, 3.6);

    const TransientTrace fine = simulate_rectifier(piezo, storage, dt / 2.0, 1.0);
    const double dc_shift =
        rel_err(steady_state_metrics(fine, 0.25).dc_voltage, metrics.dc_voltage);

    // Heavier load behind a stiff source: sawtooth ripple close to the
    // constant-current estimate I/(2*f*C_store).
    const PiezoEquivalent stiff{5.0, 120.0, 1e-4};
    const RectifierStorage loaded{0.7, 4.7e-6, 5e4};
    const SteadyStateMetrics rip =
        steady_state_metrics(simulate_rectifier(stiff, loaded, dt, 1.0), 0.2);
    const double estimate = rip.dc_voltage / 5e4 / (2.0 * 120.0 * 4.7e-6);
    const double ripple_err = rel_err(rip.ripple_pp, estimate);

    const bool pass = dc_err < 0.02 && dc_shift < 1e-3 && ripple_err < 0.10;
    report(6, "rectifier steady state", pass,
           format("dc %.4f V (err %.2f%%), dt/2 shift %.3f%%, ripple err %.1f%%",
                  metrics.dc_voltage, 100.0 * dc_err, 100.0 * dc_shift, 100.0 * ripple_err));
}

// ---- shared CLI plumbing ----------------------------------------------------

std::filesystem::path work_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("aeh-acceptance-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string pipeline_wav() {
    static const std::string path = [] {
        const auto samples = wavsynth::noisy_tone(120.0, 0.35, 10.0, 44100, 44100, 1);
        const std::string bytes = wavsynth::make_wav_mono(samples, 44100, 16);
        const std::string p = (work_dir() / "ambient.wav").string();
        std::ofstream out(p, std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        return p;
    }();
    return path;
}

bool run_cli(const std::string& args) {
    const std::string command = std::string(AEH_CLI_PATH) + " --config " + AEH_CONFIG_PATH +
                                " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ---- criterion 7: SPL model and its stated limits ---------------------------

void criterion_spl() {
    const double combined = combine_incoherent({100.0, 100.0});
    const bool combine_ok = std::abs(combined - 103.01) < 0.01;

    // The design report must state explicitly that the free-field model does
    // not reproduce a 140 dB chamber level.
    const auto out = work_dir() / "report-run";
    const bool ran = run_cli("pipeline " + pipeline_wav() + " --out " + out.string());
    const std::string text = slurp(out / "report.txt");
    const bool states_limit = text.find("140 dB") != std::string::npos &&
                              text.find("NOT reproducible") != std::string::npos;

    const bool pass = combine_ok && ran && states_limit;
    report(7, "incoherent SPL and 140 dB caveat", pass,
           format("combine=%.4f dB; pipeline %s; report caveat %s", combined,
                  ran ? "ok" : "FAILED", states_limit ? "present" : "MISSING"));
}

// ---- criterion 8: property suites -------------------------------------------

bool boundary_conditions_hold(std::string* detail) {
    const BeamGeometry geometry = default_geometry();
    const auto modes = natural_frequencies(default_section(), geometry.length, 3);

    double worst = 0.0;
    for (const ModeSolution& mode : modes) {
        const double L = geometry.length;
        const double curv_scale = std::abs(mode_curvature(mode, 0.0));

        // Clamped end: zero deflection and slope (exact in the closed form,
        // so measure against the mode's natural scales).
        worst = std::max(worst, std::abs(mode_shape(mode, 0.0)) / 2.0);
        worst = std::max(worst,
                         std::abs(mode_slope(mode, 0.0)) / (mode.lambda / L));

        // Free end: zero bending moment, checked directly, and zero shear,
        // checked with a fourth-order one-sided difference of the curvature
        // (one-sided because x > L is outside the beam).
        worst = std::max(worst, std::abs(mode_curvature(mode, L)) / curv_scale);
        const double h = 1e-3 * L;
        const double c0 = mode_curvature(mode, L);
        const double c1 = mode_curvature(mode, L - h);
        const double c2 = mode_curvature(mode, L - 2.0 * h);
        const double c3 = mode_curvature(mode, L - 3.0 * h);
        const double c4 = mode_curvature(mode, L - 4.0 * h);
        const double shear = (25.0 * c0 - 48.0 * c1 + 36.0 * c2 - 16.0 * c3 + 3.0 * c4) /
                             (12.0 * h);
        const double shear_scale = curv_scale * mode.lambda / L;
        worst = std::max(worst, std::abs(shear) / shear_scale);
    }
    *detail = format("BC residual %.1e", worst);
    return worst < 1e-6;
}

bool parseval_holds(std::string* detail) {
    std::mt19937 rng(11);
    std::normal_distribution<double> dist(0.0, 0.7);
    const std::size_t n = 2048;
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);

    AudioClip clip;
    clip.sample_rate = 48000;
    clip.samples = x;

    double worst = 0.0;
    for (Window window : {Window::rectangular, Window::hann}) {
        double energy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double w = window == Window::hann
                                 ? 0.5 - 0.5 * std::cos(2.0 * wavsynth::kPi *
                                                        static_cast<double>(i) / n)
                                 : 1.0;
            energy += (w * x[i]) * (w * x[i]);
        }
        energy /= static_cast<double>(n);

        const Spectrum s = power_spectrum(clip, n, window);
        const double total = std::accumulate(s.power.begin(), s.power.end(), 0.0);
        worst = std::max(worst, std::abs(total - energy) / energy);
    }
    *detail = format("Parseval residual %.1e", worst);
    return worst < 1e-9;
}

bool linearity_exact(std::string* detail) {
    const BeamGeometry geometry = default_geometry();
    const CompositeSection section = default_section();
    const ModeSolution mode = natural_frequencies(section, geometry.length, 1)[0];
    PiezoCoupling coupling;
    coupling.d31 = 2e-11;
    coupling.capacitance = 0.53e-9;
    coupling.leakage_resistance = 5e7;

    const ForcedResponse base =
        modal_forced_response(geometry, section, mode, 1.0, 100.0, 0.02, coupling);
    const ForcedResponse doubled =
        modal_forced_response(geometry, section, mode, 2.0, 100.0, 0.02, coupling);

    const bool exact = doubled.modal_amplitude == 2.0 * base.modal_amplitude &&
                       doubled.tip_displacement == 2.0 * base.tip_displacement &&
                       doubled.max_surface_strain == 2.0 * base.max_surface_strain &&
                       doubled.open_circuit_voltage == 2.0 * base.open_circuit_voltage;
    *detail = exact ? "pressure doubling bit-exact" : "pressure doubling NOT exact";
    return exact;
}

bool scaling_exact(std::string* detail) {
    const CompositeSection section = default_section();
    const auto at_l = natural_frequencies(section, 0.07, 3);
    const auto at_2l = natural_frequencies(section, 0.14, 3);
    bool exact = true;
    for (std::size_t k = 0; k < 3; ++k)
        exact = exact && (at_2l[k].frequency * 4.0 == at_l[k].frequency);
    *detail = exact ? "f(2L)*4 == f(L) bit-exact" : "f ~ 1/L^2 NOT exact";
    return exact;
}

void criterion_properties() {
    std::string d1, d2, d3, d4;
    const bool bc = boundary_conditions_hold(&d1);
    const bool parseval = parseval_holds(&d2);
    const bool linear = linearity_exact(&d3);
    const bool scaling = scaling_exact(&d4);

    const bool pass = bc && parseval && linear && scaling;
    report(8, "property suites", pass, d1 + "; " + d2 + "; " + d3 + "; " + d4);
}

// ---- criterion 9: pipeline determinism --------------------------------------

void criterion_determinism() {
    const auto out_a = work_dir() / "determinism-a";
    const auto out_b = work_dir() / "determinism-b";
    const std::string wav = pipeline_wav();

    const bool ran = run_cli("pipeline " + wav + " --out " + out_a.string()) &&
                     run_cli("pipeline " + wav + " --out " + out_b.string());

    bool identical = ran;
    std::string differing;
    for (const char* name : {"spectrum.csv", "trace.csv", "report.csv", "report.txt"}) {
        if (!ran) break;
        const std::string a = slurp(out_a / name);
        const std::string b = slurp(out_b / name);
        if (a.empty() || a != b) {
            identical = false;
            differing += std::string(name) + " ";
        }
    }

    const bool pass = ran && identical;
    report(9, "pipeline determinism", pass,
           ran ? (identical ? "two runs byte-identical across all artifacts"
                            : "artifacts differ: " + differing)
               : "pipeline run FAILED");
}

}  // namespace

int main() {
    std::printf("acceptance checks (cli: %s)\n", AEH_CLI_PATH);

    criterion_roots();
    criterion_first_mode();
    criterion_length_tuning();
    criterion_placement();
    criterion_spectrum_trials();
    criterion_rectifier();
    criterion_spl();
    criterion_properties();
    criterion_determinism();

    std::filesystem::remove_all(work_dir());

    if (g_failures == 0) {
        std::printf("all 9 criteria pass\n");
        return 0;
    }
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
}
