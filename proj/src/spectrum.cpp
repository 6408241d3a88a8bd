#include "aeh/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace aeh {
namespace {

constexpr double pi = std::numbers::pi;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey; a.size() must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * pi / static_cast<double>(len);
        const std::complex<double> step(std::cos(angle), std::sin(angle));
        for (std::size_t block = 0; block < n; block += len) {
            std::complex<double> twiddle(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[block + k];
                const std::complex<double> v = a[block + k + len / 2] * twiddle;
                a[block + k] = u + v;
                a[block + k + len / 2] = u - v;
                twiddle *= step;
            }
        }
    }
}

std::vector<double> make_window(Window window, std::size_t n) {
    std::vector<double> w(n, 1.0);
    if (window == Window::hann) {
        // Periodic Hann, the natural choice for overlapped averaging.
        for (std::size_t i = 0; i < n; ++i)
            w[i] = 0.5 - 0.5 * std::cos(2.0 * pi * static_cast<double>(i) /
                                        static_cast<double>(n));
    }
    return w;
}

}  // namespace

Spectrum power_spectrum(const AudioClip& clip, std::size_t segment_length, Window window) {
    if (clip.sample_rate <= 0) throw std::domain_error("clip sample rate must be positive");
    if (clip.samples.empty()) throw std::domain_error("clip holds no samples");
    if (!power_of_two(segment_length) || segment_length < 2)
        throw std::domain_error("segment_length must be a power of two (>= 2)");
    if (segment_length > clip.samples.size())
        throw std::domain_error("segment_length exceeds the clip length");

    const std::size_t n = segment_length;
    const std::size_t hop = n / 2;  // 50% overlap
    const std::size_t bins = n / 2 + 1;
    const std::vector<double> w = make_window(window, n);

    Spectrum spectrum;
    spectrum.resolution = static_cast<double>(clip.sample_rate) / static_cast<double>(n);
    spectrum.frequencies.resize(bins);
    for (std::size_t k = 0; k < bins; ++k)
        spectrum.frequencies[k] = spectrum.resolution * static_cast<double>(k);
    spectrum.power.assign(bins, 0.0);

    std::vector<std::complex<double>> buffer(n);
    std::size_t segments = 0;
    for (std::size_t start = 0; start + n <= clip.samples.size(); start += hop) {
        for (std::size_t i = 0; i < n; ++i)
            buffer[i] = clip.samples[start + i] * w[i];
        fft_radix2(buffer);
        // One-sided bin powers scaled so their sum equals the mean windowed
        // segment energy (Parseval); interior bins carry the mirror weight.
        const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
        spectrum.power[0] += std::norm(buffer[0]) * scale;
        for (std::size_t k = 1; k + 1 < bins; ++k)
            spectrum.power[k] += 2.0 * std::norm(buffer[k]) * scale;
        spectrum.power[bins - 1] += std::norm(buffer[n / 2]) * scale;
        ++segments;
    }
    for (double& p : spectrum.power) p /= static_cast<double>(segments);
    return spectrum;
}

DominantTone dominant_harmonic(const Spectrum& spectrum, double band_low, double band_high) {
    if (spectrum.power.empty() || spectrum.power.size() != spectrum.frequencies.size())
        throw std::domain_error("spectrum is empty or inconsistent");
    const double nyquist = spectrum.frequencies.back();
    if (!(band_low >= 0.0 && band_low < band_high && band_high <= nyquist))
        throw std::domain_error(
            "band must satisfy 0 <= low < high <= Nyquist");

    // Bin range covered by the band.
    std::size_t first = spectrum.frequencies.size(), last = 0;
    for (std::size_t k = 0; k < spectrum.frequencies.size(); ++k) {
        if (spectrum.frequencies[k] >= band_low && spectrum.frequencies[k] <= band_high) {
            first = std::min(first, k);
            last = k;
        }
    }
    if (first > last) throw std::domain_error("band contains no spectrum bins");

    std::size_t peak = first;
    for (std::size_t k = first + 1; k <= last; ++k)
        if (spectrum.power[k] > spectrum.power[peak]) peak = k;  // ties keep the lower bin
    if (!(spectrum.power[peak] > 0.0)) throw std::domain_error("no peak in band");

    DominantTone tone;
    tone.power = spectrum.power[peak];
    tone.band_low = band_low;
    tone.band_high = band_high;
    tone.frequency = spectrum.frequencies[peak];

    // Parabolic refinement on log power for interior peaks flanked by
    // strictly positive bins; the vertex offset is clamped to half a bin.
    if (peak > first && peak < last && spectrum.power[peak - 1] > 0.0 &&
        spectrum.power[peak + 1] > 0.0) {
        const double l = std::log(spectrum.power[peak - 1]);
        const double c = std::log(spectrum.power[peak]);
        const double r = std::log(spectrum.power[peak + 1]);
        const double denom = l - 2.0 * c + r;
        if (denom < 0.0) {
            const double delta = std::clamp(0.5 * (l - r) / denom, -0.5, 0.5);
            tone.frequency += delta * spectrum.resolution;
        }
    }
    return tone;
}

void write_csv(const Spectrum& spectrum, std::ostream& out) {
    out << "frequency_hz,power\n";
    char line[80];
    for (std::size_t k = 0; k < spectrum.frequencies.size(); ++k) {
        std::snprintf(line, sizeof line, "%.6f,%.15f\n", spectrum.frequencies[k],
                      spectrum.power[k]);
        out << line;
    }
}

void write_csv_file(const Spectrum& spectrum, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-stable line endings
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(spectrum, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace aeh
