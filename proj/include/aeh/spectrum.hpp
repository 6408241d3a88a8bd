#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "aeh/wav.hpp"

namespace aeh {

enum class Window { hann, rectangular };

// One-sided averaged power spectrum (Welch, 50% overlap). The scaling is
// fixed so that sum(power) over all bins equals the mean windowed segment
// energy: a full-scale DC input with a rectangular window puts power 1.0 in
// bin 0, and Parseval holds per segment.
struct Spectrum {
    std::vector<double> frequencies;  // Hz, 0 .. sample_rate/2 inclusive
    std::vector<double> power;
    double resolution = 0.0;          // Hz, bin spacing = sample_rate/segment_length
};

struct DominantTone {
    double frequency = 0.0;  // Hz, parabolically refined for interior peaks
    double power = 0.0;      // raw power of the winning bin
    double band_low = 0.0;   // Hz, the search band actually used
    double band_high = 0.0;
};

// Welch estimate over all full 50%-overlapping segments; no detrending.
// segment_length must be a power of two and no longer than the clip.
// Violations throw std::domain_error.
Spectrum power_spectrum(const AudioClip& clip, std::size_t segment_length,
                        Window window = Window::hann);

// Strongest bin with frequency in [band_low, band_high]; ties go to the
// lower frequency. Interior peaks with strictly positive neighbours are
// refined by a 3-point parabolic fit on log power (the reported power stays
// the raw bin value). An invalid band or an all-zero band is a
// std::domain_error ("no peak in band").
DominantTone dominant_harmonic(const Spectrum& spectrum, double band_low, double band_high);

// CSV with header "frequency_hz,power", one row per bin.
void write_csv(const Spectrum& spectrum, std::ostream& out);
void write_csv_file(const Spectrum& spectrum, const std::string& path);

}  // namespace aeh
