#pragma once

#include <cstddef>
#include <string>

#include "aeh/acoustics.hpp"
#include "aeh/beam.hpp"
#include "aeh/circuit.hpp"
#include "aeh/spectrum.hpp"

namespace aeh {

// Everything the tools need to describe one harvester design. Defaults model
// a copper substrate with a PVDF patch (see configs/default.json); d31 is
// deliberately left unset in the built-in defaults.
struct ProjectConfig {
    BeamGeometry beam;
    SectionModel section_model = SectionModel::uniform_bilayer;
    double damping_ratio = 0.02;
    PiezoCoupling coupling;
    RectifierStorage rectifier;
    double band_low = 20.0;    // Hz, dominant-tone search band
    double band_high = 500.0;  // Hz
    std::size_t segment_length = 8192;
    Window window = Window::hann;
    double root_tolerance = 1e-10;
    std::size_t placement_grid_points = 101;
    std::string output_directory = ".";  // where the CLI drops its CSV files

    static ProjectConfig defaults();

    // Parses a JSON file (// and /* */ comments allowed) on top of the
    // defaults and validates. Unknown keys, wrong types, unreadable files
    // and out-of-range values all raise ConfigError naming the field.
    static ProjectConfig load(const std::string& path);

    void validate() const;

    // Numeric access by the same dotted keys the JSON file uses, e.g.
    // "beam.length" or "rectifier.storage_capacitance". Unknown keys raise
    // ConfigError; set() re-validates.
    double get(const std::string& key) const;
    void set(const std::string& key, double value);
};

}  // namespace aeh
