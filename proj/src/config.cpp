#include "aeh/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <string>

#include <json.hpp>

#include "aeh/errors.hpp"

namespace aeh {
namespace {

using nlohmann::json;

std::string join(const std::string& path, const char* key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& node, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!node.is_object()) throw ConfigError(path.empty() ? "config" : path, "expected an object");
    for (const auto& [key, value] : node.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) {
                known = true;
                break;
            }
        if (!known) throw ConfigError(join(path, key.c_str()), "unknown field");
    }
}

double as_number(const json& node, const std::string& path) {
    if (!node.is_number()) throw ConfigError(path, "expected a number");
    return node.get<double>();
}

// Resistances may be given as a number or as the string "inf"/"infinity".
double as_resistance(const json& node, const std::string& path) {
    if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
        throw ConfigError(path, "expected a number or \"inf\"");
    }
    return as_number(node, path);
}

std::size_t as_count(const json& node, const std::string& path) {
    if (!node.is_number_integer() || node.get<long long>() < 0)
        throw ConfigError(path, "expected a non-negative integer");
    return static_cast<std::size_t>(node.get<long long>());
}

void apply_layer(const json& node, const std::string& path, LayerSpec& layer) {
    check_keys(node, path, {"youngs_modulus", "density", "thickness"});
    if (node.contains("youngs_modulus"))
        layer.youngs_modulus = as_number(node["youngs_modulus"], join(path, "youngs_modulus"));
    if (node.contains("density")) layer.density = as_number(node["density"], join(path, "density"));
    if (node.contains("thickness"))
        layer.thickness = as_number(node["thickness"], join(path, "thickness"));
}

void apply_beam(const json& node, BeamGeometry& beam) {
    check_keys(node, "beam",
               {"length", "width", "substrate", "piezo", "piezo_start", "piezo_length"});
    if (node.contains("length")) beam.length = as_number(node["length"], "beam.length");
    if (node.contains("width")) beam.width = as_number(node["width"], "beam.width");
    if (node.contains("substrate")) apply_layer(node["substrate"], "beam.substrate", beam.substrate);
    if (node.contains("piezo")) apply_layer(node["piezo"], "beam.piezo", beam.piezo);
    if (node.contains("piezo_start"))
        beam.piezo_start = as_number(node["piezo_start"], "beam.piezo_start");
    if (node.contains("piezo_length"))
        beam.piezo_length = as_number(node["piezo_length"], "beam.piezo_length");
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

ProjectConfig ProjectConfig::defaults() {
    ProjectConfig cfg;
    // Copper substrate with a PVDF patch near the clamp.
    cfg.beam.length = 0.07;
    cfg.beam.width = 0.02;
    cfg.beam.substrate = {110e9, 8960.0, 1e-3};
    cfg.beam.piezo = {1.2e9, 1780.0, 0.5e-3};
    cfg.beam.piezo_start = 0.0;
    cfg.beam.piezo_length = 0.02;
    // coupling.d31 stays NaN (unset) on purpose; see the header.
    cfg.coupling.capacitance = 0.53e-9;
    cfg.coupling.leakage_resistance = 5e7;
    cfg.rectifier.diode_drop = 0.3;
    cfg.rectifier.storage_capacitance = 1e-6;
    cfg.rectifier.load_resistance = 1e6;
    return cfg;
}

ProjectConfig ProjectConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");

    json root;
    try {
        root = json::parse(in, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }

    ProjectConfig cfg = defaults();
    check_keys(root, "",
               {"beam", "section_model", "damping_ratio", "coupling", "rectifier", "spectrum",
                "solver", "output"});

    if (root.contains("beam")) apply_beam(root["beam"], cfg.beam);

    if (root.contains("section_model")) {
        const json& node = root["section_model"];
        if (!node.is_string()) throw ConfigError("section_model", "expected a string");
        const std::string name = node.get<std::string>();
        if (name == "bare-substrate")
            cfg.section_model = SectionModel::bare_substrate;
        else if (name == "uniform-bilayer")
            cfg.section_model = SectionModel::uniform_bilayer;
        else
            throw ConfigError("section_model",
                              "unknown model '" + name +
                                  "' (expected \"bare-substrate\" or \"uniform-bilayer\")");
    }

    if (root.contains("damping_ratio"))
        cfg.damping_ratio = as_number(root["damping_ratio"], "damping_ratio");

    if (root.contains("coupling")) {
        const json& node = root["coupling"];
        check_keys(node, "coupling", {"d31", "capacitance", "leakage_resistance"});
        if (node.contains("d31")) cfg.coupling.d31 = as_number(node["d31"], "coupling.d31");
        if (node.contains("capacitance"))
            cfg.coupling.capacitance = as_number(node["capacitance"], "coupling.capacitance");
        if (node.contains("leakage_resistance"))
            cfg.coupling.leakage_resistance =
                as_resistance(node["leakage_resistance"], "coupling.leakage_resistance");
    }

    if (root.contains("rectifier")) {
        const json& node = root["rectifier"];
        check_keys(node, "rectifier", {"diode_drop", "storage_capacitance", "load_resistance"});
        if (node.contains("diode_drop"))
            cfg.rectifier.diode_drop = as_number(node["diode_drop"], "rectifier.diode_drop");
        if (node.contains("storage_capacitance"))
            cfg.rectifier.storage_capacitance =
                as_number(node["storage_capacitance"], "rectifier.storage_capacitance");
        if (node.contains("load_resistance"))
            cfg.rectifier.load_resistance =
                as_resistance(node["load_resistance"], "rectifier.load_resistance");
    }

    if (root.contains("spectrum")) {
        const json& node = root["spectrum"];
        check_keys(node, "spectrum", {"band_low", "band_high", "segment_length", "window"});
        if (node.contains("band_low"))
            cfg.band_low = as_number(node["band_low"], "spectrum.band_low");
        if (node.contains("band_high"))
            cfg.band_high = as_number(node["band_high"], "spectrum.band_high");
        if (node.contains("segment_length"))
            cfg.segment_length = as_count(node["segment_length"], "spectrum.segment_length");
        if (node.contains("window")) {
            if (!node["window"].is_string())
                throw ConfigError("spectrum.window", "expected a string");
            const std::string name = node["window"].get<std::string>();
            if (name == "hann")
                cfg.window = Window::hann;
            else if (name == "rectangular")
                cfg.window = Window::rectangular;
            else
                throw ConfigError("spectrum.window",
                                  "unknown window '" + name +
                                      "' (expected \"hann\" or \"rectangular\")");
        }
    }

    if (root.contains("solver")) {
        const json& node = root["solver"];
        check_keys(node, "solver", {"root_tolerance", "placement_grid_points"});
        if (node.contains("root_tolerance"))
            cfg.root_tolerance = as_number(node["root_tolerance"], "solver.root_tolerance");
        if (node.contains("placement_grid_points"))
            cfg.placement_grid_points =
                as_count(node["placement_grid_points"], "solver.placement_grid_points");
    }

    if (root.contains("output")) {
        const json& node = root["output"];
        check_keys(node, "output", {"directory"});
        if (node.contains("directory")) {
            if (!node["directory"].is_string())
                throw ConfigError("output.directory", "expected a string");
            cfg.output_directory = node["directory"].get<std::string>();
        }
    }

    cfg.validate();
    return cfg;
}

void ProjectConfig::validate() const {
    try {
        beam.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("beam", e.what());
    }
    if (!(damping_ratio > 0.0 && damping_ratio < 1.0))
        throw ConfigError("damping_ratio", "must lie in (0, 1)");
    // NaN d31 means "unset" and is legal until a voltage computation needs it.
    if (!std::isnan(coupling.d31) && !std::isfinite(coupling.d31))
        throw ConfigError("coupling.d31", "must be finite");
    if (!positive(coupling.capacitance)) throw ConfigError("coupling.capacitance", "must be positive");
    if (!(coupling.leakage_resistance > 0.0))
        throw ConfigError("coupling.leakage_resistance", "must be positive");
    if (!(std::isfinite(rectifier.diode_drop) && rectifier.diode_drop >= 0.0))
        throw ConfigError("rectifier.diode_drop", "must be non-negative");
    if (!positive(rectifier.storage_capacitance))
        throw ConfigError("rectifier.storage_capacitance", "must be positive");
    if (!(rectifier.load_resistance > 0.0))
        throw ConfigError("rectifier.load_resistance", "must be positive");
    if (!(std::isfinite(band_low) && band_low >= 0.0))
        throw ConfigError("spectrum.band_low", "must be non-negative");
    if (!(std::isfinite(band_high) && band_high > band_low))
        throw ConfigError("spectrum.band_high", "must exceed band_low");
    if (segment_length < 2 || (segment_length & (segment_length - 1)) != 0)
        throw ConfigError("spectrum.segment_length", "must be a power of two (>= 2)");
    if (!positive(root_tolerance)) throw ConfigError("solver.root_tolerance", "must be positive");
    if (placement_grid_points < 2)
        throw ConfigError("solver.placement_grid_points", "must be at least 2");
}

namespace {

struct NumericField {
    const char* key;
    double (*get)(const ProjectConfig&);
    void (*set)(ProjectConfig&, double);
};

constexpr NumericField numeric_fields[] = {
    {"beam.length", [](const ProjectConfig& c) { return c.beam.length; },
     [](ProjectConfig& c, double v) { c.beam.length = v; }},
    {"beam.width", [](const ProjectConfig& c) { return c.beam.width; },
     [](ProjectConfig& c, double v) { c.beam.width = v; }},
    {"beam.substrate.youngs_modulus",
     [](const ProjectConfig& c) { return c.beam.substrate.youngs_modulus; },
     [](ProjectConfig& c, double v) { c.beam.substrate.youngs_modulus = v; }},
    {"beam.substrate.density", [](const ProjectConfig& c) { return c.beam.substrate.density; },
     [](ProjectConfig& c, double v) { c.beam.substrate.density = v; }},
    {"beam.substrate.thickness",
     [](const ProjectConfig& c) { return c.beam.substrate.thickness; },
     [](ProjectConfig& c, double v) { c.beam.substrate.thickness = v; }},
    {"beam.piezo.youngs_modulus",
     [](const ProjectConfig& c) { return c.beam.piezo.youngs_modulus; },
     [](ProjectConfig& c, double v) { c.beam.piezo.youngs_modulus = v; }},
    {"beam.piezo.density", [](const ProjectConfig& c) { return c.beam.piezo.density; },
     [](ProjectConfig& c, double v) { c.beam.piezo.density = v; }},
    {"beam.piezo.thickness", [](const ProjectConfig& c) { return c.beam.piezo.thickness; },
     [](ProjectConfig& c, double v) { c.beam.piezo.thickness = v; }},
    {"beam.piezo_start", [](const ProjectConfig& c) { return c.beam.piezo_start; },
     [](ProjectConfig& c, double v) { c.beam.piezo_start = v; }},
    {"beam.piezo_length", [](const ProjectConfig& c) { return c.beam.piezo_length; },
     [](ProjectConfig& c, double v) { c.beam.piezo_length = v; }},
    {"damping_ratio", [](const ProjectConfig& c) { return c.damping_ratio; },
     [](ProjectConfig& c, double v) { c.damping_ratio = v; }},
    {"coupling.d31", [](const ProjectConfig& c) { return c.coupling.d31; },
     [](ProjectConfig& c, double v) { c.coupling.d31 = v; }},
    {"coupling.capacitance", [](const ProjectConfig& c) { return c.coupling.capacitance; },
     [](ProjectConfig& c, double v) { c.coupling.capacitance = v; }},
    {"coupling.leakage_resistance",
     [](const ProjectConfig& c) { return c.coupling.leakage_resistance; },
     [](ProjectConfig& c, double v) { c.coupling.leakage_resistance = v; }},
    {"rectifier.diode_drop", [](const ProjectConfig& c) { return c.rectifier.diode_drop; },
     [](ProjectConfig& c, double v) { c.rectifier.diode_drop = v; }},
    {"rectifier.storage_capacitance",
     [](const ProjectConfig& c) { return c.rectifier.storage_capacitance; },
     [](ProjectConfig& c, double v) { c.rectifier.storage_capacitance = v; }},
    {"rectifier.load_resistance",
     [](const ProjectConfig& c) { return c.rectifier.load_resistance; },
     [](ProjectConfig& c, double v) { c.rectifier.load_resistance = v; }},
    {"spectrum.band_low", [](const ProjectConfig& c) { return c.band_low; },
     [](ProjectConfig& c, double v) { c.band_low = v; }},
    {"spectrum.band_high", [](const ProjectConfig& c) { return c.band_high; },
     [](ProjectConfig& c, double v) { c.band_high = v; }},
    {"spectrum.segment_length",
     [](const ProjectConfig& c) { return static_cast<double>(c.segment_length); },
     [](ProjectConfig& c, double v) { c.segment_length = static_cast<std::size_t>(v); }},
    {"solver.root_tolerance", [](const ProjectConfig& c) { return c.root_tolerance; },
     [](ProjectConfig& c, double v) { c.root_tolerance = v; }},
    {"solver.placement_grid_points",
     [](const ProjectConfig& c) { return static_cast<double>(c.placement_grid_points); },
     [](ProjectConfig& c, double v) { c.placement_grid_points = static_cast<std::size_t>(v); }},
};

const NumericField* find_field(const std::string& key) {
    for (const NumericField& field : numeric_fields)
        if (key == field.key) return &field;
    return nullptr;
}

}  // namespace

double ProjectConfig::get(const std::string& key) const {
    const NumericField* field = find_field(key);
    if (!field) throw ConfigError(key, "unknown config key");
    return field->get(*this);
}

void ProjectConfig::set(const std::string& key, double value) {
    const NumericField* field = find_field(key);
    if (!field) throw ConfigError(key, "unknown config key");
    if (std::isnan(value) && key != "coupling.d31")
        throw ConfigError(key, "value must not be NaN");
    if ((key == "spectrum.segment_length" || key == "solver.placement_grid_points") &&
        (!(value >= 0.0) || value != std::floor(value)))
        throw ConfigError(key, "expected a non-negative integer");
    const double previous = field->get(*this);
    field->set(*this, value);
    try {
        validate();
    } catch (...) {
        field->set(*this, previous);  // a rejected set must not corrupt the config
        throw;
    }
}

}  // namespace aeh
