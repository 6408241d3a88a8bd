#include "aeh/acoustics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aeh/errors.hpp"
#include "aeh/numeric.hpp"

namespace aeh {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double reference_pressure = 20e-6;  // Pa RMS at 0 dB

}  // namespace

double spl_to_pressure(double spl_db) {
    if (!std::isfinite(spl_db)) throw std::domain_error("sound level must be finite");
    return reference_pressure * std::pow(10.0, spl_db / 20.0);
}

double pressure_to_spl(double pressure_pa) {
    if (!(std::isfinite(pressure_pa) && pressure_pa > 0.0))
        throw std::domain_error("pressure must be positive");
    return 20.0 * std::log10(pressure_pa / reference_pressure);
}

double combine_incoherent(const std::vector<double>& levels_db) {
    if (levels_db.empty())
        throw std::domain_error("cannot combine an empty set of sound levels");
    double sum = 0.0;
    for (double level : levels_db) {
        if (!std::isfinite(level)) throw std::domain_error("sound level must be finite");
        sum += std::pow(10.0, level / 10.0);
    }
    return 10.0 * std::log10(sum);
}

ForcedResponse modal_forced_response(const BeamGeometry& geometry,
                                     const CompositeSection& section,
                                     const ModeSolution& mode, double pressure_amplitude,
                                     double drive_frequency, double damping_ratio,
                                     const PiezoCoupling& coupling) {
    geometry.validate();
    if (!(section.mass_per_length > 0.0 && section.flexural_rigidity > 0.0))
        throw std::domain_error("section properties must be positive");
    if (std::abs(mode.length - geometry.length) > 1e-9 * geometry.length)
        throw std::domain_error("mode was computed for a different beam length");
    if (!(std::isfinite(pressure_amplitude) && pressure_amplitude >= 0.0))
        throw std::domain_error("pressure amplitude must be non-negative");
    if (!(std::isfinite(drive_frequency) && drive_frequency > 0.0))
        throw std::domain_error("drive frequency must be positive");
    if (!(damping_ratio > 0.0 && damping_ratio < 1.0))
        throw std::domain_error("damping ratio must lie in (0, 1)");
    if (std::isnan(coupling.d31))
        throw ConfigError("coupling.d31",
                          "not set (the strain constant has no built-in default)");
    if (!std::isfinite(coupling.d31))
        throw std::domain_error("coupling.d31 must be finite");
    if (!(coupling.capacitance > 0.0))
        throw std::domain_error("coupling.capacitance must be positive");
    if (!(coupling.leakage_resistance > 0.0))  // +infinity is fine
        throw std::domain_error("coupling.leakage_resistance must be positive");

    const double length = geometry.length;

    // Modal projection of the uniform line load p*B and the modal mass; the
    // shape is unnormalized, so both integrals carry its scale and the ratio
    // is convention-free.
    const std::size_t points = 2001;
    const double int_w =
        detail::simpson([&](double x) { return mode_shape(mode, x); }, 0.0, length, points);
    const double int_w2 = detail::simpson(
        [&](double x) {
            const double w = mode_shape(mode, x);
            return w * w;
        },
        0.0, length, points);

    const double modal_force = pressure_amplitude * geometry.width * int_w;
    const double modal_mass = section.mass_per_length * int_w2;
    const double omega = 2.0 * pi * drive_frequency;
    const double wk = mode.omega;
    const double denom = std::sqrt((wk * wk - omega * omega) * (wk * wk - omega * omega) +
                                   (2.0 * damping_ratio * wk * omega) *
                                       (2.0 * damping_ratio * wk * omega));

    ForcedResponse response;
    response.modal_amplitude = std::abs(modal_force / modal_mass) / denom;
    response.tip_displacement = response.modal_amplitude * std::abs(mode_shape(mode, length));

    // Patch span, clamped against harmless floating-point overhang.
    const double a = std::min(geometry.piezo_start, length);
    const double b = std::min(geometry.piezo_start + geometry.piezo_length, length);

    // Peak bending strain on the substrate surface over the patch span.
    double max_curvature = std::abs(mode_curvature(mode, a));
    const std::size_t scan = 201;
    for (std::size_t i = 1; i < scan; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(scan - 1);
        max_curvature = std::max(max_curvature, std::abs(mode_curvature(mode, x)));
    }
    response.max_surface_strain =
        0.5 * geometry.substrate.thickness * response.modal_amplitude * max_curvature;

    // Charge from integrated bending strain at the patch mid-plane lever arm
    // (h_b/2 + h_p/2); the curvature integral is exactly the slope change.
    const double lever = 0.5 * (geometry.substrate.thickness + geometry.piezo.thickness);
    const double curvature_integral = mode_slope(mode, b) - mode_slope(mode, a);
    response.open_circuit_voltage = std::abs(coupling.d31) * geometry.piezo.youngs_modulus *
                                    geometry.width * lever * response.modal_amplitude *
                                    std::abs(curvature_integral) / coupling.capacitance;
    return response;
}

}  // namespace aeh
