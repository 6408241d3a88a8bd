#include "aeh/beam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aeh {
namespace {

constexpr double pi = std::numbers::pi;

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

// Frequency equation 1 + cos(l)*cosh(l) = 0 rewritten as
// cos(l) + sech(l) = 0 so the residual stays O(1) for any root index
// (cosh alone overflows near l ~ 710).
double frequency_residual(double lambda) {
    return std::cos(lambda) + 1.0 / std::cosh(lambda);
}

void validate_layer(const LayerSpec& layer, bool thickness_may_be_zero, const char* name) {
    std::string who(name);
    if (!positive(layer.youngs_modulus))
        throw std::invalid_argument(who + ".youngs_modulus must be positive");
    if (!positive(layer.density))
        throw std::invalid_argument(who + ".density must be positive");
    const bool ok = thickness_may_be_zero
                        ? std::isfinite(layer.thickness) && layer.thickness >= 0.0
                        : positive(layer.thickness);
    if (!ok)
        throw std::invalid_argument(who + (thickness_may_be_zero
                                               ? ".thickness must be non-negative"
                                               : ".thickness must be positive"));
}

void validate_section(const CompositeSection& section) {
    require(positive(section.mass_per_length), "section mass_per_length must be positive");
    require(positive(section.flexural_rigidity), "section flexural_rigidity must be positive");
}

void validate_mode(const ModeSolution& mode) {
    require(positive(mode.lambda), "mode lambda must be positive");
    require(positive(mode.length), "mode length must be positive");
}

}  // namespace

void BeamGeometry::validate() const {
    require(positive(length), "beam.length must be positive");
    require(positive(width), "beam.width must be positive");
    validate_layer(substrate, false, "beam.substrate");
    // A degenerate patch (zero thickness or zero length) is allowed so the
    // bilayer model can collapse onto the bare substrate.
    validate_layer(piezo, true, "beam.piezo");
    require(std::isfinite(piezo_start) && piezo_start >= 0.0,
            "beam.piezo_start must be non-negative");
    require(std::isfinite(piezo_length) && piezo_length >= 0.0,
            "beam.piezo_length must be non-negative");
    require(piezo_start + piezo_length <= length * (1.0 + 1e-12),
            "beam piezo patch must fit within the beam length");
}

CompositeSection section_properties(const BeamGeometry& geometry, SectionModel model) {
    geometry.validate();
    const double b = geometry.width;
    const double hb = geometry.substrate.thickness;

    CompositeSection section;
    section.mass_per_length = b * geometry.substrate.density * hb;
    section.flexural_rigidity = b * geometry.substrate.youngs_modulus * hb * hb * hb / 12.0;

    if (model == SectionModel::uniform_bilayer) {
        // Patch layer smeared along the full length, bending about the
        // substrate mid-plane (the neutral-axis shift from the compliant
        // patch is neglected): integral of E_p*z^2 over [h_b/2, h_b/2+h_p].
        const double hp = geometry.piezo.thickness;
        const double top = 0.5 * hb + hp;
        const double bottom = 0.5 * hb;
        section.mass_per_length += b * geometry.piezo.density * hp;
        section.flexural_rigidity +=
            b * (geometry.piezo.youngs_modulus / 3.0) * (top * top * top - bottom * bottom * bottom);
    }
    return section;
}

std::vector<double> cantilever_lambdas(std::size_t count, double tolerance) {
    require(count >= 1, "count must be at least 1");
    require(positive(tolerance), "tolerance must be positive");

    std::vector<double> roots;
    roots.reserve(count);

    // Roots interlace (k - 1/2)*pi, so scanning in pi/8 panels cannot skip
    // any sign change.
    const double step = pi / 8.0;
    double a = step;
    double fa = frequency_residual(a);
    while (roots.size() < count) {
        const double b = a + step;
        const double fb = frequency_residual(b);
        if (fa == 0.0) {
            roots.push_back(a);
        } else if ((fa < 0.0) != (fb < 0.0)) {
            // Bisect to full double precision: stop once the midpoint can no
            // longer be distinguished from the bracket ends.
            double lo = a, hi = b;
            bool lo_negative = fa < 0.0;
            for (;;) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double fm = frequency_residual(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == lo_negative) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            // Bisecting to the last representable digit leaves a residual of
            // a few ULP — far below any achievable tolerance, so tolerances
            // tighter than double precision are effectively clamped.
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

double mode_shape_coefficient(double lambda) {
    require(positive(lambda), "lambda must be positive");
    // (cos l + cosh l)/(sin l - sinh l) with numerator and denominator both
    // divided by cosh l, so large arguments stay finite (sech underflows to
    // zero and the ratio tends to -1, as it must).
    const double sech = 1.0 / std::cosh(lambda);
    return (std::cos(lambda) * sech + 1.0) / (std::sin(lambda) * sech - std::tanh(lambda));
}

std::vector<ModeSolution> natural_frequencies(const CompositeSection& section, double length,
                                              std::size_t count, double tolerance) {
    validate_section(section);
    require(positive(length), "length must be positive");

    const std::vector<double> lambdas = cantilever_lambdas(count, tolerance);
    // omega_k = lambda_k^2 * sqrt(EI/(m*L^4)) = lambda_k^2 * sqrt(EI/m)/L^2.
    const double base =
        std::sqrt(section.flexural_rigidity / section.mass_per_length) / (length * length);

    std::vector<ModeSolution> modes;
    modes.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        ModeSolution mode;
        mode.index = static_cast<int>(k) + 1;
        mode.lambda = lambdas[k];
        mode.beta = mode_shape_coefficient(lambdas[k]);
        mode.omega = lambdas[k] * lambdas[k] * base;
        mode.frequency = mode.omega / (2.0 * pi);
        mode.length = length;
        modes.push_back(mode);
    }
    return modes;
}

namespace {

double normalized_position(const ModeSolution& mode, double x) {
    validate_mode(mode);
    if (!(x >= 0.0 && x <= mode.length))
        throw std::domain_error("position is outside the beam [0, length]");
    return mode.lambda * x / mode.length;
}

}  // namespace

double mode_shape(const ModeSolution& mode, double x) {
    const double u = normalized_position(mode, x);
    return std::sin(u) - std::sinh(u) + mode.beta * (std::cos(u) - std::cosh(u));
}

double mode_slope(const ModeSolution& mode, double x) {
    const double u = normalized_position(mode, x);
    const double scale = mode.lambda / mode.length;
    return scale * (std::cos(u) - std::cosh(u) - mode.beta * (std::sin(u) + std::sinh(u)));
}

double mode_curvature(const ModeSolution& mode, double x) {
    const double u = normalized_position(mode, x);
    const double scale = mode.lambda / mode.length;
    return scale * scale *
           (-std::sin(u) - std::sinh(u) - mode.beta * (std::cos(u) + std::cosh(u)));
}

}  // namespace aeh
