#include "aeh/design.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aeh/numeric.hpp"

namespace aeh {
namespace {

constexpr double pi = std::numbers::pi;

// Patch interval [start, start+piezo_length] clamped onto the beam; a
// floating-point start computed as length - piezo_length may overhang by a
// few ULP, which is not an error.
struct PatchSpan {
    double begin = 0.0;
    double end = 0.0;
};

PatchSpan patch_span(const BeamGeometry& geometry, double patch_start) {
    if (!(std::isfinite(patch_start) && patch_start >= 0.0))
        throw std::domain_error("patch_start must be non-negative");
    const double end = patch_start + geometry.piezo_length;
    if (end > geometry.length * (1.0 + 1e-12))
        throw std::domain_error("patch extends past the free end of the beam");
    return {std::min(patch_start, geometry.length), std::min(end, geometry.length)};
}

void require_matching_length(const BeamGeometry& geometry, const ModeSolution& mode) {
    if (std::abs(mode.length - geometry.length) > 1e-9 * geometry.length)
        throw std::domain_error("mode was computed for a different beam length");
}

}  // namespace

double length_for_frequency(const CompositeSection& section, const DesignTarget& target) {
    if (!(std::isfinite(target.target_frequency) && target.target_frequency > 0.0))
        throw std::domain_error("target frequency must be positive");
    if (target.mode_index < 1) throw std::domain_error("mode index must be at least 1");
    if (!(section.mass_per_length > 0.0 && section.flexural_rigidity > 0.0))
        throw std::domain_error("section properties must be positive");

    const double lambda =
        cantilever_lambdas(static_cast<std::size_t>(target.mode_index)).back();
    const double omega = 2.0 * pi * target.target_frequency;
    return lambda *
           std::pow(section.flexural_rigidity / section.mass_per_length, 0.25) /
           std::sqrt(omega);
}

double placement_objective(const BeamGeometry& geometry, const ModeSolution& mode,
                           double patch_start, std::size_t quadrature_points) {
    geometry.validate();
    require_matching_length(geometry, mode);
    const PatchSpan span = patch_span(geometry, patch_start);
    const std::size_t points = std::max<std::size_t>(quadrature_points, 201);
    return detail::simpson([&](double x) { return std::abs(mode_curvature(mode, x)); },
                           span.begin, span.end, points);
}

PlacementResult optimal_patch_start(const BeamGeometry& geometry, const ModeSolution& mode,
                                    std::size_t grid_points) {
    if (grid_points < 2) throw std::domain_error("placement grid needs at least 2 points");
    geometry.validate();
    require_matching_length(geometry, mode);

    const double reach = geometry.length - geometry.piezo_length;
    PlacementResult result;
    result.profile.reserve(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double start =
            reach * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const double value = placement_objective(geometry, mode, start);
        result.profile.push_back({start, value});
        // Strict comparison keeps the smaller start on ties.
        if (i == 0 || value > result.objective) {
            result.patch_start = start;
            result.objective = value;
        }
    }
    return result;
}

}  // namespace aeh
