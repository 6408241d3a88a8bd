#pragma once

#include <cstddef>
#include <vector>

#include "aeh/beam.hpp"

namespace aeh {

struct DesignTarget {
    double target_frequency = 0.0;  // Hz
    int mode_index = 1;             // which mode should land on the target
};

struct PlacementSample {
    double patch_start = 0.0;  // m
    double objective = 0.0;    // integral of |W''| over the patch, 1/m
};

struct PlacementResult {
    double patch_start = 0.0;
    double objective = 0.0;
    std::vector<PlacementSample> profile;  // one sample per grid start
};

// Beam length that places mode `target.mode_index` of the given section at
// `target.target_frequency`; inverts omega = lambda^2*sqrt(EI/(m*L^4)):
//   L = lambda * (EI/m)^(1/4) / sqrt(2*pi*f).
double length_for_frequency(const CompositeSection& section, const DesignTarget& target);

// Integral of |W''| over [patch_start, patch_start + piezo_length] by
// composite Simpson quadrature; `quadrature_points` is clamped to >= 201 and
// forced odd. Throws std::domain_error if the patch does not fit on the beam
// or the mode was built for a different length.
double placement_objective(const BeamGeometry& geometry, const ModeSolution& mode,
                           double patch_start, std::size_t quadrature_points = 201);

// Evaluates the placement objective on a uniform grid of `grid_points` patch
// starts spanning [0, length - piezo_length] and returns the best start
// (ties broken toward the smaller start) plus the full profile.
PlacementResult optimal_patch_start(const BeamGeometry& geometry, const ModeSolution& mode,
                                    std::size_t grid_points = 101);

}  // namespace aeh
