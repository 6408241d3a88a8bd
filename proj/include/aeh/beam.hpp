#pragma once

#include <cstddef>
#include <vector>

namespace aeh {

// Section idealizations for the layered cantilever.
//   bare_substrate : metal beam alone; the patch is ignored entirely.
//   uniform_bilayer: substrate + piezo layer smeared along the full length,
//                    bending taken about the substrate mid-plane (no
//                    neutral-axis shift; see README for the approximation).
enum class SectionModel { bare_substrate, uniform_bilayer };

struct LayerSpec {
    double youngs_modulus = 0.0;  // Pa
    double density = 0.0;         // kg/m^3
    double thickness = 0.0;       // m
};

// Clamped-free beam: substrate spanning [0, length] with a piezo patch of
// the same width bonded on top over [piezo_start, piezo_start + piezo_length].
struct BeamGeometry {
    double length = 0.0;        // m, substrate length from clamp to free end
    double width = 0.0;         // m, shared by substrate and patch
    LayerSpec substrate;
    LayerSpec piezo;
    double piezo_start = 0.0;   // m from the clamp
    double piezo_length = 0.0;  // m

    // Throws std::invalid_argument naming the offending field. The patch may
    // be degenerate (piezo_length or piezo.thickness zero) but must fit on
    // the beam.
    void validate() const;
};

struct CompositeSection {
    double mass_per_length = 0.0;    // kg/m
    double flexural_rigidity = 0.0;  // N*m^2 (EI)
};

// One transverse bending mode of the clamped-free beam. The shape is the
// standard unnormalized form
//   W_k(x) = sin(u) - sinh(u) + beta_k*(cos(u) - cosh(u)),  u = lambda_k*x/L.
struct ModeSolution {
    int index = 0;           // k >= 1
    double lambda = 0.0;     // k-th positive root of 1 + cos(l)*cosh(l) = 0
    double beta = 0.0;       // shape coefficient (cos l + cosh l)/(sin l - sinh l)
    double omega = 0.0;      // rad/s
    double frequency = 0.0;  // Hz
    double length = 0.0;     // m, beam length the mode was computed for
};

// Smeared section properties for the chosen model. Bare substrate:
//   m  = B*rho_b*h_b,  EI = B*E_b*h_b^3/12.
// Uniform bilayer adds the patch layer, bending about the substrate mid-plane:
//   m += B*rho_p*h_p,  EI += B*(E_p/3)*((h_b/2 + h_p)^3 - (h_b/2)^3).
CompositeSection section_properties(const BeamGeometry& geometry, SectionModel model);

// First `count` positive roots of the clamped-free frequency equation
//   1 + cos(lambda)*cosh(lambda) = 0,
// bisected to full double precision; every returned root leaves a residual
// below `tolerance`. Throws std::invalid_argument for count < 1 or a
// non-positive tolerance.
std::vector<double> cantilever_lambdas(std::size_t count, double tolerance = 1e-10);

// Shape coefficient beta(lambda) = (cos l + cosh l)/(sin l - sinh l),
// evaluated in a form that stays bounded for large l (tends to -1).
double mode_shape_coefficient(double lambda);

// Modes 1..count for the given section and length:
//   omega_k = lambda_k^2 * sqrt(EI/(m*L^4)).
std::vector<ModeSolution> natural_frequencies(const CompositeSection& section,
                                              double length, std::size_t count,
                                              double tolerance = 1e-10);

// W_k(x), W_k'(x) and W_k''(x). x must lie in [0, length]; outside it these
// throw std::domain_error.
double mode_shape(const ModeSolution& mode, double x);
double mode_slope(const ModeSolution& mode, double x);
double mode_curvature(const ModeSolution& mode, double x);

}  // namespace aeh
