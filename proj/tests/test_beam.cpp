#include <doctest.h>

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "aeh/beam.hpp"

using namespace aeh;

namespace {

// Copper substrate, 70 x 20 x 1 mm, with a 20 mm PVDF patch at the clamp.
BeamGeometry reference_geometry() {
    BeamGeometry g;
    g.length = 0.07;
    g.width = 0.02;
    g.substrate = {110e9, 8960.0, 1e-3};
    g.piezo = {1.2e9, 1780.0, 0.5e-3};
    g.piezo_start = 0.0;
    g.piezo_length = 0.02;
    return g;
}

constexpr double kLambda1 = 1.875104068712;
constexpr double kLambda2 = 4.694091132974;
constexpr double kLambda3 = 7.854757438238;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("clamped-free frequency equation roots") {
    const auto lambdas = cantilever_lambdas(8);
    REQUIRE(lambdas.size() == 8);

    // Bisection-oracle values, full double precision.
    CHECK(rel_err(lambdas[0], kLambda1) < 1e-12);
    CHECK(rel_err(lambdas[1], kLambda2) < 1e-12);
    CHECK(rel_err(lambdas[2], kLambda3) < 1e-12);
    CHECK(rel_err(lambdas[3], 10.995540734875) < 1e-12);
    CHECK(rel_err(lambdas[7], 23.561944901806) < 1e-12);

    // Each root satisfies 1 + cos(l)cosh(l) = 0; cosh amplifies the residual,
    // so compare against the equation's own scale.
    for (double l : lambdas)
        CHECK(std::abs(1.0 + std::cos(l) * std::cosh(l)) < 1e-9 * std::cosh(l));

    // Roots approach the asymptote (k - 1/2)*pi from alternating sides and
    // the gap shrinks fast; the eighth root is within 1e-9 of it.
    const double pi = 3.14159265358979323846;
    for (std::size_t k = 1; k <= 8; ++k) {
        double asym = (static_cast<double>(k) - 0.5) * pi;
        CHECK(std::abs(lambdas[k - 1] - asym) < 0.31);
    }
    CHECK(std::abs(lambdas[7] - 7.5 * pi) < 1e-9);
}

TEST_CASE("mode shape coefficient") {
    // The textbook magnitude is 1.3622; the sign is negative for the
    // sin-first shape convention used here (beta multiplies cos - cosh).
    CHECK(rel_err(mode_shape_coefficient(kLambda1), -1.362220557485) < 1e-11);
    CHECK(rel_err(mode_shape_coefficient(kLambda2), -0.981867539175) < 1e-11);
    CHECK(rel_err(mode_shape_coefficient(kLambda3), -1.000776105355) < 1e-11);
    CHECK(rel_err(mode_shape_coefficient(10.995540734875), -0.999966447874) < 1e-11);
    // For large arguments the stable form must tend to -1, not overflow.
    CHECK(rel_err(mode_shape_coefficient(200.0), -1.0) < 1e-12);
}

TEST_CASE("composite section properties") {
    const BeamGeometry g = reference_geometry();

    SUBCASE("bare substrate") {
        const CompositeSection s = section_properties(g, SectionModel::bare_substrate);
        CHECK(rel_err(s.mass_per_length, 0.1792) < 1e-12);
        CHECK(rel_err(s.flexural_rigidity, 2.2 / 12.0) < 1e-12);
    }

    SUBCASE("uniform bilayer") {
        const CompositeSection s = section_properties(g, SectionModel::uniform_bilayer);
        CHECK(rel_err(s.mass_per_length, 0.197) < 1e-12);
        CHECK(rel_err(s.flexural_rigidity, 0.1903333333333333) < 1e-12);
    }

    SUBCASE("zero piezo thickness degenerates to the bare section") {
        BeamGeometry thin = g;
        thin.piezo.thickness = 0.0;
        const CompositeSection s = section_properties(thin, SectionModel::uniform_bilayer);
        CHECK(s.mass_per_length == doctest::Approx(0.1792).epsilon(1e-12));
        CHECK(s.flexural_rigidity == doctest::Approx(2.2 / 12.0).epsilon(1e-12));
    }
}

TEST_CASE("natural frequencies match the closed-form oracle") {
    const BeamGeometry g = reference_geometry();
    const CompositeSection bilayer = section_properties(g, SectionModel::uniform_bilayer);
    const CompositeSection bare = section_properties(g, SectionModel::bare_substrate);

    const auto modes = natural_frequencies(bilayer, g.length, 3);
    REQUIRE(modes.size() == 3);
    CHECK(rel_err(modes[0].frequency, 112.25330013) < 1e-9);
    CHECK(rel_err(modes[1].frequency, 703.479424) < 1e-8);
    CHECK(rel_err(modes[2].frequency, 1969.762756) < 1e-8);

    const auto bare_modes = natural_frequencies(bare, g.length, 1);
    CHECK(rel_err(bare_modes[0].frequency, 115.51184448) < 1e-9);

    for (const ModeSolution& m : modes) {
        CHECK(m.omega == doctest::Approx(2.0 * 3.14159265358979323846 * m.frequency));
        CHECK(m.length == g.length);
    }
    CHECK(modes[0].index == 1);
    CHECK(modes[2].index == 3);
}

TEST_CASE("frequency scales exactly as 1/L^2") {
    const BeamGeometry g = reference_geometry();
    const CompositeSection s = section_properties(g, SectionModel::uniform_bilayer);
    const auto at_l = natural_frequencies(s, g.length, 3);
    const auto at_2l = natural_frequencies(s, 2.0 * g.length, 3);
    // Doubling L scales L^2 by exactly 4; the implementation divides by L*L,
    // so the ratio is exact in floating point, not merely close.
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(at_2l[k].frequency * 4.0 == at_l[k].frequency);
        CHECK(at_2l[k].omega * 4.0 == at_l[k].omega);
    }
}

TEST_CASE("mode shape boundary values") {
    const BeamGeometry g = reference_geometry();
    const CompositeSection s = section_properties(g, SectionModel::uniform_bilayer);
    const ModeSolution m1 = natural_frequencies(s, g.length, 1)[0];

    // Clamped end: displacement and slope vanish identically in the closed form.
    CHECK(mode_shape(m1, 0.0) == 0.0);
    CHECK(mode_slope(m1, 0.0) == 0.0);

    // Free end: tip deflection equals -2*beta (a closed-form identity), the
    // slope is the frozen oracle value, and the bending moment vanishes.
    CHECK(rel_err(mode_shape(m1, g.length), 2.7244411150) < 1e-10);
    CHECK(rel_err(mode_shape(m1, g.length), -2.0 * m1.beta) < 1e-12);
    CHECK(rel_err(mode_slope(m1, g.length), 53.5744019632) < 1e-10);
    CHECK(rel_err(mode_curvature(m1, 0.0), 1954.933992) < 1e-9);
    CHECK(std::abs(mode_curvature(m1, g.length)) < 1e-6 * std::abs(mode_curvature(m1, 0.0)));
}

TEST_CASE("mode shape curvature agrees with finite differences") {
    const BeamGeometry g = reference_geometry();
    const CompositeSection s = section_properties(g, SectionModel::uniform_bilayer);
    const ModeSolution m1 = natural_frequencies(s, g.length, 1)[0];

    const double h = 1e-4 * g.length;
    const double scale = std::abs(mode_curvature(m1, 0.0));
    for (double frac : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        double x = frac * g.length;
        double fd = (mode_shape(m1, x + h) - 2.0 * mode_shape(m1, x) + mode_shape(m1, x - h)) /
                    (h * h);
        CHECK(std::abs(fd - mode_curvature(m1, x)) < 1e-6 * scale);
    }
}

TEST_CASE("higher modes add interior sign changes") {
    const BeamGeometry g = reference_geometry();
    const CompositeSection s = section_properties(g, SectionModel::uniform_bilayer);
    const auto modes = natural_frequencies(s, g.length, 3);

    auto sign_changes = [&](const ModeSolution& m) {
        int changes = 0;
        double prev = mode_shape(m, 0.001 * g.length);
        for (int i = 2; i <= 1000; ++i) {
            double v = mode_shape(m, i * 0.001 * g.length);
            if (v * prev < 0.0) ++changes;
            prev = v;
        }
        return changes;
    };
    // Mode k has k-1 interior nodes.
    CHECK(sign_changes(modes[0]) == 0);
    CHECK(sign_changes(modes[1]) == 1);
    CHECK(sign_changes(modes[2]) == 2);
}

TEST_CASE("validation rejects bad inputs") {
    const BeamGeometry good = reference_geometry();

    CHECK_THROWS_AS(cantilever_lambdas(0), std::invalid_argument);
    CHECK_THROWS_AS(mode_shape_coefficient(0.0), std::invalid_argument);

    BeamGeometry g = good;
    g.length = 0.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    g = good;
    g.substrate.thickness = 0.0;  // the carrying layer may not vanish
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    g = good;
    g.piezo.thickness = -1e-9;  // the patch may be absent (0) but not negative
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    g = good;
    g.piezo_start = 0.06;  // 20 mm patch starting at 60 mm overruns a 70 mm beam
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    g = good;
    g.substrate.youngs_modulus = -1.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);

    const CompositeSection s = section_properties(good, SectionModel::uniform_bilayer);
    CHECK_THROWS_AS(natural_frequencies(s, -0.07, 1), std::invalid_argument);

    const ModeSolution m1 = natural_frequencies(s, good.length, 1)[0];
    CHECK_THROWS_AS(mode_shape(m1, -1e-6), std::domain_error);
    CHECK_THROWS_AS(mode_shape(m1, good.length + 1e-6), std::domain_error);
}

TEST_CASE("root finding is fast enough for interactive use") {
    using clock = std::chrono::steady_clock;
    // Warm caches, then time a single call; the acceptance budget is 1 ms.
    (void)cantilever_lambdas(3);
    const auto t0 = clock::now();
    const auto lambdas = cantilever_lambdas(3);
    const auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count();
    CHECK(lambdas.size() == 3);
    CHECK(micros < 1000);
}
