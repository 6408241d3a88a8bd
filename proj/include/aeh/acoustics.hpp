#pragma once

#include <limits>
#include <vector>

#include "aeh/beam.hpp"

namespace aeh {

// Sound pressure level <-> RMS pressure, reference 20 uPa.
double spl_to_pressure(double spl_db);
double pressure_to_spl(double pressure_pa);

// Incoherent (power) superposition: 10*log10(sum 10^(L_i/10)).
// Empty input is a std::domain_error.
double combine_incoherent(const std::vector<double>& levels_db);

// Piezo electromechanical constants. d31 defaults to NaN meaning "not set";
// using it in a voltage computation then raises an error — there is no
// silent built-in value for a material constant.
struct PiezoCoupling {
    double d31 = std::numeric_limits<double>::quiet_NaN();               // C/N
    double capacitance = 0.0;                                            // F
    double leakage_resistance = std::numeric_limits<double>::infinity(); // ohm
};

struct ForcedResponse {
    double modal_amplitude = 0.0;       // m, |q_k|
    double tip_displacement = 0.0;      // m, |q_k|*|W_k(L)|
    double max_surface_strain = 0.0;    // peak bending strain on the substrate
                                        // surface over the patch span
    double open_circuit_voltage = 0.0;  // V, peak
};

// Steady-state response of one mode to a uniform pressure tone of the given
// peak amplitude (Pa) over the beam face:
//   q_k = (F_k/M_k) / sqrt((w_k^2 - w^2)^2 + (2*zeta*w_k*w)^2),
// with F_k = p*B*int W dx and M_k = m*int W^2 dx. The open-circuit voltage
// uses the charge collected from integrated bending strain at the patch
// mid-plane lever arm (h_b/2 + h_p/2) divided by C_p:
//   V_oc = |d31|*E_p*B*(h_b/2 + h_p/2)*|q_k|*|W'(b) - W'(a)| / C_p.
// damping_ratio must lie in (0, 1); an unset d31 raises
// std::invalid_argument.
ForcedResponse modal_forced_response(const BeamGeometry& geometry,
                                     const CompositeSection& section,
                                     const ModeSolution& mode,
                                     double pressure_amplitude,
                                     double drive_frequency,
                                     double damping_ratio,
                                     const PiezoCoupling& coupling);

}  // namespace aeh
