#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gfm {

/// Per-unit controller, filter, and limiter constants plus the base
/// quantities used to convert back to SI. All electrical values are in
/// per-unit on the (S_r, E_r, omega_b) base.
struct ParameterSet {
    double psi = 0.0;        // controller rotation angle, rad, in [0, 2*pi)
    double eps_sat = 0.0;    // saturation-function sharpness, in (0, 1)
    double E_b = 0.0;        // nominal voltage magnitude, pu
    double I_max = 0.0;      // peak current limit, pu

    double L_i = 0.0;        // inverter-side inductance, pu
    double L_g = 0.0;        // grid-side (+ line) inductance, pu
    double C = 0.0;          // filter capacitance, pu
    double R_i = 0.0;        // inverter-side resistance, pu
    double R_g = 0.0;        // grid-side (+ line) resistance, pu

    double K_b = 0.0;        // anti-windup gain, pu
    double K_Pi = 0.0;       // current-loop proportional gain, pu
    double K_Ii = 0.0;       // current-loop integral gain, pu
    double kappa_1 = 0.0;    // synchronization gain, pu
    double K_Pv = 0.0;       // voltage-loop proportional gain, pu
    double K_Iv = 0.0;       // voltage-loop integral gain, pu
    double kappa_2 = 0.0;    // voltage-amplitude control gain, pu

    double omega_bw_i = 0.0; // current-loop bandwidth, pu
    double omega_bw_v = 0.0; // voltage-loop bandwidth, pu

    double omega_b = 0.0;    // nominal angular frequency, rad/s
    double S_r = 0.0;        // rated three-phase power, VA
    double E_r = 0.0;        // rated line-to-line RMS voltage, V
};

/// Built-in set with the grid-side + line inductance row (L_g = 0.037 pu,
/// R_g = 0.0139 pu).
ParameterSet table1_inductive();

/// Built-in set with the grid-side + line resistance row (R_g = 0.0313 pu,
/// L_g = 0.0196 pu).
ParameterSet table1_resistive();

bool is_named_parameter_set(std::string_view name);
ParameterSet named_parameter_set(std::string_view name);

/// Throws ValidationError on any hard invariant breach (non-positive
/// physical constant, eps_sat outside (0,1), psi outside [0, 2*pi)).
void validate_parameters(const ParameterSet& p);

/// Non-fatal gain-consistency checks (1% band): K_Pi vs omega_bw_i*L_i,
/// K_Ii vs omega_bw_i*R_i, K_Pv vs omega_bw_v*C. Returns one message per
/// inconsistency; empty means all consistent.
std::vector<std::string> parameter_warnings(const ParameterSet& p);

/// Parse a flat JSON object with exactly the ParameterSet field names, or a
/// JSON string naming a built-in set. Unknown or missing keys are errors.
ParameterSet parameters_from_json(const nlohmann::json& doc);
nlohmann::json parameters_to_json(const ParameterSet& p);

/// Load from a file path or a built-in set name. Validates; warnings are
/// returned through `warnings` when non-null.
ParameterSet load_parameters(const std::string& source, std::vector<std::string>* warnings = nullptr);

/// Convert a per-unit value to SI using one of the base-quantity rows:
///   voltage                 E_r*sqrt(2)/sqrt(3)      [V, peak line-neutral]
///   current                 S_r*sqrt(2)/(sqrt(3)E_r) [A, peak]
///   inductance              E_r^2/(S_r*omega_b)      [H]
///   capacitance             S_r/(E_r^2*omega_b)      [F]
///   resistance              E_r^2/S_r                [ohm]
///   inverse_capacitance     E_r^2*omega_b/S_r        [1/F]
///   conductance             S_r/E_r^2                [1/ohm]
///   inverse_inductance      S_r*omega_b/E_r^2        [1/H]
///   frequency               omega_b                  [rad/s]
///   voltage_amplitude_gain  3*omega_b/(2*E_r^2)      [rad/(s*V^2)]
/// Throws ValidationError on an unknown tag.
double to_si(const ParameterSet& p, std::string_view base_tag, double pu_value);

} // namespace gfm
