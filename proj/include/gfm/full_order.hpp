#pragma once

#include "gfm/frames.hpp"
#include "gfm/params.hpp"

namespace gfm {

/// The twelve dynamic states of the averaged model, in the canonical order
/// [delta, E_star, Igd, Igq, Iid, Iiq, Ed, Eq, Phid, Phiq, Gammad, Gammaq].
/// Slow states (delta, E_star, I_g) come first.
struct FullState {
    double delta = 0.0;  // frame offset angle, rad
    double E_star = 1.0; // oscillator voltage magnitude, pu
    Vec2 I_g{0, 0};      // grid-side current, pu
    Vec2 I_i{0, 0};      // inverter-side current, pu
    Vec2 E{0, 0};        // capacitor voltage, pu
    Vec2 Phi{0, 0};      // voltage-loop integrator, pu
    Vec2 Gamma{0, 0};    // current-loop integrator, pu

    Vec12 to_vector() const;
    static FullState from_vector(const Vec12& x);
};

/// Exogenous inputs: power setpoints and the infinite-bus voltage phasor.
struct Inputs {
    Vec2 S_star{0, 0}; // [P*, Q*], pu
    Vec2 V_DQ{1, 0};   // grid voltage in the nominal frame, pu
};

/// Derived quantities reported alongside the states.
struct Outputs {
    Vec2 S{0, 0};        // [P, Q] at the filter capacitor, pu
    double omega = 0.0;  // rad/s
    double rho = 1.0;    // limiter factor
    Vec2 I_i_ref{0, 0};  // unsaturated current reference, pu
};

/// Active/reactive power measured at the filter capacitor:
/// P = E . I_g, Q = E . T2(-pi/2) I_g.
Vec2 power_from_capacitor(const Vec2& E, const Vec2& I_g);

struct DvocRates {
    double delta_dot = 0.0;  // rad/s
    double E_star_dot = 0.0; // pu/s
    double omega = 0.0;      // rad/s
};

/// Oscillator rates: frequency from the rotated power mismatch, magnitude
/// rate including the kappa_2 (E_b^2 - E_star^2) E_star restoring term.
/// Throws ValidationError if E_star <= 0.
DvocRates dvoc_rates(double E_star, const Vec2& S, const Vec2& S_star, const ParameterSet& p);

/// Unsaturated current-control reference
/// K_Pv e1 E_star + K_Iv Phi + I_g - (K_Pv I + (omega/omega_b) C T2(pi/2)) E.
Vec2 unsaturated_reference(const FullState& s, double omega, const ParameterSet& p);

/// Right-hand side of the 12th-order model, SI time (1/s). The limiter
/// factor is evaluated explicitly from the state each call.
/// Throws ValidationError if E_star <= 0.
Vec12 full_rhs(const FullState& s, const Inputs& u, const ParameterSet& p);
void full_rhs(const Vec12& x, const Inputs& u, const ParameterSet& p, Vec12& dxdt);

/// Same right-hand side with the angular frequency pinned externally
/// (delta_dot still reports omega - omega_b from the power mismatch).
/// Used for checking the algebraic fast-state equations at omega = omega_b.
Vec12 full_rhs_at_omega(const FullState& s, const Inputs& u, const ParameterSet& p, double omega);

Outputs full_outputs(const FullState& s, const Inputs& u, const ParameterSet& p);

/// Modulation voltage command reconstructed from the current-loop equation;
/// derived output only, not a state.
Vec2 inverter_voltage_reference(const FullState& s, const Inputs& u, const ParameterSet& p);

} // namespace gfm
