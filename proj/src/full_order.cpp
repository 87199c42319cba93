#include "gfm/full_order.hpp"

#include <cmath>

#include "gfm/errors.hpp"
#include "gfm/limiter.hpp"

namespace gfm {

Vec12 FullState::to_vector() const {
    Vec12 x;
    x << delta, E_star, I_g.x(), I_g.y(), I_i.x(), I_i.y(), E.x(), E.y(),
        Phi.x(), Phi.y(), Gamma.x(), Gamma.y();
    return x;
}

FullState FullState::from_vector(const Vec12& x) {
    FullState s;
    s.delta = x[0];
    s.E_star = x[1];
    s.I_g = Vec2(x[2], x[3]);
    s.I_i = Vec2(x[4], x[5]);
    s.E = Vec2(x[6], x[7]);
    s.Phi = Vec2(x[8], x[9]);
    s.Gamma = Vec2(x[10], x[11]);
    return s;
}

Vec2 power_from_capacitor(const Vec2& E, const Vec2& I_g) {
    return Vec2(E.dot(I_g), E.dot(t2_quarter_neg(I_g)));
}

DvocRates dvoc_rates(double E_star, const Vec2& S, const Vec2& S_star, const ParameterSet& p) {
    if (!(E_star > 0.0))
        throw ValidationError("dvoc_rates: E_star must be positive");
    const Vec2 dS = S_star - S;
    // rows of T2(psi - pi/2): e1^T -> [sin psi, -cos psi], e2^T -> [cos psi, sin psi]
    const double sp = std::sin(p.psi), cp = std::cos(p.psi);
    const double mu1 = sp * dS.x() - cp * dS.y();
    const double mu2 = cp * dS.x() + sp * dS.y();

    DvocRates r;
    r.omega = p.omega_b + p.omega_b * p.kappa_1 / (E_star * E_star) * mu1;
    r.delta_dot = r.omega - p.omega_b;
    r.E_star_dot = p.omega_b * p.kappa_1 / E_star * mu2 +
                   p.omega_b * p.kappa_2 * (p.E_b * p.E_b - E_star * E_star) * E_star;
    return r;
}

Vec2 unsaturated_reference(const FullState& s, double omega, const ParameterSet& p) {
    const double w = omega / p.omega_b;
    return p.K_Pv * Vec2(s.E_star, 0.0) + p.K_Iv * s.Phi + s.I_g -
           (p.K_Pv * s.E + w * p.C * t2_quarter(s.E));
}

namespace {

Vec12 rhs_impl(const FullState& s, const Inputs& u, const ParameterSet& p,
               bool pin_omega, double omega_pin) {
    if (!(s.E_star > 0.0))
        throw ValidationError("full_rhs: E_star must be positive");

    const Vec2 S = power_from_capacitor(s.E, s.I_g);
    const DvocRates dv = dvoc_rates(s.E_star, S, u.S_star, p);
    const double omega = pin_omega ? omega_pin : dv.omega;

    const Vec2 I_ref = unsaturated_reference(s, omega, p);
    const double rho = rho_smooth(I_ref.norm(), p.I_max, p.eps_sat);

    const Vec2 Ig_dot = omega * t2_quarter(s.I_g) - p.omega_b * p.R_g / p.L_g * s.I_g +
                        p.omega_b / p.L_g * (s.E - t2_rotation(s.delta) * u.V_DQ);
    const Vec2 Ii_dot = -p.omega_b * (p.R_i + p.K_Pi) / p.L_i * s.I_i +
                        p.omega_b / p.L_i * (p.K_Pi * rho * I_ref + p.K_Ii * s.Gamma);
    const Vec2 E_dot = omega * t2_quarter(s.E) + p.omega_b / p.C * (s.I_i - s.I_g);
    const Vec2 Phi_dot = p.omega_b * (Vec2(s.E_star, 0.0) - s.E) +
                         p.omega_b * p.K_b * (rho - 1.0) * I_ref;
    const Vec2 Gamma_dot = p.omega_b * (rho * I_ref - s.I_i);

    Vec12 f;
    f << dv.delta_dot, dv.E_star_dot, Ig_dot.x(), Ig_dot.y(), Ii_dot.x(), Ii_dot.y(),
        E_dot.x(), E_dot.y(), Phi_dot.x(), Phi_dot.y(), Gamma_dot.x(), Gamma_dot.y();
    return f;
}

} // namespace

Vec12 full_rhs(const FullState& s, const Inputs& u, const ParameterSet& p) {
    return rhs_impl(s, u, p, false, 0.0);
}

void full_rhs(const Vec12& x, const Inputs& u, const ParameterSet& p, Vec12& dxdt) {
    dxdt = rhs_impl(FullState::from_vector(x), u, p, false, 0.0);
}

Vec12 full_rhs_at_omega(const FullState& s, const Inputs& u, const ParameterSet& p, double omega) {
    return rhs_impl(s, u, p, true, omega);
}

Outputs full_outputs(const FullState& s, const Inputs& u, const ParameterSet& p) {
    Outputs o;
    o.S = power_from_capacitor(s.E, s.I_g);
    o.omega = dvoc_rates(s.E_star, o.S, u.S_star, p).omega;
    o.I_i_ref = unsaturated_reference(s, o.omega, p);
    o.rho = rho_smooth(o.I_i_ref.norm(), p.I_max, p.eps_sat);
    return o;
}

Vec2 inverter_voltage_reference(const FullState& s, const Inputs& u, const ParameterSet& p) {
    const Outputs o = full_outputs(s, u, p);
    const Vec2 Gamma_dot_over_wb = o.rho * o.I_i_ref - s.I_i;
    return p.K_Pi * Gamma_dot_over_wb + p.K_Ii * s.Gamma + s.E -
           (o.omega / p.omega_b) * p.L_i * t2_quarter(s.I_i);
}

} // namespace gfm
