#include "gfm/reduced_order.hpp"

#include <cmath>

#include "gfm/errors.hpp"
#include "gfm/scalar_root.hpp"

namespace gfm {

namespace {
constexpr double ln2 = 0.6931471805599453;

RhoSolution rho_for(double E_star, const Vec2& I_g, const ParameterSet& p,
                    LimiterMode mode, RhoCache* cache) {
    if (mode == LimiterMode::none) return RhoSolution{1.0, 0.0, 0, false};
    RhoSolveOptions opts;
    if (cache) opts.warm_start = cache->rho;
    RhoSolution sol = solve_rho_reduced(E_star, I_g, p, opts);
    if (cache) cache->rho = sol.rho;
    return sol;
}
} // namespace

Vec4 ReducedStateL::to_vector() const {
    return Vec4(delta, E_star, I_g.x(), I_g.y());
}

ReducedStateL ReducedStateL::from_vector(const Vec4& x) {
    return {x[0], x[1], Vec2(x[2], x[3])};
}

Vec2 reduced_PQ(double E_star, const Vec2& I_g, double rho, const ParameterSet& p) {
    const GainMatrices g = gain_matrices(rho, p);
    const Mat2 Jt = t2_rotation(pi / 2.0).transpose();
    const double roC = rho / p.C;

    const Mat2 MP = roC * g.A1.transpose() * Jt - (1.0 / p.C) * Jt;
    const double P = I_g.dot(MP * I_g) + roC * E_star * (g.A2.transpose() * Jt * I_g).x();

    const Mat2 MQ = (1.0 / p.C) * Mat2::Identity() - roC * g.A1.transpose();
    const double Q = I_g.dot(MQ * I_g) - roC * E_star * (g.A2.transpose() * I_g).x();
    return Vec2(P, Q);
}

Vec4 reduced_L_rhs(const ReducedStateL& s, const Inputs& u, const ParameterSet& p,
                   LimiterMode mode, RhoCache* cache) {
    if (!(s.E_star > 0.0))
        throw ValidationError("reduced_L_rhs: E_star must be positive");

    const double rho = rho_for(s.E_star, s.I_g, p, mode, cache).rho;
    const GainMatrices g = gain_matrices(rho, p);
    const Vec2 S = reduced_PQ(s.E_star, s.I_g, rho, p);
    const DvocRates dv = dvoc_rates(s.E_star, S, u.S_star, p);

    // the rotation term carries omega_b, not omega: the fast-state
    // substitution is taken at nominal frequency
    const Mat2 I = Mat2::Identity();
    const Mat2 J = t2_rotation(pi / 2.0);
    const Mat2 A = p.omega_b * (J * (I - (1.0 / (p.L_g * p.C)) * (I - rho * g.A1)) -
                                p.R_g / p.L_g * I);
    const Vec2 Ig_dot = A * s.I_g +
                        p.omega_b / p.L_g *
                            ((rho / p.C) * (J * g.A2 * Vec2(s.E_star, 0.0)) -
                             t2_rotation(s.delta) * u.V_DQ);

    return Vec4(dv.delta_dot, dv.E_star_dot, Ig_dot.x(), Ig_dot.y());
}

AlgebraicIg solve_Ig_resistive(double delta, double E_star, const Vec2& V_DQ,
                               const ParameterSet& p, LimiterMode mode, RhoCache* cache) {
    if (!(E_star > 0.0))
        throw ValidationError("solve_Ig_resistive: E_star must be positive");

    const Vec2 e1Es(E_star, 0.0);
    const Vec2 Vrot = t2_rotation(delta) * V_DQ;

    auto Ig_of = [&](double rho) -> Vec2 {
        const GainMatrices g = gain_matrices(rho, p);
        return g.A3 * e1Es + g.A4 * Vrot;
    };

    AlgebraicIg out;
    if (mode == LimiterMode::none) {
        out.I_g = Ig_of(1.0);
        out.rho = RhoSolution{1.0, 0.0, 0, false};
        return out;
    }

    // the coupled (rho, I_g) system collapses to a scalar root in rho by
    // substituting the algebraic I_g(rho) into the limiter constraint
    auto g = [&](double rho) {
        const Vec2 Ig = Ig_of(rho);
        const Vec2 v(Ig.x(), p.C * E_star + Ig.y());
        if (v.norm() < 1e-12) return rho - 1.0;
        return rho - rho_smooth(reduced_reference_norm(rho, E_star, Ig, p), p.I_max, p.eps_sat);
    };

    const double lo = -p.eps_sat * ln2 - 1e-9;
    const double hi = 1.0 + 1e-12;
    const double warm = cache ? cache->rho : std::numeric_limits<double>::quiet_NaN();
    const ScalarRootResult r = solve_bracketed(g, lo, hi, 1e-12, 1e-15, 200, warm);

    out.I_g = Ig_of(r.x);
    out.rho = RhoSolution{r.x, r.fx, r.evals, r.x < 1.0 - p.eps_sat * ln2};
    if (cache) cache->rho = r.x;
    return out;
}

Vec2 reduced_R_rhs(const ReducedStateR& s, const Inputs& u, const ParameterSet& p,
                   LimiterMode mode, RhoCache* cache) {
    const AlgebraicIg alg = solve_Ig_resistive(s.delta, s.E_star, u.V_DQ, p, mode, cache);
    const Vec2 S = reduced_PQ(s.E_star, alg.I_g, alg.rho.rho, p);
    const DvocRates dv = dvoc_rates(s.E_star, S, u.S_star, p);
    return Vec2(dv.delta_dot, dv.E_star_dot);
}

ManifoldPoint manifold_states(double E_star, const Vec2& I_g, double rho,
                              const ParameterSet& p, LimiterMode mode) {
    if (mode == LimiterMode::none) rho = 1.0;
    if (!(rho > 0.0))
        throw NumericalError("manifold_states: rho = " + std::to_string(rho) +
                             " is not positive (Phi divides by rho)");

    const GainMatrices g = gain_matrices(rho, p);
    ManifoldPoint m;
    m.rho = rho;
    m.I_i = rho * (g.A1 * I_g + g.A2 * Vec2(E_star, 0.0));
    m.E = (1.0 / p.C) * t2_quarter(m.I_i - I_g);
    m.Phi = ((rho - 1.0) * (p.K_b * p.K_Pv - 1.0) / (rho * p.K_Iv)) * m.I_i;
    m.Gamma = (p.R_i / p.K_Ii) * m.I_i;
    return m;
}

FullState assemble_full_state(double delta, double E_star, const Vec2& I_g,
                              const ManifoldPoint& m) {
    FullState s;
    s.delta = delta;
    s.E_star = E_star;
    s.I_g = I_g;
    s.I_i = m.I_i;
    s.E = m.E;
    s.Phi = m.Phi;
    s.Gamma = m.Gamma;
    return s;
}

} // namespace gfm
