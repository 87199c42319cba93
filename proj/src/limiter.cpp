#include "gfm/limiter.hpp"

#include <cmath>

#include "gfm/errors.hpp"
#include "gfm/scalar_root.hpp"

namespace gfm {

namespace {
constexpr double ln2 = 0.6931471805599453;
constexpr double degenerate_norm = 1e-12;

double gain_denominator(double rho, const ParameterSet& p) {
    const double r1 = rho - 1.0;
    return p.C * p.C * p.K_b * p.K_b * r1 * r1 + rho * rho;
}
} // namespace

double rho_exact_min(double ref_norm, double I_max) {
    if (ref_norm <= 0.0) return 1.0;
    return std::min(1.0, I_max / ref_norm);
}

double rho_smooth(double ref_norm, double I_max, double eps_sat) {
    if (ref_norm <= 0.0) return 1.0;
    // -eps*log(exp(-1/eps) + exp(-y/eps)) rewritten with the max pulled out,
    // so both the value and the gap to min(1, y) stay exact for extreme y
    const double y = I_max / ref_norm;
    const double m = std::min(1.0, y);
    return m - eps_sat * std::log1p(std::exp(-std::abs(1.0 - y) / eps_sat));
}

GainMatrices gain_matrices(double rho, const ParameterSet& p) {
    const double r1 = rho - 1.0;
    const double den = gain_denominator(rho, p);
    if (!(den > 1e-300))
        throw NumericalError("gain matrices: vanishing denominator at rho = " + std::to_string(rho));

    GainMatrices g;
    const double cb = p.C * p.K_b * r1;
    g.A1 << rho / den, -cb / den,
            cb / den, rho / den;
    g.A2 << -p.C * cb / den, -p.C * rho / den,
            p.C * rho / den, -p.C * cb / den;

    const double rr1 = rho * r1;
    const double clg1 = p.C * p.L_g - 1.0;
    g.f1 = clg1 * p.K_b * rr1 + p.R_g * rho * rho;
    g.f2 = p.C * p.R_g * p.K_b * rr1 - p.L_g * rho * rho;
    g.f3 = p.K_b * rr1 - p.R_g * den;
    g.f4 = p.L_g * rho * rho + p.C * p.K_b * p.K_b * r1 * r1 * clg1;
    g.f5 = clg1 * clg1 * p.K_b * p.K_b * r1 * r1 +
           (p.C * p.R_g) * (p.C * p.R_g) * p.K_b * p.K_b * r1 * r1 -
           2.0 * p.K_b * p.R_g * rr1 + rho * rho * (p.R_g * p.R_g + p.L_g * p.L_g);
    if (!(g.f5 > 1e-300))
        throw NumericalError("gain matrices: f5 <= 0 at rho = " + std::to_string(rho));

    g.A3 << g.f1 / g.f5, -g.f2 / g.f5,
            g.f2 / g.f5, g.f1 / g.f5;
    g.A4 << g.f3 / g.f5, -g.f4 / g.f5,
            g.f4 / g.f5, g.f3 / g.f5;
    return g;
}

GainMatrices gain_matrices_oracle(double rho, const ParameterSet& p) {
    const Mat2 I = Mat2::Identity();
    const Mat2 J = t2_rotation(pi / 2.0);

    Mat2 M = (rho / p.C) * J - p.K_b * (rho - 1.0) * I;
    if (std::abs(M.determinant()) < 1e-300)
        throw NumericalError("gain oracle: singular inner matrix at rho = " + std::to_string(rho));
    const Mat2 Mi = M.inverse();

    GainMatrices g;
    g.A1 = Mi * ((1.0 / p.C) * J);
    g.A2 = Mi;

    Mat2 N = (p.R_g / p.L_g) * I - J * (I - (1.0 / (p.L_g * p.C)) * (I - rho * g.A1));
    if (std::abs(N.determinant()) < 1e-300)
        throw NumericalError("gain oracle: singular outer matrix at rho = " + std::to_string(rho));
    const Mat2 Ni = N.inverse();
    g.A3 = Ni * ((rho / (p.L_g * p.C)) * J * g.A2);
    g.A4 = -Ni * (1.0 / p.L_g);
    return g;
}

double reduced_reference_norm(double rho, double E_star, const Vec2& I_g, const ParameterSet& p) {
    const Vec2 v(I_g.x(), p.C * E_star + I_g.y());
    return v.norm() / std::sqrt(gain_denominator(rho, p));
}

RhoSolution solve_rho_reduced(double E_star, const Vec2& I_g, const ParameterSet& p,
                              const RhoSolveOptions& opts) {
    if (!(E_star > 0.0))
        throw ValidationError("solve_rho_reduced: E_star must be positive");

    const Vec2 v(I_g.x(), p.C * E_star + I_g.y());
    const double n = v.norm();

    RhoSolution sol;
    if (n < degenerate_norm) {
        // analytic limit: the constraint collapses to rho = 1
        sol.rho = 1.0;
        sol.residual = 0.0;
        sol.iterations = 0;
        sol.saturated = false;
        return sol;
    }

    auto g = [&](double rho) {
        return rho - rho_smooth(reduced_reference_norm(rho, E_star, I_g, p), p.I_max, p.eps_sat);
    };

    const double lo = -p.eps_sat * ln2 - 1e-9;
    const double hi = 1.0 + 1e-12;
    // drive to the numerical floor; opts.tol is the acceptance threshold
    const ScalarRootResult r =
        solve_bracketed(g, lo, hi, opts.tol, 1e-15, opts.max_iter, opts.warm_start);

    sol.rho = r.x;
    sol.residual = r.fx;
    sol.iterations = r.evals;
    sol.saturated = r.x < 1.0 - p.eps_sat * ln2;
    return sol;
}

} // namespace gfm
