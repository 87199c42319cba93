#pragma once

#include <limits>

#include "gfm/frames.hpp"
#include "gfm/params.hpp"

namespace gfm {

/// Exact circular current limit factor min(1, I_max/ref_norm); 1 at ref_norm = 0.
double rho_exact_min(double ref_norm, double I_max);

/// Smooth log-sum-exp approximation of rho_exact_min. Satisfies
/// 0 <= rho_exact_min - rho_smooth <= eps_sat*ln(2) and is strictly
/// decreasing in ref_norm. Evaluated in an underflow-safe form.
double rho_smooth(double ref_norm, double I_max, double eps_sat);

/// Gain matrices of the reduced models and the scalars behind A3/A4.
/// A1, A2 depend only on (rho, C, K_b); A3, A4 additionally on (R_g, L_g).
struct GainMatrices {
    Mat2 A1, A2, A3, A4;
    double f1 = 0, f2 = 0, f3 = 0, f4 = 0, f5 = 0;
};

/// Closed-form gain matrices. Throws NumericalError when the common
/// denominator C^2 K_b^2 (rho-1)^2 + rho^2 or f5 is not strictly positive.
GainMatrices gain_matrices(double rho, const ParameterSet& p);

/// Same matrices through the defining 2x2 inversions: A2 = M^-1 with
/// M = (rho/C) T2(pi/2) - K_b (rho-1) I, A1 = M^-1 (1/C) T2(pi/2), and the
/// analogous inverse forms for A3, A4. Kept as an independent route for
/// checking the closed forms. Throws NumericalError on singular inversions.
GainMatrices gain_matrices_oracle(double rho, const ParameterSet& p);

/// Magnitude of the unsaturated current reference expressed through the
/// reduced-model variables: ||C e2 E_star + I_g|| / sqrt(C^2 K_b^2 (rho-1)^2 + rho^2).
double reduced_reference_norm(double rho, double E_star, const Vec2& I_g, const ParameterSet& p);

struct RhoSolution {
    double rho = 1.0;
    double residual = 0.0;
    int iterations = 0;
    bool saturated = false; // rho < 1 - eps_sat*ln(2)
};

struct RhoSolveOptions {
    double tol = 1e-12;
    int max_iter = 200;
    double warm_start = std::numeric_limits<double>::quiet_NaN();
};

/// Solve the implicit limiter constraint of the reduced models:
/// rho = rho_smooth(reduced_reference_norm(rho)). Safeguarded
/// bisection + secant on the bracket [-eps_sat*ln2 - 1e-9, 1 + 1e-12];
/// degenerate ||C e2 E_star + I_g|| < 1e-12 returns rho = 1 directly.
/// Throws SolverError if the residual tolerance cannot be met.
RhoSolution solve_rho_reduced(double E_star, const Vec2& I_g, const ParameterSet& p,
                              const RhoSolveOptions& opts = {});

} // namespace gfm
