#pragma once

#include <optional>

#include "gfm/frames.hpp"
#include "gfm/full_order.hpp"
#include "gfm/limiter.hpp"
#include "gfm/params.hpp"

namespace gfm {

/// Whether the algebraic limiter constraint is solved (smooth) or bypassed
/// with rho = 1 (none).
enum class LimiterMode { smooth, none };

/// Slow states of the 4th-order model for inductive interconnecting lines.
struct ReducedStateL {
    double delta = 0.0;
    double E_star = 1.0;
    Vec2 I_g{0, 0};

    Vec4 to_vector() const;
    static ReducedStateL from_vector(const Vec4& x);
};

/// Slow states of the 2nd-order model for resistive interconnecting lines.
struct ReducedStateR {
    double delta = 0.0;
    double E_star = 1.0;

    Vec2 to_vector() const { return Vec2(delta, E_star); }
    static ReducedStateR from_vector(const Vec2& x) { return {x[0], x[1]}; }
};

/// Fast states reconstructed on the zero-order manifold.
struct ManifoldPoint {
    Vec2 I_i{0, 0};
    Vec2 E{0, 0};
    Vec2 Phi{0, 0};
    Vec2 Gamma{0, 0};
    double rho = 1.0;
};

/// Per-trajectory warm start for the implicit limiter solves. Never shared
/// across trajectories.
struct RhoCache {
    double rho = 1.0;
};

/// Capacitor power expressed in the reduced variables (quadratic in I_g
/// plus a bilinear E_star term through A1, A2). At rho = 1 this collapses
/// to P = E_star*Igd, Q = -E_star*Igq.
Vec2 reduced_PQ(double E_star, const Vec2& I_g, double rho, const ParameterSet& p);

/// Right-hand side of the inductive-line reduced model. rho comes from
/// solve_rho_reduced (mode smooth) or is 1 (mode none).
Vec4 reduced_L_rhs(const ReducedStateL& s, const Inputs& u, const ParameterSet& p,
                   LimiterMode mode, RhoCache* cache = nullptr);

struct AlgebraicIg {
    Vec2 I_g{0, 0};
    RhoSolution rho;
};

/// Algebraic grid current of the resistive-line model:
/// I_g = A3(rho) e1 E_star + A4(rho) T2(delta) V_DQ with rho solving the
/// limiter constraint simultaneously (scalar fixed point in rho).
AlgebraicIg solve_Ig_resistive(double delta, double E_star, const Vec2& V_DQ,
                               const ParameterSet& p, LimiterMode mode,
                               RhoCache* cache = nullptr);

/// Right-hand side of the resistive-line reduced model (delta, E_star only).
Vec2 reduced_R_rhs(const ReducedStateR& s, const Inputs& u, const ParameterSet& p,
                   LimiterMode mode, RhoCache* cache = nullptr);

/// Zero-order manifold: I_i = rho(A1 I_g + A2 e1 E_star),
/// E = (1/C) T2(pi/2)(I_i - I_g), Phi = ((rho-1)(K_b K_Pv - 1)/(rho K_Iv)) I_i,
/// Gamma = (R_i/K_Ii) I_i. Throws NumericalError when rho <= 0 (Phi divides
/// by rho). mode none evaluates the rho = 1 forms.
ManifoldPoint manifold_states(double E_star, const Vec2& I_g, double rho,
                              const ParameterSet& p, LimiterMode mode);

/// Assemble a 12-slot state from reduced slow states plus the manifold.
FullState assemble_full_state(double delta, double E_star, const Vec2& I_g,
                              const ManifoldPoint& m);

} // namespace gfm
