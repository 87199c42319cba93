#pragma once

#include <functional>

#include <Eigen/Dense>

#include "gfm/full_order.hpp"
#include "gfm/reduced_order.hpp"
#include "gfm/sim.hpp"

namespace gfm {

struct NewtonOptions {
    double tol_f = 1e-9;   // infinity norm of the residual
    int max_iter = 80;
    double fd_step = 1e-7; // relative Jacobian step
};

/// Damped Newton (finite-difference Jacobian, backtracking line search) on
/// F(x) = 0. Throws SolverError when no converging step can be found.
Eigen::VectorXd newton_solve(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& F,
                             const Eigen::VectorXd& x0, const NewtonOptions& opts = {});

/// Steady state of the chosen model at fixed inputs. Starts from the
/// rho = 1 algebraic guess (full model: reduced equilibrium lifted through
/// the manifold); falls back to settling integration plus a Newton polish
/// when the direct solve stalls. The returned state has |rhs| below
/// opts.tol_f in every slot and delta wrapped to (-pi, pi].
Eigen::VectorXd find_equilibrium(Model model, const Inputs& u, const ParameterSet& p,
                                 LimiterMode mode, const NewtonOptions& opts = {});

FullState find_equilibrium_full(const Inputs& u, const ParameterSet& p,
                                LimiterMode mode = LimiterMode::smooth);
ReducedStateL find_equilibrium_reduced_L(const Inputs& u, const ParameterSet& p,
                                         LimiterMode mode = LimiterMode::smooth);
ReducedStateR find_equilibrium_reduced_R(const Inputs& u, const ParameterSet& p,
                                         LimiterMode mode = LimiterMode::smooth);

} // namespace gfm
