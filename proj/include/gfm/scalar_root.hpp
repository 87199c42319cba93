#pragma once

#include <functional>

namespace gfm {

struct ScalarRootResult {
    double x = 0.0;
    double fx = 0.0;
    int evals = 0;
};

/// Safeguarded scalar root finder on a sign-changing bracket [lo, hi]:
/// secant steps confined to the current bracket, bisection whenever the
/// secant proposal leaves it or stalls. Iterates until |f| <= f_stop, the
/// bracket collapses to a few ulps, or max_iter evaluations. A finite
/// `warm` inside the bracket is evaluated first to shrink it.
/// Throws SolverError if [lo, hi] carries no sign change or if the
/// achieved |f| exceeds f_accept.
ScalarRootResult solve_bracketed(const std::function<double(double)>& f,
                                 double lo, double hi,
                                 double f_accept, double f_stop,
                                 int max_iter, double warm);

} // namespace gfm
