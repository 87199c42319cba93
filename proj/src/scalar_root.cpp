#include "gfm/scalar_root.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gfm/errors.hpp"

namespace gfm {

ScalarRootResult solve_bracketed(const std::function<double(double)>& f,
                                 double lo, double hi,
                                 double f_accept, double f_stop,
                                 int max_iter, double warm) {
    ScalarRootResult best{};
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    int evals = 2;

    auto better = [&best](double x, double fx) {
        if (std::abs(fx) < std::abs(best.fx) || best.evals == 0) {
            best.x = x;
            best.fx = fx;
        }
    };
    best = {a, fa, 0};
    better(b, fb);

    if (fa == 0.0) return {a, 0.0, evals};
    if (fb == 0.0) return {b, 0.0, evals};
    if (std::signbit(fa) == std::signbit(fb))
        throw SolverError("scalar solve: no sign change on bracket [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] with f = (" + std::to_string(fa) + ", " +
                          std::to_string(fb) + ")");

    // shrink with the warm-start point first
    if (std::isfinite(warm) && warm > a && warm < b) {
        const double fw = f(warm);
        ++evals;
        better(warm, fw);
        if (std::abs(fw) <= f_stop) return {warm, fw, evals};
        if (std::signbit(fw) == std::signbit(fa)) { a = warm; fa = fw; }
        else { b = warm; fb = fw; }
    }

    // secant on the bracket endpoints, bisection when the proposal is not
    // strictly interior or fails to shrink the bracket enough
    double x_prev = a, f_prev = fa;
    double x_cur = b, f_cur = fb;
    while (evals < max_iter) {
        const double width = b - a;
        if (width <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a)))
            break;

        double x_next;
        const double df = f_cur - f_prev;
        if (df != 0.0) {
            x_next = x_cur - f_cur * (x_cur - x_prev) / df;
            if (!(x_next > a && x_next < b)) x_next = 0.5 * (a + b);
        } else {
            x_next = 0.5 * (a + b);
        }
        // keep a minimal interior offset so the bracket always shrinks
        const double margin = 0.01 * width;
        x_next = std::clamp(x_next, a + margin * 1e-3, b - margin * 1e-3);

        const double f_next = f(x_next);
        ++evals;
        better(x_next, f_next);
        if (std::abs(f_next) <= f_stop) break;

        if (std::signbit(f_next) == std::signbit(fa)) { a = x_next; fa = f_next; }
        else { b = x_next; fb = f_next; }
        x_prev = x_cur; f_prev = f_cur;
        x_cur = x_next; f_cur = f_next;
    }

    best.evals = evals;
    if (std::abs(best.fx) > f_accept)
        throw SolverError("scalar solve: residual " + std::to_string(best.fx) +
                          " above tolerance after " + std::to_string(evals) +
                          " evaluations; last bracket [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
    return best;
}

} // namespace gfm
