#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "gfm/full_order.hpp"
#include "gfm/params.hpp"
#include "gfm/reduced_order.hpp"

namespace gfm {

/// Piecewise-constant input profile. Breakpoint times are strictly
/// increasing and start at 0; values hold on [t_k, t_{k+1}).
struct SchedulePoint {
    double t = 0.0;
    Vec2 S_star{0, 0};
    Vec2 V_DQ{1, 0};
};

struct InputSchedule {
    std::vector<SchedulePoint> points;
    double horizon = 0.0; // s

    void validate() const; // throws ValidationError
    const SchedulePoint& at(double t) const;
};

enum class Method { rk4_fixed, rk45_adaptive };

struct SolverConfig {
    Method method = Method::rk45_adaptive;
    double dt = 1e-4;       // rk4_fixed step, s
    double rtol = 1e-6;
    double atol = 1e-8;
    double dt_min = 1e-12;  // s
    double dt_max = 1e-3;   // s
    double record_dt = 1e-3; // s

    void validate() const; // throws ValidationError
};

enum class Model { full, reduced_L, reduced_R };

int model_dim(Model m);
std::string model_name(Model m);

/// Uniformly sampled trajectory. `states` always carries the canonical
/// 12 columns (reduced models fill the fast columns from the manifold);
/// `outputs` columns are P, Q, omega, rho.
struct Trace {
    std::vector<double> times;
    Eigen::MatrixXd states;   // n_samples x 12
    Eigen::MatrixXd outputs;  // n_samples x 4
    Model model = Model::full;
    int native_dim = 12;
    double wall_time_s = 0.0; // stepping loop only; excludes reconstruction and I/O
    std::uint64_t steps_accepted = 0;
    std::uint64_t steps_rejected = 0;
    std::uint64_t rhs_evals = 0;

    Eigen::Index samples() const { return static_cast<Eigen::Index>(times.size()); }
};

/// Integrate a model over the schedule. Breakpoints are hard step
/// boundaries (the stepper restarts at each input discontinuity); recording
/// happens on the global grid k*record_dt through the stepper's dense
/// output, exact at step and segment boundaries.
/// Errors: step-size underflow, limiter-solve failure, or a non-finite
/// state, each reported with the simulation time.
Trace integrate(Model model, const Eigen::VectorXd& x0, const InputSchedule& schedule,
                const SolverConfig& cfg, const ParameterSet& p, LimiterMode mode);

/// Names accepted by rmse / steady-state extraction: the canonical state
/// and output columns plus derived magnitudes Emag, Igmag, Iimag.
const std::vector<std::string>& trace_signals();

Eigen::VectorXd trace_signal(const Trace& t, const std::string& signal);

/// Root-mean-square difference of one signal between two traces on
/// identical time grids. Throws ValidationError on grid mismatch.
double rmse(const Trace& a, const Trace& b, const std::string& signal);

struct BandViolation {
    double t = 0.0;
    double omega = 0.0;
};

/// All samples where |omega - omega_b|/omega_b > eps. An empty result means
/// the reduced-model validity band held along the trace.
std::vector<BandViolation> assumption1_monitor(const Trace& trace, double eps, double omega_b);

inline constexpr double assumption1_default_eps = 1.0 / 260.0;

/// CSV export with the fixed header
/// t,delta,E_star,Igd,Igq,Iid,Iiq,Ed,Eq,Phid,Phiq,Gammad,Gammaq,P,Q,omega,rho
/// at 17 significant digits. Written atomically (temp file + rename).
void write_trace_csv(const Trace& t, const std::string& path);

nlohmann::json trace_metadata(const Trace& t, const SolverConfig& cfg, const ParameterSet& p);

} // namespace gfm
