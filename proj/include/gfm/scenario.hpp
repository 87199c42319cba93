#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gfm/params.hpp"
#include "gfm/sim.hpp"

namespace gfm {

enum class LineType { inductive, resistive };

std::string line_type_name(LineType t);

/// A complete simulation case: parameters (named set or inline), line type
/// (selects the reduced model), limiter mode, input schedule, solver
/// settings, and the initial state ("equilibrium" or an explicit vector).
struct Scenario {
    std::string name;
    std::string params_ref;                   // named set; empty when inline
    std::optional<ParameterSet> params_inline;
    LineType line_type = LineType::inductive;
    LimiterMode limiter_mode = LimiterMode::smooth;
    InputSchedule schedule;
    SolverConfig solver;                      // dt_max applies to the full model
    double dt_max_reduced = 5e-3;             // reduced-model cap, s
    bool equilibrium_start = true;
    Eigen::VectorXd initial_state;            // used when !equilibrium_start

    ParameterSet parameters() const;
    Model reduced_model() const;
    Inputs inputs_at(double t) const;
};

Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& s);

/// Load from a file path, or fall back to a bundled scenario name.
Scenario load_scenario(const std::string& path_or_name);

const std::map<std::string, std::string>& bundled_scenarios();

/// Solver settings for one side of a comparison: the scenario's config with
/// the model-appropriate dt_max.
SolverConfig solver_for(const Scenario& s, Model m);

/// Initial state for the requested model: the stored vector (full-model
/// vectors are projected onto the slow states for reduced models) or the
/// computed equilibrium at the t = 0 inputs.
Eigen::VectorXd initial_state_for(const Scenario& s, Model m);

Trace run_scenario(const Scenario& s, Model m);

struct SteadyStateDelta {
    std::string signal;
    double max_abs_delta = 0.0;
};

/// Full-vs-reduced comparison on identical record grids.
struct ComparisonReport {
    std::string scenario_name;
    Model reduced_model = Model::reduced_L;
    std::map<std::string, double> rmse_table;   // per signal
    std::vector<SteadyStateDelta> steady_state; // settled-sample deltas
    double wall_full_s = 0.0;
    double wall_reduced_s = 0.0;
    double speedup = 0.0;
    std::vector<BandViolation> violations;      // reduced trace, eps = 1/260
};

ComparisonReport compare_traces(const Scenario& s, const Trace& full, const Trace& reduced);
nlohmann::json comparison_to_json(const ComparisonReport& r);

/// Write CSV + JSON sidecar next to each other under out_dir (atomic).
/// Returns the CSV path.
std::string write_trace_files(const Trace& t, const Scenario& s, const SolverConfig& cfg,
                              const std::string& out_dir, const std::string& stem);

} // namespace gfm
