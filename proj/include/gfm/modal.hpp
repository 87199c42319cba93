#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace gfm {

/// Central-difference Jacobian of a smooth vector field at x0.
/// Column i uses step h_i = max(rel_step, rel_step*|x0_i|).
/// Throws NumericalError on non-finite evaluations.
Eigen::MatrixXd jacobian_fd(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& rhs,
                            const Eigen::VectorXd& x0, double rel_step = 1e-6);

enum class ModeSpeed { slow, fast };
enum class StateSpeed { slow, fast, ambiguous };

/// Eigenstructure plus participation factors of a state matrix.
/// pf is state x mode, each raw column sums to 1; pf_max_normalized is the
/// same matrix with every column scaled so its maximum is exactly 1.
struct ModalReport {
    Eigen::MatrixXd jacobian;            // 1/s
    Eigen::VectorXcd eigenvalues;        // rad/s
    Eigen::MatrixXd pf;                  // raw participation factors
    Eigen::MatrixXd pf_max_normalized;   // column maxima == 1
    std::vector<std::string> state_names;
    double cutoff = 0.0;                 // rad/s; filled by classify_states
    std::vector<ModeSpeed> mode_labels;  // filled by classify_states
};

/// Compute eigenvalues, participation factors |r_ij||l_ij| (column-sum
/// normalized), and the max-normalized variant. Left eigenvectors are the
/// rows of the inverse right-eigenvector matrix, which guarantees
/// biorthogonality. Throws NumericalError when the eigenvector matrix has
/// condition number above 1e12 (near-defective).
ModalReport participation_matrix(const Eigen::MatrixXd& A);

struct Classification {
    std::vector<StateSpeed> per_state;
    std::vector<int> slow_states;
    std::vector<int> fast_states;
    std::vector<int> ambiguous_states;
};

/// Label eigenvalues (fast iff Re < -cutoff), then states: a state is fast
/// iff its maximum raw participation over fast modes exceeds its maximum
/// over slow modes. Ties within 1e-6 are flagged ambiguous, never silently
/// assigned. Also fills report.cutoff and report.mode_labels.
Classification classify_states(ModalReport& report, double cutoff);

/// Default slow/fast cut: 260 rad/s.
inline constexpr double default_cutoff_rad_s = 260.0;

nlohmann::json modal_report_to_json(const ModalReport& report, const Classification& cls);

/// Aligned-text participation grid (states x eigenvalues, max-normalized
/// values) with per-mode labels and the slow/fast partition.
std::string modal_report_table(const ModalReport& report, const Classification& cls);

/// Canonical names of the 12 full-model states.
const std::vector<std::string>& full_state_names();

} // namespace gfm
