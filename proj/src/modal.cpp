#include "gfm/modal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "gfm/errors.hpp"

namespace gfm {

Eigen::MatrixXd jacobian_fd(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& rhs,
                            const Eigen::VectorXd& x0, double rel_step) {
    const Eigen::Index n = x0.size();
    Eigen::MatrixXd J;
    Eigen::VectorXd xp = x0, xm = x0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double h = std::max(rel_step, rel_step * std::abs(x0[i]));
        xp[i] = x0[i] + h;
        xm[i] = x0[i] - h;
        const Eigen::VectorXd fp = rhs(xp);
        const Eigen::VectorXd fm = rhs(xm);
        if (!fp.allFinite() || !fm.allFinite())
            throw NumericalError("jacobian_fd: non-finite evaluation at column " + std::to_string(i));
        if (J.size() == 0) J.resize(fp.size(), n);
        J.col(i) = (fp - fm) / (2.0 * h);
        xp[i] = x0[i];
        xm[i] = x0[i];
    }
    return J;
}

ModalReport participation_matrix(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols())
        throw ValidationError("participation_matrix: matrix must be square");
    const Eigen::Index n = A.rows();

    Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw NumericalError("participation_matrix: eigendecomposition failed");

    const Eigen::MatrixXcd V = es.eigenvectors();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
    const double cond = svd.singularValues()(0) / svd.singularValues()(n - 1);
    if (!(cond < 1e12))
        throw NumericalError("participation_matrix: eigenvector matrix condition number " +
                             std::to_string(cond) + " exceeds 1e12 (near-defective matrix)");

    // left eigenvectors as rows of V^-1 guarantee biorthogonality
    const Eigen::MatrixXcd L = V.inverse();

    ModalReport r;
    r.jacobian = A;
    r.eigenvalues = es.eigenvalues();
    r.pf.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double colsum = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double v = std::abs(V(i, j)) * std::abs(L(j, i));
            r.pf(i, j) = v;
            colsum += v;
        }
        r.pf.col(j) /= colsum;
    }
    r.pf_max_normalized = r.pf;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double m = r.pf.col(j).maxCoeff();
        r.pf_max_normalized.col(j) /= m;
    }
    return r;
}

Classification classify_states(ModalReport& report, double cutoff) {
    const Eigen::Index n = report.pf.rows();
    report.cutoff = cutoff;
    report.mode_labels.assign(n, ModeSpeed::slow);
    for (Eigen::Index j = 0; j < n; ++j)
        if (report.eigenvalues[j].real() < -cutoff) report.mode_labels[j] = ModeSpeed::fast;

    Classification cls;
    cls.per_state.assign(n, StateSpeed::slow);
    for (Eigen::Index i = 0; i < n; ++i) {
        double max_fast = -1.0, max_slow = -1.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = report.pf(i, j);
            if (report.mode_labels[j] == ModeSpeed::fast) max_fast = std::max(max_fast, v);
            else max_slow = std::max(max_slow, v);
        }
        StateSpeed s;
        if (max_fast < 0.0) s = StateSpeed::slow;      // no fast mode at all
        else if (max_slow < 0.0) s = StateSpeed::fast; // no slow mode at all
        else if (std::abs(max_fast - max_slow) <= 1e-6) s = StateSpeed::ambiguous;
        else s = max_fast > max_slow ? StateSpeed::fast : StateSpeed::slow;
        cls.per_state[i] = s;
        const int idx = static_cast<int>(i);
        if (s == StateSpeed::slow) cls.slow_states.push_back(idx);
        else if (s == StateSpeed::fast) cls.fast_states.push_back(idx);
        else cls.ambiguous_states.push_back(idx);
    }
    return cls;
}

const std::vector<std::string>& full_state_names() {
    static const std::vector<std::string> names = {
        "delta", "E_star", "Igd", "Igq", "Iid", "Iiq",
        "Ed", "Eq", "Phid", "Phiq", "Gammad", "Gammaq"};
    return names;
}

nlohmann::json modal_report_to_json(const ModalReport& report, const Classification& cls) {
    nlohmann::json j;
    const Eigen::Index n = report.pf.rows();

    auto matrix_to_json = [](const Eigen::MatrixXd& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
            rows.push_back(std::move(row));
        }
        return rows;
    };

    j["state_names"] = report.state_names;
    j["cutoff_rad_s"] = report.cutoff;
    j["jacobian"] = matrix_to_json(report.jacobian);
    nlohmann::json eigs = nlohmann::json::array();
    for (Eigen::Index k = 0; k < n; ++k) {
        eigs.push_back({{"re", report.eigenvalues[k].real()},
                        {"im", report.eigenvalues[k].imag()},
                        {"label", report.mode_labels.empty()
                                      ? "unlabeled"
                                      : (report.mode_labels[k] == ModeSpeed::fast ? "fast" : "slow")}});
    }
    j["eigenvalues"] = eigs;
    j["pf"] = matrix_to_json(report.pf);
    j["pf_max_normalized"] = matrix_to_json(report.pf_max_normalized);

    auto names_of = [&report](const std::vector<int>& idx) {
        std::vector<std::string> out;
        for (int i : idx)
            out.push_back(report.state_names.empty() ? std::to_string(i)
                                                     : report.state_names[static_cast<size_t>(i)]);
        return out;
    };
    j["slow_states"] = names_of(cls.slow_states);
    j["fast_states"] = names_of(cls.fast_states);
    j["ambiguous_states"] = names_of(cls.ambiguous_states);
    return j;
}

std::string modal_report_table(const ModalReport& report, const Classification& cls) {
    const Eigen::Index n = report.pf.rows();
    std::ostringstream os;
    char buf[64];

    os << "participation factors (column-max normalized), cutoff " << report.cutoff
       << " rad/s\nmodes with Re < -" << report.cutoff << " rad/s are labeled fast\n\n";

    os << "  eigenvalue:";
    for (Eigen::Index j = 0; j < n; ++j) {
        std::snprintf(buf, sizeof buf, " %9.4g%+8.3gi", report.eigenvalues[j].real(),
                      report.eigenvalues[j].imag());
        os << buf;
    }
    os << "\n       label:";
    for (Eigen::Index j = 0; j < n; ++j) {
        const char* lab = report.mode_labels[j] == ModeSpeed::fast ? "fast" : "slow";
        std::snprintf(buf, sizeof buf, " %18s", lab);
        os << buf;
    }
    os << "\n";
    for (Eigen::Index i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "%12s:", report.state_names[static_cast<size_t>(i)].c_str());
        os << buf;
        for (Eigen::Index j = 0; j < n; ++j) {
            std::snprintf(buf, sizeof buf, " %18.4f", report.pf_max_normalized(i, j));
            os << buf;
        }
        const char* lab = cls.per_state[i] == StateSpeed::fast
                              ? "fast"
                              : (cls.per_state[i] == StateSpeed::slow ? "slow" : "AMBIGUOUS");
        os << "  -> " << lab << "\n";
    }
    return os.str();
}

} // namespace gfm
