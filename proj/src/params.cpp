#include "gfm/params.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

ParameterSet table1_common() {
    ParameterSet p;
    p.psi = std::numbers::pi / 4.0;
    p.eps_sat = 0.1;
    p.E_b = 1.0;
    p.I_max = 1.2;
    p.L_i = 0.0196;
    p.C = 0.1086;
    p.R_i = 0.0139;
    p.K_b = 0.0347;
    p.K_Pi = 0.9817;
    p.K_Ii = 0.6944;
    p.kappa_1 = 0.0033;
    p.K_Pv = 1.4476;
    p.K_Iv = 10.2944;
    p.kappa_2 = 0.0796;
    p.omega_bw_i = 50.0;
    p.omega_bw_v = 13.3333;
    p.omega_b = 2.0 * std::numbers::pi * 60.0;
    p.S_r = 1500.0;
    p.E_r = 208.0;
    return p;
}

struct Field {
    const char* name;
    double ParameterSet::* member;
};

constexpr Field fields[] = {
    {"psi", &ParameterSet::psi},
    {"eps_sat", &ParameterSet::eps_sat},
    {"E_b", &ParameterSet::E_b},
    {"I_max", &ParameterSet::I_max},
    {"L_i", &ParameterSet::L_i},
    {"L_g", &ParameterSet::L_g},
    {"C", &ParameterSet::C},
    {"R_i", &ParameterSet::R_i},
    {"R_g", &ParameterSet::R_g},
    {"K_b", &ParameterSet::K_b},
    {"K_Pi", &ParameterSet::K_Pi},
    {"K_Ii", &ParameterSet::K_Ii},
    {"kappa_1", &ParameterSet::kappa_1},
    {"K_Pv", &ParameterSet::K_Pv},
    {"K_Iv", &ParameterSet::K_Iv},
    {"kappa_2", &ParameterSet::kappa_2},
    {"omega_bw_i", &ParameterSet::omega_bw_i},
    {"omega_bw_v", &ParameterSet::omega_bw_v},
    {"omega_b", &ParameterSet::omega_b},
    {"S_r", &ParameterSet::S_r},
    {"E_r", &ParameterSet::E_r},
};

void check_positive(const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ValidationError(std::string("parameter '") + name + "' must be strictly positive");
}

bool within_one_percent(double actual, double expected) {
    return std::abs(actual - expected) <= 0.01 * std::abs(expected);
}

} // namespace

ParameterSet table1_inductive() {
    ParameterSet p = table1_common();
    p.L_g = 0.037;  // grid-side + line
    p.R_g = 0.0139; // grid-side only
    return p;
}

ParameterSet table1_resistive() {
    ParameterSet p = table1_common();
    p.L_g = 0.0196; // grid-side only
    p.R_g = 0.0313; // grid-side + line
    return p;
}

bool is_named_parameter_set(std::string_view name) {
    return name == "table1-inductive" || name == "table1-resistive";
}

ParameterSet named_parameter_set(std::string_view name) {
    if (name == "table1-inductive") return table1_inductive();
    if (name == "table1-resistive") return table1_resistive();
    throw ValidationError("unknown parameter set '" + std::string(name) +
                          "' (built-in sets: table1-inductive, table1-resistive)");
}

void validate_parameters(const ParameterSet& p) {
    check_positive("E_b", p.E_b);
    check_positive("I_max", p.I_max);
    check_positive("L_i", p.L_i);
    check_positive("L_g", p.L_g);
    check_positive("C", p.C);
    check_positive("R_i", p.R_i);
    check_positive("R_g", p.R_g);
    check_positive("K_b", p.K_b);
    check_positive("K_Pi", p.K_Pi);
    check_positive("K_Ii", p.K_Ii);
    check_positive("kappa_1", p.kappa_1);
    check_positive("K_Pv", p.K_Pv);
    check_positive("K_Iv", p.K_Iv);
    check_positive("kappa_2", p.kappa_2);
    check_positive("omega_bw_i", p.omega_bw_i);
    check_positive("omega_bw_v", p.omega_bw_v);
    check_positive("omega_b", p.omega_b);
    check_positive("S_r", p.S_r);
    check_positive("E_r", p.E_r);
    if (!(p.eps_sat > 0.0 && p.eps_sat < 1.0))
        throw ValidationError("parameter 'eps_sat' must lie in (0, 1)");
    if (!(p.psi >= 0.0 && p.psi < 2.0 * std::numbers::pi))
        throw ValidationError("parameter 'psi' must lie in [0, 2*pi)");
}

std::vector<std::string> parameter_warnings(const ParameterSet& p) {
    std::vector<std::string> w;
    auto warn = [&w](const char* gain, double actual, double expected) {
        if (!within_one_percent(actual, expected))
            w.push_back(std::string(gain) + " = " + std::to_string(actual) +
                        " deviates more than 1% from the bandwidth design value " +
                        std::to_string(expected));
    };
    warn("K_Pi", p.K_Pi, p.omega_bw_i * p.L_i);
    warn("K_Ii", p.K_Ii, p.omega_bw_i * p.R_i);
    warn("K_Pv", p.K_Pv, p.omega_bw_v * p.C);
    return w;
}

ParameterSet parameters_from_json(const nlohmann::json& doc) {
    if (doc.is_string()) return named_parameter_set(doc.get<std::string>());
    if (!doc.is_object())
        throw ParseError("parameter document must be a JSON object or a built-in set name");

    ParameterSet p{};
    for (const auto& f : fields) {
        auto it = doc.find(f.name);
        if (it == doc.end())
            throw ValidationError(std::string("parameter document is missing field '") + f.name + "'");
        if (!it->is_number())
            throw ValidationError(std::string("parameter field '") + f.name + "' must be a number");
        p.*(f.member) = it->get<double>();
    }
    // unknown keys are errors to catch typos
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool known = false;
        for (const auto& f : fields)
            if (it.key() == f.name) { known = true; break; }
        if (!known)
            throw ValidationError("unknown parameter field '" + it.key() + "'");
    }
    validate_parameters(p);
    return p;
}

nlohmann::json parameters_to_json(const ParameterSet& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& f : fields) j[f.name] = p.*(f.member);
    return j;
}

ParameterSet load_parameters(const std::string& source, std::vector<std::string>* warnings) {
    ParameterSet p;
    if (is_named_parameter_set(source)) {
        p = named_parameter_set(source);
    } else {
        std::ifstream in(source);
        if (!in)
            throw ParseError("cannot open parameter file '" + source + "'");
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("cannot parse parameter file '" + source + "': " + e.what());
        }
        p = parameters_from_json(doc);
    }
    validate_parameters(p);
    if (warnings) *warnings = parameter_warnings(p);
    return p;
}

double to_si(const ParameterSet& p, std::string_view base_tag, double pu_value) {
    const double Er2 = p.E_r * p.E_r;
    double base;
    if (base_tag == "voltage")
        base = p.E_r * std::numbers::sqrt2 / std::sqrt(3.0);
    else if (base_tag == "current")
        base = p.S_r * std::numbers::sqrt2 / (std::sqrt(3.0) * p.E_r);
    else if (base_tag == "inductance")
        base = Er2 / (p.S_r * p.omega_b);
    else if (base_tag == "capacitance")
        base = p.S_r / (Er2 * p.omega_b);
    else if (base_tag == "resistance")
        base = Er2 / p.S_r;
    else if (base_tag == "inverse_capacitance")
        base = Er2 * p.omega_b / p.S_r;
    else if (base_tag == "conductance")
        base = p.S_r / Er2;
    else if (base_tag == "inverse_inductance")
        base = p.S_r * p.omega_b / Er2;
    else if (base_tag == "frequency")
        base = p.omega_b;
    else if (base_tag == "voltage_amplitude_gain")
        base = 3.0 * p.omega_b / (2.0 * Er2);
    else
        throw ValidationError("unknown base-quantity tag '" + std::string(base_tag) + "'");
    return pu_value * base;
}

} // namespace gfm
