#include "heplus/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "json.hpp"

#include "heplus/equilibrium.hpp"

namespace heplus {

namespace {

using nlohmann::ordered_json;

std::vector<std::pair<int, std::complex<double>>> uniform_levels(int lo, int hi) {
    std::vector<std::pair<int, std::complex<double>>> v;
    for (int q = lo; q <= hi; ++q) v.emplace_back(q, std::complex<double>{1.0, 0.0});
    return v;
}

struct Preset {
    std::vector<std::pair<int, std::complex<double>>> electron;
    std::vector<std::pair<int, std::complex<double>>> nucleus;
    double t_max;
    int points;
};

Preset preset_of(const std::string& name) {
    if (name == "fig2") return {uniform_levels(1, 2), uniform_levels(1, 2), 5e-5, 2000};
    if (name == "fig2-high")
        return {uniform_levels(14, 15), uniform_levels(1, 2), 1e20, 200};
    if (name == "fig3")
        return {uniform_levels(1, 10), uniform_levels(1, 10), 10.0, 2000};
    throw ConfigError("unknown scenario preset: " + name);
}

std::vector<std::pair<int, std::complex<double>>> parse_component(
    const ordered_json& levels, const ordered_json& amps, const char* what) {
    if (!levels.is_array() || !amps.is_array() || levels.size() != amps.size())
        throw ConfigError(std::string(what) +
                          "_levels and _amplitudes must be arrays of equal length");
    std::vector<std::pair<int, std::complex<double>>> out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!levels[i].is_number_integer())
            throw ConfigError(std::string(what) + "_levels must be integers");
        const auto& pair = amps[i];
        if (!pair.is_array() || pair.size() != 2)
            throw ConfigError(std::string(what) + "_amplitudes must be [re, im] pairs");
        out.emplace_back(levels[i].get<int>(),
                         std::complex<double>{pair[0].get<double>(),
                                              pair[1].get<double>()});
    }
    return out;
}

void apply_override(ModelParams& p, const std::string& key, const ordered_json& value) {
    if (key == "alpha") p.alpha = value.get<double>();
    else if (key == "hbar_eV_s") p.hbar_eV_s = value.get<double>();
    else if (key == "hbar_c_eV_m") p.hbar_c_eV_m = value.get<double>();
    else if (key == "electron_rest_energy_eV") p.electron_rest_energy_eV = value.get<double>();
    else if (key == "proton_rest_energy_eV") p.proton_rest_energy_eV = value.get<double>();
    else if (key == "nucleon_core_radius_m") p.nucleon_core_radius_m = value.get<double>();
    else if (key == "bohr_radius_m") p.bohr_radius_m = value.get<double>();
    else if (key == "nuclear_charge") p.nuclear_charge = value.get<int>();
    else throw ConfigError("unknown parameter override: " + key);
}

}  // namespace

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse error: " + std::string(e.what()));
    }
    ScenarioConfig cfg;
    try {
        if (j.contains("scenario")) cfg.scenario = j["scenario"].get<std::string>();
        if (j.contains("electron_levels") || j.contains("electron_amplitudes"))
            cfg.electron_state = parse_component(j.value("electron_levels", ordered_json::array()),
                                                 j.value("electron_amplitudes", ordered_json::array()),
                                                 "electron");
        if (j.contains("nucleus_levels") || j.contains("nucleus_amplitudes"))
            cfg.nucleus_state = parse_component(j.value("nucleus_levels", ordered_json::array()),
                                                j.value("nucleus_amplitudes", ordered_json::array()),
                                                "nucleus");
        if (j.contains("t_max_seconds")) cfg.t_max_seconds = j["t_max_seconds"].get<double>();
        if (j.contains("num_points")) cfg.num_points = j["num_points"].get<int>();
        if (j.contains("correction_source")) {
            const auto s = j["correction_source"].get<std::string>();
            if (s == "closed-form") cfg.correction_source = CorrectionSource::ClosedForm;
            else if (s == "oracle") cfg.correction_source = CorrectionSource::Oracle;
            else throw ConfigError("correction_source must be closed-form or oracle");
        }
        if (j.contains("param_overrides")) {
            for (const auto& [key, value] : j["param_overrides"].items())
                apply_override(cfg.params, key, value);
        }
        if (j.contains("trace_path")) cfg.trace_path = j["trace_path"].get<std::string>();
        if (j.contains("summary_path")) cfg.summary_path = j["summary_path"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config field error: " + std::string(e.what()));
    }
    return cfg;
}

ScenarioRun prepare_run(const ScenarioConfig& config) {
    const bool has_explicit = !config.electron_state.empty() || !config.nucleus_state.empty();
    if (config.scenario && has_explicit)
        throw ConfigError("config names both a preset and an explicit state");
    if (!config.scenario && !has_explicit)
        throw ConfigError("config must name a preset or give an explicit state");
    if (has_explicit && (config.electron_state.empty() || config.nucleus_state.empty()))
        throw ConfigError("explicit state needs both electron and nucleus components");

    const auto vr = validate(config.params);
    if (!vr.ok) throw ConfigError("invalid parameters: " + vr.error);

    std::vector<std::pair<int, std::complex<double>>> electron, nucleus;
    double t_max = 1.0;
    int points = 1000;
    std::string label;
    if (config.scenario) {
        const auto preset = preset_of(*config.scenario);
        electron = preset.electron;
        nucleus = preset.nucleus;
        t_max = preset.t_max;
        points = preset.points;
        label = *config.scenario;
    } else {
        electron = config.electron_state;
        nucleus = config.nucleus_state;
        label = "custom";
    }
    if (config.t_max_seconds) t_max = *config.t_max_seconds;
    if (config.num_points) points = *config.num_points;
    if (points < 2) throw ConfigError("num_points must be >= 2");
    if (!(t_max > 0.0)) throw ConfigError("t_max_seconds must be positive");

    ProductState state;
    try {
        state = make_product_state(electron, nucleus);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid state: ") + e.what());
    }
    CorrectionTable table = build_correction_table(
        state.electron_levels, state.nucleus_levels, config.params,
        config.correction_source);
    auto espec = build_spectrum(Subsystem::Electron, table.electron_levels(), config.params);
    auto nspec = build_spectrum(Subsystem::Nucleus, table.nucleus_levels(), config.params);
    return ScenarioRun{
        std::move(state), std::move(table),  std::move(espec), std::move(nspec),
        t_max,            points,            std::move(label),
    };
}

std::string format_sci(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", value);
    return buf;
}

void write_trace_csv(const PurityTrace& trace, std::ostream& out) {
    out << "t_seconds,purity\n";
    for (std::size_t i = 0; i < trace.times_s.size(); ++i)
        out << format_sci(trace.times_s[i]) << ',' << format_sci(trace.purity[i]) << '\n';
}

void write_correction_csv(const CorrectionTable& table, std::ostream& out,
                          const CorrectionTable* oracle) {
    out << (oracle ? "n,N,correction_eV,oracle_eV\n" : "n,N,correction_eV\n");
    for (int n : table.electron_levels()) {
        for (int N : table.nucleus_levels()) {
            out << n << ',' << N << ',' << format_sci(table.value(n, N));
            if (oracle) out << ',' << format_sci(oracle->value(n, N));
            out << '\n';
        }
    }
}

std::string summary_json(const ScenarioRun& run, const PurityTrace& trace,
                         const ModelParams& params) {
    const auto summary = trace_summary(trace, {0.999});
    ordered_json j;
    j["p_min"] = summary.min;
    j["t_at_p_min_s"] = summary.argmin_s;
    j["p_mean"] = summary.mean;
    j["p_eq"] = p_eq(weight_profile(run.state));
    j["analytic_time_average"] = analytic_time_average(run.state, run.table);
    if (run.state.electron_levels.size() == 2 && run.state.nucleus_levels.size() == 2) {
        const double gap = nonadditive_gap(
            run.state.electron_levels[0], run.state.electron_levels[1],
            run.state.nucleus_levels[0], run.state.nucleus_levels[1], run.table);
        j["oscillation_period_s"] = 2.0 * std::numbers::pi * params.hbar_eV_s / std::abs(gap);
    } else {
        j["oscillation_period_s"] = nullptr;
    }
    if (summary.first_crossing_s[0] >= 0.0)
        j["first_crossing_0_999_s"] = summary.first_crossing_s[0];
    else
        j["first_crossing_0_999_s"] = nullptr;
    return j.dump(2) + "\n";
}

std::string predict_json(const ScenarioRun& run) {
    ordered_json j;
    j["p_eq"] = p_eq(weight_profile(run.state));
    j["analytic_time_average"] = analytic_time_average(run.state, run.table);
    return j.dump(2) + "\n";
}

}  // namespace heplus
