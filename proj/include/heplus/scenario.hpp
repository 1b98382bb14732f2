/*
 * Scenario configuration, presets, and serialization for the CLI: purity
 * trace CSV, summary JSON, and correction-table CSV.
 *
 * Presets:
 *   fig2       (|1>+|2>)_c (x) (|1>+|2>)_e,     t_max 5e-5 s,  2000 points
 *   fig2-high  (|1>+|2>)_c (x) (|14>+|15>)_e,   t_max 1e20 s,   200 points
 *   fig3       uniform 10 (x) uniform 10,       t_max 10 s,    2000 points
 */
#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "heplus/corrections.hpp"
#include "heplus/dynamics.hpp"
#include "heplus/model.hpp"

namespace heplus {

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    std::optional<std::string> scenario;  // preset name, exclusive with explicit state
    std::vector<std::pair<int, std::complex<double>>> electron_state;
    std::vector<std::pair<int, std::complex<double>>> nucleus_state;
    std::optional<double> t_max_seconds;
    std::optional<int> num_points;
    CorrectionSource correction_source = CorrectionSource::ClosedForm;
    ModelParams params = default_params();
    std::optional<std::string> trace_path;
    std::optional<std::string> summary_path;
};

struct ScenarioRun {
    ProductState state;
    CorrectionTable table;
    SubsystemSpectrum electron_spectrum;
    SubsystemSpectrum nucleus_spectrum;
    double t_max_seconds;
    int num_points;
    std::string label;
};

// Loads a JSON config file; keys are the lower_snake_case field names,
// amplitudes given as [re, im] pairs, parameter overrides nested under
// "param_overrides". Throws ConfigError on malformed input.
ScenarioConfig load_config(const std::string& path);

// Resolves presets / explicit state, validates params, builds table and
// spectra. Throws ConfigError if the config names both a preset and an
// explicit state, or neither.
ScenarioRun prepare_run(const ScenarioConfig& config);

// Scientific notation with 12 significant digits; used for all CSV output
// so repeated runs are byte-identical.
std::string format_sci(double value);

// Trace CSV: header "t_seconds,purity", LF line endings.
void write_trace_csv(const PurityTrace& trace, std::ostream& out);

// Correction CSV: header "n,N,correction_eV[,oracle_eV]".
void write_correction_csv(const CorrectionTable& table, std::ostream& out,
                          const CorrectionTable* oracle = nullptr);

// Summary JSON text (stable key order): p_min, t_at_p_min_s, p_mean, p_eq,
// analytic_time_average, oscillation_period_s, first_crossing_0_999_s.
std::string summary_json(const ScenarioRun& run, const PurityTrace& trace,
                         const ModelParams& params);

// p_eq / analytic_time_average only, for the predict subcommand.
std::string predict_json(const ScenarioRun& run);

}  // namespace heplus
