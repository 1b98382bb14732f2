// CLI for the He+ nucleus-electron entanglement simulator.
//
// Subcommands:
//   simulate    — purity trace CSV plus summary JSON for a preset or
//                 configured product state
//   predict     — equilibrium purity from initial weights, JSON to stdout
//   corrections — first-order correction table as CSV, optionally with the
//                 quadrature oracle column
//
// Exit codes: 0 success, 2 config error, 3 numeric/convergence error,
// 4 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "heplus/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
    std::optional<std::string> scenario;
    std::optional<std::string> config_path;
    std::optional<double> t_max;
    std::optional<int> points;
    std::optional<std::string> out_path;
    std::optional<std::string> summary_path;
    std::optional<std::string> source;
};

heplus::ScenarioConfig resolve_config(const CommonOpts& opts) {
    heplus::ScenarioConfig cfg;
    if (opts.config_path) cfg = heplus::load_config(*opts.config_path);
    if (opts.scenario) {
        cfg.scenario = *opts.scenario;
        cfg.electron_state.clear();
        cfg.nucleus_state.clear();
    }
    if (opts.t_max) cfg.t_max_seconds = *opts.t_max;
    if (opts.points) cfg.num_points = *opts.points;
    if (opts.out_path) cfg.trace_path = *opts.out_path;
    if (opts.summary_path) cfg.summary_path = *opts.summary_path;
    if (opts.source) {
        if (*opts.source == "closed-form")
            cfg.correction_source = heplus::CorrectionSource::ClosedForm;
        else if (*opts.source == "oracle")
            cfg.correction_source = heplus::CorrectionSource::Oracle;
        else
            throw heplus::ConfigError("--source must be closed-form or oracle");
    }
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << content;
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

int run_simulate(const CommonOpts& opts) {
    const auto cfg = resolve_config(opts);
    const auto run = heplus::prepare_run(cfg);
    const auto trace =
        heplus::purity_trace(run.state, run.table, run.electron_spectrum,
                             run.nucleus_spectrum, run.t_max_seconds, run.num_points,
                             cfg.params);

    std::ostringstream csv;
    heplus::write_trace_csv(trace, csv);
    const std::string summary = heplus::summary_json(run, trace, cfg.params);

    if (cfg.trace_path)
        write_file(*cfg.trace_path, csv.str());
    else
        std::cout << csv.str();
    if (cfg.summary_path)
        write_file(*cfg.summary_path, summary);
    else
        std::cout << summary;
    return kExitOk;
}

int run_predict(const CommonOpts& opts) {
    const auto cfg = resolve_config(opts);
    const auto run = heplus::prepare_run(cfg);
    std::cout << heplus::predict_json(run);
    return kExitOk;
}

int run_corrections(int n_max, int N_max, bool with_oracle,
                    const std::optional<std::string>& out_path) {
    if (n_max < 1 || n_max > 20)
        throw heplus::ConfigError("--n-max must be in [1, 20]");
    if (N_max < 1) throw heplus::ConfigError("--nn-max must be >= 1");
    if (with_oracle && (n_max > 3 || N_max > 10))
        throw heplus::ConfigError("--oracle requires --n-max <= 3 and --nn-max <= 10");

    const auto params = heplus::default_params();
    std::vector<int> en, nn;
    for (int n = 1; n <= n_max; ++n) en.push_back(n);
    for (int N = 1; N <= N_max; ++N) nn.push_back(N);

    const auto table = heplus::build_correction_table(
        en, nn, params, heplus::CorrectionSource::ClosedForm);
    std::optional<heplus::CorrectionTable> oracle;
    if (with_oracle)
        oracle = heplus::build_correction_table(en, nn, params,
                                                heplus::CorrectionSource::Oracle);

    std::ostringstream csv;
    heplus::write_correction_csv(table, csv, oracle ? &*oracle : nullptr);
    if (out_path)
        write_file(*out_path, csv.str());
    else
        std::cout << csv.str();

    if (oracle) {
        for (int n : en)
            for (int N : nn)
                std::cerr << "discrepancy n=" << n << " N=" << N
                          << " oracle/closed_form = "
                          << heplus::format_sci(oracle->value(n, N) / table.value(n, N))
                          << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"He+ nucleus-electron entanglement simulator"};
    app.require_subcommand(1);

    CommonOpts opts;
    int n_max = 5, N_max = 5;
    bool with_oracle = false;

    auto add_common = [&](CLI::App* sub, bool with_sim_opts) {
        sub->add_option("--scenario", opts.scenario, "preset: fig2, fig2-high, fig3");
        sub->add_option("--config", opts.config_path, "JSON config file");
        if (with_sim_opts) {
            sub->add_option("--t-max", opts.t_max, "time horizon, seconds");
            sub->add_option("--points", opts.points, "grid points (>= 2)");
            sub->add_option("--out", opts.out_path, "trace CSV path (default stdout)");
            sub->add_option("--summary", opts.summary_path,
                            "summary JSON path (default stdout)");
        }
        sub->add_option("--source", opts.source, "closed-form | oracle");
    };

    auto* simulate = app.add_subcommand("simulate", "evolve purity over time");
    add_common(simulate, true);
    auto* predict = app.add_subcommand("predict", "equilibrium purity from weights");
    add_common(predict, false);
    auto* corrections = app.add_subcommand("corrections", "correction table CSV");
    corrections->add_option("--n-max", n_max, "max electron level (<= 20)");
    corrections->add_option("--nn-max", N_max, "max nucleus level");
    corrections->add_flag("--oracle", with_oracle, "add quadrature oracle column");
    corrections->add_option("--out", opts.out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (simulate->parsed()) return run_simulate(opts);
        if (predict->parsed()) return run_predict(opts);
        return run_corrections(n_max, N_max, with_oracle, opts.out_path);
    } catch (const heplus::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const heplus::ConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
