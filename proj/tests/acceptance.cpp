// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heplus/equilibrium.hpp"
#include "heplus/quadrature.hpp"
#include "heplus/scenario.hpp"

using namespace heplus;
using cplx = std::complex<double>;
namespace fs = std::filesystem;

namespace {

const ModelParams params = default_params();
int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

ProductState uniform_state(int de, int dc) {
    std::vector<std::pair<int, cplx>> e, c;
    for (int q = 1; q <= de; ++q) e.emplace_back(q, cplx{1.0, 0.0});
    for (int q = 1; q <= dc; ++q) c.emplace_back(q, cplx{1.0, 0.0});
    return make_product_state(e, c);
}

struct System {
    ProductState state;
    CorrectionTable table;
    SubsystemSpectrum espec;
    SubsystemSpectrum nspec;
};

System system_for(ProductState state) {
    auto table = build_correction_table(state.electron_levels, state.nucleus_levels,
                                        params, CorrectionSource::ClosedForm);
    auto espec = build_spectrum(Subsystem::Electron, state.electron_levels, params);
    auto nspec = build_spectrum(Subsystem::Nucleus, state.nucleus_levels, params);
    return {std::move(state), std::move(table), std::move(espec), std::move(nspec)};
}

void criterion_1() {
    WeightProfile p;
    p.weights_e.assign(10, 0.1);
    p.weights_c.assign(10, 0.1);
    const double v = p_eq(p);
    report(1, "p_eq(uniform 10 x 10) = 0.19 within 1e-12",
           std::abs(v - 0.19) <= 1e-12, "p_eq = " + std::to_string(v));
}

void criterion_2() {
    const auto sys = system_for(uniform_state(2, 2));
    const double gap = nonadditive_gap(1, 2, 1, 2, sys.table);
    const double period = 2.0 * M_PI * params.hbar_eV_s / std::abs(gap);
    // finer grid than the preset so the sampled minimum resolves to 1e-6
    const auto trace =
        purity_trace(sys.state, sys.table, sys.espec, sys.nspec, 5e-5, 20001, params);
    double pmin = 2.0, pmax = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < trace.purity.size(); ++i) {
        pmin = std::min(pmin, trace.purity[i]);
        pmax = std::max(pmax, trace.purity[i]);
        const double closed =
            0.75 + 0.25 * std::cos(gap / params.hbar_eV_s * trace.times_s[i]);
        worst = std::max(worst, std::abs(trace.purity[i] - closed));
    }
    const bool ok = std::abs(pmax - 1.0) <= 1e-9 && std::abs(pmin - 0.5) <= 1e-6 &&
                    period >= 0.5e-5 && period <= 5e-5 && worst <= 1e-10;
    std::ostringstream d;
    d << "min=" << pmin << " max=" << pmax << " period=" << period
      << " max|P-closed_form|=" << worst;
    report(2, "fig2 oscillation: extrema, period, closed form", ok, d.str());
}

void criterion_3() {
    const auto sys =
        system_for(make_product_state({{14, 1.0}, {15, 1.0}}, {{1, 1.0}, {2, 1.0}}));
    const auto trace =
        purity_trace(sys.state, sys.table, sys.espec, sys.nspec, 1e20, 200, params);
    const auto s = trace_summary(trace, {0.999});
    const double crossing = s.first_crossing_s[0];
    report(3, "fig2-high first crossing below 0.999 at t >= 1e18 s",
           crossing >= 1e18,
           "first_crossing = " + format_sci(crossing));
}

void criterion_4() {
    const auto sys = system_for(uniform_state(10, 10));
    const double avg = analytic_time_average(sys.state, sys.table);
    report(4, "fig3 analytic time average = 0.19 within 1e-12",
           std::abs(avg - 0.19) <= 1e-12, "avg = " + std::to_string(avg));
}

void criterion_5() {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    bool identity_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<int, cplx>> e, c;
        const int de = dim(rng), dc = dim(rng);
        for (int q = 1; q <= de; ++q) e.emplace_back(q, cplx{amp(rng) + 2.0, amp(rng)});
        for (int q = 1; q <= dc; ++q) c.emplace_back(q, cplx{amp(rng) + 2.0, amp(rng)});
        const auto state = make_product_state(e, c);
        const auto table = build_correction_table(
            state.electron_levels, state.nucleus_levels, params,
            CorrectionSource::ClosedForm);
        if (!degenerate_gap_report(state, table).empty()) continue;
        if (std::abs(analytic_time_average(state, table) -
                     p_eq(weight_profile(state))) > 1e-12)
            identity_ok = false;
    }

    const auto sys = system_for(uniform_state(3, 3));
    double slowest = 0.0;
    for (int n = 1; n <= 3; ++n)
        for (int np = n + 1; np <= 3; ++np)
            for (int N = 1; N <= 3; ++N)
                for (int Np = N + 1; Np <= 3; ++Np)
                    slowest = std::max(
                        slowest, 2.0 * M_PI * params.hbar_eV_s /
                                     std::abs(nonadditive_gap(n, np, N, Np, sys.table)));
    const auto trace = purity_trace(sys.state, sys.table, sys.espec, sys.nspec,
                                    200.0 * slowest, 20001, params);
    const double mean = trace_summary(trace).mean;
    const double avg = analytic_time_average(sys.state, sys.table);
    const bool horizon_ok = std::abs(mean - avg) <= 2e-2;
    std::ostringstream d;
    d << "identity over 100 states " << (identity_ok ? "ok" : "violated")
      << "; 3x3 long-horizon mean=" << mean << " vs analytic=" << avg;
    report(5, "time-average identity and long-horizon equidistribution",
           identity_ok && horizon_ok, d.str());
}

void criterion_6() {
    std::mt19937 rng(103);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> logt(-6.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<int, cplx>> e, c;
        const int de = dim(rng), dc = dim(rng);
        for (int q = 1; q <= de; ++q) e.emplace_back(q, cplx{amp(rng) + 2.0, amp(rng)});
        for (int q = 1; q <= dc; ++q) c.emplace_back(q, cplx{amp(rng) + 2.0, amp(rng)});
        const auto sys = system_for(make_product_state(e, c));
        for (int k = 0; k < 10; ++k) {
            const double t = std::pow(10.0, logt(rng));
            const double pe = purity_of(reduced_density_matrix(
                sys.state, sys.table, sys.espec, sys.nspec, t, Subsystem::Electron,
                params));
            const double pc = purity_of(reduced_density_matrix(
                sys.state, sys.table, sys.espec, sys.nspec, t, Subsystem::Nucleus,
                params));
            worst = std::max(worst, std::abs(pe - pc));
        }
    }
    report(6, "subsystem symmetry |P_e - P_c| < 1e-10", worst < 1e-10,
           "worst = " + format_sci(worst));
}

void criterion_7() {
    std::mt19937 rng(107);
    std::uniform_int_distribution<int> dim(2, 6);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<int, cplx>> e;
        const int de = dim(rng);
        for (int q = 1; q <= de; ++q) e.emplace_back(q, cplx{amp(rng) + 2.0, amp(rng)});
        const auto sys = system_for(
            make_product_state(e, {{1 + trial % 5, cplx{1.0, 0.0}}}));
        const auto trace =
            purity_trace(sys.state, sys.table, sys.espec, sys.nspec, 1e3, 64, params);
        for (double p : trace.purity) worst = std::max(worst, std::abs(p - 1.0));
    }
    report(7, "single nucleus level keeps purity at 1", worst <= 1e-12,
           "worst deviation = " + format_sci(worst));
}

void criterion_8() {
    const auto table =
        build_correction_table({1, 2}, {1, 2}, params, CorrectionSource::ClosedForm);
    const double gap = std::abs(nonadditive_gap(1, 2, 1, 2, table));
    report(8, "|nonadditive_gap(1,2,1,2)| in [1e-11, 1e-9] eV",
           gap >= 1e-11 && gap <= 1e-9, "gap = " + format_sci(gap) + " eV");
}

void criterion_9() {
    const double pi2 = M_PI * M_PI;
    auto g = [&](int N) { return 1.0 / 3.0 - 1.0 / (2.0 * pi2 * N * N); };
    bool ratios_ok = true;
    std::vector<double> oracle;
    for (int N = 1; N <= 5; ++N) oracle.push_back(correction_oracle(1, N, params));
    for (int N = 2; N <= 5; ++N) {
        const double got = oracle[N - 1] / oracle[0];
        const double expected = g(N) / g(1);
        if (std::abs(got / expected - 1.0) > 1e-3) ratios_ok = false;
    }
    bool msr_ok = true;
    const double Rw = params.well_radius_m();
    for (int N = 1; N <= 10; ++N) {
        const double quad = adaptive_simpson(
            [&](double K) { return K * K * nucleus_radial_density(N, K, params); }, 0.0,
            Rw, {1e-10, 20});
        if (std::abs(nucleus_mean_square_radius(N, params) / quad - 1.0) > 1e-8)
            msr_ok = false;
    }
    const double ratio = oracle[0] / correction_closed_form(1, 1, params);
    std::ostringstream d;
    d << "oracle/closed_form(1,1) = " << ratio << " (reported, not gated)";
    report(9, "oracle N-ratios and <K^2> quadrature consistency", ratios_ok && msr_ok,
           d.str());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10() {
    const std::string cli = HEPLUS_CLI_PATH;
    const auto dir = fs::temp_directory_path() / "heplus_acceptance";
    fs::create_directories(dir);
    bool ok = true;
    std::string detail;
    for (const std::string preset : {"fig2", "fig2-high", "fig3"}) {
        const auto a_csv = dir / (preset + "_a.csv");
        const auto b_csv = dir / (preset + "_b.csv");
        const auto a_sum = dir / (preset + "_a.json");
        const auto b_sum = dir / (preset + "_b.json");
        auto run_once = [&](const fs::path& csv, const fs::path& sum) {
            const std::string cmd = cli + " simulate --scenario " + preset + " --out " +
                                    csv.string() + " --summary " + sum.string();
            return WEXITSTATUS(std::system(cmd.c_str())) == 0;
        };
        if (!run_once(a_csv, a_sum) || !run_once(b_csv, b_sum)) {
            ok = false;
            detail = preset + " run failed";
            break;
        }
        if (slurp(a_csv) != slurp(b_csv) || slurp(a_sum) != slurp(b_sum)) {
            ok = false;
            detail = preset + " outputs differ between runs";
            break;
        }
    }
    report(10, "preset outputs are byte-identical across runs", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
