#include "heplus/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heplus {

namespace {

// exp(-i (Ea - Eb) t / hbar). The energy difference and the phase argument
// are formed in extended precision and reduced mod 2 pi there, so tiny gaps
// keep picoradian accuracy even after ~1e8 radians of accumulation.
std::complex<double> evolution_phase(double Ea_eV, double Eb_eV, double hbar,
                                     double t_s) {
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    const long double dE =
        static_cast<long double>(Ea_eV) - static_cast<long double>(Eb_eV);
    const long double theta =
        -dE / static_cast<long double>(hbar) * static_cast<long double>(t_s);
    return std::polar(1.0, static_cast<double>(std::remainderl(theta, two_pi)));
}

std::vector<double> weights_of(const std::vector<std::complex<double>>& amps) {
    std::vector<double> w(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) w[i] = std::norm(amps[i]);
    return w;
}

void normalize_or_throw(std::vector<std::complex<double>>& amps, const char* what) {
    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    if (norm2 <= 0.0)
        throw std::invalid_argument(std::string(what) + " amplitude vector is zero");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
}

std::pair<std::vector<int>, std::vector<std::complex<double>>> sorted_component(
    const std::vector<std::pair<int, std::complex<double>>>& entries, const char* what) {
    if (entries.empty())
        throw std::invalid_argument(std::string(what) + " level list is empty");
    auto sorted = entries;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> levels;
    std::vector<std::complex<double>> amps;
    for (const auto& [level, amp] : sorted) {
        if (level < 1)
            throw std::invalid_argument(std::string(what) + " levels must be >= 1");
        if (!levels.empty() && levels.back() == level)
            throw std::invalid_argument(std::string(what) + " has duplicate levels");
        levels.push_back(level);
        amps.push_back(amp);
    }
    normalize_or_throw(amps, what);
    return {std::move(levels), std::move(amps)};
}

}  // namespace

std::vector<double> ProductState::electron_weights() const {
    return weights_of(electron_amplitudes);
}

std::vector<double> ProductState::nucleus_weights() const {
    return weights_of(nucleus_amplitudes);
}

ProductState make_product_state(
    const std::vector<std::pair<int, std::complex<double>>>& electron,
    const std::vector<std::pair<int, std::complex<double>>>& nucleus) {
    ProductState s;
    auto [el, ea] = sorted_component(electron, "electron");
    auto [nl, na] = sorted_component(nucleus, "nucleus");
    s.electron_levels = std::move(el);
    s.electron_amplitudes = std::move(ea);
    s.nucleus_levels = std::move(nl);
    s.nucleus_amplitudes = std::move(na);
    return s;
}

DensityMatrix reduced_density_matrix(const ProductState& state,
                                     const CorrectionTable& table,
                                     const SubsystemSpectrum& electron_spectrum,
                                     const SubsystemSpectrum& nucleus_spectrum,
                                     double t_s, Subsystem kind,
                                     const ModelParams& params) {
    const bool electron = (kind == Subsystem::Electron);
    const auto& kept_levels = electron ? state.electron_levels : state.nucleus_levels;
    const auto& kept_amps = electron ? state.electron_amplitudes : state.nucleus_amplitudes;
    const auto& traced_levels = electron ? state.nucleus_levels : state.electron_levels;
    const auto& traced_amps = electron ? state.nucleus_amplitudes : state.electron_amplitudes;
    const auto& kept_spectrum = electron ? electron_spectrum : nucleus_spectrum;
    const double hbar = params.hbar_eV_s;

    const std::size_t d = kept_levels.size();
    DensityMatrix out;
    out.kind = kind;
    out.levels = kept_levels;
    out.rho.assign(d * d, {0.0, 0.0});

    const auto traced_w = weights_of(traced_amps);
    std::vector<double> kept_E(d);
    for (std::size_t i = 0; i < d; ++i) kept_E[i] = kept_spectrum.energy_of(kept_levels[i]);

    auto corr = [&](std::size_t kept_idx, std::size_t traced_idx) {
        const int a = kept_levels[kept_idx];
        const int b = traced_levels[traced_idx];
        return electron ? table.value(a, b) : table.value(b, a);
    };

    for (std::size_t i = 0; i < d; ++i) {
        out.rho[i * d + i] = std::norm(kept_amps[i]);
        for (std::size_t j = i + 1; j < d; ++j) {
            std::complex<double> dephase{0.0, 0.0};
            for (std::size_t k = 0; k < traced_levels.size(); ++k)
                dephase += traced_w[k] * evolution_phase(corr(i, k), corr(j, k), hbar, t_s);
            const std::complex<double> rho_ij =
                kept_amps[i] * std::conj(kept_amps[j]) *
                evolution_phase(kept_E[i], kept_E[j], hbar, t_s) * dephase;
            out.rho[i * d + j] = rho_ij;
            out.rho[j * d + i] = std::conj(rho_ij);
        }
    }
    return out;
}

double purity_of(const DensityMatrix& rho) {
    double p = 0.0;
    for (const auto& x : rho.rho) p += std::norm(x);
    return p;
}

PurityTrace purity_trace(const ProductState& state, const CorrectionTable& table,
                         const SubsystemSpectrum& electron_spectrum,
                         const SubsystemSpectrum& nucleus_spectrum, double t_max_s,
                         int num_points, const ModelParams& params) {
    if (num_points < 2) throw std::invalid_argument("num_points must be >= 2");
    if (!(t_max_s > 0.0)) throw std::invalid_argument("t_max must be positive");
    PurityTrace trace;
    trace.times_s.reserve(num_points);
    trace.purity.reserve(num_points);
    for (int k = 0; k < num_points; ++k) {
        const double t = t_max_s * static_cast<double>(k) / (num_points - 1);
        const auto rho = reduced_density_matrix(state, table, electron_spectrum,
                                                nucleus_spectrum, t, Subsystem::Electron,
                                                params);
        trace.times_s.push_back(t);
        trace.purity.push_back(purity_of(rho));
    }
    return trace;
}

TraceSummary trace_summary(const PurityTrace& trace,
                           const std::vector<double>& thresholds) {
    if (trace.purity.empty()) throw std::invalid_argument("empty trace");
    TraceSummary s;
    s.min = trace.purity[0];
    s.argmin_s = trace.times_s[0];
    double sum = 0.0;
    for (std::size_t i = 0; i < trace.purity.size(); ++i) {
        sum += trace.purity[i];
        if (trace.purity[i] < s.min) {
            s.min = trace.purity[i];
            s.argmin_s = trace.times_s[i];
        }
    }
    s.mean = sum / static_cast<double>(trace.purity.size());
    for (double thr : thresholds) {
        double crossing = -1.0;
        for (std::size_t i = 0; i < trace.purity.size(); ++i) {
            if (trace.purity[i] < thr) {
                crossing = trace.times_s[i];
                break;
            }
        }
        s.first_crossing_s.push_back(crossing);
    }
    return s;
}

}  // namespace heplus
