#include "heplus/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heplus {

double SubsystemSpectrum::energy_of(int level) const {
    auto it = std::lower_bound(levels.begin(), levels.end(), level);
    if (it == levels.end() || *it != level)
        throw std::out_of_range("level not present in spectrum");
    return energies_eV[static_cast<std::size_t>(it - levels.begin())];
}

double electron_level_energy(int n, const ModelParams& params) {
    if (n < 1) throw std::domain_error("electron level n must be >= 1");
    const double mu = params.electron_reduced_rest_energy_eV();
    const double za = params.nuclear_charge * params.alpha;
    return -mu * za * za / (2.0 * static_cast<double>(n) * n);
}

double nucleus_level_energy(int N, const ModelParams& params) {
    if (N < 1) throw std::domain_error("nucleus level N must be >= 1");
    const double Rw = params.well_radius_m();
    const double hc = params.hbar_c_eV_m;
    const double pi = std::numbers::pi;
    return hc * hc * pi * pi * static_cast<double>(N) * N /
           (params.proton_rest_energy_eV * Rw * Rw);
}

double nucleus_radial_density(int N, double K_m, const ModelParams& params) {
    if (N < 1) throw std::domain_error("nucleus level N must be >= 1");
    if (K_m < 0.0) throw std::domain_error("K must be nonnegative");
    const double Rw = params.well_radius_m();
    if (K_m > Rw) return 0.0;
    const double s = std::sin(N * std::numbers::pi * K_m / Rw);
    return 2.0 / Rw * s * s;
}

double nucleus_mean_square_radius(int N, const ModelParams& params) {
    if (N < 1) throw std::domain_error("nucleus level N must be >= 1");
    const double Rw = params.well_radius_m();
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return Rw * Rw * (1.0 / 3.0 - 1.0 / (2.0 * pi2 * N * N));
}

double electron_radial_density(int n, double R_m, const ModelParams& params) {
    if (R_m < 0.0) throw std::domain_error("R must be nonnegative");
    const double a = params.electron_length_scale_m();
    const double x = R_m / a;
    // R_{n0}(R) in units of a^{-3/2}; density is R^2 R_{n0}^2 since the
    // angular part carries the 1/(4 pi).
    double radial;
    switch (n) {
        case 1:
            radial = 2.0 * std::exp(-x);
            break;
        case 2:
            radial = (1.0 / (2.0 * std::sqrt(2.0))) * (2.0 - x) * std::exp(-x / 2.0);
            break;
        case 3:
            radial = (2.0 / (81.0 * std::sqrt(3.0))) * (27.0 - 18.0 * x + 2.0 * x * x) *
                     std::exp(-x / 3.0);
            break;
        default:
            throw std::domain_error(
                "electron_radial_density supports n in {1,2,3} only");
    }
    return R_m * R_m * radial * radial / (a * a * a);
}

SubsystemSpectrum build_spectrum(Subsystem kind, const std::vector<int>& levels,
                                 const ModelParams& params) {
    if (levels.empty()) throw std::invalid_argument("level list must be nonempty");
    if (!std::is_sorted(levels.begin(), levels.end()) ||
        std::adjacent_find(levels.begin(), levels.end()) != levels.end())
        throw std::invalid_argument("levels must be sorted and distinct");
    SubsystemSpectrum s;
    s.kind = kind;
    s.levels = levels;
    s.energies_eV.reserve(levels.size());
    for (int q : levels)
        s.energies_eV.push_back(kind == Subsystem::Electron
                                    ? electron_level_energy(q, params)
                                    : nucleus_level_energy(q, params));
    return s;
}

}  // namespace heplus
