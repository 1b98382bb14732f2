#include "heplus/corrections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "heplus/spectra.hpp"

namespace heplus {

namespace {

void check_levels(const std::vector<int>& levels, const char* what) {
    if (levels.empty()) throw std::invalid_argument(std::string(what) + " levels empty");
    if (!std::is_sorted(levels.begin(), levels.end()) ||
        std::adjacent_find(levels.begin(), levels.end()) != levels.end())
        throw std::invalid_argument(std::string(what) +
                                    " levels must be sorted and distinct");
    if (levels.front() < 1)
        throw std::invalid_argument(std::string(what) + " levels must be >= 1");
}

std::size_t index_of(const std::vector<int>& levels, int level, const char* what) {
    auto it = std::lower_bound(levels.begin(), levels.end(), level);
    if (it == levels.end() || *it != level)
        throw std::out_of_range(std::string(what) + " level not present in table");
    return static_cast<std::size_t>(it - levels.begin());
}

// 1 / (n^3 (n!)^2), in log space above n = 10.
double electron_factor(int n) {
    if (n <= 10) {
        double fact = 1.0;
        for (int k = 2; k <= n; ++k) fact *= k;
        const double nd = n;
        return 1.0 / (nd * nd * nd * fact * fact);
    }
    return std::exp(-3.0 * std::log(static_cast<double>(n)) - 2.0 * std::lgamma(n + 1.0));
}

double nucleus_factor(int N) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return 1.0 / 3.0 - 1.0 / (2.0 * pi2 * N * N);
}

}  // namespace

double correction_closed_form(int n, int N, const ModelParams& params) {
    if (n < 1 || N < 1) throw std::domain_error("quantum numbers must be >= 1");
    if (n > 20) throw std::range_error("correction_closed_form supports n <= 20");
    const double a = params.bohr_radius_m;
    const double r0 = params.nucleon_core_radius_m;
    const double prefactor = params.alpha * params.hbar_c_eV_m * r0 * r0 / (6.0 * a * a * a);
    return prefactor * electron_factor(n) * nucleus_factor(N);
}

double correction_oracle(int n, int N, const ModelParams& params,
                         const QuadratureSpec& quad) {
    if (n < 1 || n > 3)
        throw std::domain_error("correction_oracle supports n in {1,2,3}");
    if (N < 1 || N > 10) throw std::domain_error("correction_oracle supports N <= 10");
    const double Rw = params.well_radius_m();
    const double coupling = -2.0 * params.alpha * params.hbar_c_eV_m;

    auto inner = [&](double K) {
        if (K <= 0.0) return 0.0;
        auto integrand = [&](double R) {
            if (R <= 0.0) return 0.0;  // rho_n ~ R^2 kills the 1/R singularity
            return electron_radial_density(n, R, params) * coupling * (2.0 / K - 1.0 / R);
        };
        return adaptive_simpson(integrand, 0.0, K / 2.0, quad);
    };
    auto outer = [&](double K) {
        return nucleus_radial_density(N, K, params) * inner(K);
    };
    return adaptive_simpson(outer, 0.0, Rw, quad);
}

CorrectionTable::CorrectionTable(std::vector<int> electron_levels,
                                 std::vector<int> nucleus_levels,
                                 std::vector<double> values_eV, CorrectionSource source)
    : electron_levels_(std::move(electron_levels)),
      nucleus_levels_(std::move(nucleus_levels)),
      values_eV_(std::move(values_eV)),
      source_(source) {
    check_levels(electron_levels_, "electron");
    check_levels(nucleus_levels_, "nucleus");
    const std::size_t rows = electron_levels_.size();
    const std::size_t cols = nucleus_levels_.size();
    if (values_eV_.size() != rows * cols)
        throw std::invalid_argument("correction table shape mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double v = values_eV_[i * cols + j];
            if (!(v > 0.0))
                throw std::invalid_argument("correction entries must be positive");
            if (j > 0 && !(v > values_eV_[i * cols + j - 1]))
                throw std::invalid_argument(
                    "correction entries must increase with N");
            if (source_ == CorrectionSource::ClosedForm && i > 0 &&
                !(v < values_eV_[(i - 1) * cols + j]))
                throw std::invalid_argument(
                    "closed-form entries must decrease with n");
        }
    }
}

double CorrectionTable::value(int n, int N) const {
    const std::size_t i = index_of(electron_levels_, n, "electron");
    const std::size_t j = index_of(nucleus_levels_, N, "nucleus");
    return values_eV_[i * nucleus_levels_.size() + j];
}

double nonadditive_gap(int n, int n_prime, int N, int N_prime,
                       const CorrectionTable& table) {
    return table.value(n, N) - table.value(n_prime, N) - table.value(n, N_prime) +
           table.value(n_prime, N_prime);
}

CorrectionTable build_correction_table(const std::vector<int>& electron_levels,
                                       const std::vector<int>& nucleus_levels,
                                       const ModelParams& params,
                                       CorrectionSource source) {
    check_levels(electron_levels, "electron");
    check_levels(nucleus_levels, "nucleus");
    std::vector<double> values;
    values.reserve(electron_levels.size() * nucleus_levels.size());
    for (int n : electron_levels)
        for (int N : nucleus_levels)
            values.push_back(source == CorrectionSource::ClosedForm
                                 ? correction_closed_form(n, N, params)
                                 : correction_oracle(n, N, params));
    return CorrectionTable(electron_levels, nucleus_levels, std::move(values), source);
}

}  // namespace heplus
