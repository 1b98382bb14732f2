/*
 * Exact dephasing dynamics of product states in the product eigenbasis.
 * The perturbation is diagonal in that basis, so evolution is pure phase
 * accumulation: no integrator, exact at any time.
 */
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "heplus/corrections.hpp"
#include "heplus/spectra.hpp"

namespace heplus {

struct ProductState {
    std::vector<int> electron_levels;
    std::vector<std::complex<double>> electron_amplitudes;  // unit 2-norm
    std::vector<int> nucleus_levels;
    std::vector<std::complex<double>> nucleus_amplitudes;   // unit 2-norm

    std::vector<double> electron_weights() const;  // |c_n|^2
    std::vector<double> nucleus_weights() const;   // |d_N|^2
};

struct DensityMatrix {
    Subsystem kind;
    std::vector<int> levels;
    std::vector<std::complex<double>> rho;  // row-major, levels x levels

    std::size_t dim() const { return levels.size(); }
    std::complex<double> at(std::size_t i, std::size_t j) const {
        return rho[i * levels.size() + j];
    }
};

struct PurityTrace {
    std::vector<double> times_s;
    std::vector<double> purity;
    std::string scenario;
};

struct TraceSummary {
    double min = 0.0;
    double argmin_s = 0.0;
    double mean = 0.0;
    // Parallel to the requested thresholds; negative entry means "none".
    std::vector<double> first_crossing_s;
};

// Normalizes both amplitude vectors and sorts levels; rejects duplicate
// levels and all-zero vectors.
ProductState make_product_state(
    const std::vector<std::pair<int, std::complex<double>>>& electron,
    const std::vector<std::pair<int, std::complex<double>>>& nucleus);

// Reduced density matrix at time t for the requested subsystem:
//   rho_{nn'}(t) = c_n conj(c_{n'}) e^{-i (E_n - E_{n'}) t / hbar}
//                  * sum_N |d_N|^2 e^{-i (E1(n,N) - E1(n',N)) t / hbar}
// and symmetrically for the nucleus reduction. Phase arguments are formed
// as (energy difference / hbar) * t so tiny gaps stay accurate at huge t.
DensityMatrix reduced_density_matrix(const ProductState& state,
                                     const CorrectionTable& table,
                                     const SubsystemSpectrum& electron_spectrum,
                                     const SubsystemSpectrum& nucleus_spectrum,
                                     double t_s, Subsystem kind,
                                     const ModelParams& params);

// Tr(rho^2) = sum |rho_ij|^2.
double purity_of(const DensityMatrix& rho);

// Electron-reduction purity on a uniform grid [0, t_max], endpoints included.
PurityTrace purity_trace(const ProductState& state, const CorrectionTable& table,
                         const SubsystemSpectrum& electron_spectrum,
                         const SubsystemSpectrum& nucleus_spectrum, double t_max_s,
                         int num_points, const ModelParams& params);

TraceSummary trace_summary(const PurityTrace& trace,
                           const std::vector<double>& thresholds = {});

}  // namespace heplus
