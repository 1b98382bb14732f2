/*
 * s-state spectra and radial probability densities of the two decoupled
 * subsystems: the hydrogenic (Z=2) electron and the internuclear relative
 * coordinate confined to an infinite spherical well of radius 2 r0.
 */
#pragma once

#include <vector>

#include "heplus/model.hpp"

namespace heplus {

enum class Subsystem { Electron, Nucleus };

struct SubsystemSpectrum {
    Subsystem kind;
    std::vector<int> levels;        // principal quantum numbers, sorted
    std::vector<double> energies_eV;

    // Energy lookup by quantum number; throws std::out_of_range if absent.
    double energy_of(int level) const;
};

// Hydrogenic s-level: -(mu c^2) (Z alpha)^2 / (2 n^2).  n >= 1.
double electron_level_energy(int n, const ModelParams& params);

// s-wave infinite-well level: (hbar c)^2 pi^2 N^2 / (M c^2 R_w^2).  N >= 1.
double nucleus_level_energy(int N, const ModelParams& params);

// Radial probability density of the well state N at internuclear
// separation K: (2/R_w) sin^2(N pi K / R_w) inside, 0 outside.
double nucleus_radial_density(int N, double K_m, const ModelParams& params);

// <K^2>_N = R_w^2 (1/3 - 1/(2 pi^2 N^2)), closed form.
double nucleus_mean_square_radius(int N, const ModelParams& params);

// 4 pi R^2 |psi_n0(R)|^2 for the hydrogenic s-state with the model's
// Z-scaled, reduced-mass length scale. Explicit radial polynomials only;
// supported for n in {1,2,3} (oracle scope).
double electron_radial_density(int n, double R_m, const ModelParams& params);

// Spectrum over a sorted, distinct level list.
SubsystemSpectrum build_spectrum(Subsystem kind, const std::vector<int>& levels,
                                 const ModelParams& params);

}  // namespace heplus
