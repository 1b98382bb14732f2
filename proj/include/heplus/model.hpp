/*
 * Physical constants and model parameters for the He+ three-body model
 * (two protons in an infinite spherical well, one hydrogenic electron).
 *
 * Unit conventions: energies in eV, lengths in meters, times in seconds.
 * Masses are stored as rest energies (eV) so every formula is expressed
 * through hbar*c and rest energies.
 */
#pragma once

#include <optional>
#include <string>

namespace heplus {

struct ModelParams {
    double alpha;                    // fine-structure constant
    double hbar_eV_s;                // reduced Planck constant, eV s
    double hbar_c_eV_m;              // hbar*c, eV m
    double electron_rest_energy_eV;  // m c^2
    double proton_rest_energy_eV;    // M c^2
    double nucleon_core_radius_m;    // r0, alpha-particle radius
    double bohr_radius_m;            // standard (infinite-mass, Z=1) Bohr radius
    int nuclear_charge;              // Z, 2 for He+

    // Reduced electron rest energy mu c^2 = 2 M m c^2 / (2M + m).
    double electron_reduced_rest_energy_eV() const;

    // Well radius for the internuclear coordinate, R_w = 2 r0.
    double well_radius_m() const { return 2.0 * nucleon_core_radius_m; }

    // Hydrogenic length scale of the electron subsystem:
    // Bohr radius scaled by m/mu and divided by Z.
    double electron_length_scale_m() const;
};

struct ValidationResult {
    bool ok = true;
    std::string error;                   // first violated invariant, if any
    std::optional<std::string> warning;  // e.g. non-canonical Z
};

// Canonical parameter set: r0 = 2.2e-15 m, remaining constants CODATA 2018.
// CODATA 2018 values, to the digit:
//   alpha      = 7.297 352 5693e-3
//   hbar       = 6.582 119 569e-16  eV s
//   hbar c     = 197.326 980 4      MeV fm
//   m_e c^2    = 0.510 998 950 00   MeV
//   m_p c^2    = 938.272 088 16     MeV
//   a_0        = 0.529 177 210 903e-10 m
ModelParams default_params();

// ok iff every field is strictly positive and the derived reduced rest
// energy lies strictly inside (0, m c^2). Z != 2 is legal but flagged.
ValidationResult validate(const ModelParams& params);

}  // namespace heplus
