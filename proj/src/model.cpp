#include "heplus/model.hpp"

namespace heplus {

double ModelParams::electron_reduced_rest_energy_eV() const {
    const double M = proton_rest_energy_eV;
    const double m = electron_rest_energy_eV;
    return 2.0 * M * m / (2.0 * M + m);
}

double ModelParams::electron_length_scale_m() const {
    const double scale = electron_rest_energy_eV / electron_reduced_rest_energy_eV();
    return bohr_radius_m * scale / static_cast<double>(nuclear_charge);
}

ModelParams default_params() {
    return ModelParams{
        /*alpha=*/7.2973525693e-3,
        /*hbar_eV_s=*/6.582119569e-16,
        /*hbar_c_eV_m=*/197.3269804e-9,
        /*electron_rest_energy_eV=*/510998.95000,
        /*proton_rest_energy_eV=*/938272088.16,
        /*nucleon_core_radius_m=*/2.2e-15,
        /*bohr_radius_m=*/5.29177210903e-11,
        /*nuclear_charge=*/2,
    };
}

ValidationResult validate(const ModelParams& p) {
    ValidationResult r;
    auto fail = [&](const char* msg) {
        r.ok = false;
        r.error = msg;
        return r;
    };
    if (!(p.alpha > 0.0)) return fail("alpha must be positive");
    if (!(p.hbar_eV_s > 0.0)) return fail("hbar_eV_s must be positive");
    if (!(p.hbar_c_eV_m > 0.0)) return fail("hbar_c_eV_m must be positive");
    if (!(p.electron_rest_energy_eV > 0.0))
        return fail("electron_rest_energy_eV must be positive");
    if (!(p.proton_rest_energy_eV > 0.0))
        return fail("proton_rest_energy_eV must be positive");
    if (!(p.nucleon_core_radius_m > 0.0))
        return fail("nucleon_core_radius_m must be positive");
    if (!(p.bohr_radius_m > 0.0)) return fail("bohr_radius_m must be positive");
    if (!(p.nuclear_charge > 0)) return fail("nuclear_charge must be positive");

    const double mu = p.electron_reduced_rest_energy_eV();
    if (!(mu > 0.0 && mu < p.electron_rest_energy_eV))
        return fail("reduced rest energy must lie strictly in (0, m c^2)");

    if (p.nuclear_charge != 2) r.warning = "non-canonical Z";
    return r;
}

}  // namespace heplus
