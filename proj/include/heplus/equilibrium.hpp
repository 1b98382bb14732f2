/*
 * Equilibrium purity predicted from initial-state weights alone, plus the
 * exact infinite-time average of the dephasing dynamics and a degeneracy
 * audit of the correction gaps.
 */
#pragma once

#include <vector>

#include "heplus/corrections.hpp"
#include "heplus/dynamics.hpp"

namespace heplus {

struct WeightProfile {
    std::vector<double> weights_e;  // W_n^e, sums to 1
    std::vector<double> weights_c;  // W_N^c, sums to 1
};

struct GapCollision {
    int n, n_prime, N, N_prime;
    double gap_eV;
};

WeightProfile weight_profile(const ProductState& state);

// P_eq = sum W_e^2 + sum W_c^2 - (sum W_e^2)(sum W_c^2).
double p_eq(const WeightProfile& profile);

// Exact infinite-time average of Tr(rho_e^2) under diagonal phase dynamics:
//   sum_{n,n'} W_n W_{n'} sum_{N,N'} w_N w_{N'} [gap(n,n',N) == gap(n,n',N')]
// with gap(n,n',N) = E1(n,N) - E1(n',N), equality to relative 1e-9. Equals
// p_eq whenever the gaps are nondegenerate.
double analytic_time_average(const ProductState& state, const CorrectionTable& table);

// All N != N' pairs whose gaps coincide, per electron pair (n, n'). A state
// with a single electron level reports every nucleus pair as trivially
// degenerate (gap identically zero).
std::vector<GapCollision> degenerate_gap_report(const ProductState& state,
                                                const CorrectionTable& table);

}  // namespace heplus
