/*
 * First-order energy corrections E1(n, N) of the electron-nucleus coupling
 * for s (x) s product levels. Two independent routes are provided:
 *
 *  - the closed form  alpha hbar c r0^2 / (6 (a n)^3 (n!)^2)
 *                       * (1/3 - 1/(2 pi^2 N^2)),
 *    which drives all dynamics, and
 *  - a numerical double-quadrature oracle over the angular-averaged
 *    coupling, used as a diagnostic cross-check.
 *
 * The two routes are never reconciled silently; the CLI reports their ratio.
 */
#pragma once

#include <vector>

#include "heplus/model.hpp"
#include "heplus/quadrature.hpp"

namespace heplus {

enum class CorrectionSource { ClosedForm, Oracle };

class CorrectionTable {
   public:
    // Level lists must be nonempty, sorted, distinct. ClosedForm requires
    // n <= 20; Oracle requires n <= 3 and N <= 10. Construction verifies
    // positivity and monotonicity of the entries.
    CorrectionTable(std::vector<int> electron_levels, std::vector<int> nucleus_levels,
                    std::vector<double> values_eV, CorrectionSource source);

    const std::vector<int>& electron_levels() const { return electron_levels_; }
    const std::vector<int>& nucleus_levels() const { return nucleus_levels_; }
    CorrectionSource source() const { return source_; }

    // E1(n, N) lookup; throws std::out_of_range for absent levels.
    double value(int n, int N) const;

   private:
    std::vector<int> electron_levels_;
    std::vector<int> nucleus_levels_;
    std::vector<double> values_eV_;  // row-major, electron-major
    CorrectionSource source_;
};

// Closed-form correction. n in [1, 20], N >= 1; the factorial factor is
// evaluated in log space above n = 10.
double correction_closed_form(int n, int N, const ModelParams& params);

// Quadrature route: int_0^{Rw} dK p_N(K) int_0^{K/2} dR rho_n(R) W(R, K)
// with W(R, K) = -2 alpha hbar c (2/K - 1/R); the angular average of the
// coupling vanishes for R > K/2. n in {1,2,3}, N <= 10.
double correction_oracle(int n, int N, const ModelParams& params,
                         const QuadratureSpec& quad = {});

// E1(n,N) - E1(n',N) - E1(n,N') + E1(n',N'): the nonadditive part that
// sets the dephasing timescale.
double nonadditive_gap(int n, int n_prime, int N, int N_prime,
                       const CorrectionTable& table);

CorrectionTable build_correction_table(const std::vector<int>& electron_levels,
                                       const std::vector<int>& nucleus_levels,
                                       const ModelParams& params,
                                       CorrectionSource source);

}  // namespace heplus
