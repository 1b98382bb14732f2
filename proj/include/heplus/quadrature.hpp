/*
 * Adaptive Simpson quadrature with a relative-tolerance stopping rule and
 * a hard refinement cap.
 */
#pragma once

#include <functional>
#include <stdexcept>

namespace heplus {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    int max_depth = 16;  // at most 2^max_depth panels per axis
};

class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Integrates f over [a, b]. Throws ConvergenceError if the refinement cap
// is reached while successive estimates still disagree beyond tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec = {});

}  // namespace heplus
